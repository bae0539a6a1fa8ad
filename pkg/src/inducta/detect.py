"""Polynomial-flavored detectors: the shortest-path prism detector for
pyramid-free graphs, and the exact hole-through-two-vertices search used
as the verification oracle for the hardness gadgets.

The prism detector enumerates candidate 6-tuples in canonical order and
recomputes, for each, three shortest paths in the graph with the closed
neighborhoods of the other four endpoints removed; on a pyramid-free
graph a smallest prism survives this surgery, which is what makes the
detector complete there.  On inputs with pyramids it may miss prisms,
matching its conditional contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bits, mask_of


# -- hole through two prescribed vertices --------------------------------

def hole_through_two(g: Graph, x: int, y: int, max_len: int | None = None) -> list[int] | None:
    """An induced cycle of length >= 4 containing x and y, or None.

    Exhaustive DFS over induced paths anchored at y.  The key prune:
    once a path vertex becomes interior, every neighbor of it is banned
    from the rest of the search, so the free region shrinks fast; a
    branch dies as soon as x or all closing vertices leave it.
    Deterministic: neighbors explored in increasing order.
    """
    if x == y:
        raise GraphError("need two distinct vertices")
    if max_len is None:
        max_len = g.n

    adj = g.adj
    full = g.full_mask()

    def reach(src: int, free: int) -> int:
        seen = 1 << src
        frontier = adj[src] & free
        while frontier:
            seen |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & free & ~seen
        return seen & ~(1 << src)

    def dfs(path: list[int], used: int, banned: int) -> list[int] | None:
        v = path[-1]
        for w in bits(adj[v] & ~used & ~banned):
            closes = bool(adj[w] >> y & 1)
            np_len = len(path) + 1
            if closes and np_len >= 4 and (used >> x & 1 or w == x):
                cyc = path + [w]
                assert g.is_induced_cycle(cyc)
                return cyc
            if np_len >= max_len:
                continue
            if closes and np_len > 2:
                continue  # a y-neighbor can only end the cycle
            nb = banned | (adj[v] if len(path) >= 2 else 0)
            nu = used | (1 << w)
            have_x = bool(nu >> x & 1)
            if not have_x and nb >> x & 1:
                continue
            free = full & ~nu & ~nb
            r = reach(w, free)
            if not have_x and not (r >> x & 1):
                continue
            if not (r & adj[y]):
                continue  # no way left to close the cycle
            got = dfs(path + [w], nu, nb)
            if got:
                return got
        return None

    return dfs([y], 1 << y, 0)


# -- prisms ---------------------------------------------------------------

@dataclass
class PrismWitness:
    triangle_a: tuple[int, int, int]
    triangle_b: tuple[int, int, int]
    paths: tuple[list[int], list[int], list[int]]

    def vertices(self) -> list[int]:
        out = set()
        for p in self.paths:
            out.update(p)
        return sorted(out)


def validate_prism(g: Graph, w: PrismWitness) -> bool:
    """Check the prism conditions: two disjoint triangles linked by three
    vertex-disjoint paths whose only cross edges are the triangles."""
    ta, tb = w.triangle_a, w.triangle_b
    if not (g.is_clique_mask(mask_of(ta)) and g.is_clique_mask(mask_of(tb))):
        return False
    seen: set[int] = set()
    for i, p in enumerate(w.paths):
        if p[0] != ta[i] or p[-1] != tb[i]:
            return False
        if not g.is_induced_path(p):
            return False
        if seen & set(p):
            return False
        seen.update(p)
    for i in range(3):
        for j in range(i + 1, 3):
            for u in w.paths[i]:
                for v in w.paths[j]:
                    expect = (u in ta and v in ta) or (u in tb and v in tb)
                    if g.has_edge(u, v) != expect:
                        return False
    return True


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges():
        for w in bits(g.adj[u] & g.adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def detect_prism_pyramid_free(g: Graph) -> PrismWitness | None:
    """Shortest-path prism detector; complete on pyramid-free inputs.

    For each ordered candidate 6-tuple, computes each path a_i -> b_i by
    BFS in the graph minus the closed neighborhoods of the other four
    endpoints (the endpoints themselves stay), then validates the
    triple.  First validated witness in canonical order wins.
    """
    tris = _triangles(g)
    full = g.full_mask()
    from itertools import permutations

    for ta in tris:
        for tb in tris:
            if set(ta) & set(tb):
                continue
            for perm in permutations(range(3)):
                a = ta
                b = tuple(tb[k] for k in perm)
                paths = []
                ok = True
                for i in range(3):
                    others = [a[(i + 1) % 3], a[(i + 2) % 3], b[(i + 1) % 3], b[(i + 2) % 3]]
                    banned = 0
                    for o in others:
                        banned |= g.closed_nb(o)
                    banned &= ~(1 << a[i]) & ~(1 << b[i])
                    allowed = full & ~banned
                    p = g.shortest_path(a[i], b[i], allowed)
                    if p is None:
                        ok = False
                        break
                    paths.append(p)
                if not ok:
                    continue
                w = PrismWitness(a, b, tuple(paths))
                if validate_prism(g, w):
                    return w
    return None
