"""Cutset and join finders, chordless graphs, and the class of graphs
whose cycles never have exactly one chord.

The cutset searches are exhaustively correct at desk scale: the stated
search space (vertices, vertex pairs, cliques, stars, partitions) is
enumerated completely, and every returned witness re-validates its
definition.  Recognition of the unique-chord-free class runs two
independent routes - a direct search for a cycle with one chord, and
the decomposition by 1-cutsets, special 2-cutsets and proper 1-joins
down to clique / sparse / Petersen / Heawood leaves - and insists they
agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, GraphError, TooLargeError, bit_count, bits, mask_of
from .detect import hole_through_two
from .matching import _Dinic
from .named import heawood, petersen
from .oracle import induced_embedding

PARTITION_SEARCH_BOUND = 18


@dataclass
class CutsetWitness:
    kind: str
    vertices: tuple[int, ...] = ()          # cut vertices / (a, b) / clique
    x: int = 0                              # side bitsets
    y: int = 0
    a_side: int = 0                         # special sets of a 1-join / 2-join
    b_side: int = 0
    a2: int = 0
    b2: int = 0


def _without_edge(g: Graph, u: int, v: int) -> Graph:
    h = Graph(g.n)
    for a in range(g.n):
        h.adj[a] = g.adj[a]
    h.adj[u] &= ~(1 << v)
    h.adj[v] &= ~(1 << u)
    return h


# -- cutset searches -----------------------------------------------------

def _find_one_cutset(g: Graph) -> CutsetWitness | None:
    if not g.connected():
        return None
    for v in range(g.n):
        comps = g.components_of(g.full_mask() & ~(1 << v))
        if len(comps) >= 2:
            return CutsetWitness("one_cutset", (v,), comps[0],
                                 g.full_mask() & ~(1 << v) & ~comps[0])
    return None


def _all_cliques(g: Graph):
    from .linegraph import maximal_cliques

    seen = set()
    for m in maximal_cliques(g):
        vs = list(bits(m))
        for size in range(1, len(vs) + 1):
            for sub in combinations(vs, size):
                seen.add(mask_of(sub))
    return sorted(seen, key=bit_count)


def _find_clique_cutset(g: Graph) -> CutsetWitness | None:
    if not g.connected():
        return None
    for k in _all_cliques(g):
        rest = g.full_mask() & ~k
        comps = g.components_of(rest)
        if len(comps) >= 2:
            return CutsetWitness("clique_cutset", tuple(bits(k)), comps[0],
                                 rest & ~comps[0])
    return None


def _find_star_cutset(g: Graph) -> CutsetWitness | None:
    """Star cutsets via the separator trick: S = N[c] minus two chosen
    survivors is a star around c; trying all (c, x, y) is complete."""
    if not g.connected():
        return None
    for c in range(g.n):
        closed = g.closed_nb(c)
        outside = g.full_mask() & ~closed
        comps = g.components_of(outside) if outside else []
        if len(comps) >= 2:
            return CutsetWitness("star_cutset", (c,), comps[0], outside & ~comps[0],
                                 a_side=closed)
        for x in range(g.n):
            if x == c:
                continue
            for y in range(x + 1, g.n):
                if y == c:
                    continue
                s = closed & ~(1 << x) & ~(1 << y)
                if not (s >> c & 1):
                    continue
                rest = g.full_mask() & ~s
                comps = g.components_of(rest)
                if len(comps) >= 2 and not any(
                    comp >> x & 1 and comp >> y & 1 for comp in comps
                ):
                    cx = next(co for co in comps if co >> x & 1)
                    return CutsetWitness("star_cutset", (c,), cx, rest & ~cx, a_side=s)
    return None


def _find_double_star_cutset(g: Graph) -> CutsetWitness | None:
    if not g.connected():
        return None
    for a, b in g.edges():
        closed = g.closed_nb(a) | g.closed_nb(b)
        for x in range(g.n):
            if x in (a, b):
                continue
            for y in range(x + 1, g.n):
                if y in (a, b):
                    continue
                s = closed & ~(1 << x) & ~(1 << y)
                rest = g.full_mask() & ~s
                comps = g.components_of(rest)
                if len(comps) >= 2 and not any(
                    comp >> x & 1 and comp >> y & 1 for comp in comps
                ):
                    cx = next(co for co in comps if co >> x & 1)
                    return CutsetWitness(
                        "double_star_cutset", (a, b), cx, rest & ~cx, a_side=s
                    )
    return None


def _is_ab_path(g: Graph, side: int, a: int, b: int) -> bool:
    """Is g[side u {a,b}] a path with ends a and b?"""
    verts = side | (1 << a) | (1 << b)
    sub, old = g.induced_mask(verts)
    pos = {v: i for i, v in enumerate(old)}
    k = sub.n
    if sub.edge_count() != k - 1 or len(sub.components()) != 1:
        return False
    degs = [sub.degree(i) for i in range(k)]
    ends = [i for i in range(k) if degs[i] == 1]
    if any(d > 2 for d in degs):
        return False
    return sorted(ends) == sorted([pos[a], pos[b]]) if k >= 2 else False


def _two_cutset_splits(g: Graph, a: int, b: int):
    """All (X, Y) groupings of the components of g - {a, b}."""
    rest = g.full_mask() & ~(1 << a) & ~(1 << b)
    comps = g.components_of(rest)
    if len(comps) < 2:
        return
    for assign in range(1, 1 << (len(comps) - 1)):
        x = comps[0]
        y = 0
        for i, comp in enumerate(comps[1:], start=1):
            if assign >> (i - 1) & 1:
                y |= comp
            else:
                x |= comp
        if y:
            yield x, y


def _find_proper_2_cutset(g: Graph) -> CutsetWitness | None:
    if not g.connected():
        return None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            for x, y in _two_cutset_splits(g, a, b):
                if _is_ab_path(g, x, a, b) or _is_ab_path(g, y, a, b):
                    continue
                return CutsetWitness("proper_2_cutset", (a, b), x, y)
    return None


def _side_has_ab_path(g: Graph, side: int, a: int, b: int) -> bool:
    return bool(g.adj[a] & side) and bool(
        _component_within(g, g.adj[a] & side, side) & g.adj[b]
    )


def _component_within(g: Graph, seeds: int, allowed: int) -> int:
    comp = seeds & allowed
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & allowed
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def _find_special_2_cutset(g: Graph) -> CutsetWitness | None:
    if not g.connected():
        return None
    for a in range(g.n):
        if g.degree(a) < 3:
            continue
        for b in range(a + 1, g.n):
            if g.degree(b) < 3 or g.has_edge(a, b):
                continue
            for x, y in _two_cutset_splits(g, a, b):
                if bit_count(x) < 2 or bit_count(y) < 2:
                    continue
                if _side_has_ab_path(g, x, a, b) and _side_has_ab_path(g, y, a, b):
                    return CutsetWitness("special_2_cutset", (a, b), x, y)
    return None


def _derive_1_join(g: Graph, x: int, y: int) -> CutsetWitness | None:
    a = 0
    for v in bits(x):
        if g.adj[v] & y:
            a |= 1 << v
    b = 0
    for v in bits(y):
        if g.adj[v] & x:
            b |= 1 << v
    if a == 0 or b == 0:
        return None
    if bit_count(a) < 2 or bit_count(b) < 2:
        return None
    if not (g.is_stable_mask(a) and g.is_stable_mask(b)):
        return None
    if not g.is_complete_between(a, b):
        return None
    return CutsetWitness("proper_1_join", (), x, y, a_side=a, b_side=b)


def _find_proper_1_join(g: Graph) -> CutsetWitness | None:
    if g.n > PARTITION_SEARCH_BOUND:
        raise TooLargeError(f"1-join partition search bound {PARTITION_SEARCH_BOUND} exceeded")
    if g.n < 4:
        return None
    rest = list(range(1, g.n))
    for sub in range(1 << (g.n - 1)):
        x = 1
        for i, v in enumerate(rest):
            if sub >> i & 1:
                x |= 1 << v
        y = g.full_mask() & ~x
        if bit_count(x) < 2 or bit_count(y) < 2:
            continue
        got = _derive_1_join(g, x, y)
        if got is not None:
            return got
    return None


def _find_bipartite_2_join(g: Graph) -> CutsetWitness | None:
    """The variant with one stable-set side: X2 = A2 u B2, both stable
    and nonempty, |X2| >= 3, at least one edge inside g[X2]."""
    if g.n > PARTITION_SEARCH_BOUND:
        raise TooLargeError(f"partition search bound {PARTITION_SEARCH_BOUND} exceeded")
    full = g.full_mask()
    for sub in range(1, 1 << (g.n - 1)):
        x2 = sub << 1 | 0  # keep vertex 0 in X1
        x1 = full & ~x2
        if bit_count(x2) < 3 or x1 == 0:
            continue
        sub2, old = g.induced_mask(x2)
        if sub2.edge_count() == 0:
            continue
        parts = sub2.bipartition()
        if parts is None:
            continue
        comps = sub2.components()
        for flip in range(1 << len(comps)):
            a2 = 0
            for i, comp in enumerate(comps):
                side = parts[0] & comp if not flip >> i & 1 else parts[1] & comp
                a2 |= side
            b2m = sub2.full_mask() & ~a2
            a2g = mask_of(old[i] for i in bits(a2))
            b2g = mask_of(old[i] for i in bits(b2m))
            if not a2g or not b2g:
                continue
            got = _check_bip_2join(g, x1, a2g, b2g)
            if got is not None:
                return got
    return None


def _check_bip_2join(g: Graph, x1: int, a2: int, b2: int) -> CutsetWitness | None:
    a1 = 0
    b1 = 0
    for v in bits(x1):
        cross = g.adj[v] & (a2 | b2)
        if cross == 0:
            continue
        if cross == a2 & g.adj[v] and b2 & g.adj[v] == 0:
            a1 |= 1 << v
        elif cross == b2 & g.adj[v] and a2 & g.adj[v] == 0:
            b1 |= 1 << v
        else:
            return None
    if a1 | b1 == 0:
        return None
    if a1 and not g.is_complete_between(a1, a2):
        return None
    if b1 and not g.is_complete_between(b1, b2):
        return None
    # vertices of A2 with no cross edge are fine only if A1 empty, etc.
    for v in bits(a2):
        if (g.adj[v] & x1) != a1:
            return None
    for v in bits(b2):
        if (g.adj[v] & x1) != b1:
            return None
    return CutsetWitness(
        "bipartite_2_join", (), x1, a2 | b2, a_side=a1, b_side=b1, a2=a2, b2=b2
    )


_FINDERS = {
    "one_cutset": _find_one_cutset,
    "clique_cutset": _find_clique_cutset,
    "star_cutset": _find_star_cutset,
    "double_star_cutset": _find_double_star_cutset,
    "proper_2_cutset": _find_proper_2_cutset,
    "special_2_cutset": _find_special_2_cutset,
    "proper_1_join": _find_proper_1_join,
    "bipartite_2_join": _find_bipartite_2_join,
}


def find_cutset(g: Graph, kind: str) -> CutsetWitness | None:
    if kind not in _FINDERS:
        raise GraphError(f"unknown cutset kind {kind!r}")
    return _FINDERS[kind](g)


# -- chordless graphs -----------------------------------------------------

def _two_disjoint_paths(g: Graph, u: int, v: int) -> tuple[list[int], list[int]] | None:
    """Two internally vertex-disjoint u-v paths of length >= 2, via a unit
    flow with split vertices, or None."""
    n = g.n
    # node v -> in = 2v, out = 2v+1
    net = _Dinic(2 * n)
    for w in range(n):
        cap = 2 if w in (u, v) else 1
        net.add(2 * w, 2 * w + 1, cap)
    for a, b in g.edges():
        net.add(2 * a + 1, 2 * b, 1)
        net.add(2 * b + 1, 2 * a, 1)
    if net.max_flow(2 * u, 2 * v + 1) < 2:
        return None
    # walk the unit flow: each intermediate vertex passes exactly one unit
    flow_adj: dict[int, list[int]] = {w: [] for w in range(n)}
    for w in range(n):
        for ei in net.head[2 * w + 1]:
            if ei % 2 == 0 and net.cap[ei ^ 1] > 0 and net.to[ei] % 2 == 0:
                flow_adj[w].append(net.to[ei] // 2)
    paths = []
    for _ in range(2):
        path = [u]
        while path[-1] != v:
            nxt = flow_adj[path[-1]].pop(0)
            path.append(nxt)
        paths.append(path)
    return paths[0], paths[1]


def is_chordless(g: Graph) -> tuple[list[int], tuple[int, int]] | None:
    """None iff every cycle of g is induced; otherwise (cycle, chord):
    a cycle through the chord's ends avoiding the chord edge."""
    for u, v in g.edges():
        h = _without_edge(g, u, v)
        got = _two_disjoint_paths(h, u, v)
        if got is not None:
            p1, p2 = got
            cycle = p1 + p2[::-1][1:-1]
            return cycle, (u, v)
    return None


@dataclass
class DecompositionNode:
    kind: str  # 'sparse' | 'clique' | 'sub-petersen' | 'sub-heawood' |
    #            'one_cutset' | 'proper_2_cutset' | 'special_2_cutset' |
    #            'proper_1_join' | 'components'
    vertices: list[int] = field(default_factory=list)  # leaf vertices (original ids)
    cut: tuple = ()
    children: list["DecompositionNode"] = field(default_factory=list)
    join_a: list[int] = field(default_factory=list)  # special sets of a 1-join,
    join_b: list[int] = field(default_factory=list)  # in original ids

    def leaves(self):
        if not self.children:
            yield self
        else:
            for c in self.children:
                yield from c.leaves()


def replay_tree(g: Graph, node: DecompositionNode) -> bool:
    """Reassemble the decomposition bottom-up and compare with g.

    Leaves contribute the edges of their induced subgraphs (markers,
    recorded as -1, drop out), cutset nodes glue children by union, and
    1-join nodes restore the special cross edges.  The result must equal
    g exactly.
    """
    verts, edges = _replay(g, node)
    if verts != set(range(g.n)):
        return False
    return edges == {tuple(sorted(e)) for e in g.edges()}


def _replay(g: Graph, node: DecompositionNode) -> tuple[set[int], set[tuple[int, int]]]:
    if not node.children:
        vs = {v for v in node.vertices if v >= 0}
        es = {
            (min(u, v), max(u, v))
            for u in vs
            for v in vs
            if u < v and g.has_edge(u, v)
        }
        return vs, es
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for c in node.children:
        cv, ce = _replay(g, c)
        verts |= cv
        edges |= ce
    if node.kind == "proper_1_join":
        # special sets may hold an enclosing block's marker (-1): its cross
        # edges are block artifacts, not edges of g
        for u in node.join_a:
            for v in node.join_b:
                if u >= 0 and v >= 0:
                    edges.add((min(u, v), max(u, v)))
    return verts, edges


def is_sparse(g: Graph) -> bool:
    return all(
        not (g.degree(u) >= 3 and g.degree(v) >= 3) for u, v in g.edges()
    )


def decompose_chordless(g: Graph) -> DecompositionNode:
    """Decomposition tree down to sparse leaves via 1-cutsets and proper
    2-cutsets; blocks of a 2-cutset carry a fresh marker vertex adjacent
    to both cut vertices."""
    bad = is_chordless(g)
    if bad is not None:
        raise GraphError(f"graph has a chorded cycle {bad[0]} with chord {bad[1]}")
    return _decompose_chordless(g, list(range(g.n)))


def _decompose_chordless(g: Graph, ids: list[int]) -> DecompositionNode:
    if is_sparse(g):
        return DecompositionNode("sparse", vertices=[ids[v] for v in range(g.n)])
    comps = g.components()
    if len(comps) > 1:
        node = DecompositionNode("components")
        for comp in comps:
            sub, old = g.induced_mask(comp)
            node.children.append(_decompose_chordless(sub, [ids[v] for v in old]))
        return node
    cut = _find_one_cutset(g)
    if cut is not None:
        v = cut.vertices[0]
        node = DecompositionNode("one_cutset", cut=(ids[v],))
        for side in (cut.x, cut.y):
            sub, old = g.induced_mask(side | (1 << v))
            node.children.append(_decompose_chordless(sub, [ids[u] for u in old]))
        return node
    cut = _find_proper_2_cutset(g)
    if cut is None:
        raise GraphError("chordless graph is neither sparse nor decomposable")
    a, b = cut.vertices
    node = DecompositionNode("proper_2_cutset", cut=(ids[a], ids[b]))
    for side in (cut.x, cut.y):
        sub, old = g.induced_mask(side | (1 << a) | (1 << b))
        pos = {o: i for i, o in enumerate(old)}
        blk = sub.add_vertices(1, [[pos[a], pos[b]]])
        node.children.append(
            _decompose_chordless(blk, [ids[u] for u in old] + [-1])
        )
    return node


def three_color_chordless(g: Graph) -> list[int]:
    """A proper coloring with at most 3 colors by peeling low-degree
    vertices; raises if some peel step finds none (not chordless)."""
    order = []
    alive = g.full_mask()
    adj = list(g.adj)
    while alive:
        v = next(
            (u for u in bits(alive) if bit_count(adj[u] & alive) <= 2), None
        )
        if v is None:
            raise GraphError("no vertex of degree <= 2: graph is not chordless")
        order.append(v)
        alive &= ~(1 << v)
    color = [-1] * g.n
    for v in reversed(order):
        used = {color[w] for w in bits(g.adj[v]) if color[w] >= 0}
        c = next(i for i in range(3) if i not in used)
        color[v] = c
    assert all(color[u] != color[v] for u, v in g.edges())
    return color


# -- cycles with a unique chord --------------------------------------------

@dataclass
class UniqueChordResult:
    member: bool
    witness_cycle: list[int] | None = None
    witness_chord: tuple[int, int] | None = None
    tree: DecompositionNode | None = None


def find_unique_chord_cycle(g: Graph) -> tuple[list[int], tuple[int, int]] | None:
    """A cycle with exactly one chord: a hole of g - uv through u and v,
    for some edge uv."""
    for u, v in g.edges():
        h = _without_edge(g, u, v)
        hole = hole_through_two(h, u, v)
        if hole is not None:
            return hole, (u, v)
    return None


def _is_sub_named(g: Graph, which: Graph) -> bool:
    return g.n <= which.n and induced_embedding(g, which) is not None


def _decompose_unique_chord(g: Graph, ids: list[int]) -> DecompositionNode:
    comps = g.components()
    if len(comps) > 1:
        node = DecompositionNode("components")
        for comp in comps:
            sub, old = g.induced_mask(comp)
            node.children.append(_decompose_unique_chord(sub, [ids[v] for v in old]))
        return node
    if g.is_clique_mask(g.full_mask()):
        return DecompositionNode("clique", vertices=[ids[v] for v in range(g.n)])
    if is_sparse(g):
        return DecompositionNode("sparse", vertices=[ids[v] for v in range(g.n)])
    if _is_sub_named(g, petersen()):
        return DecompositionNode("sub-petersen", vertices=[ids[v] for v in range(g.n)])
    if _is_sub_named(g, heawood()):
        return DecompositionNode("sub-heawood", vertices=[ids[v] for v in range(g.n)])
    cut = _find_one_cutset(g)
    if cut is not None:
        v = cut.vertices[0]
        node = DecompositionNode("one_cutset", cut=(ids[v],))
        for side in (cut.x, cut.y):
            sub, old = g.induced_mask(side | (1 << v))
            node.children.append(_decompose_unique_chord(sub, [ids[u] for u in old]))
        return node
    cut = _find_special_2_cutset(g)
    if cut is not None:
        a, b = cut.vertices
        node = DecompositionNode("special_2_cutset", cut=(ids[a], ids[b]))
        for side in (cut.x, cut.y):
            sub, old = g.induced_mask(side | (1 << a) | (1 << b))
            pos = {o: i for i, o in enumerate(old)}
            blk = sub.add_vertices(1, [[pos[a], pos[b]]])
            node.children.append(
                _decompose_unique_chord(blk, [ids[u] for u in old] + [-1])
            )
        return node
    cut = _find_proper_1_join(g)
    if cut is not None:
        node = DecompositionNode(
            "proper_1_join",
            cut=(),
            join_a=[ids[v] for v in bits(cut.a_side)],
            join_b=[ids[v] for v in bits(cut.b_side)],
        )
        # each block keeps one side plus a marker standing for the other,
        # adjacent to exactly the special set of the kept side
        for side, own_special in ((cut.x, cut.a_side), (cut.y, cut.b_side)):
            sub, old = g.induced_mask(side)
            pos = {o: i for i, o in enumerate(old)}
            blk = sub.add_vertices(1, [[pos[v] for v in bits(own_special)]])
            node.children.append(
                _decompose_unique_chord(blk, [ids[u] for u in old] + [-1])
            )
        return node
    raise GraphError("graph in the class escaped every decomposition case")


def recognize_unique_chord_free(g: Graph) -> UniqueChordResult:
    """Membership with a replayable decomposition tree, or a cycle with
    exactly one chord.  Both routes run; disagreement is an error."""
    wit = find_unique_chord_cycle(g)
    if wit is not None:
        return UniqueChordResult(False, witness_cycle=wit[0], witness_chord=wit[1])
    tree = _decompose_unique_chord(g, list(range(g.n)))
    return UniqueChordResult(True, tree=tree)


# -- coloring the unique-chord-free class ------------------------------------

@dataclass
class AdmissiblePair:
    """A coloring constraint (R, T) built from one vertex, matching one of
    the five definitional shapes; T must lie inside the third color and R
    outside it."""

    r: int
    t: int
    vertex: int
    shape: int

    def validate(self, g: Graph) -> bool:
        v = self.vertex
        nb = g.adj[v]
        closed = nb | (1 << v)
        if self.r & self.t:
            return False
        if self.shape == 1:
            return self.t == nb and self.r == 1 << v
        if self.shape == 2:
            return self.t == 0 and self.r == closed
        if g.degree(v) != 2:
            return False
        u, w = g.neighbors(v)
        options = []
        for uu, ww in ((u, w), (w, u)):
            options.append((3, 1 << uu, (1 << v) | (1 << ww)))
            options.append((4, 1 << uu, g.adj[ww] | (1 << ww)))
            options.append((5, 0, (1 << uu) | g.adj[ww] | (1 << ww)))
        for shape, t, r in options:
            if self.shape == shape and self.t == t and self.r == r:
                return True
        return False


def _shortest_odd_cycle(g: Graph) -> list[int] | None:
    best: list[int] | None = None
    for s in range(g.n):
        # BFS in the bipartite double cover
        dist = {(s, 0): 0}
        prev = {(s, 0): None}
        frontier = [(s, 0)]
        while frontier:
            nxt = []
            for v, p in frontier:
                for w in bits(g.adj[v]):
                    key = (w, 1 - p)
                    if key not in dist:
                        dist[key] = dist[(v, p)] + 1
                        prev[key] = (v, p)
                        nxt.append(key)
            frontier = nxt
        if (s, 1) in dist:
            length = dist[(s, 1)]
            if best is None or length < len(best):
                walk = []
                cur = (s, 1)
                while cur is not None:
                    walk.append(cur[0])
                    cur = prev[cur]
                # the closed walk contains an odd cycle; extract a simple one
                cyc = _simple_odd_cycle_from_walk(g, walk)
                if cyc is not None and (best is None or len(cyc) < len(best)):
                    best = cyc
    return best


def _simple_odd_cycle_from_walk(g: Graph, walk: list[int]) -> list[int] | None:
    seen: dict[int, int] = {}
    for i, v in enumerate(walk):
        if v in seen:
            cyc = walk[seen[v]:i]
            if len(cyc) % 2 == 1 and len(cyc) >= 3 and len(set(cyc)) == len(cyc):
                return cyc
        else:
            seen[v] = i
    return None


def _third_color(g: Graph, include: int, exclude: int) -> int | None:
    """A stable set S with include <= S, S n exclude = 0, meeting every
    odd cycle; branch on the vertices of a shortest odd cycle of g - S."""
    if include & exclude:
        return None
    if not g.is_stable_mask(include):
        return None

    def helper(s: int) -> int | None:
        subg, oldg = g.induced_mask(g.full_mask() & ~s)
        cyc = _shortest_odd_cycle(subg)
        if cyc is None:
            return s
        for i in sorted(cyc):
            v = oldg[i]
            if exclude >> v & 1 or g.adj[v] & s:
                continue
            got = helper(s | (1 << v))
            if got is not None:
                return got
        return None

    return helper(include)


def _nbhd(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= g.adj[v]
    return out & ~mask


def _two_color(g: Graph) -> list[int]:
    parts = g.bipartition()
    if parts is None:
        raise GraphError("expected a bipartite remainder")
    return [0 if parts[0] >> v & 1 else 1 for v in range(g.n)]


def chi_unique_chord_free(g: Graph, _checked: bool = False) -> tuple[int, list[int]]:
    """(chi, proper coloring) for members: chi is 3 for triangle-free
    non-bipartite members and omega otherwise."""
    if not _checked:
        got = recognize_unique_chord_free(g)
        if not got.member:
            raise GraphError("graph has a cycle with a unique chord: not in the class")
    if g.n == 0:
        return 0, []
    comps = g.components()
    if len(comps) > 1:
        color = [0] * g.n
        chi = 0
        for comp in comps:
            sub, old = g.induced_mask(comp)
            c_chi, c_col = chi_unique_chord_free(sub, _checked=True)
            chi = max(chi, c_chi)
            for i, o in enumerate(old):
                color[o] = c_col[i]
        return chi, color
    parts = g.bipartition()
    if parts is not None:
        color = [0 if parts[0] >> v & 1 else 1 for v in range(g.n)]
        chi = 1 if g.edge_count() == 0 else 2
        return chi, color
    tri = g.triangle()
    if tri is None:
        # triangle-free, not bipartite: chi = 3 via a third color
        v = _min_degree_vertex(g)
        pair = AdmissiblePair(r=1 << v, t=g.adj[v], vertex=v, shape=1)
        assert pair.validate(g)
        s = _third_color(g, include=pair.t, exclude=pair.r)
        if s is None:
            s = _third_color(g, include=0, exclude=0)
        if s is None:
            raise GraphError("no third color: graph is not in the class")
        rest, old = g.induced_mask(g.full_mask() & ~s)
        two = _two_color(rest)
        color = [2] * g.n
        for i, o in enumerate(old):
            color[o] = two[i]
        assert all(color[x] != color[y] for x, y in g.edges())
        return 3, color
    if g.is_clique_mask(g.full_mask()):
        return g.n, list(range(g.n))
    cut = _find_one_cutset(g)
    if cut is None:
        raise GraphError("member with a triangle must be a clique or have a 1-cutset")
    v = cut.vertices[0]
    color = [0] * g.n
    chi = 0
    for side in (cut.x, cut.y):
        sub, old = g.induced_mask(side | (1 << v))
        pos = {o: i for i, o in enumerate(old)}
        c_chi, c_col = chi_unique_chord_free(sub, _checked=True)
        chi = max(chi, c_chi)
        # align the cut vertex on color 0
        pivot = c_col[pos[v]]
        for i, o in enumerate(old):
            c = c_col[i]
            if c == pivot:
                c = 0
            elif c == 0:
                c = pivot
            if o != v:
                color[o] = c
    color[v] = 0
    assert all(color[x] != color[y] for x, y in g.edges())
    return chi, color


def _min_degree_vertex(g: Graph) -> int:
    return min(range(g.n), key=g.degree)
