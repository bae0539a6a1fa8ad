"""Recognizers-with-structure for the small decomposition theorems, plus
the weakly triangulated 2-pair machinery and omega-coloring.

Each recognizer is total: it returns a positive classification with a
validating witness, or the induced forbidden structure the theorem
names.  The 2-pair finder follows the constructive proof: grow a
maximal anticonnected set T whose common neighborhood C(T) holds two
nonadjacent vertices, recurse inside C(T), and lift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, GraphError, bit_count, bits, mask_of
from .linegraph import line_root_with_map
from .oracle import enumerate_antiholes, enumerate_holes, induced_embedding


@dataclass
class SmallClassification:
    verdict: str  # the positive class name, or 'not-in-class'
    parts: list[int] = field(default_factory=list)       # partitions, as bitsets
    root: Graph | None = None                            # line-graph root
    embedding: list[int] | None = None                   # into L(K33)
    witness: list[int] = field(default_factory=list)     # forbidden structure
    witness_name: str = ""
    complement_of: "SmallClassification | None" = None

    @property
    def in_class(self) -> bool:
        return self.verdict != "not-in-class"


def _find_p3(g: Graph) -> list[int] | None:
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for a, b in combinations(nb, 2):
            if not g.has_edge(a, b):
                return [a, v, b]
    return None


def classify_p3(g: Graph) -> SmallClassification:
    """Disjoint-union-of-cliques recognition: P3-free iff every component
    is a clique."""
    p3 = _find_p3(g)
    if p3 is not None:
        return SmallClassification("not-in-class", witness=p3, witness_name="P3")
    return SmallClassification("disjoint-cliques", parts=g.components())


def _find_4set(g: Graph, shape: str) -> list[int] | None:
    """Brute-force search for an induced claw / diamond / coclaw."""
    for quad in combinations(range(g.n), 4):
        sub, old = g.induced(quad)
        m = sub.edge_count()
        degs = sorted(sub.degree(i) for i in range(4))
        if shape == "claw" and m == 3 and degs == [1, 1, 1, 3]:
            return list(quad)
        if shape == "diamond" and m == 5:
            return list(quad)
        if shape == "coclaw" and m == 3 and degs == [0, 2, 2, 2]:
            return list(quad)
    return None


def classify_paw(g: Graph) -> SmallClassification:
    """No induced subdivision of the paw iff cycle, complete multipartite
    (k >= 2), or tree; otherwise an explicit subdivision witness."""
    if not g.connected():
        raise GraphError("paw classification needs a connected graph")

    comp_cl = classify_p3(g.complement())
    if comp_cl.in_class and len(comp_cl.parts) >= 2:
        return SmallClassification("complete-multipartite", parts=comp_cl.parts)
    if g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)):
        return SmallClassification("cycle")
    if g.edge_count() == g.n - 1:
        return SmallClassification("tree")

    tri = g.triangle()
    if tri is not None:
        return _paw_witness_from_triangle(g, tri)
    sq = _find_square(g)
    if sq is not None:
        return _paw_witness_from_square(g, sq)
    return _paw_witness_from_cycle(g)


def _find_square(g: Graph) -> list[int] | None:
    for h in enumerate_holes(g, 4, 4):
        return h
    return None


def _grow_multipartite(g: Graph, seed: int) -> list[int]:
    """Inclusion-maximal complete multipartite induced subgraph containing
    the seed, greedy in index order; returns the part bitsets."""
    parts = [1 << v for v in bits(seed)]
    # merge seed vertices that are nonadjacent into shared parts is not
    # needed: a triangle seeds three singleton parts
    changed = True
    while changed:
        changed = False
        covered = 0
        for p in parts:
            covered |= p
        for v in range(g.n):
            if covered >> v & 1:
                continue
            # v joins part i if anticomplete to it and complete to the rest
            for i, p in enumerate(parts):
                if g.adj[v] & p:
                    continue
                if all(q & ~g.adj[v] == 0 for j, q in enumerate(parts) if j != i):
                    parts[i] |= 1 << v
                    changed = True
                    break
            else:
                if all(q & ~g.adj[v] == 0 for q in parts):
                    parts.append(1 << v)
                    changed = True
            if changed:
                break
    return parts


def _paw_witness_from_triangle(g: Graph, tri) -> SmallClassification:
    parts = _grow_multipartite(g, mask_of(tri))
    covered = 0
    for p in parts:
        covered |= p
    # g is connected and not multipartite, so some outside vertex attaches
    for v in range(g.n):
        if covered >> v & 1 or not (g.adj[v] & covered):
            continue
        nb_parts = [i for i, p in enumerate(parts) if g.adj[v] & p]
        i1 = nb_parts[0]
        v1 = next(bits(g.adj[v] & parts[i1]))
        missing = [
            (i, next(bits(p & ~g.adj[v])))
            for i, p in enumerate(parts)
            if p & ~g.adj[v]
        ]
        non_nb = [(i, u) for i, u in missing if not g.has_edge(v, u)]
        two = [t for t in non_nb if t[0] != i1]
        if len(two) >= 2:
            (_, vi), (_, vj) = two[0], two[1]
            return SmallClassification(
                "not-in-class", witness=[v, v1, vi, vj], witness_name="paw"
            )
        # v complete to all parts but one, partially tied to that one
        for i, p in enumerate(parts):
            hit = g.adj[v] & p
            miss = p & ~g.adj[v]
            if hit and miss:
                v2 = next(bits(hit))
                v2p = next(bits(miss))
                j = next(jj for jj in range(len(parts)) if jj != i and parts[jj] & g.adj[v])
                v1b = next(bits(parts[j] & g.adj[v]))
                return SmallClassification(
                    "not-in-class", witness=[v, v1b, v2, v2p], witness_name="paw"
                )
    raise AssertionError("triangle case: maximal multipartite had no attachment")


def _paw_witness_from_square(g: Graph, sq) -> SmallClassification:
    # grow a maximal complete bipartite subgraph with both sides >= 2
    h1 = mask_of([sq[0], sq[2]])
    h2 = mask_of([sq[1], sq[3]])
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if (h1 | h2) >> v & 1:
                continue
            if g.adj[v] & h1 == 0 and h2 & ~g.adj[v] == 0:
                h1 |= 1 << v
                changed = True
            elif g.adj[v] & h2 == 0 and h1 & ~g.adj[v] == 0:
                h2 |= 1 << v
                changed = True
    for v in range(g.n):
        if (h1 | h2) >> v & 1 or not (g.adj[v] & (h1 | h2)):
            continue
        if g.adj[v] & h1:
            side, other = h1, h2
        else:
            side, other = h2, h1
        v1 = next(bits(g.adj[v] & side))
        miss = side & ~g.adj[v]
        if miss:
            v1p = next(bits(miss))
            o = list(bits(other))[:2]
            return SmallClassification(
                "not-in-class", witness=[v, v1, v1p, o[0], o[1]], witness_name="paw-subdivision"
            )
    raise AssertionError("square case: maximal bipartite had no attachment")


def _paw_witness_from_cycle(g: Graph) -> SmallClassification:
    girth = g.girth()
    cyc = next(enumerate_holes(g, max(girth, 4), girth))
    cmask = mask_of(cyc)
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        nb = [i for i, c in enumerate(cyc) if g.has_edge(v, c)]
        if not nb:
            continue
        if len(nb) == 1:
            return SmallClassification(
                "not-in-class", witness=cyc + [v], witness_name="paw-subdivision"
            )
        # rotate the hole so the two smallest attachments are c_1, c_i
        first = nb[0]
        rot = cyc[first:] + cyc[:first]
        nb2 = sorted(i for i, c in enumerate(rot) if g.has_edge(v, c))
        i = nb2[1]
        return SmallClassification(
            "not-in-class", witness=[v] + rot[: i + 2], witness_name="paw-subdivision"
        )
    raise AssertionError("cycle case: no attachment found")


def classify_hh(g: Graph) -> SmallClassification:
    """Line graph of a triangle-free graph iff no claw and no diamond."""
    claw = _find_4set(g, "claw")
    if claw is not None:
        return SmallClassification("not-in-class", witness=claw, witness_name="claw")
    diamond = _find_4set(g, "diamond")
    if diamond is not None:
        return SmallClassification("not-in-class", witness=diamond, witness_name="diamond")
    got = line_root_with_map(g)
    if got is None:
        raise AssertionError("claw- and diamond-free graph has no triangle-free root")
    root, _ = got
    return SmallClassification("line-of-triangle-free", root=root)


def classify_claw_coclaw(g: Graph) -> SmallClassification:
    """The claw- and coclaw-free catalogue: A6, induced subgraphs of
    L(K_{3,3}), unions of long cycles and paths, and complements."""
    claw = _find_4set(g, "claw")
    if claw is not None:
        return SmallClassification("not-in-class", witness=claw, witness_name="claw")
    coclaw = _find_4set(g, "coclaw")
    if coclaw is not None:
        return SmallClassification("not-in-class", witness=coclaw, witness_name="coclaw")

    got = _claw_coclaw_positive(g)
    if got is not None:
        return got
    comp = _claw_coclaw_positive(g.complement())
    if comp is not None:
        return SmallClassification("complement-of", complement_of=comp)
    raise AssertionError("claw- and coclaw-free graph escaped the catalogue")


def _claw_coclaw_positive(g: Graph) -> SmallClassification | None:
    from .named import a6, line_k33

    if g.n == 6 and induced_embedding(a6(), g) is not None and g.edge_count() == 9:
        return SmallClassification("a6")
    if _cycles_and_paths(g):
        return SmallClassification("cycles-and-paths")
    if g.n <= 9:
        emb = induced_embedding(g, line_k33())
        if emb is not None:
            return SmallClassification("sub-l-k33", embedding=emb)
    return None


def _cycles_and_paths(g: Graph) -> bool:
    for comp in g.components():
        sub, _ = g.induced_mask(comp)
        degs = [sub.degree(v) for v in range(sub.n)]
        if any(d > 2 for d in degs):
            return False
        if all(d == 2 for d in degs) and sub.n < 4:
            return False  # triangle component is not a long cycle
    return True


def classify_small(g: Graph, theorem: str) -> SmallClassification:
    table = {
        "p3": classify_p3,
        "paw": classify_paw,
        "hh": classify_hh,
        "claw_coclaw": classify_claw_coclaw,
        "claw-coclaw": classify_claw_coclaw,
    }
    if theorem not in table:
        raise GraphError(f"unknown small theorem {theorem!r}")
    return table[theorem](g)


# -- weakly triangulated graphs ----------------------------------------------

def is_weakly_triangulated(g: Graph) -> tuple[str, list[int]] | None:
    """None iff no long hole and no long antihole; else the witness."""
    for h in enumerate_holes(g, 5, g.n):
        return ("hole", h)
    for h in enumerate_antiholes(g, 5, g.n):
        return ("antihole", h)
    return None


@dataclass
class TwoPair:
    a: int
    b: int


def validate_two_pair(g: Graph, a: int, b: int) -> bool:
    """Component criterion: a, b nonadjacent and separated by their
    common neighborhood (equivalent to every a-b path having length 2)."""
    if a == b or g.has_edge(a, b):
        return False
    cut = g.adj[a] & g.adj[b]
    allowed = g.full_mask() & ~cut
    comp = 1 << a
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & allowed
        frontier = nxt & ~comp
        comp |= frontier
    return not (comp >> b & 1)


def _is_anticonnected(g: Graph, mask: int) -> bool:
    return len(g.complement().components_of(mask)) == 1


def _complete_to(g: Graph, tmask: int) -> int:
    out = 0
    for v in range(g.n):
        if tmask >> v & 1:
            continue
        if tmask & ~g.adj[v] == 0:
            out |= 1 << v
    return out


def find_two_pair(g: Graph, _budget: int | None = None) -> TwoPair | None:
    """A validated 2-pair of a weakly triangulated graph; None on cliques.

    Follows the constructive proof: seed T with the middle of a P3, grow
    it maximal keeping G[T] anticonnected with two nonadjacent
    T-complete vertices, and recurse into the common neighborhood.
    """
    if _budget is None:
        _budget = g.n + 1
    if _budget < 0:
        raise GraphError("recursion exceeded |V|: input not weakly triangulated?")
    if g.is_clique_mask(g.full_mask()):
        return None
    cl = classify_p3(g)
    if cl.in_class:
        # disjoint cliques, at least two: any cross-component pair works
        comps = cl.parts
        a = next(bits(comps[0]))
        b = next(bits(comps[1]))
        return TwoPair(a, b)
    p3 = _find_p3(g)
    t = 1 << p3[1]

    def good(tmask: int) -> bool:
        if not _is_anticonnected(g, tmask):
            return False
        c = _complete_to(g, tmask)
        for u in bits(c):
            if c & ~g.adj[u] & ~(1 << u):
                return True
        return False

    growing = True
    while growing:
        growing = False
        for v in range(g.n):
            if t >> v & 1:
                continue
            if good(t | (1 << v)):
                t |= 1 << v
                growing = True
    c = _complete_to(g, t)
    sub, old = g.induced_mask(c)
    inner = find_two_pair(sub, _budget - 1)
    if inner is None:
        raise GraphError("C(T) became a clique: input not weakly triangulated?")
    pair = TwoPair(old[inner.a], old[inner.b])
    if not validate_two_pair(g, pair.a, pair.b):
        raise GraphError("2-pair failed validation: input not weakly triangulated")
    return pair


def contract_pair(g: Graph, a: int, b: int) -> tuple[Graph, list[int]]:
    """Contract nonadjacent a, b into one vertex adjacent to N(a) u N(b).

    Returns the new graph and a map old-vertex -> new-vertex (a and b
    share an image)."""
    keep = [v for v in range(g.n) if v != b]
    pos = {v: i for i, v in enumerate(keep)}
    h = Graph(g.n - 1)
    for u, v in g.edges():
        uu = pos[a] if u == b else pos[u]
        vv = pos[a] if v == b else pos[v]
        if uu != vv and not h.has_edge(uu, vv):
            h.add_edge_unchecked(uu, vv)
    omap = [pos[a] if v == b else pos[v] for v in range(g.n)]
    return h, omap


def color_weakly_triangulated(g: Graph) -> list[int]:
    """A proper coloring with omega(g) colors by repeated 2-pair
    contraction; validated on return."""
    if g.n == 0:
        return []
    bad = is_weakly_triangulated(g)
    if bad is not None:
        raise GraphError(f"input has a long {bad[0]}: not weakly triangulated")
    maps: list[list[int]] = []
    cur = g
    while True:
        pair = find_two_pair(cur)
        if pair is None:
            break
        cur, omap = contract_pair(cur, pair.a, pair.b)
        maps.append(omap)
    # cur is a clique: color it, then un-contract
    color = list(range(cur.n))
    for omap in reversed(maps):
        color = [color[omap[v]] for v in range(len(omap))]
    assert all(color[u] != color[v] for u, v in g.edges()), "coloring must be proper"
    return color
