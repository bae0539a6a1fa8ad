"""k-in-a-tree for graphs of girth at least k.

Decides whether an induced tree covers k prescribed vertices, returning
either the tree or a machine-checkable certificate that none exists:
a square or cubic structure (k = 4), a K4-structure that decomposes the
graph (k = 6), or a k-structure that decomposes the graph (k >= 5).
For k = 3 the general machinery does not apply and a bounded exhaustive
search stands in.

The engine works on terminals of degree one (callers get the pending
neighbor reduction), grows a tree one terminal at a time, and analyses
the linking lemma's two cases whenever the new terminal's connecting
path attaches to the tree more than once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .graphs import Graph, GraphError, TooLargeError, bit_count, bits, mask_of

EXHAUSTIVE_TREE_BOUND = 22
K3_FALLBACK_BOUND = 20


class KinTreeInternalError(AssertionError):
    """A case that the supporting lemmas rule out fired anyway."""


# -- certificates ----------------------------------------------------------

@dataclass
class SquareSplit:
    a: tuple[int, int, int, int]  # vertex bitsets A_1..A_4
    s: tuple[int, int, int, int]
    r: int


@dataclass
class CubicSplit:
    a: tuple[int, int, int, int]
    b: tuple[int, int, int, int]
    s: tuple[int, int, int, int, int, int, int, int]
    r: int


@dataclass
class KStructWitness:
    paths: list[list[int]]  # paths[i] runs from terminal x_i to cycle vertex s_i

    def cycle(self) -> list[int]:
        return [p[-1] for p in self.paths]

    def terminals(self) -> list[int]:
        return [p[0] for p in self.paths]


@dataclass
class K4Witness:
    hubs: dict[str, int]                 # 'a','b','c','d'
    paths: dict[str, list[int]]          # 'ab'.. : from x_ab to s_ab

    PAIRS = ("ab", "ac", "ad", "bc", "bd", "cd")


@dataclass
class TreeOrCertificate:
    kind: str  # tree | square | cubic | k4 | kstructure |
    #            disconnected-terminals | no-tree-exhaustive | tree-exists
    graph: Graph
    terminals: list[int]
    tree: list[int] | None = None
    square: SquareSplit | None = None
    cubic: CubicSplit | None = None
    k4: K4Witness | None = None
    kstruct: KStructWitness | None = None
    pendants: dict[int, int] = field(default_factory=dict)

    @property
    def has_tree(self) -> bool:
        return self.kind == "tree"


# -- certificate validators ------------------------------------------------

def validate_square_split(g: Graph, universe: int, terms: list[int], sp: SquareSplit) -> bool:
    parts = list(sp.a) + list(sp.s) + [sp.r]
    tot = 0
    for p in parts:
        if p & tot:
            return False
        tot |= p
    if tot != universe:
        return False
    sall = sp.s[0] | sp.s[1] | sp.s[2] | sp.s[3]
    for i in range(4):
        if not (sp.a[i] >> terms[i] & 1):
            return False
        if sp.s[i] == 0 or not g.is_stable_mask(sp.s[i]):
            return False
        if not g.is_complete_between(sp.s[i], sp.s[(i + 1) % 4]):
            return False
    for i in range(2):
        if not g.is_anticomplete_between(sp.s[i], sp.s[i + 2]):
            return False
    for i in range(4):
        nb = 0
        for v in bits(sp.a[i]):
            nb |= g.adj[v]
        if nb & universe & ~(sp.a[i] | sp.s[i]):
            return False
        if sp.s[i] & ~nb:
            return False  # N(A_i) must be all of S_i
        if len(g.components_of(sp.a[i])) != 1:
            return False
    for v in bits(sp.r):
        if g.adj[v] & universe & ~(sp.r | sall):
            return False
    return True


def validate_cubic_split(g: Graph, universe: int, terms: list[int], sp: CubicSplit) -> bool:
    parts = list(sp.a) + list(sp.b) + list(sp.s) + [sp.r]
    tot = 0
    for p in parts:
        if p & tot:
            return False
        tot |= p
    if tot != universe:
        return False
    s_hi = sp.s[4] | sp.s[5] | sp.s[6] | sp.s[7]
    if sum(1 for i in range(4, 8) if sp.s[i] == 0) > 1:
        return False
    for i in range(8):
        if not g.is_stable_mask(sp.s[i]):
            return False
    for i in range(4):
        if sp.s[i] == 0 or not (sp.a[i] >> terms[i] & 1):
            return False
        if not g.is_complete_between(sp.s[i], s_hi & ~sp.s[i + 4]):
            return False
        if not g.is_anticomplete_between(sp.s[i], sp.s[i + 4]):
            return False
    for i in range(4):
        for j in range(i + 1, 4):
            if not g.is_anticomplete_between(sp.s[i], sp.s[j]):
                return False
            if not g.is_anticomplete_between(sp.s[i + 4], sp.s[j + 4]):
                return False
    for i in range(4):
        nb = 0
        for v in bits(sp.a[i]):
            nb |= g.adj[v]
        if nb & universe & ~(sp.a[i] | sp.s[i]):
            return False
        if sp.s[i] & ~nb:
            return False
        if len(g.components_of(sp.a[i])) != 1:
            return False
        allowed_b = sp.b[i] | sp.s[i] | (s_hi & ~sp.s[i + 4])
        for v in bits(sp.b[i]):
            if g.adj[v] & universe & ~allowed_b:
                return False
    for v in bits(sp.r):
        if g.adj[v] & universe & ~(sp.r | s_hi):
            return False
    return True


def _component_of(g: Graph, v: int, allowed: int) -> int:
    comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u] & allowed
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def validate_kstruct(g: Graph, w: KStructWitness, check_decomposes: bool = True) -> bool:
    k = len(w.paths)
    if k < 4:
        return False
    used: set[int] = set()
    for p in w.paths:
        if len(p) < 2 or not g.is_induced_path(p):
            return False
        if used & set(p):
            return False
        used.update(p)
    cyc = w.cycle()
    for i, p in enumerate(w.paths):
        for j in range(i + 1, k):
            q = w.paths[j]
            for u in p:
                for v in q:
                    expect = {u, v} == {cyc[i], cyc[j]} and (
                        j == i + 1 or (i == 0 and j == k - 1)
                    )
                    if g.has_edge(u, v) != expect:
                        return False
    if check_decomposes:
        terms = w.terminals()
        others = mask_of(terms)
        for i, p in enumerate(w.paths):
            comp = _component_of(g, terms[i], g.full_mask() & ~(1 << cyc[i]))
            if comp & others & ~(1 << terms[i]):
                return False
    return True


def validate_k4(g: Graph, w: K4Witness, check_decomposes: bool = True) -> bool:
    hubs = w.hubs
    parts: dict[str, list[int]] = dict(w.paths)
    used: set[int] = set(hubs.values())
    if len(used) != 4:
        return False
    for ij in K4Witness.PAIRS:
        p = parts[ij]
        if len(p) < 2 or not g.is_induced_path(p):
            return False
        if used & set(p):
            return False
        used.update(p)
    required = set()
    for ij in K4Witness.PAIRS:
        s_ij = parts[ij][-1]
        for h in ij:
            required.add(tuple(sorted((hubs[h], s_ij))))
    pathof: dict[int, str] = {}
    for ij in K4Witness.PAIRS:
        for v in parts[ij]:
            pathof[v] = ij
    all_vs = sorted(used)
    for a in all_vs:
        for b in all_vs:
            if b <= a:
                continue
            pa, pb = pathof.get(a), pathof.get(b)
            if pa is not None and pa == pb:
                p = parts[pa]
                expect = abs(p.index(a) - p.index(b)) == 1
            else:
                expect = tuple(sorted((a, b))) in required
            if g.has_edge(a, b) != expect:
                return False
    if check_decomposes:
        xs = {ij: parts[ij][0] for ij in K4Witness.PAIRS}
        others = mask_of(xs.values())
        for ij in K4Witness.PAIRS:
            cut1 = (1 << hubs[ij[0]]) | (1 << hubs[ij[1]])
            comp = _component_of(g, xs[ij], g.full_mask() & ~cut1)
            if comp & others & ~(1 << xs[ij]):
                return False
            cut2 = 1 << parts[ij][-1]
            comp = _component_of(g, xs[ij], g.full_mask() & ~cut2)
            if comp & others & ~(1 << xs[ij]):
                return False
    return True


# -- brute-force oracle -----------------------------------------------------

def induced_tree_exists(g: Graph, terms: list[int], bound: int = EXHAUSTIVE_TREE_BOUND) -> int | None:
    """Exhaustive: some vertex set inducing a tree that covers ``terms``,
    as a bitset, or None.  The independent oracle for all of this module;
    the bound caps the number of free (non-terminal) vertices."""
    tmask = mask_of(terms)
    free = [v for v in range(g.n) if not (tmask >> v & 1)]
    if len(free) > bound:
        raise TooLargeError(f"exhaustive tree search bound {bound} exceeded")
    for sub in range(1 << len(free)):
        mask = tmask
        for i, v in enumerate(free):
            if sub >> i & 1:
                mask |= 1 << v
        if g.is_tree_mask(mask):
            return mask
    return None


# -- tree utilities ----------------------------------------------------------

def _tree_path(g: Graph, tree_mask: int, u: int, v: int) -> list[int]:
    prev = {u: -1}
    frontier = [u]
    while frontier and v not in prev:
        nxt = []
        for x in frontier:
            for y in bits(g.adj[x] & tree_mask):
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _covers(mask: int, terms) -> bool:
    return all(mask >> t & 1 for t in terms)


def _is_good_tree(g: Graph, mask: int, terms) -> bool:
    return _covers(mask, terms) and g.is_tree_mask(mask)


def _prune_tree(g: Graph, mask: int, terms) -> int:
    """Shave non-terminal leaves so the tree's leaves are terminals."""
    tset = mask_of(terms)
    changed = True
    while changed:
        changed = False
        for v in bits(mask & ~tset):
            if bit_count(g.adj[v] & mask) <= 1:
                mask &= ~(1 << v)
                changed = True
    return mask


# -- the linking lemma --------------------------------------------------------

@dataclass
class _LinkOutcome:
    kind: str  # 'tree' or 'kstructure'
    tree: int = 0
    paths: list[list[int]] | None = None


def _link_tree(g: Graph, t_mask: int, q_path: list[int], k: int) -> _LinkOutcome:
    """One growth step: either T u Q contains a covering tree, or the
    attachment reveals a k-structure shape (spine plus hanging paths)."""
    w = q_path[-1]
    q_mask = mask_of(q_path)
    wset = g.adj[w] & t_mask
    if bit_count(wset) == 1:
        return _LinkOutcome("tree", t_mask | q_mask)

    wl = list(bits(wset))
    basics = []
    for i, a in enumerate(wl):
        for b in wl[i + 1 :]:
            p = _tree_path(g, t_mask, a, b)
            if not any(wset >> x & 1 for x in p[1:-1]):
                basics.append(p if p[0] < p[-1] else p[::-1])
    basics.sort(key=lambda p: (p[0], p[-1]))

    def deg_t(v: int) -> int:
        return bit_count(g.adj[v] & t_mask)

    hard = [p for p in basics if p[1:-1] and all(deg_t(x) >= 3 for x in p[1:-1])]

    if not hard:
        # Case 1: knock one degree-2 interior vertex out of each basic path
        s = t_mask | q_mask
        for p in basics:
            if all(s >> x & 1 for x in p):
                deg2 = [x for x in p[1:-1] if deg_t(x) == 2]
                if not deg2:
                    raise KinTreeInternalError("case 1 basic path has no degree-2 interior")
                s &= ~(1 << min(deg2))
        if not g.is_tree_mask(s):
            raise KinTreeInternalError("case 1 deletion did not produce a tree")
        return _LinkOutcome("tree", s)

    # Case 2: a basic path made of branch vertices is the spine
    spine = hard[0]
    if len(spine) != k - 1:
        raise KinTreeInternalError(
            f"all-branch basic path on {len(spine)} vertices, expected {k - 1}"
        )
    spine_mask = mask_of(spine)

    hangs: list[list[int]] = []
    for s_i in spine:
        piece = _component_of(g, s_i, (t_mask & ~spine_mask) | (1 << s_i))
        leaves = [x for x in bits(piece) if deg_t(x) == 1]
        if len(leaves) != 1:
            raise KinTreeInternalError("hanging piece does not hold exactly one terminal")
        hang = _tree_path(g, t_mask, leaves[0], s_i)
        if mask_of(hang) != piece:
            raise KinTreeInternalError("hanging piece is not a path")
        hangs.append(hang)

    # w_i: the neighbor of w inside each hanging path closest to its terminal
    w_pick: list[int] = []
    for hang in hangs:
        cand = next((x for x in hang[:-1] if g.has_edge(w, x)), None)
        w_pick.append(cand if cand is not None else hang[-1])

    km1 = len(spine)
    if all(w_pick[i] == hangs[i][-1] for i in range(km1)):
        return _LinkOutcome("kstructure", paths=[*hangs, q_path])

    if any(w_pick[i] == hangs[i][-2] for i in range(km1)):
        # w sits two steps from the spine: the girth forces k <= 4 and the
        # covering tree is the star of truncated hanging paths around Q
        if k > 4:
            raise KinTreeInternalError("w at distance 2 from the spine with k > 4")
        s = q_mask
        for i, hang in enumerate(hangs):
            s |= mask_of(hang[: hang.index(w_pick[i]) + 1])
        if not g.is_tree_mask(s):
            raise KinTreeInternalError("k<=4 segment star is not a tree")
        return _LinkOutcome("tree", s)

    for j in range(km1):
        if w_pick[j] == hangs[j][-1]:
            continue
        s = q_mask | (spine_mask & ~(1 << spine[j]))
        for i, hang in enumerate(hangs):
            s |= mask_of(hang[: hang.index(w_pick[i]) + 1])
        if g.is_tree_mask(s):
            return _LinkOutcome("tree", s)
    raise KinTreeInternalError("no spine deletion yielded a tree")


# -- first step: grow a tree terminal by terminal ----------------------------

def _bfs_to_attachment(g: Graph, src: int, t_mask: int, region: int | None = None) -> list[int] | None:
    """Shortest path from src to the nearest vertex with a neighbor in
    t_mask, staying outside t_mask (and inside region when given)."""
    if region is None:
        region = g.full_mask()
    region &= ~t_mask
    if not (region >> src & 1):
        return None
    prev = {src: -1}
    order = [src]
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        if g.adj[v] & t_mask:
            path = [v]
            while path[-1] != src:
                path.append(prev[path[-1]])
            path.reverse()
            return path
        for ww in sorted(bits(g.adj[v] & region)):
            if ww not in prev:
                prev[ww] = v
                order.append(ww)
    return None


def _first_step(g: Graph, terms: list[int], k: int):
    """Returns ('tree', mask) or ('kstructure', hanging paths + Q)."""
    t_mask = mask_of(g.shortest_path(terms[0], terms[1]))
    for idx in range(2, k):
        x = terms[idx]
        q = _bfs_to_attachment(g, x, t_mask)
        if q is None:
            raise KinTreeInternalError("terminal unreachable inside its component")
        out = _link_tree(g, t_mask, q, k)
        if out.kind == "tree":
            t_mask = _prune_tree(g, out.tree, terms[: idx + 1])
            if not _is_good_tree(g, t_mask, terms[: idx + 1]):
                raise KinTreeInternalError("growth step lost a terminal")
            continue
        if idx != k - 1:
            raise KinTreeInternalError("k-structure appeared before the last terminal")
        return "kstructure", out.paths
    return "tree", t_mask


# -- square / cubic growth (k = 4) --------------------------------------------

_SQUARE_LABELS = ["A1", "A2", "A3", "A4", "S1", "S2", "S3", "S4", "R"]
_CUBIC_LABELS = (
    ["A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4"]
    + [f"S{i}" for i in range(1, 9)]
    + ["R"]
)


def _square_from_parts(parts: dict[str, int]) -> SquareSplit:
    return SquareSplit(
        tuple(parts[f"A{i}"] for i in range(1, 5)),
        tuple(parts[f"S{i}"] for i in range(1, 5)),
        parts["R"],
    )


def _cubic_from_parts(parts: dict[str, int]) -> CubicSplit:
    return CubicSplit(
        tuple(parts[f"A{i}"] for i in range(1, 5)),
        tuple(parts[f"B{i}"] for i in range(1, 5)),
        tuple(parts[f"S{i}"] for i in range(1, 9)),
        parts["R"],
    )


def _split_parts(sp) -> dict[str, int]:
    if isinstance(sp, SquareSplit):
        out = {f"A{i+1}": sp.a[i] for i in range(4)}
        out.update({f"S{i+1}": sp.s[i] for i in range(4)})
        out["R"] = sp.r
        return out
    out = {f"A{i+1}": sp.a[i] for i in range(4)}
    out.update({f"B{i+1}": sp.b[i] for i in range(4)})
    out.update({f"S{i+1}": sp.s[i] for i in range(8)})
    out["R"] = sp.r
    return out


def _grow_quad(g: Graph, universe: int, terms: list[int], sq: SquareSplit):
    """Absorb the rest of the graph into a square split, switching to a
    cubic split when forced; a tree discovered along the way wins."""
    mode = "square"
    split: SquareSplit | CubicSplit = sq
    covered = 0
    for p in _split_parts(split).values():
        covered |= p

    while covered != universe:
        pending = universe & ~covered
        placed = False
        for v in bits(pending):
            parts = _split_parts(split)
            labels = _SQUARE_LABELS if mode == "square" else _CUBIC_LABELS
            okfun = validate_square_split if mode == "square" else validate_cubic_split
            maker = _square_from_parts if mode == "square" else _cubic_from_parts
            for lab in labels:
                parts2 = dict(parts)
                parts2[lab] = parts[lab] | (1 << v)
                cand = maker(parts2)
                if okfun(g, covered | (1 << v), terms, cand):
                    split = cand
                    covered |= 1 << v
                    placed = True
                    break
            if placed:
                break
        if placed:
            continue
        # no single placement works: look for a tree, then repartition
        for v in bits(pending):
            sub, old = g.induced_mask(covered | (1 << v))
            remap = {o: i for i, o in enumerate(old)}
            tmask = induced_tree_exists(sub, [remap[t] for t in terms])
            if tmask is not None:
                return "tree", mask_of(old[i] for i in bits(tmask))
        v = next(bits(pending))
        got = _csp_split(g, covered | (1 << v), terms, "cubic")
        if got is not None:
            mode, split = "cubic", got
            covered |= 1 << v
            continue
        if mode == "square":
            got = _csp_split(g, covered | (1 << v), terms, "square")
            if got is not None:
                split = got
                covered |= 1 << v
                continue
        raise KinTreeInternalError("square/cubic growth wedged: no placement, tree, or repartition")
    return mode, split


def _pair_rule(l1: str, l2: str, which: str) -> str:
    if l1 > l2:
        l1, l2 = l2, l1
    c1, i1 = l1[0], int(l1[1:] or 0)
    c2, i2 = l2[0], int(l2[1:] or 0)
    if which == "square":
        if c1 == "A" and c2 == "A":
            return "free" if i1 == i2 else "forbid"
        if c1 == "A" and c2 == "S":
            return "free" if i1 == i2 else "forbid"
        if c1 == "A" and c2 == "R":
            return "forbid"
        if c1 == "S" and c2 == "S":
            if i1 == i2:
                return "forbid"
            return "require" if (i2 - i1) % 4 in (1, 3) else "forbid"
        if c1 == "R" and c2 == "S":
            return "free"
        return "free"  # R,R
    # cubic
    if c1 == "A":
        if c2 == "A":
            return "free" if i1 == i2 else "forbid"
        if c2 == "B":
            return "forbid"
        if c2 == "S":
            return "free" if i1 == i2 else "forbid"
        return "forbid"  # A,R
    if c1 == "B":
        if c2 == "B":
            return "free" if i1 == i2 else "forbid"
        if c2 == "S":
            if i2 == i1:
                return "free"
            if i2 == i1 + 4:
                return "forbid"
            return "free" if i2 >= 5 else "forbid"
        return "forbid"  # B,R
    if c1 == "S" and c2 == "S":
        if i1 == i2:
            return "forbid"
        if i2 <= 4:
            return "forbid"
        if i1 <= 4:
            return "forbid" if i2 == i1 + 4 else "require"
        return "forbid"  # both high
    if c1 == "R" and c2 == "S":
        return "free" if i2 >= 5 else "forbid"
    return "free"  # R,R


def _csp_split(g: Graph, universe: int, terms: list[int], which: str):
    """Backtracking search for a square or cubic split of g[universe],
    over every assignment of the four terminals to the A-classes."""
    verts = [v for v in bits(universe) if v not in terms]
    labels = _SQUARE_LABELS if which == "square" else _CUBIC_LABELS
    validator = validate_square_split if which == "square" else validate_cubic_split
    maker = _square_from_parts if which == "square" else _cubic_from_parts

    def search(order_terms):
        assign: dict[int, str] = {t: f"A{i+1}" for i, t in enumerate(order_terms)}

        def ok(lab: str, v: int) -> bool:
            for u, l2 in assign.items():
                rule = _pair_rule(lab, l2, which)
                edge = g.has_edge(v, u)
                if rule == "forbid" and edge:
                    return False
                if rule == "require" and not edge:
                    return False
            return True

        def rec(i: int):
            if i == len(verts):
                parts = {lab: 0 for lab in labels}
                for v, lab in assign.items():
                    parts[lab] |= 1 << v
                cand = maker(parts)
                return cand if validator(g, universe, list(order_terms), cand) else None
            v = verts[i]
            for lab in labels:
                if ok(lab, v):
                    assign[v] = lab
                    got = rec(i + 1)
                    if got is not None:
                        return got
                    del assign[v]
            return None

        return rec(0)

    for order_terms in permutations(terms):
        got = search(order_terms)
        if got is not None:
            return got
    return None


# -- k >= 5: growing the decomposed region ------------------------------------

def _kstruct_fail_index(g: Graph, paths: list[list[int]], region: int) -> int | None:
    """Index of the first path whose cycle vertex fails to separate its
    terminal inside region, or None when the structure decomposes it."""
    terms = [p[0] for p in paths]
    others = mask_of(terms)
    for i, p in enumerate(paths):
        comp = _component_of(g, terms[i], region & ~(1 << p[-1]))
        if comp & others & ~(1 << terms[i]):
            return i
    return None


def _handle_k_failure(g: Graph, paths: list[list[int]], h_region: int, v: int, k: int):
    """The induction step when vertex v breaks the decomposition of the
    region: a tree, or (k = 6) a K4-structure."""
    fail = _kstruct_fail_index(g, paths, h_region | (1 << v))
    assert fail is not None
    paths = paths[fail:] + paths[:fail]
    x1 = paths[0][0]
    s = [p[-1] for p in paths]
    kprime = mask_of(u for p in paths[1:] for u in p)

    y = _component_of(g, x1, h_region & ~(1 << s[0]))
    z = _component_of(g, s[1], h_region & ~(1 << s[0]))
    q = _bfs_to_attachment(g, x1, kprime, region=y | z | (1 << v))
    if q is None:
        raise KinTreeInternalError("failure vertex did not yield a linking path")

    out = _link_tree(g, kprime, q, k)
    if out.kind == "tree":
        return "tree", out.tree

    w = q[-1]
    attach = set(bits(g.adj[w] & kprime))
    s2, sk = s[1], s[k - 1]
    sp3, spk1 = paths[2][-2], paths[k - 2][-2]
    if attach == {s2, sk}:
        raise KinTreeInternalError("square through s_1 despite the girth bound")
    if attach == {sp3, sk}:
        return _case_end_and_inner(g, [paths[0]] + paths[1:][::-1], w, k)
    if attach == {s2, spk1}:
        return _case_end_and_inner(g, paths, w, k)
    if attach == {sp3, spk1}:
        return _case_both_inner(g, paths, w, k)
    raise KinTreeInternalError(f"unexpected attachment {sorted(attach)} on the k-structure")


def _case_end_and_inner(g: Graph, paths: list[list[int]], w: int, k: int):
    """Attachment {s_2, s'_{k-1}}: rebuild a covering tree around s_1."""
    p1 = paths[0]
    s1, sk1 = p1[-1], paths[k - 2][-1]
    kprime = mask_of(u for p in paths[1:] for u in p)
    if g.has_edge(w, s1) or g.has_edge(w, p1[-2]):
        raise KinTreeInternalError("w too close to s_1 for this attachment case")
    nb = [u for u in p1[:-1] if g.has_edge(w, u)]
    if nb:
        seg = p1[: p1.index(nb[0]) + 1]  # from x_1 to the neighbor nearest x_1
        pmask = mask_of(seg) | (1 << w)
    else:
        pmask = mask_of(p1) | (1 << w)
    tree = pmask | (1 << s1) | (kprime & ~(1 << sk1))
    if g.is_tree_mask(tree):
        return "tree", tree
    raise KinTreeInternalError("s_2/s'_{k-1} attachment produced no tree")


def _case_both_inner(g: Graph, paths: list[list[int]], w: int, k: int):
    """Attachment {s'_3, s'_{k-1}}: subcases by how w meets P_1."""
    p1 = paths[0]
    s1, s3 = p1[-1], paths[2][-1]
    sp1 = p1[-2]
    kmask = mask_of(u for p in paths for u in p)
    nb_p1 = [u for u in p1 if g.has_edge(w, u)]

    def finish(tree: int):
        if not g.is_tree_mask(tree):
            raise KinTreeInternalError("symmetric attachment produced no tree")
        return "tree", tree

    if not nb_p1:
        return finish((1 << w) | (kmask & ~(1 << s3)))
    middle = [u for u in nb_p1 if u not in (s1, sp1)]
    if middle:
        u = min(middle, key=p1.index)
        pmask = mask_of(p1[: p1.index(u) + 1]) | (1 << w)
        if g.has_edge(w, s1):
            if k != 5:
                raise KinTreeInternalError("w adjacent to s_1 forces k = 5")
            drop = (1 << s3) | (1 << paths[3][-1])
        else:
            drop = 1 << s3
        return finish(pmask | (1 << s1) | (kmask & ~mask_of(p1) & ~drop))
    if nb_p1 == [s1]:
        if k != 5:
            raise KinTreeInternalError("N(w) in P_1 = {s_1} forces k = 5")
        return finish((1 << w) | (kmask & ~(1 << s3) & ~(1 << paths[3][-1])))
    if nb_p1 == [sp1]:
        if k == 5:
            return finish((1 << w) | (kmask & ~(1 << s3) & ~(1 << paths[3][-1])))
        if k == 6:
            return "k4", _assemble_k4(g, paths, w)
        raise KinTreeInternalError("N(w) in P_1 = {s'_1} with k not in (5, 6)")
    raise KinTreeInternalError("unclassified P_1 attachment in the symmetric case")


def _assemble_k4(g: Graph, paths: list[list[int]], w: int) -> K4Witness:
    """The k = 6 relabelling: the 6-structure plus w is a K4-structure."""
    s = [p[-1] for p in paths]
    hubs = {"a": w, "b": s[0], "c": s[2], "d": s[4]}
    k4paths = {
        "ab": paths[0][:-1],
        "ac": paths[2][:-1],
        "ad": paths[4][:-1],
        "bc": paths[1],
        "bd": paths[5],
        "cd": paths[3],
    }
    wit = K4Witness(hubs, k4paths)
    if not validate_k4(g, wit, check_decomposes=False):
        raise KinTreeInternalError("k = 6 relabelling is not a K4-structure")
    return wit


# -- the solver -----------------------------------------------------------------

def _solve_pendant(g: Graph, terms: list[int], k: int) -> TreeOrCertificate:
    """Core engine; requires every terminal to have degree 1 in g."""
    home = next(c for c in g.components() if c >> terms[0] & 1)
    if not _covers(home, terms):
        return TreeOrCertificate("disconnected-terminals", g, terms)

    if k == 3:
        if g.n > K3_FALLBACK_BOUND:
            raise TooLargeError(f"k=3 fallback bound {K3_FALLBACK_BOUND} exceeded")
        mask = induced_tree_exists(g, terms, bound=K3_FALLBACK_BOUND)
        if mask is not None:
            return TreeOrCertificate("tree", g, terms, tree=sorted(bits(mask)))
        return TreeOrCertificate("no-tree-exhaustive", g, terms)

    kind, payload = _first_step(g, terms, k)
    if kind == "tree":
        return TreeOrCertificate("tree", g, terms, tree=sorted(bits(payload)))

    paths: list[list[int]] = payload
    if k == 4:
        sq = SquareSplit(
            tuple(mask_of(p[:-1]) for p in paths),
            tuple(1 << p[-1] for p in paths),
            0,
        )
        order_terms = [p[0] for p in paths]
        struct_mask = mask_of(u for p in paths for u in p)
        if not validate_square_split(g, struct_mask, order_terms, sq):
            raise KinTreeInternalError("4-structure is not a square split")
        got = _grow_quad(g, g.full_mask(), order_terms, sq)
        if got[0] == "tree":
            return TreeOrCertificate("tree", g, terms, tree=sorted(bits(got[1])))
        if got[0] == "square":
            return TreeOrCertificate("square", g, order_terms, square=got[1])
        return TreeOrCertificate("cubic", g, order_terms, cubic=got[1])

    # k >= 5: absorb vertices while the k-structure separates its terminals
    region = mask_of(u for p in paths for u in p)
    for v in sorted(bits(g.full_mask() & ~region)):
        if _kstruct_fail_index(g, paths, region | (1 << v)) is None:
            region |= 1 << v
            continue
        got = _handle_k_failure(g, paths, region, v, k)
        if got[0] == "tree":
            if not _is_good_tree(g, got[1], terms):
                raise KinTreeInternalError("k-failure tree lost a terminal")
            return TreeOrCertificate("tree", g, terms, tree=sorted(bits(got[1])))
        wit = got[1]
        if validate_k4(g, wit, check_decomposes=True):
            return TreeOrCertificate("k4", g, terms, k4=wit)
        return TreeOrCertificate("tree-exists", g, terms)
    wit = KStructWitness(paths)
    if not validate_kstruct(g, wit, check_decomposes=True):
        raise KinTreeInternalError("final k-structure fails validation")
    return TreeOrCertificate("kstructure", g, terms, kstruct=wit)


def _deletion_extract(g: Graph, terms: list[int], k: int) -> TreeOrCertificate:
    """A tree is known to exist; shrink the graph while the verdict stays
    positive, which converges exactly on an induced covering tree."""
    ids = list(range(g.n))
    cur = g
    cur_terms = list(terms)
    changed = True
    while changed:
        changed = False
        for v in range(cur.n):
            if v in cur_terms:
                continue
            sub, old = cur.delete_vertices([v])
            remap = {o: i for i, o in enumerate(old)}
            verdict = _solve_pendant(sub, [remap[t] for t in cur_terms], k)
            if verdict.has_tree or verdict.kind == "tree-exists":
                ids = [ids[o] for o in old]
                cur = sub
                cur_terms = [remap[t] for t in cur_terms]
                changed = True
                break
    if not _is_good_tree(cur, cur.full_mask(), cur_terms):
        raise KinTreeInternalError("deletion fixpoint is not the covering tree")
    return TreeOrCertificate("tree", g, terms, tree=sorted(ids))


def k_in_a_tree(g: Graph, terminals: list[int]) -> TreeOrCertificate:
    """Decide whether an induced tree of g covers the given terminals.

    Preconditions: k = len(terminals) >= 3, terminals distinct, and
    girth(g) >= k.  Terminals of degree other than one get a pending
    neighbor; certificates refer to the augmented graph carried in the
    result, while a positive answer is returned as a tree of g itself.
    """
    k = len(terminals)
    if k < 3:
        raise GraphError("need at least three terminals")
    if len(set(terminals)) != k:
        raise GraphError("duplicate terminals")
    for t in terminals:
        if not 0 <= t < g.n:
            raise GraphError(f"terminal {t} out of range")
    girth = g.girth()
    if girth is not None and girth < k:
        raise GraphError(f"girth {girth} below k={k}")

    need = [t for t in terminals if g.degree(t) != 1]
    h = g.add_vertices(len(need), [[t] for t in need])
    pend = {g.n + i: t for i, t in enumerate(need)}
    hterms = [g.n + need.index(t) if t in need else t for t in terminals]

    res = _solve_pendant(h, hterms, k)
    if res.kind == "tree-exists":
        res = _deletion_extract(h, hterms, k)
    res.pendants = pend
    if res.has_tree:
        tree_g = sorted(v for v in res.tree if v < g.n)
        if not _is_good_tree(g, mask_of(tree_g), terminals):
            raise KinTreeInternalError("pendant stripping broke the tree")
        res.tree = tree_g
    return res
