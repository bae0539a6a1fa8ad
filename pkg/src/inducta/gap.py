"""Gap theory: theta minus alpha, criticality, and the verification harness.

The gap of a graph is theta(G) - alpha(G); a graph is gap-critical when
every vertex deletion decreases the gap.  s(t) denotes the order of a
smallest graph of gap t.  The harness checks everything here that is
feasible by exhaustion: s(1) = 5 via all graphs on at most 4 vertices,
the named witnesses for gaps 2 and 3, clique removal on gap-critical
graphs, absence of simplicial vertices, factor-criticality of
triangle-free gap-critical graphs, and the stable-set avoidance
property of the 13-vertex Ramsey graph.  The minimality of s(2), s(3),
s(4) is out of reach exhaustively and is reported as unchecked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, WeightedGraph, bit_count, bits, mask_of
from .matching import is_factor_critical
from .named import cycle, disjoint_copies, r35, wagner
from .oracle import clique_cover, exact_invariants, max_weight_stable_set


@dataclass
class GapReport:
    theta: int
    alpha: int
    gap: int
    is_gap_critical: bool
    vertex_gap_drops: list[int]
    component_factor_critical: list[bool]


def gap_value(g: Graph) -> int:
    rep = exact_invariants(g)
    return rep.theta - rep.alpha


def gap_report(g: Graph) -> GapReport:
    rep = exact_invariants(g)
    base = rep.theta - rep.alpha
    drops = []
    for v in range(g.n):
        h, _ = g.delete_vertices([v])
        drops.append(base - gap_value(h))
    critical = g.n > 0 and all(d > 0 for d in drops)
    fc = []
    for comp in g.components():
        h, _ = g.induced_mask(comp)
        fc.append(is_factor_critical(h))
    return GapReport(rep.theta, rep.alpha, base, critical, drops, fc)


def has_simplicial_vertex(g: Graph) -> int | None:
    for v in range(g.n):
        if g.is_clique_mask(g.adj[v]):
            return v
    return None


def _all_maximal_stable_sets(g: Graph) -> list[int]:
    from .linegraph import maximal_cliques

    return maximal_cliques(g.complement())


def second_stable_set_property(g: Graph) -> bool:
    """Every stable set is disjoint from some maximum stable set.

    Checking maximal stable sets suffices: shrinking a stable set only
    makes avoidance easier.
    """
    a, _ = max_weight_stable_set(WeightedGraph(g))
    maxima = [
        m for m in _all_maximal_stable_sets(g) if bit_count(m) == a
    ]
    for s in _all_maximal_stable_sets(g):
        if not any(m & s == 0 for m in maxima):
            return False
    return True


def factor_critical_components(g: Graph) -> list[bool]:
    out = []
    for comp in g.components():
        h, _ = g.induced_mask(comp)
        out.append(is_factor_critical(h))
    return out


# -- the chapter harness -------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class GapVerification:
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))


def _all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n)
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                g.add_edge_unchecked(u, v)
        yield g


def verify_gap_chapter() -> GapVerification:
    out = GapVerification()

    # (i) all graphs on <= 4 vertices have gap 0, so s(1) = 5 with C5
    small_ok = True
    count = 0
    for n in range(5):
        for g in _all_graphs(n):
            count += 1
            if gap_value(g) != 0:
                small_ok = False
    c5_gap = gap_value(cycle(5))
    out.add(
        "s(1)=5",
        small_ok and c5_gap == 1,
        f"{count} graphs on <=4 vertices all gap 0; gap(C5)={c5_gap}",
    )

    # (ii) the witnesses for gaps 2 and 3
    g2 = gap_value(disjoint_copies(cycle(5), 2))
    out.add("gap(2C5)=2", g2 == 2, f"gap={g2}")
    rep_r = exact_invariants(r35())
    out.add(
        "gap(R)=3",
        rep_r.theta == 7 and rep_r.alpha == 4,
        f"theta={rep_r.theta} alpha={rep_r.alpha}",
    )

    named = {
        "C5": cycle(5),
        "C7": cycle(7),
        "2C5": disjoint_copies(cycle(5), 2),
        "R": r35(),
    }
    critical = {}
    for name, g in named.items():
        critical[name] = gap_report(g).is_gap_critical
    out.add(
        "named graphs gap-critical",
        all(critical.values()),
        ", ".join(f"{k}:{v}" for k, v in critical.items()),
    )

    # (iii) removing any clique from a gap-critical graph drops theta by
    # one and keeps alpha
    removal_ok = True
    for name, g in named.items():
        rep = exact_invariants(g)
        for k in _nonempty_cliques(g):
            h, _ = g.delete_vertices(list(bits(k)))
            rep_h = exact_invariants(h)
            if rep_h.theta != rep.theta - 1 or rep_h.alpha != rep.alpha:
                removal_ok = False
    out.add("clique removal on gap-critical graphs", removal_ok)

    # (iv) gap-critical graphs have no simplicial vertex
    out.add(
        "no simplicial vertex",
        all(has_simplicial_vertex(g) is None for g in named.values()),
    )

    # (v) triangle-free gap-critical graphs have factor-critical components
    fc_ok = True
    for name, g in named.items():
        if g.triangle() is None:
            if not all(factor_critical_components(g)):
                fc_ok = False
    out.add("factor-critical components (triangle-free)", fc_ok)

    # (vi) every set of at most 4 vertices of R avoids some maximum stable set
    r = r35()
    max_stables = [
        mask_of(c)
        for c in combinations(range(13), 4)
        if r.is_stable_mask(mask_of(c))
    ]
    avoid_ok = True
    for size in range(5):
        for sub in combinations(range(13), size):
            s = mask_of(sub)
            if not any(m & s == 0 for m in max_stables):
                avoid_ok = False
    out.add("R avoids every <=4-subset", avoid_ok, f"{len(max_stables)} maximum stable sets")

    # second stable set property of the named witnesses from the text
    out.add(
        "second stable set property (W, C7, R)",
        second_stable_set_property(wagner())
        and second_stable_set_property(cycle(7))
        and second_stable_set_property(r35()),
    )

    # jump lemma against the established values s(1), s(2), s(3), s(4)
    s_values = {1: 5, 2: 10, 3: 13, 4: 17}
    jump_ok = all(s_values[t + 1] >= s_values[t] + 2 for t in (1, 2, 3))
    out.add("jump s(t+1) >= s(t)+2 on known values", jump_ok)

    out.notes.append(
        "minimality of s(2)=10, s(3)=13, s(4)=17 not verified exhaustively: "
        "the graph counts are infeasible; witnesses and supporting lemmas "
        "checked instead"
    )
    out.notes.append("s(5)=21 is conjectured only; recorded, not checked")
    return out


def _nonempty_cliques(g: Graph):
    """All non-empty cliques, as bitsets (desk scale)."""
    from .linegraph import maximal_cliques

    seen = set()
    for m in maximal_cliques(g):
        vs = list(bits(m))
        for size in range(1, len(vs) + 1):
            for sub in combinations(vs, size):
                seen.add(mask_of(sub))
    return sorted(seen)
