import random
from itertools import combinations

import pytest

from helpers import random_chordal, random_graph
from inducta.classify import (
    classify_small,
    color_weakly_triangulated,
    contract_pair,
    find_two_pair,
    is_weakly_triangulated,
    validate_two_pair,
)
from inducta.graphs import Graph, GraphError, bits, mask_of
from inducta.linegraph import line_graph
from inducta.named import (
    a6,
    complete,
    complete_bipartite,
    cycle,
    line_k33,
    octahedron,
    path,
    petersen,
)
from inducta.oracle import exact_invariants, isomorphic


# -- small classification ----------------------------------------------------

def test_p3_positive_and_negative():
    got = classify_small(complete(4).union_disjoint(complete(2)), "p3")
    assert got.verdict == "disjoint-cliques" and len(got.parts) == 2
    got = classify_small(path(3), "p3")
    assert not got.in_class and got.witness_name == "P3"


def test_paw_positive_cases():
    got = classify_small(octahedron(), "paw")
    assert got.verdict == "complete-multipartite" and len(got.parts) == 3
    assert classify_small(cycle(7), "paw").verdict == "cycle"
    t = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert classify_small(t, "paw").verdict == "tree"


def test_paw_requires_connected():
    with pytest.raises(GraphError):
        classify_small(cycle(3).union_disjoint(cycle(3)), "paw")


def _is_paw_subdivision(g: Graph, witness: list[int]) -> bool:
    sub, _ = g.induced(witness)
    if sub.edge_count() != sub.n:
        return False
    degs = sorted(sub.degree(i) for i in range(sub.n))
    return degs == [1] + [2] * (sub.n - 2) + [3] and sub.connected()


def test_paw_witnesses_validate():
    rng = random.Random(31)
    found = 0
    for _ in range(120):
        g = random_graph(rng.randint(4, 9), rng.uniform(0.2, 0.6), rng)
        if not g.connected():
            continue
        got = classify_small(g, "paw")
        if got.in_class:
            continue
        found += 1
        assert _is_paw_subdivision(g, got.witness), (g.edges(), got.witness)
    assert found >= 40


def test_hh_line_of_petersen():
    got = classify_small(line_graph(petersen()), "hh")
    assert got.verdict == "line-of-triangle-free"
    assert got.root.triangle() is None
    assert isomorphic(got.root, petersen()) is not None
    assert isomorphic(line_graph(got.root), line_graph(petersen())) is not None


def test_hh_witnesses():
    got = classify_small(complete_bipartite(1, 3), "hh")
    assert got.witness_name == "claw"
    diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    got = classify_small(diamond, "hh")
    assert got.witness_name == "diamond"


def test_claw_coclaw_catalogue():
    assert classify_small(line_k33(), "claw_coclaw").verdict == "sub-l-k33"
    assert classify_small(a6(), "claw_coclaw").verdict == "a6"
    assert classify_small(cycle(7), "claw_coclaw").verdict == "cycles-and-paths"
    got = classify_small(cycle(7).complement(), "claw_coclaw")
    assert got.verdict == "complement-of"
    assert got.complement_of.verdict == "cycles-and-paths"
    got = classify_small(petersen(), "claw_coclaw")
    assert not got.in_class and got.witness_name == "claw"


def test_claw_coclaw_totality_random():
    rng = random.Random(32)
    for _ in range(150):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        got = classify_small(g, "claw_coclaw")
        if not got.in_class:
            sub, _ = g.induced(got.witness)
            m = sub.edge_count()
            degs = sorted(sub.degree(i) for i in range(4))
            if got.witness_name == "claw":
                assert m == 3 and degs == [1, 1, 1, 3]
            else:
                assert m == 3 and degs == [0, 2, 2, 2]


# -- weakly triangulated -----------------------------------------------------

def test_wt_detection():
    assert is_weakly_triangulated(cycle(5)) == ("hole", [0, 1, 2, 3, 4])
    kind, wit = is_weakly_triangulated(cycle(6).complement())
    assert kind == "antihole" and len(wit) == 6
    assert is_weakly_triangulated(random_chordal(12, random.Random(1))) is None


def test_two_pair_examples():
    p = find_two_pair(path(4))
    assert p is not None and validate_two_pair(path(4), p.a, p.b)
    p = find_two_pair(cycle(4))
    assert {p.a, p.b} in ({0, 2}, {1, 3})
    assert find_two_pair(complete(5)) is None


def test_rrwt_property():
    """Interior T-complete vertex on long paths with T-complete ends."""
    rng = random.Random(33)
    checked = 0
    for _ in range(250):
        g = random_graph(rng.randint(5, 9), rng.uniform(0.35, 0.7), rng)
        if is_weakly_triangulated(g) is not None:
            continue
        comp = g.complement()
        for size in (1, 2, 3):
            for tset in combinations(range(g.n), size):
                tmask = mask_of(tset)
                if size > 1 and len(comp.components_of(tmask)) != 1:
                    continue
                complete_to = [
                    v
                    for v in range(g.n)
                    if not (tmask >> v & 1) and tmask & ~g.adj[v] == 0
                ]
                for x, y in combinations(complete_to, 2):
                    pth = _induced_path(g, x, y, tmask)
                    if pth is None or len(pth) < 4:
                        continue
                    interior_ok = any(
                        tmask & ~g.adj[v] == 0 for v in pth[1:-1]
                    )
                    assert interior_ok, (g.edges(), tset, pth)
                    checked += 1
    assert checked >= 20


def _induced_path(g, x, y, avoid):
    """Some induced x-y path of length >= 3 avoiding `avoid`, or None."""
    def dfs(pathv, used):
        v = pathv[-1]
        if v == y and len(pathv) >= 4:
            return pathv
        for w in bits(g.adj[v] & ~used & ~avoid):
            if w != y and g.adj[w] & used & ~(1 << v):
                continue
            if w == y and g.adj[w] & used & ~(1 << v):
                continue
            got = dfs(pathv + [w], used | (1 << w))
            if got:
                return got
        return None

    return dfs([x], 1 << x)


def test_contraction_preserves_chi_omega():
    rng = random.Random(34)
    done = 0
    while done < 30:
        g = random_graph(rng.randint(4, 11), rng.uniform(0.4, 0.7), rng)
        if is_weakly_triangulated(g) is not None:
            continue
        p = find_two_pair(g)
        if p is None:
            continue
        done += 1
        before = exact_invariants(g)
        h, _ = contract_pair(g, p.a, p.b)
        after = exact_invariants(h)
        assert after.chi == before.chi and after.omega == before.omega


def test_wt_coloring_uses_omega_colors():
    rng = random.Random(35)
    done = 0
    while done < 40:
        if rng.random() < 0.5:
            g = random_chordal(rng.randint(4, 16), rng)
        else:
            g = random_graph(rng.randint(4, 12), rng.uniform(0.4, 0.7), rng)
            if is_weakly_triangulated(g) is not None:
                continue
        done += 1
        col = color_weakly_triangulated(g)
        rep = exact_invariants(g)
        assert max(col) + 1 == rep.omega == rep.chi
        assert all(col[u] != col[v] for u, v in g.edges())


def test_wt_coloring_rejects_non_wt():
    with pytest.raises(GraphError):
        color_weakly_triangulated(cycle(5))
