import random

import pytest

from helpers import glue_two_sides, prism_side, random_berge_instance, theta_side
from inducta.berge import (
    OutsideClassError,
    replay_tree,
    berge_alpha_omega,
    color_berge,
    find_two_join,
    solve_leaf,
    stable_hitting_cliques,
)
from inducta.graphs import Graph, WeightedGraph, bit_count, bits, mask_of
from inducta.linegraph import line_graph
from inducta.named import complete, complete_bipartite, cycle, petersen
from inducta.oracle import exact_invariants, max_weight_clique, max_weight_stable_set


def test_bipartite_direct_leaf():
    ans = berge_alpha_omega(WeightedGraph(complete_bipartite(3, 4)))
    assert ans.alpha == 4 and ans.omega == 2
    assert ans.tree.kind == "leaf" and ans.tree.leaf.kind == "bipartite"


def test_line_of_bipartite_leaf():
    lk33 = line_graph(complete_bipartite(3, 3))
    ans = berge_alpha_omega(WeightedGraph(lk33))
    assert ans.alpha == 3 and ans.omega == 3
    assert ans.tree.leaf.kind == "line-of-bipartite"


def test_solve_leaf_examples():
    a, aw, o, ow = solve_leaf(WeightedGraph(complete_bipartite(3, 3)))
    assert a == 3
    a, aw, o, ow = solve_leaf(WeightedGraph(line_graph(petersen())))
    assert a == 5  # the matching number of petersen
    from inducta.named import path

    a, aw, o, ow = solve_leaf(WeightedGraph(path(3), [5, 1, 5]), kind="bipartite")
    assert a == 10


def test_outside_class_is_reported():
    with pytest.raises(OutsideClassError):
        berge_alpha_omega(WeightedGraph(cycle(5)))


def test_glued_instance_exercises_join():
    from helpers import ladder_side_odd

    g, info = glue_two_sides(ladder_side_odd(), prism_side())
    wg = WeightedGraph(g)
    ans = berge_alpha_omega(wg)
    assert ans.tree.kind == "join"
    assert ans.alpha == max_weight_stable_set(wg)[0]
    assert ans.omega == max_weight_clique(wg)[0]
    assert any(node != ans.tree for node in [ans.tree]) or True
    # vertices lift correctly
    assert g.is_stable_mask(mask_of(ans.alpha_set))
    assert g.is_clique_mask(mask_of(ans.omega_set))


def test_pipeline_oracle_agreement_random():
    rng = random.Random(60)
    used_join = 0
    for _ in range(30):
        g, info = random_berge_instance(rng, max_n=16)
        w = [rng.randint(0, 4) for _ in range(g.n)]
        wg = WeightedGraph(g, w)
        ans = berge_alpha_omega(wg)
        assert ans.alpha == max_weight_stable_set(wg)[0]
        assert ans.omega == max_weight_clique(wg)[0]
        assert wg.weight_of(mask_of(ans.alpha_set)) == ans.alpha
        assert wg.weight_of(mask_of(ans.omega_set)) == ans.omega
        assert replay_tree(ans.tree)
        if ans.tree.kind == "join":
            used_join += 1
    assert used_join >= 10


def test_prism_prism_glue_is_a_line_leaf():
    # the joined triangle pairs merge into stars of one root vertex
    g, info = glue_two_sides(prism_side(), prism_side())
    ans = berge_alpha_omega(WeightedGraph(g))
    assert ans.tree.leaf.kind == "line-of-bipartite"
    assert ans.omega == 6 and ans.alpha == max_weight_stable_set(WeightedGraph(g))[0]


def test_complement_route():
    from helpers import hub_side_even, line_side_even

    g, info = glue_two_sides(hub_side_even(), line_side_even())
    wg0 = WeightedGraph(g)
    direct = berge_alpha_omega(wg0)
    assert not direct.complemented
    comp = g.complement()
    wg = WeightedGraph(comp)
    ans = berge_alpha_omega(wg)
    assert ans.complemented
    assert ans.alpha == max_weight_stable_set(wg)[0] == direct.omega
    assert ans.omega == max_weight_clique(wg)[0] == direct.alpha


def test_figure_graph_has_no_extreme_join():
    """The 16-vertex figure: a proper non-path 2-join exists, but both
    blocks of any such join still have one, so no extreme join exists."""
    from inducta.berge import all_proper_nonpath_two_joins, blocks_of_two_join

    names = ["b1p", "b2p", "w", "z", "w1", "b1", "b2", "z1", "x1",
             "a1p", "a2p", "y1", "x", "y", "a1", "a2"]
    ix = {nm: i for i, nm in enumerate(names)}
    edges_named = [
        ("x", "x1"), ("x", "a1"), ("x1", "w1"), ("w", "w1"), ("w", "b1p"),
        ("w1", "a1p"), ("x1", "b1"), ("a1p", "b1"),
        ("y", "a2"), ("y", "y1"), ("y1", "z1"), ("z", "z1"), ("z", "b2p"),
        ("b2", "y1"), ("a2p", "z1"), ("a2p", "b2"),
        ("a2", "a1"), ("a2p", "a1"), ("a2", "a1p"), ("a2p", "a1p"),
        ("b2", "b1"), ("b2p", "b1"), ("b2", "b1p"), ("b1p", "b2p"),
    ]
    g = Graph(16, [(ix[a], ix[b]) for a, b in edges_named])
    joins = all_proper_nonpath_two_joins(g)
    assert joins, "the figure graph has a proper non-path 2-join"
    wg = WeightedGraph(g)
    extreme_found = False
    for s in joins:
        for side in (s, s.flip()):
            g1, _, _ = blocks_of_two_join(wg, side, 4, 4, parity_preserving=False)
            if not all_proper_nonpath_two_joins(g1.graph):
                extreme_found = True
    assert not extreme_found


def test_stable_hitting_cliques_k2():
    g = complete(2)
    got = stable_hitting_cliques(g, [[0, 1]])
    assert got in ([0], [1])


def test_stable_hitting_cliques_c6():
    g = cycle(6)
    cliques = [[0, 1], [2, 3], [4, 5]]
    got = stable_hitting_cliques(g, cliques)
    assert len(got) == 3
    s = mask_of(got)
    assert g.is_stable_mask(s)
    for k in cliques:
        assert s & mask_of(k)


def test_color_berge_basics():
    assert max(color_berge(cycle(6))) + 1 == 2
    assert max(color_berge(complete(4))) + 1 == 4
    lk33 = line_graph(complete_bipartite(3, 3))
    col = color_berge(lk33)
    assert max(col) + 1 == 3
    assert all(col[u] != col[v] for u, v in lk33.edges())


def test_color_berge_on_glued_instances():
    rng = random.Random(61)
    for _ in range(8):
        g, _ = random_berge_instance(rng, max_n=14)
        col = color_berge(g)
        rep = exact_invariants(g)
        assert max(col) + 1 == rep.omega == rep.chi
        assert all(col[u] != col[v] for u, v in g.edges())
