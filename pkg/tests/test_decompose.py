import random

import pytest

from helpers import cycle_with_unique_chord_present, random_graph
from inducta.decompose import (
    AdmissiblePair,
    replay_tree,
    DecompositionNode,
    chi_unique_chord_free,
    decompose_chordless,
    find_cutset,
    find_unique_chord_cycle,
    is_chordless,
    is_sparse,
    recognize_unique_chord_free,
    three_color_chordless,
)
from inducta.graphs import Graph, GraphError, bit_count, bits, mask_of
from inducta.named import (
    complete,
    complete_bipartite,
    cycle,
    heawood,
    petersen,
    two_subdivision,
)
from inducta.oracle import exact_invariants

DIAMOND = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


# -- cutsets -------------------------------------------------------------------

def test_one_cutset():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    w = find_cutset(g, "one_cutset")
    assert w is not None and w.vertices == (2,)
    assert find_cutset(cycle(5), "one_cutset") is None


def test_clique_cutset_diamond():
    w = find_cutset(DIAMOND, "clique_cutset")
    assert w is not None and set(w.vertices) == {0, 1}


def test_proper_2_cutset_c6_none():
    assert find_cutset(cycle(6), "proper_2_cutset") is None


def test_proper_2_cutset_four_branches():
    # grouping the two short branches against the two long ones leaves
    # no path side, so {0, 1} is a proper 2-cutset
    g = Graph(8, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                  (0, 6), (6, 7), (7, 1)])
    w = find_cutset(g, "proper_2_cutset")
    assert w is not None and set(w.vertices) == {0, 1}

    # a three-branch theta has no proper 2-cutset: one side is always a path
    theta = Graph(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                      (0, 6), (6, 7), (7, 1)])
    assert find_cutset(theta, "proper_2_cutset") is None


def test_star_cutset():
    # a star cutset around the center of a spider with long legs
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    w = find_cutset(g, "star_cutset")
    assert w is not None
    s = w.a_side
    c = w.vertices[0]
    assert s >> c & 1
    assert s & ~g.closed_nb(c) == 0
    rest = g.full_mask() & ~s
    comps = g.components_of(rest)
    assert len(comps) >= 2
    assert find_cutset(complete(4), "star_cutset") is None


def test_double_star_cutset():
    g = Graph(8, [(0, 1), (0, 2), (2, 3), (1, 4), (4, 5), (0, 6), (6, 7), (1, 7)])
    w = find_cutset(g, "double_star_cutset")
    assert w is not None
    a, b = w.vertices
    assert g.has_edge(a, b)


def test_special_2_cutset():
    # two thetas sharing their branch vertices
    g = Graph(10)
    for chain in ([2, 3], [4, 5], [6, 7], [8, 9]):
        g.add_edge_unchecked(0, chain[0])
        g.add_edge_unchecked(chain[0], chain[1])
        g.add_edge_unchecked(chain[1], 1)
    w = find_cutset(g, "special_2_cutset")
    assert w is not None and set(w.vertices) == {0, 1}
    assert bit_count(w.x) >= 2 and bit_count(w.y) >= 2


def test_proper_1_join():
    g = Graph(6)
    for u in (0, 1):
        for v in (3, 4):
            g.add_edge_unchecked(u, v)
    g.add_edge_unchecked(2, 0)
    g.add_edge_unchecked(5, 3)
    w = find_cutset(g, "proper_1_join")
    assert w is not None
    assert bit_count(w.a_side) >= 2 and bit_count(w.b_side) >= 2


def test_bipartite_2_join():
    # X2 = square {3,4,5,6} with A2={3,5}, B2={4,6}; A1={0,1} complete to A2
    g = Graph(7)
    for u in (0, 1):
        for v in (3, 5):
            g.add_edge_unchecked(u, v)
    g.add_edge_unchecked(3, 4)
    g.add_edge_unchecked(4, 5)
    g.add_edge_unchecked(5, 6)
    g.add_edge_unchecked(6, 3)
    g.add_edge_unchecked(2, 0)
    w = find_cutset(g, "bipartite_2_join")
    assert w is not None


def test_unknown_kind():
    with pytest.raises(GraphError):
        find_cutset(cycle(4), "magic")


# -- chordless graphs ------------------------------------------------------------

def test_chordless_basics():
    got = is_chordless(complete(4))
    assert got is not None
    cyc, chord = got
    assert len(cyc) >= 4 and complete(4).has_edge(*chord)
    assert is_chordless(complete_bipartite(2, 3)) is None
    assert is_chordless(two_subdivision(complete(5))) is None


def test_decompose_chordless_sparse_leaves():
    g = two_subdivision(complete(5))
    tree = decompose_chordless(g)
    for leaf in tree.leaves():
        assert leaf.kind == "sparse"
        sub, _ = g.induced([v for v in leaf.vertices if v >= 0])
        assert is_sparse(sub)
    assert replay_tree(g, tree)


def test_decompose_chordless_blocks():
    # two K23 thetas glued on a 2-cutset need proper-2-cutset blocks
    g = Graph(8, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                  (0, 6), (6, 7), (7, 1)])
    assert is_chordless(g) is None
    tree = decompose_chordless(g)
    kinds = {leaf.kind for leaf in tree.leaves()}
    assert kinds == {"sparse"}


def test_three_color_chordless():
    for g in (cycle(7), two_subdivision(petersen()), two_subdivision(complete(4))):
        col = three_color_chordless(g)
        assert max(col) + 1 <= 3
        assert all(col[u] != col[v] for u, v in g.edges())
    with pytest.raises(GraphError):
        three_color_chordless(complete(4))


# -- unique chord recognition -----------------------------------------------------

def test_members_and_witnesses():
    assert recognize_unique_chord_free(petersen()).member
    assert recognize_unique_chord_free(heawood()).member
    got = recognize_unique_chord_free(DIAMOND)
    assert not got.member
    assert len(got.witness_cycle) == 4
    assert recognize_unique_chord_free(complete(4)).member


def test_recognition_oracle_agreement():
    rng = random.Random(41)
    members = 0
    for _ in range(250):
        g = random_graph(rng.randint(4, 10), rng.uniform(0.15, 0.5), rng)
        got = recognize_unique_chord_free(g)
        assert got.member == (not cycle_with_unique_chord_present(g))
        if got.member:
            members += 1
            for leaf in got.tree.leaves():
                assert leaf.kind in (
                    "clique", "sparse", "sub-petersen", "sub-heawood", "components"
                )
            assert replay_tree(g, got.tree)
        else:
            cyc = got.witness_cycle
            u, v = got.witness_chord
            assert g.has_edge(u, v)
            sub, old = g.induced(cyc)
            # the cycle plus the chord has exactly one chord
            assert sub.edge_count() == len(cyc) + 1
    assert members >= 60


def test_chi_unique_chord_free_named():
    chi, col = chi_unique_chord_free(petersen())
    assert chi == 3
    chi, col = chi_unique_chord_free(heawood())
    assert chi == 2
    chi, col = chi_unique_chord_free(complete(4))
    assert chi == 4


def test_chi_matches_oracle_on_members():
    rng = random.Random(42)
    done = 0
    for _ in range(300):
        g = random_graph(rng.randint(3, 10), rng.uniform(0.15, 0.5), rng)
        got = recognize_unique_chord_free(g)
        if not got.member:
            continue
        done += 1
        chi, col = chi_unique_chord_free(g)
        rep = exact_invariants(g)
        assert chi == rep.chi
        assert chi <= 2 or chi == 3 or chi == rep.omega
        assert all(col[u] != col[v] for u, v in g.edges())
        assert max(col) + 1 == chi
    assert done >= 80


def test_chi_rejects_non_members():
    with pytest.raises(GraphError):
        chi_unique_chord_free(DIAMOND)


def test_admissible_pair_shapes():
    g = cycle(6)
    assert AdmissiblePair(r=1, t=g.adj[0], vertex=0, shape=1).validate(g)
    assert AdmissiblePair(r=g.closed_nb(0), t=0, vertex=0, shape=2).validate(g)
    u, w = g.neighbors(0)
    assert AdmissiblePair(r=(1 << 0) | (1 << w), t=1 << u, vertex=0, shape=3).validate(g)
    assert AdmissiblePair(r=g.closed_nb(w), t=1 << u, vertex=0, shape=4).validate(g)
    assert AdmissiblePair(
        r=(1 << u) | g.closed_nb(w), t=0, vertex=0, shape=5
    ).validate(g)
    assert not AdmissiblePair(r=0, t=0, vertex=0, shape=1).validate(g)
