"""Shared generators and independent brute-force oracles for the tests."""

from __future__ import annotations

import itertools
import random

from inducta.graphs import Graph, WeightedGraph, bit_count, bits, mask_of
from inducta.named import (
    a6,
    complete,
    complete_bipartite,
    cycle,
    heawood,
    line_k33,
    octahedron,
    path,
    petersen,
    r35,
    wagner,
)


def named_zoo() -> dict[str, Graph]:
    return {
        "petersen": petersen(),
        "heawood": heawood(),
        "wagner": wagner(),
        "r35": r35(),
        "a6": a6(),
        "l_k33": line_k33(),
        "octahedron": octahedron(),
        "c5": cycle(5),
        "c6": cycle(6),
        "c7": cycle(7),
        "p5": path(5),
        "k4": complete(4),
        "k33": complete_bipartite(3, 3),
        "k23": complete_bipartite(2, 3),
    }


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge_unchecked(u, v)
    return g


def random_graph_girth(n: int, k: int, rng: random.Random, p: float) -> Graph:
    """Random graph with girth >= k: greedily drop an edge from every
    short cycle until none remains."""
    g = random_graph(n, p, rng)
    while True:
        girth = g.girth()
        if girth is None or girth >= k:
            return g
        cyc = _short_cycle(g, girth)
        u, v = cyc[0], cyc[1]
        g.adj[u] &= ~(1 << v)
        g.adj[v] &= ~(1 << u)


def _short_cycle(g: Graph, length: int) -> list[int]:
    for start in range(g.n):
        found = _cycle_from(g, start, length)
        if found:
            return found
    raise AssertionError("girth reported a cycle that cannot be found")


def _cycle_from(g: Graph, start: int, length: int) -> list[int] | None:
    def dfs(pathv: list[int], used: int) -> list[int] | None:
        if len(pathv) == length:
            return pathv if g.has_edge(pathv[-1], start) else None
        for w in bits(g.adj[pathv[-1]] & ~used):
            got = dfs(pathv + [w], used | (1 << w))
            if got:
                return got
        return None

    return dfs([start], 1 << start)


def random_connected_girth(n: int, k: int, rng: random.Random) -> Graph:
    """Connected random graph of girth >= k: random spanning tree plus
    extra edges that keep the girth."""
    g = Graph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge_unchecked(order[i], order[rng.randrange(i)])
    extra = rng.randint(0, max(1, n // 2))
    for _ in range(extra * 3):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or g.has_edge(u, v):
            continue
        g.add_edge_unchecked(u, v)
        girth = g.girth()
        if girth is not None and girth < k:
            g.adj[u] &= ~(1 << v)
            g.adj[v] &= ~(1 << u)
    return g


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Chordal graph built by attaching simplicial vertices."""
    g = Graph(1)
    for v in range(1, n):
        prev = list(range(v))
        seed = rng.choice(prev)
        clique = {seed}
        for u in prev:
            if u != seed and all(g.has_edge(u, x) for x in clique):
                if rng.random() < 0.5:
                    clique.add(u)
        g = g.add_vertices(1, [list(clique)])
    return g


def cycle_with_unique_chord_present(g: Graph) -> bool:
    """Exhaustive subset oracle: some vertex subset induces a cycle with
    exactly one chord."""
    for sub in range(1 << g.n):
        if bit_count(sub) < 4:
            continue
        h, _ = g.induced_mask(sub)
        if h.edge_count() != h.n + 1:
            continue
        degs = sorted(h.degree(i) for i in range(h.n))
        if degs != [2] * (h.n - 2) + [3, 3]:
            continue
        d3 = [i for i in range(h.n) if h.degree(i) == 3]
        if not h.has_edge(d3[0], d3[1]):
            continue
        h2 = Graph(h.n)
        for a in range(h.n):
            h2.adj[a] = h.adj[a]
        h2.adj[d3[0]] &= ~(1 << d3[1])
        h2.adj[d3[1]] &= ~(1 << d3[0])
        if all(h2.degree(i) == 2 for i in range(h2.n)) and len(h2.components()) == 1:
            return True
    return False


def induced_prism_subsets(g: Graph):
    """All vertex subsets inducing a prism (two disjoint triangles linked
    by three disjoint induced paths, no other edges)."""
    from inducta.sgraph import find_realization, prism_sgraph

    for sub in range(1 << g.n):
        if bit_count(sub) < 6:
            continue
        h, old = g.induced_mask(sub)
        emb = find_realization(prism_sgraph(), h)
        if emb is not None and len(emb.used_vertices()) == h.n:
            yield sub


# -- constructed 2-join instances ------------------------------------------

def theta_side(rng: random.Random, parity: str, branches: int = 2):
    """A one-terminal-pair side: `branches` parallel paths of the given
    parity from a to b.  Returns (graph, a_mask, b_mask)."""
    lengths = []
    for _ in range(branches):
        length = rng.choice([3, 5]) if parity == "odd" else rng.choice([2, 4])
        lengths.append(length)
    n = 2 + sum(length - 1 for length in lengths)
    g = Graph(n)
    a, b = 0, 1
    nxt = 2
    for length in lengths:
        prev = a
        for i in range(length - 1):
            g.add_edge_unchecked(prev, nxt)
            prev = nxt
            nxt += 1
        g.add_edge_unchecked(prev, b)
    return g, 1 << a, 1 << b


def prism_side():
    """L(K_{2,3}) with the two triangles as the special sets."""
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    return g, mask_of([0, 1, 2]), mask_of([3, 4, 5])


def hub_side_even(rng: random.Random | None = None, middles: int = 3):
    """K_{2,m}: hubs a, b joined by m length-2 paths; every a-b route is
    even and the hubs have degree >= 3, which defeats the path-shaped
    basic classes after gluing."""
    if rng is not None:
        middles = rng.choice([3, 4])
    g = Graph(2 + middles)
    for i in range(middles):
        g.add_edge_unchecked(0, 2 + i)
        g.add_edge_unchecked(2 + i, 1)
    return g, 1 << 0, 1 << 1


def ladder_side_odd():
    """Two length-3 a-b paths plus one rung: the rung vertex has degree 3,
    all a-b routes stay odd."""
    g = Graph(6, [(0, 2), (0, 4), (2, 3), (4, 5), (2, 5), (3, 1), (5, 1)])
    return g, 1 << 0, 1 << 1


def line_side_even(rng: random.Random | None = None):
    """The line graph of two odd parallel root paths: stars of the two
    root branch vertices are the special cliques, and the paths between
    them inside the line graph are even."""
    lengths = (3, 3) if rng is None else rng.choice([(3, 3), (3, 5)])
    root = Graph(2 + sum(le - 1 for le in lengths))
    nxt = 2
    star_u, star_v = [], []
    edges = []
    for le in lengths:
        prev = 0
        chain = []
        for _ in range(le - 1):
            edges.append((prev, nxt))
            chain.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
        chain.append((prev, 1))
        star_u.append(len(edges) - le)
        star_v.append(len(edges) - 1)
    for e in edges:
        root.add_edge_unchecked(*e)
    from inducta.linegraph import line_graph

    lg = Graph(len(edges))
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a in (c, d) or b in (c, d):
                lg.add_edge_unchecked(i, j)
    return lg, mask_of(star_u), mask_of(star_v)


def glue_two_sides(side1, side2) -> tuple[Graph, dict]:
    """Join A1 x A2 and B1 x B2 completely."""
    g1, a1, b1 = side1
    g2, a2, b2 = side2
    g = g1.union_disjoint(g2)
    off = g1.n
    for u in bits(a1):
        for v in bits(a2):
            g.add_edge_unchecked(u, off + v)
    for u in bits(b1):
        for v in bits(b2):
            g.add_edge_unchecked(u, off + v)
    info = {
        "x1": g1.full_mask(),
        "x2": g2.full_mask() << off,
        "a1": a1,
        "b1": b1,
        "a2": a2 << off,
        "b2": b2 << off,
    }
    return g, info


def random_berge_instance(rng: random.Random, max_n: int = 20, mixed_bias: float = 0.6):
    """A random class member glued from theta and prism sides, validated
    Berge before being returned (else retried).  A prism-theta mix forces
    the pipeline through a genuine 2-join; pure gluings tend to land in a
    basic class directly."""
    from inducta.oracle import is_berge

    for _ in range(60):
        roll = rng.random()
        if roll < mixed_bias:
            # a hub-shaped bipartite side against a line-graph side of the
            # same parity: not basic, so the pipeline must use the join
            if rng.random() < 0.5:
                sides = [hub_side_even(rng), line_side_even(rng)]
            else:
                sides = [ladder_side_odd(), prism_side()]
            if rng.random() < 0.5:
                sides.reverse()
        else:
            parity = rng.choice(["odd", "even"])
            sides = [
                theta_side(rng, parity, branches=rng.choice([2, 2, 3])),
                theta_side(rng, parity, branches=rng.choice([2, 3])),
            ]
        g, info = glue_two_sides(sides[0], sides[1])
        if g.n > max_n:
            continue
        if is_berge(g):
            return g, info
    raise AssertionError("could not build a Berge instance")
