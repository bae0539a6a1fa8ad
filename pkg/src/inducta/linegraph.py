"""Line graphs and root reconstruction for triangle-free roots.

A graph is the line graph of a triangle-free graph iff it has no claw
and no diamond, and the root is then unique (Whitney), which makes the
reconstruction below canonical: maximal cliques of L(R) are the edge
stars of R, every vertex lies in at most two of them, and two of them
share at most one vertex.
"""

from __future__ import annotations

from .graphs import Graph, bit_count, bits


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    lg = Graph(len(edges))
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a in (c, d) or b in (c, d):
                lg.add_edge_unchecked(i, j)
    return lg


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitsets (Bron-Kerbosch with pivoting)."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_nb = 0
        best = -1
        for u in bits(p | x):
            c = bit_count(g.adj[u] & p)
            if c > best:
                best, pivot_nb = c, g.adj[u]
        for v in bits(p & ~pivot_nb):
            bk(r | (1 << v), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk(0, g.full_mask(), 0)
    return out


def line_root_with_map(g: Graph) -> tuple[Graph, list[tuple[int, int]]] | None:
    """The unique triangle-free R with L(R) isomorphic to g, or None.

    Also returns, for each vertex v of g, the root edge (as a vertex
    pair of R) that v corresponds to.
    """
    if g.n == 0:
        return Graph(0), []
    cliques = maximal_cliques(g)
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for ci, c in enumerate(cliques):
        for v in bits(c):
            membership[v].append(ci)
    for v in range(g.n):
        if len(membership[v]) > 2:
            return None  # a diamond or claw is hiding here
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if bit_count(cliques[i] & cliques[j]) > 1:
                return None  # shared edge between cliques: diamond
    # root vertices: one per maximal clique, plus a pendant end for each
    # g-vertex covered by a single clique
    nr = len(cliques)
    ends: list[tuple[int, int]] = []
    for v in range(g.n):
        ms = membership[v]
        if len(ms) == 2:
            ends.append((ms[0], ms[1]))
        else:
            ends.append((ms[0], nr))
            nr += 1
    root = Graph(nr)
    for a, b in ends:
        if a == b or root.has_edge(a, b):
            return None
        root.add_edge_unchecked(a, b)
    if root.triangle() is not None:
        return None
    # validate: adjacency of g must equal edge-incidence of root
    for u in range(g.n):
        for v in range(u + 1, g.n):
            share = len(set(ends[u]) & set(ends[v])) > 0
            if share != g.has_edge(u, v):
                return None
    return root, ends


def line_root(g: Graph) -> Graph | None:
    got = line_root_with_map(g)
    return got[0] if got else None
