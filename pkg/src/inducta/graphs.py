"""Core graph type and basic operations.

Graphs are simple, finite and undirected.  Vertices are the integers
0..n-1 and the adjacency of each vertex is stored as a Python int used
as a bitset, which keeps neighborhood intersections and unions cheap
for everything downstream (detectors, oracles, cutset searches).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph data or invalid operation parameters."""


class TooLargeError(GraphError):
    """Instance exceeds a configured exact-computation bound."""


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood bitset of ``v``.  Instances are
    treated as immutable once built; all operations return new graphs.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge_unchecked(u, v)

    def add_edge_unchecked(self, u: int, v: int) -> None:
        # construction-time only; Graphs are immutable afterwards
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bit_count(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_nb(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- derived graphs ------------------------------------------------

    def complement(self) -> "Graph":
        g = Graph(self.n)
        full = self.full_mask()
        for v in range(self.n):
            g.adj[v] = full & ~self.adj[v] & ~(1 << v)
        return g

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` plus the index map new->old."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        g = Graph(len(vs))
        for i, v in enumerate(vs):
            for w in bits(self.adj[v]):
                j = pos.get(w)
                if j is not None and j > i:
                    g.adj[i] |= 1 << j
                    g.adj[j] |= 1 << i
        return g, vs

    def induced_mask(self, mask: int) -> tuple["Graph", list[int]]:
        return self.induced(list(bits(mask)))

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        g = Graph(self.n)
        for u, v in self.edges():
            g.add_edge_unchecked(perm[u], perm[v])
        return g

    def union_disjoint(self, other: "Graph") -> "Graph":
        g = Graph(self.n + other.n)
        for v in range(self.n):
            g.adj[v] = self.adj[v]
        for v in range(other.n):
            g.adj[self.n + v] = other.adj[v] << self.n
        return g

    def add_vertices(self, count: int, attach: Sequence[Iterable[int]] = ()) -> "Graph":
        """Append ``count`` new vertices; attach[i] lists neighbors of new vertex i."""
        g = Graph(self.n + count)
        for v in range(self.n):
            g.adj[v] = self.adj[v]
        for i in range(count):
            nbrs = attach[i] if i < len(attach) else ()
            for w in nbrs:
                g.add_edge_unchecked(self.n + i, w)
        return g

    # -- structure predicates -------------------------------------------

    def components(self) -> list[int]:
        """Connected components as vertex bitsets."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def components_of(self, mask: int) -> list[int]:
        """Connected components of the subgraph induced by ``mask``."""
        seen = 0
        out = []
        for s in bits(mask):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v] & mask
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_clique_mask(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.closed_nb(v):
                return False
        return True

    def is_stable_mask(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_complete_between(self, a: int, b: int) -> bool:
        """All edges present between disjoint vertex bitsets a, b."""
        for v in bits(a):
            if b & ~self.adj[v]:
                return False
        return True

    def is_anticomplete_between(self, a: int, b: int) -> bool:
        for v in bits(a):
            if self.adj[v] & b:
                return False
        return True

    def triangle(self) -> tuple[int, int, int] | None:
        for u, v in self.edges():
            common = self.adj[u] & self.adj[v]
            if common:
                return (u, v, next(bits(common)))
        return None

    def bipartition(self) -> tuple[int, int] | None:
        """(left, right) bitsets if bipartite, else None."""
        color = {}
        for comp in self.components():
            s = next(bits(comp))
            color[s] = 0
            frontier = [s]
            while frontier:
                v = frontier.pop()
                for w in bits(self.adj[v]):
                    if w in color:
                        if color[w] == color[v]:
                            return None
                    else:
                        color[w] = 1 - color[v]
                        frontier.append(w)
        left = mask_of(v for v, c in color.items() if c == 0)
        return left, self.full_mask() & ~left

    def girth(self) -> int | None:
        """Length of a shortest cycle, or None for forests."""
        best = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                for w in bits(self.adj[v]):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif w != parent[v]:
                        c = dist[v] + dist[w] + 1
                        if best is None or c < best:
                            best = c
        return best

    def shortest_path(self, src: int, dst: int, allowed: int | None = None) -> list[int] | None:
        """Shortest src->dst path inside the ``allowed`` bitset (lowest-index BFS).

        Both endpoints must lie in ``allowed``.  Returns the vertex list or
        None when disconnected.  Deterministic: BFS explores vertices in
        increasing index order, so ties break toward small labels.
        """
        if allowed is None:
            allowed = self.full_mask()
        if not (allowed >> src & 1 and allowed >> dst & 1):
            return None
        prev = {src: -1}
        frontier = [src]
        while frontier:
            if dst in prev:
                break
            nxt = []
            for v in frontier:
                for w in bits(self.adj[v] & allowed):
                    if w not in prev:
                        prev[w] = v
                        nxt.append(w)
            frontier = sorted(nxt)
        if dst not in prev:
            return None
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        path.reverse()
        return path

    def is_induced_path(self, seq: Sequence[int]) -> bool:
        """True if seq is an induced path visiting distinct vertices in order."""
        if len(set(seq)) != len(seq):
            return False
        for i, u in enumerate(seq):
            for j in range(i + 1, len(seq)):
                if self.has_edge(u, seq[j]) != (j == i + 1):
                    return False
        return True

    def is_induced_cycle(self, seq: Sequence[int]) -> bool:
        k = len(seq)
        if k < 3 or len(set(seq)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                expect = (j == i + 1) or (i == 0 and j == k - 1)
                if self.has_edge(seq[i], seq[j]) != expect:
                    return False
        return True

    def is_tree_mask(self, mask: int) -> bool:
        """Does ``mask`` induce a tree (connected and acyclic)?"""
        k = bit_count(mask)
        if k == 0:
            return False
        m = 0
        for v in bits(mask):
            m += bit_count(self.adj[v] & mask)
        if m != 2 * (k - 1):
            return False
        return len(self.components_of(mask)) == 1


class WeightedGraph:
    """A graph with non-negative integer vertex weights."""

    __slots__ = ("graph", "weights")

    def __init__(self, graph: Graph, weights: Sequence[int] | None = None):
        if weights is None:
            weights = [1] * graph.n
        weights = list(weights)
        if len(weights) != graph.n:
            raise GraphError("weight vector length must equal vertex count")
        if any(w < 0 for w in weights):
            raise GraphError("weights must be non-negative")
        self.graph = graph
        self.weights = weights

    def weight_of(self, mask: int) -> int:
        return sum(self.weights[v] for v in bits(mask))

    def reweight(self, weights: Sequence[int]) -> "WeightedGraph":
        return WeightedGraph(self.graph, weights)

    def zero_outside(self, mask: int) -> "WeightedGraph":
        return WeightedGraph(
            self.graph,
            [w if mask >> v & 1 else 0 for v, w in enumerate(self.weights)],
        )

    def zero_inside(self, mask: int) -> "WeightedGraph":
        return WeightedGraph(
            self.graph,
            [0 if mask >> v & 1 else w for v, w in enumerate(self.weights)],
        )

    def __repr__(self):
        return f"WeightedGraph({self.graph!r}, total={sum(self.weights)})"


# -- text format -------------------------------------------------------
#
# line 1: "n m", then m lines "u v" with 0 <= u < v < n; a weighted
# graph appends lines "w v weight".

def parse_graph(text: str) -> WeightedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("line 1: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError("line 1: expected integers 'n m'") from None
    if n < 0 or m < 0:
        raise GraphError("line 1: negative counts")
    g = Graph(n)
    weights = [1] * n
    seen = set()
    edge_lines = lines[1 : 1 + m]
    if len(edge_lines) < m:
        raise GraphError(f"expected {m} edge lines, found {len(edge_lines)}")
    for k, ln in enumerate(edge_lines, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {k}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {k}: expected integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {k}: vertex out of range")
        if u == v:
            raise GraphError(f"line {k}: loop {u}")
        if u > v:
            raise GraphError(f"line {k}: expected u < v")
        if (u, v) in seen:
            raise GraphError(f"line {k}: duplicate edge {u} {v}")
        seen.add((u, v))
        g.add_edge_unchecked(u, v)
    for k, ln in enumerate(lines[1 + m :], start=2 + m):
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "w":
            raise GraphError(f"line {k}: expected 'w v weight'")
        try:
            v, w = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphError(f"line {k}: expected integers") from None
        if not 0 <= v < n:
            raise GraphError(f"line {k}: vertex out of range")
        if w < 0:
            raise GraphError(f"line {k}: negative weight")
        weights[v] = w
    return WeightedGraph(g, weights)


def format_graph(wg: WeightedGraph | Graph) -> str:
    if isinstance(wg, Graph):
        wg = WeightedGraph(wg)
    g = wg.graph
    out = [f"{g.n} {g.edge_count()}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    out.extend(f"w {v} {wg.weights[v]}" for v in range(g.n) if wg.weights[v] != 1)
    return "\n".join(out) + "\n"
