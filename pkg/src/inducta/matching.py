"""Exact matching and bipartite cover routines.

Desk scale only: maximum weight matching is a memoized bitmask DP that
always decides the lowest-index remaining vertex, so states stay sparse
on the small graphs we feed it.  The bipartite stable-set solver goes
through a min vertex cover computed by max flow, reachability on the
residual network yielding the witness.
"""

from __future__ import annotations

from .graphs import Graph, TooLargeError, WeightedGraph, bits

MATCHING_BOUND = 28


def max_weight_matching(
    n: int, edges: list[tuple[int, int, int]], bound: int = MATCHING_BOUND
) -> tuple[int, list[tuple[int, int]]]:
    """Exact maximum weight matching of a (multi)graph given as an edge list.

    Parallel edges are fine: only the heaviest copy between any pair can
    matter.  Returns (total weight, chosen edges as (u, v) pairs).
    """
    if n > bound:
        raise TooLargeError(f"matching bound {bound} exceeded (n={n})")
    best: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        if u == v:
            raise ValueError("loops not allowed in matchings")
        key = (min(u, v), max(u, v))
        if w > best.get(key, -1):
            best[key] = w
    nbr: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), w in best.items():
        nbr[u].append((v, w))
        nbr[v].append((u, w))

    memo: dict[int, int] = {0: 0}

    def rec(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        v = (mask & -mask).bit_length() - 1
        res = rec(mask & ~(1 << v))  # leave v unmatched
        for u, w in nbr[v]:
            if mask >> u & 1 and w >= 0:
                cand = w + rec(mask & ~(1 << v) & ~(1 << u))
                if cand > res:
                    res = cand
        memo[mask] = res
        return res

    full = (1 << n) - 1
    total = rec(full)
    chosen = []
    mask = full
    while mask:
        v = (mask & -mask).bit_length() - 1
        if rec(mask) == rec(mask & ~(1 << v)):
            mask &= ~(1 << v)
            continue
        for u, w in nbr[v]:
            if mask >> u & 1 and w + rec(mask & ~(1 << v) & ~(1 << u)) == rec(mask):
                chosen.append((min(u, v), max(u, v)))
                mask &= ~(1 << v) & ~(1 << u)
                break
        else:  # pragma: no cover - would contradict the DP
            raise AssertionError("matching reconstruction failed")
    return total, chosen


def max_cardinality_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    return max_weight_matching(g.n, [(u, v, 1) for u, v in g.edges()])


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return max_cardinality_matching(g)[0] == g.n // 2


def is_factor_critical(g: Graph) -> bool:
    """Every single-vertex deletion leaves a perfect matching."""
    if g.n % 2 == 0 or g.n == 0:
        return False
    for v in range(g.n):
        h, _ = g.delete_vertices([v])
        if not has_perfect_matching(h):
            return False
    return True


# -- bipartite max weight stable set via max flow ------------------------

class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        INF = 1 << 60
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                for ei in self.head[v]:
                    if self.cap[ei] > 0 and level[self.to[ei]] < 0:
                        level[self.to[ei]] = level[v] + 1
                        queue.append(self.to[ei])
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(v: int, f: int) -> int:
                if v == t:
                    return f
                while it[v] < len(self.head[v]):
                    ei = self.head[v][it[v]]
                    w = self.to[ei]
                    if self.cap[ei] > 0 and level[w] == level[v] + 1:
                        d = dfs(w, min(f, self.cap[ei]))
                        if d > 0:
                            self.cap[ei] -= d
                            self.cap[ei ^ 1] += d
                            return d
                    it[v] += 1
                return 0

            while True:
                f = dfs(s, INF)
                if f == 0:
                    break
                flow += f

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for ei in self.head[v]:
                w = self.to[ei]
                if self.cap[ei] > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


def bipartite_max_weight_stable_set(wg: WeightedGraph) -> tuple[int, int]:
    """(weight, witness bitset) for bipartite graphs; König through max flow.

    The witness is canonical in that zero-weight vertices are dropped.
    """
    g = wg.graph
    parts = g.bipartition()
    if parts is None:
        raise ValueError("graph is not bipartite")
    left, right = parts
    s, t = g.n, g.n + 1
    net = _Dinic(g.n + 2)
    for v in bits(left):
        net.add(s, v, wg.weights[v])
    for v in bits(right):
        net.add(v, t, wg.weights[v])
    big = sum(wg.weights) + 1
    for u, v in g.edges():
        if left >> u & 1:
            net.add(u, v, big)
        else:
            net.add(v, u, big)
    cut = net.max_flow(s, t)
    reach = net.reachable(s)
    stable = 0
    for v in bits(left):
        if v in reach and wg.weights[v] > 0:
            stable |= 1 << v
    for v in bits(right):
        if v not in reach and wg.weights[v] > 0:
            stable |= 1 << v
    assert g.is_stable_mask(stable)
    weight = wg.weight_of(stable)
    assert weight == sum(wg.weights) - cut
    return weight, stable
