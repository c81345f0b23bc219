"""Balanced C5 blow-ups, 2-factorizations, and the r-regular patches H(k, r)."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError, is_regular


def c5_blowup(k: int) -> Graph:
    """Replace each vertex of C5 by ``k/5`` independent vertices.

    Part ``p`` holds vertices ``p*k/5 .. (p+1)*k/5 - 1``; cyclically
    consecutive parts are completely joined.
    """
    if k < 5 or k % 5:
        raise GraphError(f"blow-up order must be a positive multiple of 5, got {k}")
    q = k // 5
    g = Graph(k)
    for p in range(5):
        nxt = (p + 1) % 5
        for i in range(q):
            for j in range(q):
                g.add_edge(p * q + i, nxt * q + j)
    return g


@dataclass
class TwoFactorDecomposition:
    n: int
    factors: list[list[tuple[int, int]]]

    def factor_graph(self, i: int) -> Graph:
        return Graph.from_edges(self.n, self.factors[i])


def euler_circuit(adj: list[set[int]], start: int) -> list[int]:
    """Vertex sequence of a closed walk using every edge of ``start``'s component once."""
    remaining = [set(a) for a in adj]
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        if remaining[v]:
            w = min(remaining[v])
            remaining[v].discard(w)
            remaining[w].discard(v)
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def _perfect_matching(succ: list[list[int]]) -> list[int]:
    """Perfect matching in a regular bipartite graph (left i -> right succ[i]).

    Kuhn's augmenting paths; returns ``match_of_left``.
    """
    n = len(succ)
    match_right = [-1] * n
    match_left = [-1] * n
    for root in range(n):
        # iterative DFS for an augmenting path from left vertex `root`
        seen = [False] * n
        stack = [(root, iter(succ[root]))]
        path: list[tuple[int, int]] = []
        found = False
        while stack and not found:
            u, it = stack[-1]
            for w in it:
                if seen[w]:
                    continue
                seen[w] = True
                if match_right[w] == -1:
                    path.append((u, w))
                    found = True
                    break
                path.append((u, w))
                stack.append((match_right[w], iter(succ[match_right[w]])))
                break
            else:
                stack.pop()
                if path:
                    path.pop()
        if not found:
            raise AssertionError("regular bipartite graph without a perfect matching")
        for u, w in path:
            match_right[w] = u
            match_left[u] = w
    return match_left


def two_factorize(g: Graph, seed: int | None = None) -> TwoFactorDecomposition:
    """Split a 2j-regular graph into j edge-disjoint spanning 2-regular subgraphs.

    Orient each component along an Euler circuit (in = out = j everywhere),
    peel j perfect matchings off the out/in incidence graph, and read each
    matching back as a 2-factor. ``seed`` shuffles the order of the factors.
    """
    r = is_regular(g)
    if r is None or r == 0 or r % 2:
        raise GraphError(f"two_factorize needs a 2j-regular graph with j >= 1, got degree {r}")
    j = r // 2
    out_arcs: list[list[int]] = [[] for _ in range(g.n)]
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        walk = euler_circuit(g.adj, s)
        for a, b in zip(walk, walk[1:]):
            out_arcs[a].append(b)
            seen[a] = seen[b] = True
    assert all(len(x) == j for x in out_arcs)
    factors: list[list[tuple[int, int]]] = []
    for _ in range(j):
        match = _perfect_matching(out_arcs)
        factor = []
        for u, w in enumerate(match):
            out_arcs[u].remove(w)
            factor.append((u, w) if u < w else (w, u))
        factors.append(sorted(factor))
    if seed is not None:
        random.Random(seed).shuffle(factors)
    return TwoFactorDecomposition(g.n, factors)


def h_kr(k: int, r: int, seed: int | None = None) -> Graph:
    """Triangle-free r-regular graph on k vertices (k divisible by 5, r even, r <= 2k/5).

    Starts from the (2k/5)-regular blow-up and deletes ``k/5 - r/2`` of its
    2-factors, each deletion lowering every degree by two.
    """
    if k < 5 or k % 5:
        raise GraphError(f"k must be a positive multiple of 5, got {k}")
    if r < 0 or r % 2 or 5 * r > 2 * k:
        raise GraphError(f"r must be even with 0 <= r <= 2k/5, got r={r}, k={k}")
    g = c5_blowup(k)
    drop = k // 5 - r // 2
    if drop == 0:
        return g
    for factor in two_factorize(g, seed).factors[:drop]:
        for u, v in factor:
            g.remove_edge(u, v)
    return g
