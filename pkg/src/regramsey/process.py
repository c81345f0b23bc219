"""The random greedy H-free process.

Edges are added one at a time, each chosen uniformly among the still-legal
pairs, until the graph is maximal H-free. Triangles get a fast path that keeps
the set of open pairs (non-edges with no common neighbour) up to date
incrementally; any other small pattern uses a backtracking subgraph search.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, complete_graph, is_triangle_free

MAX_PATTERN_VERTICES = 8


@dataclass(frozen=True)
class ForbiddenPattern:
    """A fixed graph H with at least one edge and at most eight vertices."""

    h: Graph
    name: str = "H"

    def __post_init__(self) -> None:
        if self.h.edge_count == 0:
            raise GraphError("forbidden pattern needs at least one edge")
        if self.h.n > MAX_PATTERN_VERTICES:
            raise GraphError(f"pattern limited to {MAX_PATTERN_VERTICES} vertices")

    @property
    def is_triangle(self) -> bool:
        return self.h.n == 3 and self.h.edge_count == 3

    @classmethod
    def parse(cls, spec: str) -> "ForbiddenPattern":
        """Patterns by name: ``K3``..``K8`` or ``C4``..``C8``."""
        from .graph import cycle_graph

        kind, size = spec[:1].upper(), spec[1:]
        if kind in "KC" and size.isdigit():
            k = int(size)
            if kind == "K" and 2 <= k <= MAX_PATTERN_VERTICES:
                return cls(complete_graph(k), f"K{k}")
            if kind == "C" and 3 <= k <= MAX_PATTERN_VERTICES:
                return cls(cycle_graph(k), f"C{k}")
        raise GraphError(f"unknown pattern {spec!r}")


K3 = ForbiddenPattern(complete_graph(3), "K3")


@dataclass(frozen=True)
class StepRecord:
    step: int
    max_deg: int
    min_deg: int
    open_pairs: int


@dataclass
class ProcessResult:
    n: int
    pattern: str
    seed: int
    edge_order: list[tuple[int, int]]
    trajectory: list[StepRecord]
    final_graph: Graph = field(repr=False)

    @property
    def steps(self) -> int:
        return len(self.edge_order)

    def snapshot(self, step: int) -> Graph:
        """The graph after the first ``step`` edges."""
        if not 0 <= step <= self.steps:
            raise IndexError(f"step {step} outside 0..{self.steps}")
        return Graph.from_edges(self.n, self.edge_order[:step])

    def degree_extremes(self, step: int) -> tuple[int, int]:
        """``(max_deg, min_deg)`` after ``step`` edges; step 0 is the empty graph."""
        if step == 0:
            return (0, 0)
        rec = self.trajectory[step - 1]
        return (rec.max_deg, rec.min_deg)


def creates_copy(g: Graph, e: tuple[int, int], pattern: ForbiddenPattern) -> bool:
    """Whether adding the non-edge ``e`` to ``g`` creates a copy of H through ``e``."""
    u, v = e
    if g.has_edge(u, v):
        raise GraphError(f"{e} is already an edge")
    adj = g.adj
    if pattern.is_triangle:
        return not adj[u].isdisjoint(adj[v])

    h = pattern.h

    def adjacent(x: int, y: int) -> bool:
        return y in adj[x] or (x == u and y == v) or (x == v and y == u)

    for a, b in h.edges():
        for x, y in ((u, v), (v, u)):
            if _extend(h, adjacent, g.n, {a: x, b: y}):
                return True
    return False


def _extend(h: Graph, adjacent, n: int, mapping: dict[int, int]) -> bool:
    if len(mapping) == h.n:
        return True
    # next pattern vertex: prefer one already attached to the mapped part
    free = [x for x in range(h.n) if x not in mapping]
    x = max(free, key=lambda y: sum(1 for z in h.adj[y] if z in mapping))
    used = set(mapping.values())
    anchors = [mapping[z] for z in h.adj[x] if z in mapping]
    if anchors:
        candidates = [w for w in range(n) if w not in used and all(adjacent(a, w) for a in anchors)]
    else:
        candidates = [w for w in range(n) if w not in used]
    for w in candidates:
        mapping[x] = w
        if _extend(h, adjacent, n, mapping):
            return True
        del mapping[x]
    return False


class TriangleFreeProcess:
    """Incremental triangle-free process with an explicit open-pair pool.

    Pairs ``u < v`` are keyed as ``u * n + v``. The pool is an array with a
    position index so removal is a swap with the last slot.
    """

    def __init__(self, n: int, rng: random.Random) -> None:
        if n < 1:
            raise GraphError("process needs n >= 1")
        self.n = n
        self.rng = rng
        self.graph = Graph(n)
        self.pool = array("l", (u * n + v for u, v in combinations(range(n), 2)))
        self.pos = array("l", [-1]) * (n * n)
        for i, key in enumerate(self.pool):
            self.pos[key] = i
        self.deg_count = [n] + [0] * n
        self.max_deg = 0
        self.min_deg = 0
        self.edge_order: list[tuple[int, int]] = []
        self.trajectory: list[StepRecord] = []

    def _discard(self, a: int, b: int) -> None:
        key = a * self.n + b if a < b else b * self.n + a
        i = self.pos[key]
        if i < 0:
            return
        last = self.pool.pop()
        if last != key:
            self.pool[i] = last
            self.pos[last] = i
        self.pos[key] = -1

    def open_pairs(self) -> set[tuple[int, int]]:
        n = self.n
        return {divmod(key, n) for key in self.pool}

    def step(self) -> tuple[int, int] | None:
        if not self.pool:
            return None
        key = self.pool[self.rng.randrange(len(self.pool))]
        u, v = divmod(key, self.n)
        adj = self.graph.adj
        self._discard(u, v)
        for w in adj[v]:
            self._discard(u, w)
        for w in adj[u]:
            self._discard(v, w)
        self.graph.add_edge(u, v)
        for x in (u, v):
            d = len(adj[x])
            self.deg_count[d - 1] -= 1
            self.deg_count[d] += 1
            if d > self.max_deg:
                self.max_deg = d
        while self.deg_count[self.min_deg] == 0:
            self.min_deg += 1
        self.edge_order.append((u, v))
        self.trajectory.append(
            StepRecord(len(self.edge_order), self.max_deg, self.min_deg, len(self.pool))
        )
        return (u, v)


def _run_generic(n: int, pattern: ForbiddenPattern, rng: random.Random):
    g = Graph(n)
    edge_order: list[tuple[int, int]] = []
    trajectory: list[StepRecord] = []
    legal = [p for p in combinations(range(n), 2) if not creates_copy(g, p, pattern)]
    while legal:
        u, v = legal[rng.randrange(len(legal))]
        g.add_edge(u, v)
        edge_order.append((u, v))
        # legality can only be lost, never gained
        legal = [p for p in legal if p != (u, v) and not creates_copy(g, p, pattern)]
        degs = g.degrees()
        trajectory.append(StepRecord(len(edge_order), max(degs), min(degs), len(legal)))
    return g, edge_order, trajectory


def run_process(n: int, pattern: ForbiddenPattern = K3, seed: int = 0) -> ProcessResult:
    """Run the H-free process on ``n`` vertices to a maximal H-free graph.

    One ``random.Random(seed)`` stream drives every choice, so equal
    ``(n, pattern, seed)`` give the same edge sequence on any platform.
    """
    if n < 1:
        raise GraphError("process needs n >= 1")
    rng = random.Random(seed)
    if pattern.is_triangle:
        proc = TriangleFreeProcess(n, rng)
        while proc.step() is not None:
            pass
        g, order, traj = proc.graph, proc.edge_order, proc.trajectory
    else:
        g, order, traj = _run_generic(n, pattern, rng)
    return ProcessResult(n, pattern.name, seed, order, traj, g)


def open_pairs_count(g: Graph) -> int:
    """Non-edges whose endpoints share no neighbour; the graph must be triangle-free."""
    if not is_triangle_free(g):
        raise GraphError("open pairs are defined for triangle-free graphs only")
    adj = g.adj
    return sum(
        1
        for u, v in combinations(range(g.n), 2)
        if v not in adj[u] and adj[u].isdisjoint(adj[v])
    )


def is_maximal_triangle_free(g: Graph) -> bool:
    return is_triangle_free(g) and open_pairs_count(g) == 0


def trajectory_csv(result: ProcessResult) -> str:
    rows = ["step,max_deg,min_deg,open_pairs"]
    rows.extend(f"{r.step},{r.max_deg},{r.min_deg},{r.open_pairs}" for r in result.trajectory)
    return "\n".join(rows) + "\n"


__all__ = [
    "ForbiddenPattern",
    "K3",
    "ProcessResult",
    "StepRecord",
    "TriangleFreeProcess",
    "creates_copy",
    "is_maximal_triangle_free",
    "open_pairs_count",
    "run_process",
    "trajectory_csv",
]
