"""Equitable colorings with at least max-degree + 1 colors."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, max_degree


@dataclass(frozen=True)
class EquitableColoring:
    color_of: tuple[int, ...]
    c: int

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, col in enumerate(self.color_of):
            out[col].append(v)
        return out

    def sizes(self) -> list[int]:
        sizes = [0] * self.c
        for col in self.color_of:
            sizes[col] += 1
        return sizes


def verify_equitable(g: Graph, coloring: EquitableColoring) -> bool:
    col = coloring.color_of
    if len(col) != g.n or any(not 0 <= x < coloring.c for x in col):
        return False
    if any(col[u] == col[v] for u, v in g.edges()):
        return False
    sizes = coloring.sizes()
    return not sizes or max(sizes) - min(sizes) <= 1


class _State:
    """Colour classes plus, per vertex, how many neighbours sit in each class."""

    def __init__(self, g: Graph, c: int) -> None:
        self.g = g
        self.c = c
        self.color = [-1] * g.n
        self.members: list[set[int]] = [set() for _ in range(c)]
        self.nbr_count = [[0] * c for _ in range(g.n)]

    def place(self, v: int, col: int) -> None:
        old = self.color[v]
        if old >= 0:
            self.members[old].discard(v)
            for w in self.g.adj[v]:
                self.nbr_count[w][old] -= 1
        self.color[v] = col
        self.members[col].add(v)
        for w in self.g.adj[v]:
            self.nbr_count[w][col] += 1

    def witness(self, src: int, dst: int) -> int | None:
        """Lowest-index vertex of ``src`` with no neighbour in ``dst``."""
        best = None
        for v in self.members[src]:
            if self.nbr_count[v][dst] == 0 and (best is None or v < best):
                best = v
        return best

    def shift_path(self, sizes_hi: set[int], sizes_lo: set[int]) -> bool:
        """Move one vertex from a largest class toward a smallest class.

        BFS in the digraph X -> Y (some vertex of X fits into Y). Each hop
        moves its witness one class along the path, so only the endpoints
        change size.
        """
        parent: dict[int, int | None] = {x: None for x in sorted(sizes_hi)}
        queue = deque(sorted(sizes_hi))
        target = None
        while queue:
            x = queue.popleft()
            if x in sizes_lo:
                target = x
                break
            for y in range(self.c):
                if y not in parent and self.witness(x, y) is not None:
                    parent[y] = x
                    queue.append(y)
        if target is None:
            return False
        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        # move from the tail end first so each witness is chosen against the
        # class contents its move actually sees
        for x, y in reversed(list(zip(path, path[1:]))):
            v = self.witness(x, y)
            assert v is not None
            self.place(v, y)
        return True


def _greedy(state: _State, order: list[int]) -> None:
    sizes = [0] * state.c
    for v in order:
        allowed = [col for col in range(state.c) if state.nbr_count[v][col] == 0]
        col = min(allowed, key=lambda k: (sizes[k], k))
        state.place(v, col)
        sizes[col] += 1


def _kkms_fallback(g: Graph, c: int) -> list[int]:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    coloring = nx.coloring.equitable_color(h, c)
    return [coloring[v] for v in range(g.n)]


def equitable_color(g: Graph, c: int, seed: int = 0) -> EquitableColoring:
    """Proper colouring with ``c`` colours whose class sizes differ by at most one.

    Greedy colouring (high degree first, ties by a seeded shuffle) followed by
    shifting vertices along movability paths from the largest to the smallest
    classes. If no such path exists the Kierstead-Kostochka-Mydlarz-Szemeredi
    procedure (networkx) finishes the job, which always succeeds for
    ``c > max degree``.
    """
    if c < 1:
        raise GraphError("need at least one colour")
    if g.n and c <= max_degree(g):
        raise GraphError(f"c={c} colours do not exceed max degree {max_degree(g)}")
    if g.n == 0:
        return EquitableColoring((), c)
    rng = random.Random(seed)
    tiebreak = list(range(g.n))
    rng.shuffle(tiebreak)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), tiebreak[v]))
    state = _State(g, c)
    _greedy(state, order)
    colors = state.color
    while True:
        sizes = [len(m) for m in state.members]
        hi, lo = max(sizes), min(sizes)
        if hi - lo <= 1:
            break
        big = {k for k in range(c) if sizes[k] == hi}
        small = {k for k in range(c) if sizes[k] == lo}
        if not state.shift_path(big, small):
            colors = _kkms_fallback(g, c)
            break
    result = EquitableColoring(tuple(colors), c)
    if not verify_equitable(g, result):
        raise AssertionError("equitable colouring postcondition failed")
    return result

