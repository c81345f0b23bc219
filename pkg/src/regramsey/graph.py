"""Simple undirected graphs on dense integer vertices, plus text serialization."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed edges, vertices or serialized input."""


def canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Equality is by exact edge set, never isomorphism.
    """

    n: int
    adj: list[set[int]] = field(default_factory=list, repr=False)
    edge_count: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if not self.adj:
            self.adj = [set() for _ in range(self.n)]
        elif len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.edge_count += 1
        return self

    def remove_edge(self, u: int, v: int) -> "Graph":
        if v not in self.adj[u]:
            raise GraphError(f"edge ({u}, {v}) not present")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edge_count -= 1
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def copy(self) -> "Graph":
        return Graph(self.n, [set(a) for a in self.adj], self.edge_count)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in sorted vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        h = Graph(len(vs))
        for v in vs:
            for w in self.adj[v]:
                if w in index and v < w:
                    h.add_edge(index[v], index[w])
        return h

    def check_invariants(self) -> None:
        total = 0
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for w in nbrs:
                if not 0 <= w < self.n or v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency at ({v}, {w})")
            total += len(nbrs)
        if total != 2 * self.edge_count:
            raise GraphError("edge_count out of sync with adjacency")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("max_degree of the empty graph")
    return max(len(a) for a in g.adj)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("min_degree of the empty graph")
    return min(len(a) for a in g.adj)


def is_regular(g: Graph) -> int | None:
    """Common degree if every vertex has it, else ``None``.

    The empty graph on zero vertices counts as 0-regular.
    """
    if g.n == 0:
        return 0
    hi, lo = max_degree(g), min_degree(g)
    return hi if hi == lo else None


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        au = adj[u]
        for v in au:
            if u < v and not au.isdisjoint(adj[v]):
                return False
    return True


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    chosen = set(vs)
    return all(g.adj[v].isdisjoint(chosen) for v in vs)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    adj = [set(a) for a in g1.adj]
    adj.extend({w + shift for w in a} for a in g2.adj)
    return Graph(g1.n + g2.n, adj, g1.edge_count + g2.edge_count)


# Small named graphs used throughout the constructions and tests.

def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# Edge-list text format: optional "# n=<N>" header, then "u v" per line.

def to_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"# n={g.n}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                if n is not None or edges:
                    raise GraphError(f"line {lineno}: header must come first")
                try:
                    n = int(body[2:])
                except ValueError:
                    raise GraphError(f"line {lineno}: bad header {raw!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


# graph6: N(n) followed by the upper triangle, column-wise, packed 6 bits per byte.

def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits: list[int] = []
    for v in range(1, g.n):
        av = g.adj[v]
        bits.extend(1 if u in av else 0 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bits[i + j] << (5 - j) for j in range(6)) for i in range(0, len(bits), 6)
    )
    return (_encode_size(g.n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x < 64 for x in data):
        raise GraphError("graph6 byte out of range")
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] != 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 size")
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        if len(data) < 8:
            raise GraphError("truncated graph6 size")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise GraphError(f"graph6 body has {len(data) - pos} bytes, expected {need}")
    g = Graph(n)
    k = 0
    body = data[pos:]
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                g.add_edge(u, v)
            k += 1
    return g


def read_graph(path: str | Path) -> Graph:
    """Load either format; graph6 is recognised by a single non-comment token line."""
    text = Path(path).read_text(encoding="ascii")
    stripped = text.strip()
    if stripped.startswith(">>graph6<<") or (
        stripped and "\n" not in stripped and " " not in stripped and not stripped.startswith("#")
    ):
        return from_graph6(stripped)
    return from_edge_list(text)


def write_graph(g: Graph, path: str | Path, fmt: str = "edges") -> None:
    Path(path).write_text(format_graph(g, fmt), encoding="ascii")


def format_graph(g: Graph, fmt: str = "edges") -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "edges":
        return to_edge_list(g)
    raise GraphError(f"unknown graph format {fmt!r}")
