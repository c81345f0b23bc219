"""Doubling gadget: near-regular triangle-free graph -> regular triangle-free graph.

Two copies of G share one equitable (max-degree + 1)-colouring. Each colour
class C in copy one is joined to its twin C' in copy two by a bipartite graph
whose degrees top every vertex up to ``d + max_degree``. Classes are
independent in both copies, so no cross edge can close a triangle, and any
independent set meets each copy in an independent set of G.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coloring import EquitableColoring, equitable_color
from .degrees import DegreeSequence, corollary_feasible, realize_bipartite
from .graph import Graph, GraphError, is_triangle_free, max_degree, min_degree


class PlanError(GraphError):
    """The slack ``d`` is outside the admissible range for this graph."""


@dataclass(frozen=True)
class ClassProfile:
    vertices: tuple[int, ...]
    degrees: tuple[int, ...]  # within-graph degrees, ascending
    complement: tuple[int, ...]  # d + max_degree - degree, descending

    @property
    def m(self) -> int:
        return len(self.vertices)


@dataclass
class RegularizationPlan:
    d: int
    delta_max: int
    delta_min: int
    coloring: EquitableColoring = field(repr=False)
    profiles: list[ClassProfile] = field(repr=False)

    @property
    def degree(self) -> int:
        return self.d + self.delta_max


def slack_upper_bound(n: int, delta_max: int) -> int:
    """Largest integer d with ``9 d <= 4 * floor(n / (delta_max + 1))``."""
    return (4 * (n // (delta_max + 1))) // 9


def slack_range(g: Graph) -> tuple[int, int]:
    """Inclusive range of admissible d; empty when lower > upper."""
    hi, lo = max_degree(g), min_degree(g)
    return hi - lo, slack_upper_bound(g.n, hi)


def plan(g: Graph, d: int, seed: int = 0) -> RegularizationPlan:
    if g.n == 0:
        raise PlanError("cannot regularize the empty graph")
    if not is_triangle_free(g):
        raise GraphError("input graph contains a triangle")
    hi, lo = max_degree(g), min_degree(g)
    if d < hi - lo:
        raise PlanError(f"d={d} below degree spread max-min={hi - lo}")
    if 9 * d > 4 * (g.n // (hi + 1)):
        raise PlanError(
            f"d={d} exceeds (4/9)*floor(n/(max_degree+1)) = 4*{g.n // (hi + 1)}/9"
        )
    coloring = equitable_color(g, hi + 1, seed=seed)
    profiles = []
    for cls in coloring.classes:
        if not cls:
            continue
        degs = sorted(g.degree(v) for v in cls)
        comp = tuple(d + hi - x for x in degs)
        prof = ClassProfile(tuple(cls), tuple(degs), comp)
        m = prof.m
        # the a = 2 instance of the sufficient condition
        assert comp[0] <= 2 * d and comp[-1] >= d and 9 * comp[0] <= 8 * m, prof
        assert corollary_feasible(DegreeSequence(comp), 2), prof
        profiles.append(prof)
    return RegularizationPlan(d, hi, lo, coloring, profiles)


@dataclass
class Regularization:
    graph: Graph
    plan: RegularizationPlan
    cross_edges: list[tuple[int, int]]


def build_regularization(g: Graph, d: int, seed: int = 0) -> Regularization:
    p = plan(g, d, seed=seed)
    n = g.n
    out = Graph(2 * n)
    for u, v in g.edges():
        out.add_edge(u, v)
        out.add_edge(u + n, v + n)
    rng = random.Random(seed)
    cross: list[tuple[int, int]] = []
    for prof in p.profiles:
        verts = list(prof.vertices)
        rng.shuffle(verts)
        verts.sort(key=lambda v: g.degree(v))  # stable: seeded order within ties
        demand = [d + p.delta_max - g.degree(v) for v in verts]
        bip = realize_bipartite(demand, demand)
        for i, j in bip.edges():
            out.add_edge(verts[i], verts[j] + n)
            cross.append((verts[i], verts[j] + n))
    if any(out.degree(v) != p.degree for v in range(2 * n)):
        raise AssertionError("regularized graph is not regular")
    return Regularization(out, p, cross)


def regularize(g: Graph, d: int, seed: int = 0) -> Graph:
    """``(d + max_degree)``-regular triangle-free graph on ``2 n`` vertices.

    Vertices ``0..n-1`` carry the first copy of ``g`` and ``n..2n-1`` the
    second.
    """
    return build_regularization(g, d, seed).graph
