"""Bipartite degree sequences: Gale-Ryser feasibility, realization and tight families."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, float, str, Fraction]


class InfeasibleError(ValueError):
    """A bidegree pair has no simple bipartite realization.

    ``s`` is the first index where the Gale-Ryser inequality fails, or 0 when
    the two sums differ.
    """

    def __init__(self, s: int, message: str | None = None) -> None:
        super().__init__(message or f"INFEASIBLE s={s}")
        self.s = s


@dataclass(frozen=True)
class DegreeSequence:
    """Non-negative integers stored in non-increasing order."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", vals)
        if any(x < 0 for x in vals):
            raise ValueError("degrees must be non-negative")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"degree sequence not sorted non-increasing: {vals}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(values, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        return cls.of(int(x) for x in text.replace(" ", "").split(",") if x)

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _as_sequence(d: DegreeSequence | Sequence[int]) -> DegreeSequence:
    return d if isinstance(d, DegreeSequence) else DegreeSequence(tuple(d))


def gale_ryser_slack(d: DegreeSequence, d2: DegreeSequence, s: int) -> tuple[int, int]:
    """Both sides of the inequality at ``s``: ``(sum_i min(d_i, s), d2_1 + ... + d2_s)``."""
    return sum(min(x, s) for x in d.values), sum(d2.values[:s])


def gale_ryser_violation(d: DegreeSequence | Sequence[int], d2: DegreeSequence | Sequence[int]) -> int | None:
    """First failing ``s`` (0 for unequal sums), or ``None`` if the pair is realizable."""
    d, d2 = _as_sequence(d), _as_sequence(d2)
    if d.total != d2.total:
        return 0
    # running form of sum_i min(d_i, s): count entries >= s as s grows
    desc = d.values
    lhs = 0
    rhs = 0
    ge = len(desc)
    i = len(desc) - 1
    for s in range(1, d2.m + 1):
        while i >= 0 and desc[i] < s:
            i -= 1
        ge = i + 1
        lhs += ge
        rhs += d2.values[s - 1]
        if lhs < rhs:
            return s
    return None


def gale_ryser_feasible(d: DegreeSequence | Sequence[int], d2: DegreeSequence | Sequence[int]) -> bool:
    d, d2 = _as_sequence(d), _as_sequence(d2)
    ok = gale_ryser_violation(d, d2) is None
    if ok:
        # implied by the inequalities, asserted anyway
        assert not d.values or d.values[0] <= d2.m
        assert not d2.values or d2.values[0] <= d.m
    return ok


@dataclass(frozen=True)
class RealizationCondition:
    """The sufficient condition ``d_1 <= min(a * d_m, 4am / (a+1)^2)``."""

    a: Fraction

    def __init__(self, a: Rational) -> None:
        a = Fraction(a)
        if a < 1:
            raise ValueError(f"a must be >= 1, got {a}")
        object.__setattr__(self, "a", a)

    def threshold(self, m: int) -> Fraction:
        return 4 * self.a * m / (self.a + 1) ** 2


def corollary_feasible(d: DegreeSequence | Sequence[int], cond: RealizationCondition | Rational) -> bool:
    """Check the ratio/size condition that guarantees ``(d, d)`` is realizable.

    Comparisons are exact over the rationals.
    """
    d = _as_sequence(d)
    if not isinstance(cond, RealizationCondition):
        cond = RealizationCondition(cond)
    if d.m == 0:
        raise ValueError("empty degree sequence")
    d1, dm = d.values[0], d.values[-1]
    return d1 <= cond.a * dm and d1 <= cond.threshold(d.m)


@dataclass
class BipartiteGraph:
    m_left: int
    m_right: int
    adjacency: list[set[int]] = field(default_factory=list)

    def left_degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def right_degrees(self) -> list[int]:
        deg = [0] * self.m_right
        for nbrs in self.adjacency:
            for j in nbrs:
                deg[j] += 1
        return deg

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in sorted(nbrs)]


def realize_bipartite(left: Sequence[int], right: Sequence[int]) -> BipartiteGraph:
    """Build a simple bipartite graph where left vertex ``i`` has degree ``left[i]``
    and right vertex ``j`` has degree ``right[j]``.

    Greedy: the left vertex of largest remaining demand is joined to the right
    vertices of largest remaining demand, ties broken by lower index.
    """
    left, right = list(left), list(right)
    if any(x < 0 for x in left + right):
        raise ValueError("degrees must be non-negative")
    witness = gale_ryser_violation(DegreeSequence.of(left), DegreeSequence.of(right))
    if witness is not None:
        raise InfeasibleError(witness)
    adjacency: list[set[int]] = [set() for _ in left]
    remaining = right[:]
    for i in sorted(range(len(left)), key=lambda i: (-left[i], i)):
        need = left[i]
        if need == 0:
            continue
        targets = sorted(range(len(right)), key=lambda j: (-remaining[j], j))[:need]
        if len(targets) < need or remaining[targets[-1]] == 0:
            raise AssertionError("greedy realization failed on a feasible pair")
        for j in targets:
            remaining[j] -= 1
        adjacency[i] = set(targets)
    if any(remaining):
        raise AssertionError("greedy realization left unmatched right demand")
    return BipartiteGraph(len(left), len(right), adjacency)


def tight_counterexample(a: Rational, m: int) -> DegreeSequence:
    """Sequence on ``m`` entries just past the sufficient condition, yet unrealizable.

    The first ``s = 2m/(a+1)`` entries equal the smallest integer above
    ``4am/(a+1)^2``; the remaining ``m - s`` entries equal ``4m/(a+1)^2``.
    """
    a = Fraction(a)
    if a <= 1:
        raise ValueError("tight family needs a > 1")
    s = Fraction(2 * m) / (a + 1)
    tail = Fraction(4 * m) / (a + 1) ** 2
    if s.denominator != 1 or tail.denominator != 1:
        raise ValueError(f"m={m} makes s={s} or tail={tail} non-integral for a={a}")
    head = math.floor(4 * a * m / (a + 1) ** 2) + 1
    s, tail = int(s), int(tail)
    return DegreeSequence((head,) * s + (tail,) * (m - s))
