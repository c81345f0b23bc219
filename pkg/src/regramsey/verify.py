"""Independence number bounds and construction certificates."""

from __future__ import annotations

import math
import random
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, is_independent, is_regular, is_triangle_free

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class AlphaResult:
    lower: int
    upper: int | None
    witness: tuple[int, ...]
    exact: bool
    nodes: int = 0

    def __post_init__(self) -> None:
        if len(self.witness) != self.lower:
            raise ValueError("witness size must equal the lower bound")
        if self.exact and self.upper != self.lower:
            raise ValueError("exact result needs lower == upper")


class _BudgetExhausted(Exception):
    pass


@contextmanager
def _recursion_limit(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, depth))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _MaxIndependentSet:
    """Branch and bound over vertex bitmasks.

    At each node: take every vertex of degree 0 or 1 (always safe), split into
    connected components when the remainder falls apart, prune with a greedy
    clique cover, then branch on a maximum-degree vertex (take it, or drop
    it). Subtrees are explored take-first, lowest vertex first among ties, so
    the witness is fixed by the graph alone.
    """

    def __init__(self, g: Graph, budget: int) -> None:
        self.nbr = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
        self.budget = budget
        self.nodes = 0

    def clique_cover(self, mask: int) -> int:
        nbr = self.nbr
        count = 0
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            # grow a clique greedily from v
            cand = nbr[v] & mask
            while cand:
                lw = cand & -cand
                w = lw.bit_length() - 1
                mask ^= lw
                cand &= nbr[w]
            count += 1
        return count

    def component(self, mask: int) -> int:
        nbr = self.nbr
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= nbr[v]
            frontier = grow & mask & ~reach
            reach |= frontier
        return reach

    def reduce(self, mask: int, chosen: list[int]) -> int:
        nbr = self.nbr
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                if not (mask >> v) & 1:
                    continue
                m = nbr[v] & mask
                if m & (m - 1) == 0:  # degree 0 or 1
                    chosen.append(v)
                    mask &= ~(m | (1 << v))
                    changed = True
        return mask

    def solve(self, mask: int, floor: list[int] | None = None) -> list[int]:
        """A maximum independent set inside ``mask``.

        ``floor`` is a known independent set inside ``mask`` that the search
        only needs to beat.
        """
        best = list(floor) if floor else []
        chosen: list[int] = []
        mask = self.reduce(mask, chosen)
        comps = []
        rest = mask
        while rest:
            comp = self.component(rest)
            comps.append(comp)
            rest &= ~comp
        if len(comps) > 1:
            total = list(chosen)
            for comp in comps:
                total.extend(self.solve(comp))
            return total if len(total) > len(best) else best
        self._search(mask, chosen, best)
        return best

    def _search(self, mask: int, chosen: list[int], best: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        chosen = list(chosen)
        mask = self.reduce(mask, chosen)
        if not mask:
            if len(chosen) > len(best):
                best[:] = chosen
            return
        if len(chosen) + self.clique_cover(mask) <= len(best):
            return
        comp = self.component(mask)
        if comp != mask:
            # disconnected: solve the first piece exactly, continue on the rest
            piece = self.solve(comp)
            self._search(mask & ~comp, chosen + piece, best)
            return
        nbr = self.nbr
        pick, pick_deg = -1, -1
        for v in _bits(mask):
            dv = (nbr[v] & mask).bit_count()
            if dv > pick_deg:
                pick, pick_deg = v, dv
        self._search(mask & ~(nbr[pick] | (1 << pick)), chosen + [pick], best)
        self._search(mask & ~(1 << pick), chosen, best)


def greedy_independent_set(g: Graph, seed: int = 0) -> list[int]:
    """Maximal independent set by repeatedly taking a minimum-degree vertex.

    Degrees are counted in the graph that remains; ties go to a seeded order.
    """
    rng = random.Random(seed)
    tiebreak = list(range(g.n))
    rng.shuffle(tiebreak)
    alive = set(range(g.n))
    deg = {v: len(g.adj[v]) for v in alive}
    chosen: list[int] = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], tiebreak[x]))
        chosen.append(v)
        removed = {v} | (g.adj[v] & alive)
        alive -= removed
        for u in removed:
            for w in g.adj[u]:
                if w in alive:
                    deg[w] -= 1
    return sorted(chosen)


def independence_number_exact(g: Graph, budget: int = DEFAULT_BUDGET, seed: int = 0) -> AlphaResult:
    """Exact independence number when the search finishes within ``budget`` nodes.

    On budget exhaustion the best set found so far is returned with
    ``exact=False`` and no upper bound.
    """
    floor = greedy_independent_set(g, seed)
    solver = _MaxIndependentSet(g, budget)
    best = list(floor)
    exact = True
    with _recursion_limit(4 * g.n + 1000):
        try:
            best = solver.solve((1 << g.n) - 1, floor)
        except _BudgetExhausted:
            exact = False
    witness = tuple(sorted(best))
    if not is_independent(g, witness):
        raise AssertionError("independent set witness failed verification")
    if exact:
        return AlphaResult(len(witness), len(witness), witness, True, solver.nodes)
    return AlphaResult(len(witness), None, witness, False, solver.nodes)


def greedy_alpha(g: Graph, seed: int = 0) -> AlphaResult:
    witness = tuple(greedy_independent_set(g, seed))
    return AlphaResult(len(witness), None, witness, False)


def ramsey_ratio(alpha: int | None, n: int) -> float | None:
    """``alpha / sqrt(n ln n)``; undefined for n <= 1."""
    if alpha is None or n <= 1:
        return None
    return alpha / math.sqrt(n * math.log(n))


@dataclass
class ConstructionCertificate:
    n: int
    r: int | None
    triangle_free: bool
    alpha: AlphaResult
    params: dict[str, Any] = field(default_factory=dict)
    paper_constant_target: float | None = None

    @property
    def regular(self) -> bool:
        return self.r is not None

    @property
    def ratio_lower(self) -> float | None:
        return ramsey_ratio(self.alpha.lower, self.n)

    @property
    def ratio_upper(self) -> float | None:
        return ramsey_ratio(self.alpha.upper, self.n)

    def within_target(self) -> bool | None:
        """Whether the proven upper ratio meets the configured constant, if both exist."""
        if self.paper_constant_target is None or self.ratio_upper is None:
            return None
        return self.ratio_upper <= self.paper_constant_target

    def to_dict(self) -> dict[str, Any]:
        out = {
            "n": self.n,
            "r": self.r,
            "regular": self.regular,
            "triangle_free": self.triangle_free,
            "alpha_lower": self.alpha.lower,
            "alpha_upper": self.alpha.upper,
            "alpha_exact": self.alpha.exact,
            "ratio_lower": self.ratio_lower,
            "ratio_upper": self.ratio_upper,
            "witness": list(self.alpha.witness),
            "params": dict(self.params),
        }
        if self.paper_constant_target is not None:
            out["paper_constant_target"] = self.paper_constant_target
            out["within_target"] = self.within_target()
        return out


def certify(
    g: Graph,
    params: dict[str, Any] | None = None,
    alpha: str = "exact",
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    paper_constant_target: float | None = None,
) -> ConstructionCertificate:
    """Recompute every certified property from ``g`` itself."""
    if alpha == "exact":
        res = independence_number_exact(g, budget, seed)
    elif alpha == "greedy":
        res = greedy_alpha(g, seed)
    else:
        raise ValueError(f"alpha mode must be 'exact' or 'greedy', got {alpha!r}")
    return ConstructionCertificate(
        n=g.n,
        r=is_regular(g),
        triangle_free=is_triangle_free(g),
        alpha=res,
        params=dict(params or {}),
        paper_constant_target=paper_constant_target,
    )
