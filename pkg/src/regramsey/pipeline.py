"""End-to-end construction of regular triangle-free graphs of any order.

Even orders: run the triangle-free process on n/2 vertices, pick a snapshot
whose degree spread admits a slack d, and double it with the regularizing
gadget. Odd orders: build an even-degree graph F on n - k vertices that way
and add a disjoint H(k, r) of the same degree, with k = 5 (mod 10) so that
n - k is even. Orders below a threshold, or runs that never admit a slack,
get the edgeless graph.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Any

from .blowup import h_kr
from .graph import Graph, GraphError, disjoint_union, empty_graph, format_graph, is_regular
from .process import K3, ProcessResult, run_process
from .regularize import regularize, slack_upper_bound
from .verify import DEFAULT_BUDGET, ConstructionCertificate, certify

log = logging.getLogger(__name__)

TRIVIAL_BELOW = 10


class ConstructionError(RuntimeError):
    """No admissible slack was found within the retry budget."""


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for :func:`construct`.

    ``d_policy`` is ``"min"`` (smallest admissible slack) or ``"max"``
    (largest). ``snapshot`` is ``"final"`` to use only the maximal graph of
    each process run, or ``"latest"`` to fall back to the last step of the
    trajectory that admits a slack.
    """

    seed: int = 0
    max_retries: int = 5
    d_policy: str = "min"
    snapshot: str = "latest"
    parity_required: bool = False
    alpha: str = "exact"
    alpha_budget: int = DEFAULT_BUDGET
    fallback: bool = True
    paper_constant_target: float | None = None

    def __post_init__(self) -> None:
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")
        if self.d_policy not in ("min", "max"):
            raise ValueError(f"unknown d_policy {self.d_policy!r}")
        if self.snapshot not in ("final", "latest"):
            raise ValueError(f"unknown snapshot policy {self.snapshot!r}")
        if self.alpha not in ("exact", "greedy"):
            raise ValueError(f"unknown alpha mode {self.alpha!r}")


def derive_seed(seed: int, attempt: int) -> int:
    return seed * 1_000_003 + attempt


def choose_slack(
    n: int, delta_max: int, delta_min: int, policy: str = "min", parity: bool = False
) -> int | None:
    """Slack d for a graph on ``n`` vertices with the given degree extremes, or None."""
    lo, hi = delta_max - delta_min, slack_upper_bound(n, delta_max)
    if lo > hi:
        return None
    d = lo if policy == "min" else hi
    if parity and (d + delta_max) % 2:
        d += 1 if policy == "min" else -1
        if not lo <= d <= hi:
            return None
    return d


def select_snapshot(
    result: ProcessResult,
    cfg: PipelineConfig,
    parity: bool,
    max_degree: int | None = None,
) -> tuple[int, int] | None:
    """Latest non-empty step ``(step, d)`` admitting a slack under ``cfg``."""
    steps = [result.steps] if cfg.snapshot == "final" else range(result.steps, 0, -1)
    for step in steps:
        if step == 0:
            continue
        hi, lo = result.degree_extremes(step)
        d = choose_slack(result.n, hi, lo, cfg.d_policy, parity)
        if d is None:
            continue
        if max_degree is not None and d + hi > max_degree:
            continue
        return step, d
    return None


def _even_attempt(
    n_target: int, cfg: PipelineConfig, attempt: int, parity: bool, max_degree: int | None
) -> tuple[Graph, dict[str, Any]] | None:
    seed = derive_seed(cfg.seed, attempt)
    res = run_process(n_target // 2, K3, seed)
    chosen = select_snapshot(res, cfg, parity, max_degree)
    if chosen is None:
        log.info("n=%d attempt %d: no admissible snapshot", n_target, attempt)
        return None
    step, d = chosen
    base = res.snapshot(step)
    hi, lo = res.degree_extremes(step)
    graph = regularize(base, d, seed)
    info = {
        "process_seed": seed,
        "process_steps": res.steps,
        "snapshot_step": step,
        "d": d,
        "delta_max": hi,
        "delta_min": lo,
    }
    return graph, info


def _finish(graph: Graph, cfg: PipelineConfig, params: dict[str, Any]) -> tuple[Graph, ConstructionCertificate]:
    params = {"seed": cfg.seed, **params}
    cert = certify(
        graph,
        params,
        alpha=cfg.alpha,
        budget=cfg.alpha_budget,
        seed=cfg.seed,
        paper_constant_target=cfg.paper_constant_target,
    )
    if not cert.regular or not cert.triangle_free or cert.n != params["n_target"]:
        raise AssertionError(f"construction postcondition failed: {cert.to_dict()}")
    return graph, cert


def construct_trivial(n_target: int, cfg: PipelineConfig, reason: str) -> tuple[Graph, ConstructionCertificate]:
    params = {"n_target": n_target, "path": "trivial", "reason": reason, "retries_used": 0}
    return _finish(empty_graph(n_target), cfg, params)


def build_even(
    n_target: int,
    cfg: PipelineConfig,
    parity: bool | None = None,
    max_degree: int | None = None,
) -> tuple[Graph, dict[str, Any]]:
    """Regular triangle-free graph on the even order ``n_target`` via process + gadget."""
    if n_target < 2 or n_target % 2:
        raise GraphError(f"even construction needs an even order >= 2, got {n_target}")
    parity = cfg.parity_required if parity is None else parity
    for attempt in range(cfg.max_retries):
        out = _even_attempt(n_target, cfg, attempt, parity, max_degree)
        if out is not None:
            graph, info = out
            info["retries_used"] = attempt + 1
            return graph, info
    raise ConstructionError(f"no admissible slack for n={n_target} after {cfg.max_retries} runs")


def construct_even(
    n_target: int,
    cfg: PipelineConfig = PipelineConfig(),
    base: Graph | None = None,
    d: int | None = None,
) -> tuple[Graph, ConstructionCertificate]:
    """Even order. ``base`` substitutes a fixed graph for the process output."""
    if n_target < 2 or n_target % 2:
        raise GraphError(f"construct_even needs an even order >= 2, got {n_target}")
    if base is not None:
        if 2 * base.n != n_target:
            raise GraphError("fixture must have half the target order")
        hi, lo = max(base.degrees()), min(base.degrees())
        if d is None:
            d = choose_slack(base.n, hi, lo, cfg.d_policy, cfg.parity_required)
            if d is None:
                raise ConstructionError("fixture admits no slack")
        graph = regularize(base, d, cfg.seed)
        params = {"d": d, "delta_max": hi, "delta_min": lo, "fixture": True, "retries_used": 0}
        return _finish(graph, cfg, {"n_target": n_target, "path": "even", **params})
    if n_target < TRIVIAL_BELOW:
        return construct_trivial(n_target, cfg, "below threshold")
    try:
        graph, info = build_even(n_target, cfg)
    except ConstructionError:
        if not cfg.fallback:
            raise
        return construct_trivial(n_target, cfg, "retries exhausted")
    return _finish(graph, cfg, {"n_target": n_target, "path": "even", **info})


def _smallest_k(r: int) -> int:
    """Least k = 5 (mod 10) with r <= 2k/5."""
    k = 5
    while 2 * k < 5 * r:
        k += 10
    return k


def construct_odd(
    n_target: int,
    cfg: PipelineConfig = PipelineConfig(),
    f_graph: Graph | None = None,
    k: int | None = None,
) -> tuple[Graph, ConstructionCertificate]:
    """Odd order: F (even degree r, 2*n0 vertices) plus a disjoint H(k, r).

    ``f_graph`` and ``k`` substitute fixed components for testing.
    """
    if n_target < 1 or n_target % 2 == 0:
        raise GraphError(f"construct_odd needs an odd order >= 1, got {n_target}")
    if f_graph is not None:
        if k is None:
            raise GraphError("fixture F needs an explicit k")
        r = is_regular(f_graph)
        if r is None or r % 2:
            raise GraphError("fixture F must be regular of even degree")
        return _assemble_odd(n_target, cfg, f_graph, k, r, {"fixture": True, "retries_used": 0})
    if n_target < TRIVIAL_BELOW:
        return construct_trivial(n_target, cfg, "below threshold")

    pilot = run_process(n_target // 2, K3, derive_seed(cfg.seed, cfg.max_retries))
    sel = select_snapshot(pilot, cfg, parity=True)
    r_hat = 0
    if sel is not None:
        step, d = sel
        r_hat = d + pilot.degree_extremes(step)[0]
    k = _smallest_k(r_hat)
    for attempt in range(cfg.max_retries):
        n0 = (n_target - k) // 2
        assert 2 * n0 + k == n_target
        if n0 < TRIVIAL_BELOW // 2:
            break
        last = attempt == cfg.max_retries - 1
        out = _even_attempt(2 * n0, cfg, attempt, True, (2 * k) // 5 if last else None)
        if out is None:
            continue
        f, info = out
        r = is_regular(f)
        assert r is not None and r % 2 == 0
        if 5 * r > 2 * k:
            log.info("n=%d: F has degree %d > 2k/5 for k=%d, enlarging k", n_target, r, k)
            k = _smallest_k(r)
            continue
        info["retries_used"] = attempt + 1
        return _assemble_odd(n_target, cfg, f, k, r, info)
    if not cfg.fallback:
        raise ConstructionError(f"no admissible (k, r) for n={n_target}")
    return construct_trivial(n_target, cfg, "retries exhausted")


def _assemble_odd(
    n_target: int, cfg: PipelineConfig, f: Graph, k: int, r: int, info: dict[str, Any]
) -> tuple[Graph, ConstructionCertificate]:
    if k % 10 != 5:
        raise GraphError(f"k must be 5 (mod 10), got {k}")
    if f.n + k != n_target:
        raise GraphError(f"|F| + k = {f.n + k} != {n_target}")
    h = h_kr(k, r, cfg.seed)
    graph = disjoint_union(f, h)
    params = {"n_target": n_target, "path": "odd", "k": k, "n0": f.n // 2, "r_F": r, **info}
    return _finish(graph, cfg, params)


def construct(n_target: int, cfg: PipelineConfig = PipelineConfig()) -> tuple[Graph, ConstructionCertificate]:
    """Regular triangle-free graph on exactly ``n_target`` vertices, certified."""
    if n_target < 1:
        raise GraphError(f"order must be >= 1, got {n_target}")
    if n_target % 2 == 0:
        return construct_even(n_target, cfg)
    return construct_odd(n_target, cfg)


def certificate_json(cert: ConstructionCertificate) -> str:
    body = cert.to_dict()
    for key in ("path", "k", "n0", "d", "retries_used"):
        body[key] = cert.params.get(key)
    return json.dumps(body, sort_keys=True, indent=2) + "\n"


def serialize(graph: Graph, fmt: str = "edges") -> str:
    return format_graph(graph, fmt)
