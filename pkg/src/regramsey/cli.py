"""Command line entry point: ``regramsey <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .blowup import h_kr
from .coloring import equitable_color
from .degrees import InfeasibleError, realize_bipartite
from .graph import GraphError, format_graph, read_graph
from .pipeline import ConstructionError, PipelineConfig, certificate_json, construct
from .process import ForbiddenPattern, run_process, trajectory_csv
from .regularize import PlanError, regularize
from .verify import DEFAULT_BUDGET, certify

EXIT_OK, EXIT_FAIL, EXIT_CONSTRUCTION, EXIT_IO = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = PipelineConfig(
        seed=args.seed,
        max_retries=args.retries,
        alpha=args.alpha,
        alpha_budget=args.budget,
        fallback=not args.no_fallback,
        d_policy=args.d_policy,
        snapshot=args.snapshot,
        paper_constant_target=args.target,
    )
    try:
        graph, cert = construct(args.n, cfg)
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    _emit(format_graph(graph, args.format), args.out)
    if args.certificate:
        Path(args.certificate).write_text(certificate_json(cert), encoding="ascii")
    return EXIT_OK


def cmd_process(args: argparse.Namespace) -> int:
    pattern = ForbiddenPattern.parse(args.h)
    res = run_process(args.n, pattern, args.seed)
    if args.stats:
        Path(args.stats).write_text(trajectory_csv(res), encoding="ascii")
    _emit(format_graph(res.final_graph, args.format), args.out)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    try:
        bip = realize_bipartite(_int_list(args.left), _int_list(args.right))
    except InfeasibleError as exc:
        print(f"INFEASIBLE s={exc.s}")
        return EXIT_FAIL
    sys.stdout.write("".join(f"{i} {j}\n" for i, j in bip.edges()))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    coloring = equitable_color(g, args.colors, seed=args.seed)
    sys.stdout.write("".join(f"{v} {c}\n" for v, c in enumerate(coloring.color_of)))
    return EXIT_OK


def cmd_regularize(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    try:
        out = regularize(g, args.d, args.seed)
    except PlanError as exc:
        print(f"invalid slack: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(format_graph(out, args.format), args.out)
    return EXIT_OK


def cmd_hkr(args: argparse.Namespace) -> int:
    _emit(format_graph(h_kr(args.k, args.r, args.seed), args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    cert = certify(g, alpha=args.alpha, budget=args.budget, seed=args.seed)
    body = cert.to_dict()
    sys.stdout.write(json.dumps(body, sort_keys=True, indent=2) + "\n")
    ok = cert.regular and cert.triangle_free
    if args.max_ratio is not None:
        ok = ok and cert.ratio_upper is not None and cert.ratio_upper <= args.max_ratio
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regramsey", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the graph here instead of stdout")
        p.add_argument("--format", choices=("edges", "g6"), default="edges")

    p = sub.add_parser("construct", help="regular triangle-free graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--certificate", help="write the JSON certificate here")
    p.add_argument("--alpha", choices=("exact", "greedy"), default="exact")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--d-policy", choices=("min", "max"), default="min")
    p.add_argument("--snapshot", choices=("latest", "final"), default="latest")
    p.add_argument("--target", type=float, help="constant C to compare the ratio against")
    p.add_argument("--no-fallback", action="store_true", help="fail instead of emitting the edgeless graph")
    graph_out(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("process", help="run the H-free process")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", default="K3", help="K3..K8 or C4..C8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stats", help="per-step CSV")
    graph_out(p)
    p.set_defaults(func=cmd_process)

    p = sub.add_parser("realize", help="realize a bipartite bidegree sequence")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("color", help="equitable colouring")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("regularize", help="double a near-regular graph into a regular one")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    graph_out(p)
    p.set_defaults(func=cmd_regularize)

    p = sub.add_parser("hkr", help="r-regular triangle-free patch on k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int)
    graph_out(p)
    p.set_defaults(func=cmd_hkr)

    p = sub.add_parser("verify", help="certify a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--alpha", choices=("exact", "greedy"), default="exact")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-ratio", type=float, help="also require proven alpha/sqrt(n ln n) <= this")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
