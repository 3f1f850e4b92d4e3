"""Command-line interface.

Subcommands that consume a configuration read it from --config or, when
piped, from stdin; subcommands that produce one write JSON to stdout, so
stages compose with ordinary shell pipes.  Exit codes: 0 for any computed
verdict, 2 for usage errors, 3 for unreadable configurations, 4 for
infeasible parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coverage import covering_radius, verify_k_coverage
from .density import density_report, kershner_theta, known_values, toth_lower_bound
from .lattice import ConfigFormatError, PeriodicConfig
from .optimize import optimize_pattern_b, optimize_single_lattice
from .patterns import PatternSpec
from .render import render_svg
from .voronoi import all_cells_congruent, congruence_signature, voronoi_cell

USAGE_ERROR = 2
CONFIG_ERROR = 3
INFEASIBLE_ERROR = 4


def _emit(payload: dict) -> int:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _load_config(args: argparse.Namespace, parser: argparse.ArgumentParser):
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigFormatError(f"cannot read {args.config}: {exc}") from exc
    elif not sys.stdin.isatty():
        text = sys.stdin.read()
    else:
        parser.exit(USAGE_ERROR, "error: no configuration: pass --config or pipe JSON\n")
    return PeriodicConfig.from_json(text)


def cmd_pattern(args, parser) -> int:
    spec = PatternSpec(args.name, args.x, args.y, args.d)
    return _emit(spec.build().to_dict())


def cmd_verify(args, parser) -> int:
    config = _load_config(args, parser)
    cert = verify_k_coverage(config, args.k, args.tol)
    return _emit(cert.to_dict())


def cmd_radius(args, parser) -> int:
    config = _load_config(args, parser)
    enclosure = covering_radius(config, args.k, args.tol)
    return _emit(
        {
            "k": args.k,
            "low": enclosure.low,
            "high": enclosure.high,
            "witness": [enclosure.witness.x, enclosure.witness.y],
            "converged": enclosure.converged,
        }
    )


def cmd_density(args, parser) -> int:
    config = _load_config(args, parser)
    report = density_report(config, args.k)
    return _emit(report.to_dict())


def cmd_voronoi(args, parser) -> int:
    config = _load_config(args, parser)
    cells = [voronoi_cell(config, i) for i in range(len(config.offsets))]
    payload: dict = {
        "cells": [
            {
                "site": [cell.site.x, cell.site.y],
                "vertices": [[p.x, p.y] for p in cell.polygon.vertices],
                "area": cell.polygon.area,
            }
            for cell in cells
        ]
    }
    if args.congruence:
        congruent, classes = all_cells_congruent(config, args.tol)
        sigs = [congruence_signature(cell, args.tol) for cell in cells]
        payload["all_congruent"] = congruent
        payload["class_count"] = len(classes)
        payload["cell_class"] = [classes.index(sig) for sig in sigs]
    return _emit(payload)


def cmd_bounds(args, parser) -> int:
    table = known_values()
    payload = {
        "k": args.k,
        "theta": kershner_theta(),
        "toth": toth_lower_bound(args.k),
        "known_values": table,
    }
    blundon = {1: "theta", 2: "blundon_2", 3: "blundon_3", 4: "blundon_4"}
    if args.k in blundon:
        payload["blundon"] = table[blundon[args.k]]
    if args.k == 2:
        payload["danzer"] = [table["danzer_low"], table["danzer_high"]]
    return _emit(payload)


def cmd_optimize(args, parser) -> int:
    if args.mode == "single-lattice":
        result = optimize_single_lattice(
            args.k, budget=args.budget, tol=args.tol, seed=args.seed
        )
    else:
        result = optimize_pattern_b(budget=args.budget, tol=args.tol, seed=args.seed)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(result.history_csv())
    return _emit(result.to_dict())


def cmd_render(args, parser) -> int:
    config = _load_config(args, parser)
    svg = render_svg(config, size=args.size)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskcover",
        description="Construct, verify, and optimize k-fold disk coverings "
        "of the plane on periodic lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_arg(p):
        p.add_argument("--config", help="configuration JSON file (default: stdin)")

    p = sub.add_parser("pattern", help="emit a named pattern configuration")
    p.add_argument("--name", required=True)
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--d", type=float)
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("verify", help="certify k-fold coverage")
    add_config_arg(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("radius", help="certified covering-radius enclosure")
    add_config_arg(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("density", help="density report against the k-fold bound")
    add_config_arg(p)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("voronoi", help="Voronoi cells, optionally with congruence")
    add_config_arg(p)
    p.add_argument("--congruence", action="store_true")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_voronoi)

    p = sub.add_parser("bounds", help="classical density bounds for order k")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("optimize", help="search for low-density configurations")
    p.add_argument(
        "--mode", choices=("single-lattice", "pattern-b"), default="single-lattice"
    )
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the evaluation history as CSV")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("render", help="render a configuration to SVG")
    add_config_arg(p)
    p.add_argument("--out", required=True)
    p.add_argument("--size", type=int, default=640)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ConfigFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CONFIG_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INFEASIBLE_ERROR


if __name__ == "__main__":
    sys.exit(main())
