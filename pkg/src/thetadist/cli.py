"""Command-line entry point.

Reads an optional JSON config, applies flag overrides, runs the pipeline and
writes the canonical report.  Exit codes: 0 success, 2 config rejected,
3 hypothesis violated, 4 budget exceeded, 5 internal precision failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceeded,
    ConfigRejected,
    HypothesisViolated,
    InvalidInput,
    PrecisionTooLow,
)
from .report import RunConfig, run, serialize_report

EXIT_OK = 0
EXIT_CONFIG_REJECTED = 2
EXIT_HYPOTHESIS_VIOLATED = 3
EXIT_BUDGET_EXCEEDED = 4
EXIT_PRECISION_FAILURE = 5


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thetadist",
        description="Explicit p-adic distance bound for torsion points near a "
        "genus >= 2 curve embedded in its Jacobian.",
    )
    ap.add_argument("--config", help="path to a JSON config document")
    ap.add_argument("--preset", help="built-in curve preset (e.g. bost-mestre)")
    ap.add_argument("--p", type=int, help="the prime p")
    ap.add_argument("--f", type=int, dest="residue_degree", help="residue degree of p")
    ap.add_argument("--precision-bits", type=int, help="working precision in bits")
    ap.add_argument("--grid", type=int, help="grid points per dimension")
    ap.add_argument("--jmax", type=int, help="deepest residue level p^j scanned")
    ap.add_argument("--out", help="report path, '-' for stdout")
    ap.add_argument(
        "--verify", action="store_true", help="run the p-adic verification table"
    )
    return ap


def config_from_args(args) -> RunConfig:
    doc = {}
    if args.config:
        with open(args.config) as fh:
            doc = json.load(fh)
    kwargs = dict(
        preset=doc.get("preset"),
        inline=doc.get("inline"),
        p=doc.get("p", 3),
        residue_degree=doc.get("residue_degree"),
        precision_bits=doc.get("precision_bits", 128),
        grid_points_per_dim=doc.get("grid_points_per_dim"),
        jmax=doc.get("jmax", 4),
        torsion_list=doc.get("torsion_list"),
        verify=doc.get("verify", False),
        output_path=doc.get("output_path", "-"),
    )
    # flags override config-file fields
    if args.preset is not None:
        kwargs["preset"] = args.preset
        kwargs["inline"] = None
    if args.p is not None:
        kwargs["p"] = args.p
    if args.residue_degree is not None:
        kwargs["residue_degree"] = args.residue_degree
    if args.precision_bits is not None:
        kwargs["precision_bits"] = args.precision_bits
    if args.grid is not None:
        kwargs["grid_points_per_dim"] = args.grid
    if args.jmax is not None:
        kwargs["jmax"] = args.jmax
    if args.out is not None:
        kwargs["output_path"] = args.out
    if args.verify:
        kwargs["verify"] = True
    return RunConfig(**kwargs)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        report = run(config)
    except (ConfigRejected, InvalidInput) as exc:
        print(f"config rejected: {exc}", file=sys.stderr)
        return EXIT_CONFIG_REJECTED
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS_VIOLATED
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except PrecisionTooLow as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION_FAILURE

    text = serialize_report(report)
    if config.output_path == "-":
        sys.stdout.write(text)
    else:
        with open(config.output_path, "w") as fh:
            fh.write(text)
    pl = report.payload
    print(
        "theta_max={} combined={} log10(main exponent)={}".format(
            pl["theta_max"]["value"]["dec"],
            pl["combined_constant"]["dec"],
            pl["log10_main_exponent"]["dec"],
        ),
        file=sys.stderr,
    )
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
