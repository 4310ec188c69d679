#!/usr/bin/env python3
"""Tabulate leaf-rank bounds for the hard family and optionally emit DOT.

For each order ``n`` in the requested range, this builds the family member,
its exponential-radius ball model, and the lower-bound audit, then prints one
table row with the certified sandwich.  With ``--dot-dir`` it also writes
Graphviz files for each graph and model so the structures can be drawn.

Example:
    python3 scripts/family_bounds.py --n-min 3 --n-max 8
    python3 scripts/family_bounds.py --n-min 3 --n-max 5 --audit --dot-dir out/
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from leafpower import (
    build_exponential_rs_model,
    build_rn,
    graph_to_dot,
    lower_bound_certificate,
    report_to_text,
    rs_model_to_dot,
)


@dataclass(frozen=True)
class SweepConfig:
    n_min: int
    n_max: int
    audit: bool
    dot_dir: Path | None


def parse_args(argv: list[str] | None = None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=3,
                        help="smallest family index (default 3)")
    parser.add_argument("--n-max", type=int, default=8,
                        help="largest family index (default 8)")
    parser.add_argument("--audit", action="store_true",
                        help="print the full audit report for each n")
    parser.add_argument("--dot-dir", type=Path, default=None,
                        help="directory for Graphviz output (created if needed)")
    args = parser.parse_args(argv)
    if not 3 <= args.n_min <= args.n_max <= 16:
        parser.error("range must satisfy 3 <= n-min <= n-max <= 16")
    return SweepConfig(args.n_min, args.n_max, args.audit, args.dot_dir)


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    if config.dot_dir is not None:
        config.dot_dir.mkdir(parents=True, exist_ok=True)

    header = (
        f"{'n':>3} {'vertices':>9} {'edges':>7} {'host':>6} "
        f"{'max radius':>11} {'lower':>7} {'upper':>7} {'holds':>6}"
    )
    print(header)
    print("-" * len(header))
    for n in range(config.n_min, config.n_max + 1):
        r = build_rn(n)
        model = build_exponential_rs_model(r)
        report = lower_bound_certificate(r, model)
        print(
            f"{n:>3} {r.graph.n:>9} {len(r.graph.edges):>7} "
            f"{model.host.n:>6} {report.max_radius:>11} "
            f"{report.lower_bound:>7} {report.upper_bound:>7} "
            f"{str(report.holds):>6}"
        )
        if config.audit:
            print()
            print(report_to_text(report))
            print()
        if config.dot_dir is not None:
            graph_path = config.dot_dir / f"family_{n}.dot"
            model_path = config.dot_dir / f"model_{n}.dot"
            graph_path.write_text(graph_to_dot(r.graph, name=f"family{n}"))
            model_path.write_text(rs_model_to_dot(model, name=f"model{n}"))
            print(f"  wrote {graph_path} and {model_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
