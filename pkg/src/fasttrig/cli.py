"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bench, derivation, kernels, taylor
from .kernels import SqrtMode
from .methods import FUNCTIONS, METHODS, kernel

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3

RECORD_HEADER = ("angle", "ref_val", "approx_val", "abs_err", "rel_err", "ref_ns", "approx_ns")
HIST_HEADER = ("bin_low", "bin_high", "count")
TABLE_HEADER = ("function", "segment", "lo", "hi", "a", "b", "c", "d", "X", "Y", "Z")


def fmt(v) -> str:
    """17 significant digits, locale independent."""
    if isinstance(v, (int, str)):
        return str(v)
    return format(float(v), ".17g")


@dataclass(frozen=True)
class RunConfig:
    function: str = "sin"
    method: str = "proposed"
    sqrt_mode: str = "fisr"
    n_angles: int = bench.DEFAULT_ANGLES
    iterations: int = bench.DEFAULT_ITERATIONS
    seed: int = bench.DEFAULT_SEED
    output_path: Path | None = None
    output_format: str = "json"
    bins: int = 50

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise ValueError(f"function must be one of {FUNCTIONS}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.sqrt_mode not in ("exact", "fisr"):
            raise ValueError("sqrt_mode must be 'exact' or 'fisr'")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output_format must be 'json' or 'csv'")
        if self.n_angles < 1:
            raise ValueError("n_angles must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")


def _python_function(function: str, method: str, mode: SqrtMode):
    if method == "proposed":
        f = {"sin": kernels.proposed_sin, "cos": kernels.proposed_cos, "tan": kernels.proposed_tan}[function]
        return lambda x: f(x, mode)
    if method.startswith("taylor"):
        n = int(method[len("taylor"):])
        f = {"sin": taylor.taylor_sin, "cos": taylor.taylor_cos, "tan": taylor.taylor_tan}[function]
        return lambda x: f(x, n)
    return getattr(math, function)


def cmd_eval(args) -> int:
    f = _python_function(args.func, args.method, SqrtMode.parse(args.sqrt_mode))
    print(fmt(f(args.x)))
    return EXIT_OK


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def bench_outputs(config: RunConfig) -> dict[str, str]:
    """Run the benchmark and render every output file as text, keyed by file name."""
    mode = SqrtMode.parse(config.sqrt_mode)
    records, summary = bench.run_benchmark(
        kernel(config.function, "reference"),
        kernel(config.function, config.method, mode),
        n_angles=config.n_angles,
        iterations=config.iterations,
        seed=config.seed,
    )
    meta = {
        "function": config.function,
        "method": config.method,
        "sqrt_mode": config.sqrt_mode,
        "seed": config.seed,
        "iterations": config.iterations,
    }
    data = {**meta, **summary.to_dict()}
    if config.output_format == "json":
        summary_name, summary_text = "summary.json", json.dumps(data, indent=2) + "\n"
    else:
        summary_name, summary_text = "summary.csv", _csv_text(("key", "value"), data.items())
    rows = [
        (r.angle, r.ref_val, r.approx_val, r.abs_err, r.rel_err, r.ref_ns, r.approx_ns) for r in records
    ]
    return {
        summary_name: summary_text,
        "records.csv": _csv_text(RECORD_HEADER, rows),
        "hist_speedup.csv": _csv_text(HIST_HEADER, bench.histogram(bench.speedup_ratios(records), config.bins)),
        "hist_rel_err.csv": _csv_text(HIST_HEADER, bench.histogram([r.rel_err for r in records], config.bins)),
    }


def cmd_bench(args) -> int:
    try:
        config = RunConfig(
            function=args.func,
            method=args.method,
            sqrt_mode=args.sqrt_mode,
            n_angles=args.n_angles,
            iterations=args.iterations,
            seed=args.seed,
            output_path=args.output,
            output_format=args.format,
            bins=args.bins,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    outputs = bench_outputs(config)
    summary_name = next(n for n in outputs if n.startswith("summary"))
    if config.output_path is None:
        sys.stdout.write(outputs[summary_name])
        return EXIT_OK
    try:
        config.output_path.mkdir(parents=True, exist_ok=True)
        for name, text in outputs.items():
            _write(config.output_path / name, text)
    except OSError as exc:
        print(f"error: cannot write {config.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(outputs[summary_name])
    return EXIT_OK


def cmd_derive(args) -> int:
    report = derivation.verify_published_tables(args.tolerance)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_VERIFY


def table_rows() -> list[tuple]:
    rows = []
    bounds = kernels.TABLE.boundaries
    for function in FUNCTIONS:
        for k, s in enumerate(kernels.TABLE):
            xyz = ("", "", "") if function == "tan" else (fmt(s.X), fmt(s.Y), fmt(s.Z))
            rows.append(
                (function, str(k), fmt(bounds[k]), fmt(bounds[k + 1]), fmt(s.a), fmt(s.b), fmt(s.c), fmt(s.d), *xyz)
            )
    return rows


def cmd_table(args) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    w.writerows(table_rows())
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _default_seed() -> int:
    env = os.environ.get("TRIG_SEED")
    if env is None:
        return bench.DEFAULT_SEED
    try:
        return int(env, 0)
    except ValueError:
        print(f"error: TRIG_SEED must be an integer, got {env!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fasttrig", description="Piecewise rational trigonometry toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate one function at one angle")
    e.add_argument("--func", choices=FUNCTIONS, required=True)
    e.add_argument("--method", choices=METHODS, default="proposed")
    e.add_argument("--x", type=float, required=True, help="angle in radians")
    e.add_argument("--sqrt-mode", choices=("exact", "fisr"), default="fisr")
    e.set_defaults(handler=cmd_eval)

    b = sub.add_parser("bench", help="run the accuracy/timing benchmark against the reference")
    b.add_argument("--func", choices=FUNCTIONS, default="sin")
    b.add_argument("--method", choices=METHODS, default="proposed")
    b.add_argument("--sqrt-mode", choices=("exact", "fisr"), default="fisr")
    b.add_argument("--n-angles", type=int, default=bench.DEFAULT_ANGLES)
    b.add_argument("--iterations", type=int, default=bench.DEFAULT_ITERATIONS)
    b.add_argument("--seed", type=int, default=None, help=f"default {bench.DEFAULT_SEED} or $TRIG_SEED")
    b.add_argument("--output", type=Path, default=None, help="directory for summary, records and histograms")
    b.add_argument("--format", choices=("json", "csv"), default="json", help="summary file format")
    b.add_argument("--bins", type=int, default=50)
    b.set_defaults(handler=cmd_bench)

    d = sub.add_parser("derive", help="rebuild the tables from sine interpolation and verify them")
    d.add_argument("--tolerance", type=float, default=0.01, help="relative tolerance for value checks")
    d.set_defaults(handler=cmd_derive)

    t = sub.add_parser("table", help="print the full-precision coefficient tables as CSV")
    t.set_defaults(handler=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", "absent") is None:
        args.seed = _default_seed()
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
