"""Command-line front end.

Exit codes: 0 success (or dominance holds), 3 dominance fails, 2 usage
errors, 1 data errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import distortion as dist
from .errors import DomainError
from .io import read_matrix, read_sample, resolve_dataset
from .lln import GENERATORS, LLN_DIRECTIONS, format_table, run_lln
from .mre import (AngleInterval, DEFAULT_DIRECTIONS, dominates, mre_2d, priced_gini,
                  support_sample)
from .spectral import dual_sd_check, generalized_gini

EXIT_OK, EXIT_DATA, EXIT_USAGE, EXIT_FAILS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _split(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def _distortions(args, default="dw:0.5") -> list[dist.DistortionSpec]:
    """Specs from ``--distortion`` or from ``--family`` plus ``--alpha-grid``."""
    if args.alpha_grid:
        if args.distortion:
            raise UsageError("give either --distortion or --alpha-grid, not both")
        alphas = [dist.parse_number(a) for a in _split(args.alpha_grid)]
        if any(not 0 < a <= 1 for a in alphas):
            raise UsageError("--alpha-grid values must lie in (0, 1]")
        return [dist.family(args.family, a) for a in alphas]
    return [dist.parse_distortion(s) for s in _split(args.distortion or default)]


def _interval(text):
    if not text:
        return None
    try:
        lo, hi = (float(t) for t in text.split(":"))
    except ValueError:
        raise UsageError(f"--p-interval expects DEG:DEG, got {text!r}") from None
    return AngleInterval.from_degrees(lo, hi)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gini(args) -> int:
    X = read_matrix(resolve_dataset(args.dataset))
    specs = _distortions(args)
    records = []
    if args.p:
        p = np.array([dist.parse_number(t) for t in _split(args.p)])
        if p.shape != (X.d,) or np.any(p < 0) or not p.any():
            raise UsageError(f"--p needs {X.d} nonnegative components, not all zero")
        targets = [("p=" + ",".join(f"{c:g}" for c in p), p / np.linalg.norm(p))]
    else:
        names = X.columns or tuple(f"attribute{j + 1}" for j in range(X.d))
        targets = [(names[j], np.eye(X.d)[j]) for j in range(X.d)]
    for v in specs:
        for name, p in targets:
            sample = X.data @ p
            rec = {"distortion": str(v), "target": name,
                   "absolute": generalized_gini(sample, v, "absolute")}
            if args.mode in ("relative", "both") and sample.mean() > 0:
                rec["relative"] = priced_gini(X, p, v, "relative")
            elif args.mode == "relative":
                raise DomainError(f"relative index needs a positive mean for {name}")
            records.append(rec)
    if args.format == "csv":
        buf = io.StringIO()
        wr = csv.DictWriter(buf, ["distortion", "target", "absolute", "relative"],
                            lineterminator="\n")
        wr.writeheader()
        wr.writerows(records)
        _emit(buf.getvalue(), args.out)
    else:
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_mre(args) -> int:
    from .svg import render

    specs = _distortions(args)
    mats = [read_matrix(resolve_dataset(p)) for p in args.datasets]
    if any(M.d != 2 for M in mats):
        if args.format != "json":
            raise UsageError("polyline and SVG output need d = 2; use --format json "
                             "for a support sample of higher-dimensional data")
        out = [dict(dataset=name, **support_sample(M, v, args.directions).to_dict())
               for name, M in zip(args.datasets, mats) for v in specs]
        _emit(json.dumps(out, indent=2) + "\n", args.out)
        return EXIT_OK
    polys = [(name, k, M, v, mre_2d(M, v)) for k, (name, M) in enumerate(zip(args.datasets, mats))
             for v in specs]
    if args.format == "svg":
        labels = mats[0].columns or ("attribute 1", "attribute 2")
        svg = render([(poly, f"{name} {v}", k) for name, k, _, v, poly in polys],
                     [M.data for M in mats], labels)
        _emit(svg, args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        if len(polys) == 1:
            buf.write(polys[0][4].to_csv())
        else:
            wr.writerow(["dataset", "distortion", "x", "y"])
            for name, _, _, v, poly in polys:
                for x, y in poly.vertices:
                    wr.writerow([name, str(v), repr(float(x)), repr(float(y))])
        _emit(buf.getvalue(), args.out)
    else:
        out = [dict(dataset=name, **poly.to_dict()) for name, _, _, _, poly in polys]
        _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_dominate(args) -> int:
    A = read_matrix(resolve_dataset(args.dataset_a))
    B = read_matrix(resolve_dataset(args.dataset_b))
    if A.d != B.d:
        raise DomainError(f"dimension mismatch: {A.d} vs {B.d} attributes")
    specs = _distortions(args)
    P = _interval(args.p_interval)
    if args.p_directions:
        P = read_matrix(args.p_directions).data
    verdicts = [dominates(A, B, v, P, args.tolerance, directions=args.directions)
                for v in specs]
    holds = all(vd.holds for vd in verdicts)
    report = {"a": args.dataset_a, "b": args.dataset_b, "holds": holds,
              "verdicts": [vd.to_dict() for vd in verdicts]}
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK if holds else EXIT_FAILS


def cmd_sd(args) -> int:
    x = read_sample(resolve_dataset(args.sample_a))
    y = read_sample(resolve_dataset(args.sample_b))
    betas = None
    if args.relation == "dw":
        if not args.betas:
            raise UsageError("relation dw requires --betas")
        betas = [dist.parse_number(b) for b in _split(args.betas)]
    verdict = dual_sd_check(x, y, args.relation, args.tolerance, betas)
    _emit(verdict.to_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_lln(args) -> int:
    try:
        grid = [int(t) for t in _split(args.n_grid)]
    except ValueError:
        raise UsageError(f"--n-grid expects integers, got {args.n_grid!r}") from None
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError("--n-grid must be strictly increasing")
    v = dist.parse_distortion(args.distortion or "dw:0.5")
    window = None
    if args.window:
        window = tuple(dist.parse_number(t) for t in _split(args.window))
        if len(window) != 4:
            raise UsageError("--window expects xmin,ymin,xmax,ymax")
    rows = run_lln(args.generator, grid, args.reps, args.seed, v, window,
                   args.directions or LLN_DIRECTIONS)
    _emit(format_table(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--distortion", help="SPEC[,SPEC...]: identity, step:A, zonoid:A, "
                        "dw:A or a breakpoint CSV path")
    common.add_argument("--family", default="dw", choices=("dw", "zonoid"),
                        help="family used with --alpha-grid (default dw)")
    common.add_argument("--alpha-grid", help="comma-separated alphas in (0,1]; fractions allowed")
    common.add_argument("--tolerance", type=float, default=None)
    common.add_argument("--directions", type=int, default=None,
                        help="direction grid size for d >= 3")
    common.add_argument("--out", help="write to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="ginimre", description="Generalized Gini indices, representative endowments "
        "and uniform Gini dominance.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gini", parents=[common], help="generalized Gini indices")
    p.add_argument("dataset")
    p.add_argument("--p", help="price vector, e.g. 1,0; default: each attribute")
    p.add_argument("--mode", choices=("absolute", "relative", "both"), default="both")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_gini)

    p = sub.add_parser("mre", parents=[common], help="representative endowment polylines")
    p.add_argument("datasets", nargs="+")
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.set_defaults(func=cmd_mre)

    p = sub.add_parser("dominate", parents=[common], help="uniform Gini dominance of A over B")
    p.add_argument("dataset_a")
    p.add_argument("dataset_b")
    p.add_argument("--p-interval", help="restrict price angles to DEG:DEG (d = 2)")
    p.add_argument("--p-directions", help="CSV of price directions (header row)")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("sd", parents=[common], help="univariate dual stochastic dominance")
    p.add_argument("sample_a")
    p.add_argument("sample_b")
    p.add_argument("--relation", choices=("first", "concave", "convex", "dw"), default="first")
    p.add_argument("--betas", help="aversion grid for relation dw, e.g. 2,3,5")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_sd)

    p = sub.add_parser("lln", parents=[common], help="consistency experiment")
    p.add_argument("--generator", choices=sorted(GENERATORS), default="uniform")
    p.add_argument("--n-grid", default="100,1000,10000")
    p.add_argument("--reps", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", help="xmin,ymin,xmax,ymax (default: reference data box + 5%%)")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_lln)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "directions", None) is None and args.command != "lln":
        args.directions = DEFAULT_DIRECTIONS
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DomainError, OSError) as exc:
        print(f"ginimre {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
