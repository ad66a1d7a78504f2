"""Command-line interface.

Subcommands: ``analyze`` (CSV to JSON report), ``wdbc`` (Wisconsin summary
table), ``reference`` (closed-form values), ``figure2`` / ``figure1``
(plot-ready CSV), ``consistency`` / ``breakdown`` / ``equivariance``
(experiment runners), and ``fetch`` (download the WDBC file).  Tables use
4 significant digits; JSON output keeps full precision.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, baselines, datasets, refdist, report, simulate
from .depth import CENTER_OUT, DEPTH_ASCENDING
from .moments import full_report

_SHELL_ORDER_FLAGS = {"center-out": CENTER_OUT, "depth-ascending": DEPTH_ASCENDING}


def _fmt(x: float) -> str:
    return f"{x:.4g}"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_fmt(x) for x in np.asarray(v).ravel()) + ")"


def _parse_selectors(text: str) -> list:
    return [s.strip() for s in text.split(",") if s.strip()]


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--b-max", type=int, default=3, help="highest shell count (default 3)")
    p.add_argument(
        "--shell-order",
        choices=sorted(_SHELL_ORDER_FLAGS),
        default="center-out",
        help="shell 0 innermost (center-out) or outermost (depth-ascending)",
    )
    p.add_argument(
        "--plain-depth",
        action="store_true",
        help="rank by unstandardized spatial depth instead of the covariance-whitened default",
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--no-baselines", action="store_true", help="skip Mardia/MRSz")


def _analysis_config(args, input_path: str, columns) -> report.AnalysisConfig:
    return report.AnalysisConfig(
        input_path=input_path,
        columns=list(columns),
        b_max=args.b_max,
        shell_order=_SHELL_ORDER_FLAGS[args.shell_order],
        standardize_depth=not args.plain_depth,
        output_path=args.out,
        emit_baselines=not args.no_baselines,
        seed=args.seed,
    )


def _emit_document(doc: dict, out) -> None:
    if out:
        report.write(doc, out)
        print(f"report written to {out}")
    else:
        print(report.dumps(doc))


def cmd_analyze(args) -> int:
    loaded = datasets.load_csv(
        args.input, _parse_selectors(args.cols), has_header=not args.no_header
    )
    if loaded.dropped_rows:
        print(f"warning: dropped {loaded.dropped_rows} malformed rows", file=sys.stderr)
    config = _analysis_config(args, args.input, loaded.columns)
    doc = report.build_document(loaded.matrix, loaded.columns, config)
    _emit_document(doc, args.out)
    return 0


def _print_wdbc_table(rep, base) -> None:
    rows = [
        ("phi1 (location)", _fmt_vec(rep.phi1)),
        ("phi2 (vector)", _fmt_vec(rep.phi2_vec)),
        ("phi2_scale", _fmt(rep.phi2_scale)),
        ("phi3 (skewness)", _fmt_vec(rep.phi[3])),
        ("phi4 (peripheral)", _fmt_vec(rep.phi[4])),
        ("psi3", _fmt_vec(rep.psi[3])),
        ("psi4", _fmt_vec(rep.psi[4])),
        ("|phi3|", _fmt(rep.norms[3])),
        ("|phi4|", _fmt(rep.norms[4])),
        ("mardia skew", _fmt(base.mardia_skew)),
        ("mardia kurt", _fmt(base.mardia_kurt)),
        ("mrsz skew", _fmt_vec(base.mrsz_skew)),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value}")


def cmd_wdbc(args) -> int:
    data = datasets.load_wdbc(args.file)
    for note in data.warnings:
        print(f"warning: {note}", file=sys.stderr)
    features = _parse_selectors(args.features)
    X = data.select(features)
    config = _analysis_config(args, args.file, features)
    rep = full_report(
        X,
        b_max=args.b_max,
        shell_order=config.shell_order,
        standardize_depth=config.standardize_depth,
    )
    base = baselines.baseline_report(X)
    print(f"n = {rep.n}, features = {', '.join(features)}")
    _print_wdbc_table(rep, base)
    if args.out:
        doc = report.build_document(X, features, config)
        report.write(doc, args.out)
        print(f"report written to {args.out}")
    return 0


def cmd_reference(args) -> int:
    if args.family == "normal":
        ref = refdist.normal_reference(args.d)
    else:
        if args.nu is None:
            raise ValueError("student-t reference needs --nu")
        ref = refdist.t_reference(args.d, args.nu)
    if args.json:
        print(json.dumps(report._jsonable(ref.__dict__), indent=2))
        return 0
    print(f"family      {ref.family}")
    print(f"d           {ref.d}")
    if ref.nu is not None:
        print(f"nu          {_fmt(ref.nu)}")
    print(f"phi2_scale  {_fmt(ref.phi2_scale)}")
    print(f"c_med_diag  {_fmt(ref.c_med_diag)}")
    print("phi2_vec    " + _fmt_vec(ref.phi2_vec))
    print("phi3        " + _fmt_vec(ref.phi3))
    print("phi4        " + _fmt_vec(ref.phi4))
    return 0


def _parse_grid(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def cmd_figure2(args) -> int:
    d_list = [int(v) for v in _parse_grid(args.d)]
    nu_grid = _parse_grid(args.nu_grid)
    rows = refdist.figure2_curve(d_list, nu_grid)
    lines = ["d,nu,phi2_med"]
    lines += [f"{d},{nu!r},{scale!r}" for d, nu, scale in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"curve written to {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_figure1(args) -> int:
    res = simulate.run_figure1(args.seed, n=args.n)
    lines = ["x1,x2,shell"]
    for (x1, x2), shell in zip(res.X, res.shell_of):
        lines.append(f"{x1!r},{x2!r},{shell}")
    lines.append("")
    lines.append("arrows")
    lines.append("name,from_x1,from_x2,to_x1,to_x2")
    for name, src, dst in res.arrows():
        lines.append(f"{name},{src[0]!r},{src[1]!r},{dst[0]!r},{dst[1]!r}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"figure data written to {args.out}")
    else:
        print(text, end="")
    print(f"center {_fmt_vec(res.center)}, phi3 {_fmt_vec(res.phi3)}, "
          f"phi4 {_fmt_vec(res.phi4)}, mrsz {_fmt_vec(res.mrsz_skew)}")
    return 0


def _design_from_args(args) -> simulate.Design:
    family = refdist.NORMAL if args.family == "normal" else refdist.STUDENT_T
    return simulate.Design(family=family, d=args.d, nu=args.nu)


def _emit_experiment(result, out_prefix: str | None) -> None:
    if out_prefix:
        result.to_csv(out_prefix + ".csv")
        with open(out_prefix + ".json", "w", encoding="utf-8") as fh:
            json.dump({"design": result.design, "summary": result.summary}, fh, indent=2)
        print(f"rows written to {out_prefix}.csv, summary to {out_prefix}.json")
    print(json.dumps(result.summary, indent=2))


def cmd_consistency(args) -> int:
    design = _design_from_args(args)
    n_grid = [int(v) for v in _parse_grid(args.n_grid)]
    result = simulate.run_consistency(design, n_grid, args.replicates, args.seed)
    _emit_experiment(result, args.out)
    return 0


def cmd_breakdown(args) -> int:
    design = _design_from_args(args)
    eps_grid = _parse_grid(args.eps)
    result = simulate.run_breakdown(
        design, args.n, eps_grid, args.magnitude, args.replicates, args.seed
    )
    _emit_experiment(result, args.out)
    return 0


def cmd_equivariance(args) -> int:
    if args.input:
        loaded = datasets.load_csv(
            args.input, _parse_selectors(args.cols), has_header=not args.no_header
        )
        X = loaded.matrix
    else:
        X = simulate.sample_mixture(args.n, simulate.example_mixture(), args.seed)
    result = simulate.run_equivariance_check(X, args.trials, args.seed)
    _emit_experiment(result, args.out)
    return 0


def cmd_fetch(args) -> int:
    path = datasets.fetch_wdbc(args.out, url=args.url)
    print(f"downloaded WDBC data to {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vmedad",
        description="Robust multivariate shape analysis with median-based vector moments.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze numeric CSV columns, emit a JSON report")
    p.add_argument("input")
    p.add_argument("--cols", required=True, help="column names or zero-based indices")
    p.add_argument("--no-header", action="store_true", help="file has no header row")
    _add_report_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("wdbc", help="summary table for the Wisconsin diagnostic data")
    p.add_argument("--file", required=True, help="path to wdbc.data")
    p.add_argument("--features", default="radius_mean,concavity_mean")
    _add_report_flags(p)
    p.set_defaults(func=cmd_wdbc)

    p = sub.add_parser("reference", help="closed-form values for elliptical laws")
    p.add_argument("--family", choices=["normal", "student-t"], required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nu", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reference)

    p = sub.add_parser("figure2", help="radial scale of the elliptical t over a nu grid")
    p.add_argument("--d", default="1,2,3")
    p.add_argument("--nu-grid", default=",".join(str(v) for v in range(1, 51)))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_figure2)

    p = sub.add_parser("figure1", help="asymmetric mixture example with moment arrows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("consistency", help="estimation error along a growing-n grid")
    p.add_argument("--family", choices=["normal", "student-t"], default="normal")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--nu", type=float, default=None)
    p.add_argument("--n-grid", default="500,2000,8000")
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output prefix for .csv/.json")
    p.set_defaults(func=cmd_consistency)

    p = sub.add_parser("breakdown", help="contamination response vs classical statistics")
    p.add_argument("--family", choices=["normal", "student-t"], default="normal")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--nu", type=float, default=None)
    p.add_argument("--n", type=int, default=2000)
    p.add_argument("--eps", default="0.1")
    p.add_argument("--magnitude", type=float, default=1e6)
    p.add_argument("--replicates", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output prefix for .csv/.json")
    p.set_defaults(func=cmd_breakdown)

    p = sub.add_parser("equivariance", help="transformation identities on a dataset")
    p.add_argument("--input", default=None, help="CSV input (default: generated mixture)")
    p.add_argument("--cols", default="", help="columns for --input")
    p.add_argument("--no-header", action="store_true")
    p.add_argument("--n", type=int, default=300)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output prefix for .csv/.json")
    p.set_defaults(func=cmd_equivariance)

    p = sub.add_parser("fetch", help="download the WDBC file from the UCI repository")
    p.add_argument("--out", default="wdbc.data")
    p.add_argument("--url", default=datasets.WDBC_URL)
    p.set_defaults(func=cmd_fetch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
