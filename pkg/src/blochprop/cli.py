"""Command-line front end.

Subcommands: simulate, extrema, period, cases, average.  Exit codes: 0 on
success, 1 for invalid input or degenerate math, 2 for I/O failures.

Angle-valued flags accept plain decimals plus the exact forms pi, e,
2pi/5, pi/100 and the like, so periodic parameters survive the command
line without decimal truncation ("2e5" stays scientific notation because
plain-float parsing is tried first).
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    CASE_STUDIES,
    ExtremumResult,
    PROBE_ERR,
    estimate_period_numeric,
    find_extremum,
    run_case_study,
    time_averaged_error,
)
from .bloch import EulerAngles
from .propagation import (
    DegenerateRotationError,
    ErrorSeries,
    period,
    simulate,
)
from .rotations import euler_matrix
from .svgplot import render_series_svg

SCHEMA_VERSION = 1
# human-readable reports print values below this as "~0"; files keep full precision
TINY_PRINT = 1e-6

_ANGLE_RE = re.compile(r"^([+-]?)(\d+(?:\.\d+)?)?(pi|e)(?:/(\d+(?:\.\d+)?))?$")


def parse_angle(text: str) -> float:
    """One angle literal: a float, or [sign][coeff](pi|e)[/divisor]."""
    s = text.strip().lower()
    try:
        return float(s)
    except ValueError:
        pass
    m = _ANGLE_RE.match(s)
    if m is None:
        raise ValueError(f"cannot parse angle {text!r}")
    sign = -1.0 if m.group(1) == "-" else 1.0
    coeff = float(m.group(2)) if m.group(2) else 1.0
    base = math.pi if m.group(3) == "pi" else math.e
    divisor = float(m.group(4)) if m.group(4) else 1.0
    if divisor == 0.0:
        raise ValueError(f"zero divisor in angle {text!r}")
    return sign * coeff * base / divisor


def parse_triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values, got {text!r}")
    a, b, c = (parse_angle(p) for p in parts)
    return (a, b, c)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _human(x: float) -> str:
    return "~0" if abs(x) < TINY_PRINT else f"{x:.12g}"


def series_to_csv(series: ErrorSeries) -> str:
    lines = ["t,delta_az,delta_el"]
    for t, a, e in zip(series.t, series.delta_az, series.delta_el):
        lines.append(f"{_fmt(t)},{_fmt(a)},{_fmt(e)}")
    return "\n".join(lines) + "\n"


def series_to_json(series: ErrorSeries) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "t": [float(v) for v in series.t],
        "delta_az": [float(v) for v in series.delta_az],
        "delta_el": [float(v) for v in series.delta_el],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="")


def _emit(text: str, output: str | None) -> int:
    if output is None:
        sys.stdout.write(text)
        return 0
    try:
        _write_text(output, text)
    except OSError as exc:
        print(f"error: cannot write {output}: {exc}", file=sys.stderr)
        return 2
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract wants 1 for bad input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _angle_arg(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _triple_arg(text: str) -> tuple[float, float, float]:
    try:
        return parse_triple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blochprop", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="iterate both vectors and dump the discrepancy series")
    p_sim.add_argument("--vec", type=_triple_arg, default=(1.0, 0.0, 0.0), help="clean unit vector")
    p_sim.add_argument("--err", type=_triple_arg, default=(0.0, 0.2, 0.0), help="error angles applied to --vec")
    p_sim.add_argument("--step", type=_triple_arg, required=True, help="per-iteration rotation angles")
    p_sim.add_argument("--steps", type=int, required=True, help="number of iterations")
    p_sim.add_argument("--pipeline", choices=("euler", "su2", "closed"), default="euler")
    p_sim.add_argument("--output", default=None, help="output file (stdout when omitted)")
    p_sim.add_argument("--format", choices=("csv", "svg", "json"), default="csv")

    p_ext = sub.add_parser("extrema", help="multi-start search for the four discrepancy extrema")
    p_ext.add_argument("--vec", type=_triple_arg, default=(1.0, 0.0, 0.0), help="base unit vector")
    p_ext.add_argument("--angles", type=_triple_arg, default=(1.0, 1.0, 1.0), help="rotation rates")
    p_ext.add_argument("--seed", type=int, default=0)
    p_ext.add_argument("--starts", type=int, default=1000)
    p_ext.add_argument("--output", default=None, help="report file (summary always on stdout)")
    p_ext.add_argument("--format", choices=("csv", "json"), default="json")

    p_per = sub.add_parser("period", help="analytic and numerically estimated period")
    p_per.add_argument("--angles", type=_triple_arg, required=True, help="rotation rates")
    p_per.add_argument("--err", type=_triple_arg, default=PROBE_ERR, help="probe error angles")
    p_per.add_argument("--vec", type=_triple_arg, default=(1.0, 0.0, 0.0))

    p_cas = sub.add_parser("cases", help="run all built-in case studies")
    p_cas.add_argument("--seed", type=int, default=0)
    p_cas.add_argument("--starts", type=int, default=1000)
    p_cas.add_argument("--output", default="case_studies", help="output directory")
    p_cas.add_argument("--format", choices=("csv", "json"), default="json", help="summary format")

    p_avg = sub.add_parser("average", help="time-averaged discrepancies over one period")
    p_avg.add_argument("--err", type=_triple_arg, default=PROBE_ERR)
    p_avg.add_argument("--angles", type=_triple_arg, default=(1.0, 1.0, 1.0))
    p_avg.add_argument("--vec", type=_triple_arg, default=(1.0, 0.0, 0.0))

    return parser


def cmd_simulate(args) -> int:
    v = np.asarray(args.vec, dtype=float)
    v_err = v @ euler_matrix(EulerAngles(*args.err))
    try:
        series = simulate(v, v_err, EulerAngles(*args.step), args.steps, pipeline=args.pipeline)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "csv":
        text = series_to_csv(series)
    elif args.format == "json":
        text = series_to_json(series)
    else:
        text = render_series_svg(series, title="discrepancies per iteration")
    return _emit(text, args.output)


def _extremum_doc(res: ExtremumResult) -> dict:
    return {
        "kind": res.kind,
        "value": res.value,
        "at": {"eps_x": res.at[0], "eps_y": res.at[1], "eps_z": res.at[2], "t": res.at[3]},
    }


def extrema_report_json(results, base, angles, seed: int, starts: int) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "base_vector": list(base),
        "angles": list(angles),
        "seed": seed,
        "num_starts": starts,
        "extrema": [_extremum_doc(r) for r in results],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def extrema_report_csv(results) -> str:
    lines = ["kind,value,eps_x,eps_y,eps_z,t"]
    for r in results:
        lines.append(
            f"{r.kind},{_fmt(r.value)},{_fmt(r.at[0])},{_fmt(r.at[1])},{_fmt(r.at[2])},{_fmt(r.at[3])}"
        )
    return "\n".join(lines) + "\n"


def cmd_extrema(args) -> int:
    try:
        results = [
            find_extremum(target, mode, args.vec, args.angles, num_starts=args.starts, seed=args.seed)
            for mode in ("max", "min")
            for target in ("az", "el")
        ]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for r in results:
        print(f"{r.kind}: {_human(r.value)}")
    if args.output is None:
        return 0
    text = (
        extrema_report_json(results, args.vec, args.angles, args.seed, args.starts)
        if args.format == "json"
        else extrema_report_csv(results)
    )
    rc = _emit(text, args.output)
    if rc == 0:
        print(f"report written to {args.output}")
    return rc


def cmd_period(args) -> int:
    try:
        analytic = period(EulerAngles(*args.angles))
    except DegenerateRotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    est = estimate_period_numeric("el", args.err, args.angles, base=args.vec)
    suffix = " (degenerate: constant signal, analytic value returned)" if est.degenerate else ""
    print(f"analytic period:  {_fmt(analytic)}")
    print(f"numeric estimate: {_fmt(float(est))}{suffix}")
    print(f"difference:       {_fmt(abs(analytic - float(est)))}")
    return 0


def _slug(label: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", label.lower()).strip("_")


def cmd_cases(args) -> int:
    outdir = Path(args.output)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {outdir}: {exc}", file=sys.stderr)
        return 2
    summary = []
    for spec in CASE_STUDIES:
        report = run_case_study(spec, num_starts=args.starts, seed=args.seed)
        row = {
            "label": spec.label,
            "angles": {"phi": spec.angles.phi, "theta": spec.angles.theta, "psi": spec.angles.psi},
            "base_vector": list(spec.base_vector),
            "analytic_period": report.analytic_period,
            "numeric_period": float(report.numeric_period),
            "degenerate_period": report.numeric_period.degenerate,
            "max_az": report.max_az,
            "max_el": report.max_el,
            "min_az": report.min_az,
            "min_el": report.min_el,
        }
        summary.append(row)
        try:
            _write_text(str(outdir / f"{_slug(spec.label)}.csv"), series_to_csv(report.series))
        except OSError as exc:
            print(f"error: cannot write case series: {exc}", file=sys.stderr)
            return 2
        print(
            f"{spec.label}: period {_fmt(report.analytic_period)} "
            f"(numeric {_fmt(float(report.numeric_period))}), "
            f"max_az {_human(report.max_az)}, max_el {_human(report.max_el)}, "
            f"min_az {_human(report.min_az)}, min_el {_human(report.min_el)}"
        )
    if args.format == "json":
        text = json.dumps(
            {"schema_version": SCHEMA_VERSION, "seed": args.seed, "num_starts": args.starts, "cases": summary},
            sort_keys=True,
            indent=2,
        ) + "\n"
        summary_path = outdir / "summary.json"
    else:
        lines = ["label,phi,theta,psi,analytic_period,numeric_period,max_az,max_el,min_az,min_el"]
        for row in summary:
            a = row["angles"]
            lines.append(
                ",".join(
                    [row["label"]]
                    + [
                        _fmt(x)
                        for x in (
                            a["phi"], a["theta"], a["psi"],
                            row["analytic_period"], row["numeric_period"],
                            row["max_az"], row["max_el"], row["min_az"], row["min_el"],
                        )
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
        summary_path = outdir / "summary.csv"
    try:
        _write_text(str(summary_path), text)
    except OSError as exc:
        print(f"error: cannot write summary: {exc}", file=sys.stderr)
        return 2
    print(f"summary written to {summary_path}")
    return 0


def cmd_average(args) -> int:
    try:
        avg_az = time_averaged_error("az", args.err, args.angles, base=args.vec)
        avg_el = time_averaged_error("el", args.err, args.angles, base=args.vec)
    except DegenerateRotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"average azimuthal discrepancy: {_fmt(avg_az)}")
    print(f"average elevation discrepancy: {_fmt(avg_el)}")
    return 0


_COMMANDS = {
    "simulate": cmd_simulate,
    "extrema": cmd_extrema,
    "period": cmd_period,
    "cases": cmd_cases,
    "average": cmd_average,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
