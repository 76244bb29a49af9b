"""Command-line front end: ``bisect``, ``family``, ``render`` and ``verify``.

Exit codes: 0 success, 2 bad input, 3 degenerate geometry, 4 oracle
failure, 5 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import GeometryError
from .geom import ParamLine, Vec2, is_zero_vector, y_intercept
from .oracle import brute_force_bisector, check_bisection, line_offset_gap
from .render import render_svg
from .solver import BisectorResult, bisecting_line, parse_slope, sample_family
from .triangle import CASES, M, Triangle, area, edge_bisect

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_ORACLE = 4
EXIT_IO = 5

DEFAULT_TOL = 1e-9
DEFAULT_SAMPLES = 101
# Solver and brute-force lines must agree to this fraction of the diameter.
OFFSET_RTOL = 1e-7

FAMILY_COLUMNS = ("case", "w", "t", "base_x", "base_y", "dir_x", "dir_y")


class InputError(ValueError):
    pass


@dataclass
class Query:
    text: str
    dir: Vec2


@dataclass
class JobSpec:
    triangle: Triangle
    queries: List[Query] = field(default_factory=list)
    fmt: str = "text"
    samples: int = DEFAULT_SAMPLES
    tol: float = DEFAULT_TOL
    out: Optional[str] = None
    dp: Optional[int] = None
    precision: int = 6


def _parse_float(text: str, what: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise InputError(f"cannot parse {what} {text!r} as a number") from None
    if not math.isfinite(v):
        raise InputError(f"{what} {text!r} is not finite")
    return v


def parse_pair(text: str, what: str = "coordinate pair") -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"{what} {text!r} must look like 'x,y'")
    try:
        return Vec2(_parse_float(parts[0], what), _parse_float(parts[1], what))
    except InputError as exc:
        raise InputError(f"{what} {text!r}: {exc}") from None


def parse_triangle(text: str) -> Triangle:
    tokens = text.split()
    if len(tokens) != 3:
        raise InputError(f"triangle {text!r} must be three 'x,y' pairs separated by spaces")
    return Triangle(*(parse_pair(tok, "triangle vertex") for tok in tokens))


def parse_query(kind: str, text: str) -> Query:
    if kind == "dir":
        return Query(text, parse_pair(text, "direction"))
    if text.strip().lower() != "vertical":
        _parse_float(text, "slope")
    return Query(f"slope {text}", parse_slope(text))


class _QueryAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, self.dest, None) or [])
        items.append((self.const, values))
        setattr(namespace, self.dest, items)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--triangle", required=True, help='vertices, e.g. "4,2 1,9 10,1"')
    common.add_argument("--dir", dest="queries", action=_QueryAction, const="dir",
                        metavar="DX,DY", help="query direction vector (repeatable)")
    common.add_argument("--slope", dest="queries", action=_QueryAction, const="slope",
                        metavar="S|vertical", help="query slope (repeatable)")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="tilt samples per case for family sweeps")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="relative area-gap tolerance for the oracle check")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default=None)
    common.add_argument("--dp", type=int, default=None,
                        help="round reported (x, w) pairs to this many decimals")
    common.add_argument("--precision", type=int, default=6,
                        help="significant digits in text output")

    parser = argparse.ArgumentParser(
        prog="areabisect",
        description="Area-bisecting lines of a triangle in a given direction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("bisect", parents=[common], help="bisector for each query")
    sub.add_parser("family", parents=[common], help="dataset of sampled bisectors")
    sub.add_parser("render", parents=[common], help="SVG figure")
    sub.add_parser("verify", parents=[common], help="solver vs brute-force oracle")
    return parser


_VALUE_FLAGS = ("--triangle", "--dir", "--slope", "--samples", "--tol", "--out", "--dp", "--precision")


def _glue_values(argv: Sequence[str]) -> List[str]:
    # "-3,2" would otherwise be taken for an option by argparse.
    out: List[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    tri = parse_triangle(args.triangle)
    queries = [parse_query(kind, text) for kind, text in (args.queries or [])]
    if args.samples < 2:
        raise InputError(f"--samples must be at least 2, got {args.samples}")
    if not args.tol > 0:
        raise InputError(f"--tol must be positive, got {args.tol}")
    default_fmt = "csv" if args.command == "family" else "text"
    return JobSpec(tri, queries, args.fmt or default_fmt, args.samples, args.tol,
                   args.out, args.dp, args.precision)


def _check_directions(spec: JobSpec) -> None:
    for q in spec.queries:
        if is_zero_vector(q.dir):
            raise GeometryError(f"query direction {q.text!r} is zero")


def _round(v: float, dp: Optional[int]) -> float:
    return v if dp is None else round(v, dp)


def _vec(v: Vec2) -> List[float]:
    return [v.x, v.y]


def query_report(spec: JobSpec, q: Query, res: BisectorResult) -> dict:
    audit = check_bisection(spec.triangle, res.line, spec.tol)
    outcomes = []
    for case, o in zip(CASES, res.all_outcomes):
        if o is None:
            outcomes.append({"case": case.value, "defined": False, "x": None, "w": None})
        else:
            outcomes.append({"case": case.value, "defined": True,
                             "x": _round(o.x, spec.dp), "w": _round(o.w, spec.dp)})
    return {
        "query": q.text,
        "direction": _vec(q.dir),
        "outcomes": outcomes,
        "selected": [s.case.value for s in res.selected],
        "case": res.case.value,
        "x": res.x,
        "w": res.w,
        "t": res.t,
        "m": M,
        "line": {"base": _vec(res.line.base), "dir": _vec(res.line.dir)},
        "y_intercept": y_intercept(res.line),
        "degenerate_median": res.degenerate_median,
        "audit": audit.as_dict(),
    }


def _triangle_dict(t: Triangle) -> dict:
    return {"A": _vec(t.A), "B": _vec(t.B), "C": _vec(t.C)}


def cmd_bisect(spec: JobSpec) -> Tuple[dict, int]:
    if not spec.queries:
        raise InputError("bisect needs at least one --dir or --slope")
    _check_directions(spec)
    reports = [query_report(spec, q, bisecting_line(spec.triangle, q.dir)) for q in spec.queries]
    passed = all(r["audit"]["passed"] for r in reports)
    report = {
        "command": "bisect",
        "triangle": _triangle_dict(spec.triangle),
        "area": area(spec.triangle),
        "tolerance": spec.tol,
        "queries": reports,
        "passed": passed,
    }
    return report, EXIT_OK if passed else EXIT_ORACLE


def family_rows(spec: JobSpec) -> List[dict]:
    rows = []
    n = spec.samples
    results = sample_family(spec.triangle, n)
    for k, res in enumerate(results):
        case = CASES[k // n]
        rows.append({
            "case": case.value,
            "w": (k % n) / (n - 1),
            "t": res.t,
            "base_x": res.line.base.x,
            "base_y": res.line.base.y,
            "dir_x": res.line.dir.x,
            "dir_y": res.line.dir.y,
            "line": res.line,
            "result": res,
        })
    return rows


def family_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(FAMILY_COLUMNS)
    for row in rows:
        writer.writerow([row["case"]] + [repr(float(row[c])) for c in FAMILY_COLUMNS[1:]])
    return buf.getvalue()


def cmd_family(spec: JobSpec) -> Tuple[str, int]:
    rows = family_rows(spec)
    failures = [r for r in rows if not check_bisection(spec.triangle, r["line"], spec.tol).passed]
    if failures:
        return "", EXIT_ORACLE
    if spec.fmt == "json":
        data = [{c: r[c] for c in FAMILY_COLUMNS} for r in rows]
        return json.dumps({"command": "family", "triangle": _triangle_dict(spec.triangle),
                           "samples": spec.samples, "rows": data}, indent=2) + "\n", EXIT_OK
    return family_csv(rows), EXIT_OK


def cmd_render(spec: JobSpec) -> Tuple[str, int]:
    _check_directions(spec)
    lines: List[Tuple[str, ParamLine]] = []
    for q in spec.queries:
        res = bisecting_line(spec.triangle, q.dir)
        if not check_bisection(spec.triangle, res.line, spec.tol).passed:
            return "", EXIT_ORACLE
        lines.append((q.text, res.line))
    return render_svg(spec.triangle, lines), EXIT_OK


def _verify_entry(spec: JobSpec, label: str, u: Vec2, res: BisectorResult) -> dict:
    audit = check_bisection(spec.triangle, res.line, spec.tol)
    brute = brute_force_bisector(spec.triangle, u)
    rel_offset = line_offset_gap(res.line, brute) / spec.triangle.diameter()
    ok = audit.passed and rel_offset <= OFFSET_RTOL
    return {"label": label, "case": res.case.value, "w": res.w, "t": res.t,
            "relative_gap": audit.relative_gap, "offset_gap": rel_offset, "passed": ok}


def cmd_verify(spec: JobSpec) -> Tuple[dict, int]:
    _check_directions(spec)
    entries = [
        _verify_entry(spec, q.text, q.dir, bisecting_line(spec.triangle, q.dir))
        for q in spec.queries
    ]
    for row in family_rows(spec):
        res = row["result"]
        entries.append(_verify_entry(spec, f"family {row['case']} w={row['w']:.6g}", res.line.dir, res))
    failed = sum(not e["passed"] for e in entries)
    report = {
        "command": "verify",
        "triangle": _triangle_dict(spec.triangle),
        "tolerance": spec.tol,
        "offset_tolerance": OFFSET_RTOL,
        "samples": spec.samples,
        "checked": len(entries),
        "failed": failed,
        "entries": entries,
        "passed": failed == 0,
    }
    return report, EXIT_OK if failed == 0 else EXIT_ORACLE


def _g(v: Optional[float], digits: int) -> str:
    return "undefined" if v is None else f"{v:.{digits}g}"


def format_bisect_text(report: dict, spec: JobSpec) -> str:
    p = spec.precision
    lines = [f"triangle A={report['triangle']['A']} B={report['triangle']['B']} "
             f"C={report['triangle']['C']}  area={_g(report['area'], p)}"]
    for q in report["queries"]:
        lines.append(f"query {q['query']}  u=({_g(q['direction'][0], p)}, {_g(q['direction'][1], p)})")
        for o in q["outcomes"]:
            if not o["defined"]:
                lines.append(f"  case {o['case']}: undefined")
            elif spec.dp is not None:
                lines.append(f"  case {o['case']}: (x, w) = ({o['x']:.{spec.dp}f}, {o['w']:.{spec.dp}f})")
            else:
                lines.append(f"  case {o['case']}: (x, w) = ({_g(o['x'], p)}, {_g(o['w'], p)})")
        flag = "  [median direction]" if q["degenerate_median"] else ""
        lines.append(f"  selected {'+'.join(q['selected'])}: w={_g(q['w'], p)} t={_g(q['t'], p)} "
                     f"m={_g(q['m'], p)}{flag}")
        base, d = q["line"]["base"], q["line"]["dir"]
        lines.append(f"  line: ({_g(base[0], p)}, {_g(base[1], p)}) + s*({_g(d[0], p)}, {_g(d[1], p)})")
        lines.append(f"  y-intercept: {_g(q['y_intercept'], p) if q['y_intercept'] is not None else 'none'}")
        a = q["audit"]
        lines.append(f"  oracle: left={_g(a['area_left'], p)} right={_g(a['area_right'], p)} "
                     f"gap={a['relative_gap']:.3g} {'PASS' if a['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def format_bisect_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["query", "case", "w", "t", "base_x", "base_y", "dir_x", "dir_y",
                     "y_intercept", "degenerate_median", "relative_gap", "passed"])
    for q in report["queries"]:
        yi = q["y_intercept"]
        writer.writerow([q["query"], q["case"], repr(q["w"]), repr(q["t"]),
                         repr(q["line"]["base"][0]), repr(q["line"]["base"][1]),
                         repr(q["line"]["dir"][0]), repr(q["line"]["dir"][1]),
                         "" if yi is None else repr(yi), int(q["degenerate_median"]),
                         repr(q["audit"]["relative_gap"]), int(q["audit"]["passed"])])
    return buf.getvalue()


def format_verify_text(report: dict) -> str:
    lines = [f"{'label':<28} {'case':<4} {'rel_gap':>10} {'offset':>10}  result"]
    for e in report["entries"]:
        lines.append(f"{e['label']:<28} {e['case']:<4} {e['relative_gap']:>10.3g} "
                     f"{e['offset_gap']:>10.3g}  {'PASS' if e['passed'] else 'FAIL'}")
    lines.append(f"{report['checked']} lines checked, {report['failed']} failed "
                 f"(tol {report['tolerance']:g}, offset tol {report['offset_tolerance']:g})")
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(spec: JobSpec, text: str) -> None:
    if spec.out:
        write_atomic(spec.out, text)
    else:
        sys.stdout.write(text)


def run(spec: JobSpec, command: str) -> int:
    if command == "bisect":
        report, code = cmd_bisect(spec)
        if spec.fmt == "json":
            text = json.dumps(report, indent=2) + "\n"
        elif spec.fmt == "csv":
            text = format_bisect_csv(report)
        else:
            text = format_bisect_text(report, spec)
    elif command == "family":
        text, code = cmd_family(spec)
        if code != EXIT_OK:
            print("error: a sampled bisector failed the oracle check; nothing written",
                  file=sys.stderr)
            return code
    elif command == "render":
        text, code = cmd_render(spec)
        if code != EXIT_OK:
            print("error: a bisector failed the oracle check; nothing written", file=sys.stderr)
            return code
    else:
        report, code = cmd_verify(spec)
        text = json.dumps(report, indent=2) + "\n" if spec.fmt == "json" else format_verify_text(report)
    emit(spec, text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    try:
        spec = spec_from_args(args)
        return run(spec, args.command)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
