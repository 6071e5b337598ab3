"""Command-line front end.

Exit codes: 0 when every assertion holds, 1 when a theorem or lemma check
fails (or the input graph is disconnected), 2 on usage or input errors.
Every command first builds a JSON-shaped report; tables and CSV are
renderings of that report.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any

from .enumeration import ENUM_MAX_N, ENUM_MIN_N
from .errors import DisconnectedGraphError, EmptyClassError, GraphError, HypothesisError
from .families import generate, parse_family
from .io import encode_graph6, read_graph
from .spectral import DEFAULT_TOL, harary_of, spectral_radius
from .verify import LEMMAS, MARGIN_TOL, Family, class_specs, extremal_search, run_lemma

SCHEMA = 1


class UsageError(Exception):
    pass


def fmt_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.15g}"


def _jsonable(value: Any) -> Any:
    if isinstance(value, float):
        return fmt_real(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# report builders


def rho_report(path: str, tol: float) -> dict[str, Any]:
    g = read_graph(path)
    result = spectral_radius(harary_of(g), tol=tol)
    return {
        "schema": SCHEMA,
        "command": "rho",
        "cases": [
            {
                "params": {"input": str(path), "n": g.n, "m": g.m, "graph": encode_graph6(g) if g.n <= 62 else None},
                "radius": fmt_real(result.radius),
                "vector": [fmt_real(float(x)) for x in result.vector],
                "residual": fmt_real(result.residual),
                "iterations": result.iterations,
            }
        ],
    }


def verify_report(which: str, min_n: int, max_n: int, tol: float, jobs: int) -> dict[str, Any]:
    families = list(Family) if which == "all" else [Family(which)]
    cases = []
    for family in families:
        for n in range(min_n, max_n + 1):
            for spec in class_specs(family, n):
                try:
                    rep = extremal_search(spec, tol=tol, jobs=jobs)
                except EmptyClassError:
                    cases.append({"params": spec.params(), "feasible": False, "class_size": 0})
                    continue
                cases.append(
                    {
                        "params": spec.params(),
                        "feasible": rep.theorem_feasible,
                        "class_size": rep.class_size,
                        "radius": fmt_real(rep.maximizer_radius),
                        "maximizer_g6": [encode_graph6(g) for g in rep.maximizers],
                        "theorem_g6": encode_graph6(rep.theorem_graph),
                        "matches": rep.matches_theorem,
                        "gap": fmt_real(rep.runner_up_gap),
                        "min_margin": fmt_real(min((m for _, m in rep.margins), default=math.inf)),
                        "counterexample_g6": encode_graph6(rep.counterexample) if rep.counterexample else None,
                    }
                )
    return {"schema": SCHEMA, "command": "verify", "which": which, "tol": fmt_real(tol), "cases": cases}


def lemma_report(lemma: str, max_n: int | None, tol: float | None, jobs: int) -> dict[str, Any]:
    report = run_lemma(lemma, max_n, tol, jobs)
    key = report.kind
    return {
        "schema": SCHEMA,
        "command": "lemma",
        "lemma": lemma,
        "tol": fmt_real(report.tol),
        "cases": [
            {"params": c.params, key: fmt_real(c.value), "passed": c.passed, "detail": _jsonable(c.detail)}
            for c in report.cases
        ],
    }


def report_passed(report: dict[str, Any]) -> bool:
    match report["command"]:
        case "verify":
            return all(c.get("matches", True) for c in report["cases"] if c["feasible"])
        case "lemma":
            return all(c["passed"] for c in report["cases"])
    return True


# ---------------------------------------------------------------------------
# rendering


def _flatten(case: dict[str, Any]) -> dict[str, str]:
    row = {}
    for key, value in case.items():
        if key == "params":
            for pk, pv in value.items():
                row[pk] = json.dumps(pv) if isinstance(pv, (list, dict)) else str(pv)
        elif key == "detail":
            continue
        elif isinstance(value, (list, dict)):
            row[key] = " ".join(map(str, value)) if isinstance(value, list) else json.dumps(value)
        else:
            row[key] = "" if value is None else str(value)
    return row


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if report["command"] == "rho" and fmt == "table":
        case = report["cases"][0]
        return (
            f"rho = {float(case['radius']):.12g}\n"
            f"residual = {case['residual']}\n"
            f"iterations = {case['iterations']}\n"
            f"eigenvector = {' '.join(case['vector'])}\n"
        )
    rows = [_flatten(c) for c in report["cases"]]
    columns: list[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(r.get(c, "")) for r in rows]) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    lines.append("  ".join("-" * widths[c] for c in columns))
    lines += ["  ".join(r.get(c, "").ljust(widths[c]) for c in columns) for r in rows]
    status = "PASS" if report_passed(report) else "FAIL"
    return "\n".join(lines) + f"\n{status}: {len(rows)} cases\n"


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="harary", description="Harary spectral radius toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", parents=[common], help="spectral radius of a graph file")
    p.add_argument("input", help="edge-list or graph6 file")

    p = sub.add_parser("gen", parents=[common], help="write a family member as graph6")
    p.add_argument("family", help="e.g. 'SplitJoin(2,[1,1,1,1])' or 'PendantClique(4,[2])'")

    p = sub.add_parser("verify", parents=[common], help="exhaustive extremal checks")
    p.add_argument("which", choices=[f.value for f in Family] + ["all"])
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=7)

    p = sub.add_parser("lemma", parents=[common], help="lemma margin tables over a parameter grid")
    p.add_argument("id", choices=sorted(LEMMAS))
    p.add_argument("--max-n", type=int, default=None, help="grid bound on the total vertex count")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.tol is not None and not args.tol > 0:
            raise UsageError("--tol must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command == "rho":
            report = rho_report(args.input, args.tol or DEFAULT_TOL)
            _emit(render(report, args.format), args.out)
            return 0
        if args.command == "gen":
            line = encode_graph6(generate(parse_family(args.family))) + "\n"
            _emit(line, args.out)
            return 0
        if args.command == "verify":
            if not ENUM_MIN_N <= args.min_n <= args.max_n <= ENUM_MAX_N:
                raise UsageError(f"need {ENUM_MIN_N} <= min-n <= max-n <= {ENUM_MAX_N}")
            report = verify_report(args.which, args.min_n, args.max_n, args.tol or MARGIN_TOL, args.jobs)
        else:
            if args.max_n is not None and args.max_n < 2:
                raise UsageError("--max-n must be at least 2")
            report = lemma_report(args.id, args.max_n, args.tol, args.jobs)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, GraphError, HypothesisError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(render(report, args.format), args.out)
    return 0 if report_passed(report) else 1


if __name__ == "__main__":
    sys.exit(main())
