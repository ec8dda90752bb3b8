"""Command-line entry point: ``linarr <subcommand> ...``.

Arrangement files are JSON::

    {"lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "-1/2", "0"]]}

Coefficients are decimal-integer or ``"p/q"`` strings (bare JSON integers are
accepted too; floats are not).  Reports go to stdout as JSON unless
``--format text`` or ``--out PATH`` is given.

Exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 internal
consistency violation (a theorem-backed check failed on a real input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from . import bounds, envelope, syzygy
from .arrangement import (
    Arrangement,
    DuplicateLineError,
    GenerationError,
    MultiplicityProfile,
    ProjectiveLine,
    per_line_profile,
    profile,
    random_arrangement,
    singular_points,
    tau_combinatorial,
)
from .classify import ClassificationReport, ConsistencyError, report_from_analysis
from .exactla import format_rational, to_rational

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CONSISTENCY = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class ArrangementParseError(CliError):
    def __init__(self, message: str):
        super().__init__(message, EXIT_PARSE)


# ---------------------------------------------------------------- input


def parse_arrangement_text(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "lines" not in doc:
        raise ArrangementParseError('top level must be an object with a "lines" list')
    rows = doc["lines"]
    if not isinstance(rows, list) or not rows:
        raise ArrangementParseError('"lines" must be a non-empty list')
    lines = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 3:
            raise ArrangementParseError(f"lines[{i}]: expected three coefficients, got {row!r}")
        coeffs = []
        for j, c in enumerate(row):
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ArrangementParseError(
                    f"lines[{i}][{j}]: coefficient must be an integer or 'p/q' string, got {c!r}"
                )
            try:
                coeffs.append(to_rational(c))
            except (ValueError, ZeroDivisionError) as exc:
                raise ArrangementParseError(f"lines[{i}][{j}]: {exc}") from None
        try:
            lines.append(ProjectiveLine(coeffs))
        except ValueError as exc:
            raise ArrangementParseError(f"lines[{i}]: {exc}") from None
    try:
        return Arrangement(lines)
    except DuplicateLineError as exc:
        raise ArrangementParseError(
            f"duplicate line: lines[{exc.first}] and lines[{exc.second}] are the same projective line"
        ) from None


def load_arrangement(path: str | Path) -> Arrangement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArrangementParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ArrangementParseError(f"{path} is not valid UTF-8") from None
    return parse_arrangement_text(text)


def dump_arrangement(a: Arrangement) -> str:
    return json.dumps({"lines": [[str(c) for c in l.coeffs] for l in a.lines]}) + "\n"


# ---------------------------------------------------------------- serialization


def rat(q) -> str:
    return format_rational(q)


def profile_json(p: MultiplicityProfile) -> dict:
    return {
        "d": p.d,
        "t": {str(r): n for r, n in p.nonzero().items()},
        "pair_count": p.pair_count(),
        "pairs_expected": comb(p.d, 2),
    }


def bound_json(b: bounds.BoundReport) -> dict:
    out = {
        "name": b.name,
        "holds": b.holds,
        "lhs": rat(b.lhs),
        "relation": b.relation,
        "rhs": rat(b.rhs),
        "preconditions_met": b.preconditions_met,
    }
    if b.reason:
        out["reason"] = b.reason
    return out


def syzygy_json(s: syzygy.SyzygyAnalysis) -> dict:
    return {
        "d": s.d,
        "mdr": s.mdr,
        "gen_degrees": list(s.gen_degrees),
        "ar_dims": {str(r): n for r, n in s.ar_dims.items()},
        "milnor_dims": {str(k): n for k, n in s.milnor_dims.items()},
        "tau": s.tau,
        "r_max": s.r_max,
    }


def classification_json(c: ClassificationReport) -> dict:
    return {
        "d": c.d,
        "d1": c.d1,
        "exponents": list(c.gen_degrees),
        "m": c.m,
        "tau": c.tau,
        "tau_max": c.tau_max,
        "type": c.type_t,
        "is_free": c.is_free,
        "is_pog": c.is_pog,
        "h": c.h,
        "free_by_tau": c.free_by_tau,
        "pog_by_tau": c.pog_by_tau,
        "note": c.note,
    }


def feasibility_json(r: envelope.FeasibilityResult) -> dict:
    return {
        "d": r.d,
        "feasible": r.feasible,
        "path": r.path,
        "witness": profile_json(r.witness) if r.witness else None,
        "witness_count": len(r.witnesses),
        "certificate": r.certificate,
    }


def new_report(command: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_summary": None,
        "profile": None,
        "syzygy": None,
        "classification": None,
        "bounds": [],
        "envelope": None,
    }


def render_text(value, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            out.extend(render_text(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [f"{prefix} = [{', '.join(_scalar(v) for v in value)}]"]
        out = []
        for i, v in enumerate(value):
            out.extend(render_text(v, f"{prefix}[{i}]"))
        return out
    return [f"{prefix} = {_scalar(value)}"]


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return rat(v)
    return str(v)


def serialize(report: dict, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(render_text(report)) + "\n"
    return json.dumps(report, indent=2) + "\n"


# ---------------------------------------------------------------- commands


def _input_summary(a: Arrangement, source: str) -> dict:
    return {"source": source, "d": a.d, "lines": [[str(c) for c in l.coeffs] for l in a.lines]}


def _profile_section(a: Arrangement) -> tuple[MultiplicityProfile, dict]:
    pts = singular_points(a)
    p = profile(a)
    section = profile_json(p)
    section["per_line"] = [
        {str(r): n for r, n in per_line_profile(a, i, pts).items()} for i in range(a.d)
    ]
    section["tau_combinatorial"] = tau_combinatorial(p)
    section["singular_points"] = [
        {"point": list(s.point), "multiplicity": s.multiplicity, "lines": sorted(s.incident)}
        for s in pts
    ]
    return p, section


def theorem_checks(p: MultiplicityProfile, c: ClassificationReport) -> list[bounds.BoundReport]:
    """Necessary conditions a classified arrangement must meet, given its verdict."""
    d = p.d
    out = [bounds.melchior_check(p), bounds.shnurnikov_check(p)]
    if c.is_free and p.max_multiplicity <= 5:
        disc = bounds.discriminant(d, p)
        out.append(bounds.compare("discriminant_nonneg", disc, ">=", 0))
        root = bounds.free_root_d1(d, p)
        out.append(bounds.BoundReport(
            "free_root_d1", root == c.d1, Fraction(-1 if root is None else root), Fraction(c.d1),
            True, "==",
        ))
        out.append(bounds.ineq_n5_check(d, p))
        out.append(bounds.ineq_geq_check(d, p))
        if d >= 8:
            out.extend(bounds.inequality_chain_trace(d, p))
    if c.is_pog and c.h is not None and p.max_multiplicity <= 4:
        out.append(bounds.pog_inequality_eee(d, c.h, p))
    return out


def failed_checks(reports: list[bounds.BoundReport]) -> list[str]:
    return [b.name for b in reports if b.preconditions_met and not b.holds]


def cmd_analyze(path: str) -> tuple[dict, int]:
    a = load_arrangement(path)
    report = new_report("analyze")
    report["input_summary"] = _input_summary(a, str(path))
    if a.d < 2:
        raise CliError("analyze needs at least two lines", EXIT_PRECONDITION)
    p, report["profile"] = _profile_section(a)
    checks = [bounds.melchior_check(p), bounds.shnurnikov_check(p)]
    report["bounds"] = [bound_json(b) for b in checks]
    return report, EXIT_CONSISTENCY if failed_checks(checks) else EXIT_OK


def _run_syzygy(a: Arrangement, r_max: int | None) -> syzygy.SyzygyAnalysis:
    try:
        return syzygy.analyze(a, r_max)
    except syzygy.SyzygyTruncationError as exc:
        raise CliError(f"{exc} (hint: pass a larger --r-max)", EXIT_PRECONDITION) from None
    except syzygy.NonStabilizedError as exc:
        raise CliError(str(exc), EXIT_CONSISTENCY) from None


def cmd_classify(path: str, r_max: int | None = None) -> tuple[dict, int]:
    a = load_arrangement(path)
    if a.d < 3:
        raise CliError("classify needs d >= 3", EXIT_PRECONDITION)
    if r_max is not None and r_max < a.d - 1:
        raise CliError(f"--r-max must be at least d - 1 = {a.d - 1}", EXIT_PRECONDITION)
    report = new_report("classify")
    report["input_summary"] = _input_summary(a, str(path))
    p, report["profile"] = _profile_section(a)
    an = _run_syzygy(a, r_max)
    report["syzygy"] = syzygy_json(an)
    try:
        c = report_from_analysis(an)
    except ConsistencyError as exc:
        raise CliError(f"internal consistency violation: {exc}", EXIT_CONSISTENCY) from None
    report["classification"] = classification_json(c)
    checks = theorem_checks(p, c)
    report["bounds"] = [bound_json(b) for b in checks]
    bad = failed_checks(checks)
    if an.tau != tau_combinatorial(p):
        bad.append("tau_oracle")
    return report, EXIT_CONSISTENCY if bad else EXIT_OK


def cmd_bounds(d: int, k: int = 5) -> tuple[dict, int]:
    if d < 2:
        raise CliError("--d must be at least 2", EXIT_PRECONDITION)
    if k < 4:
        raise CliError("--k must be at least 4", EXIT_PRECONDITION)
    report = new_report("bounds")
    report["input_summary"] = {"d": d, "k": k}
    values: dict = {"d": d, "k": k}
    if d >= k + 3:
        values["tk_bound_case1"] = rat(bounds.tk_bound_case1(d, k))
    else:
        values["tk_bound_case1"] = None
        values["tk_bound_case1_note"] = f"inapplicable: needs d >= k + 3 = {k + 3}"
    values["tk_bound_case2"] = rat(bounds.tk_bound_case2(d, k))
    values["tk_bound_unified"] = rat(bounds.tk_bound_unified(d, k))
    values["case1_denominator"] = k * k + 3 * k - 15
    if d >= 8:
        values["t5_lower_bound"] = rat(bounds.t5_lower_bound(d))
    report["values"] = values
    return report, EXIT_OK


def cmd_envelope(d_min: int, d_max: int, mode: str, limit: int = envelope.WITNESS_LIMIT) -> tuple[dict, int]:
    if mode not in ("free", "pog"):
        raise CliError(f"--mode must be free or pog, got {mode!r}", EXIT_PRECONDITION)
    if d_min > d_max:
        raise CliError(f"invalid range: --d-min {d_min} > --d-max {d_max}", EXIT_PRECONDITION)
    lowest = 8 if mode == "free" else 3
    if d_min < lowest:
        raise CliError(f"{mode} envelope needs d >= {lowest}", EXIT_PRECONDITION)
    report = new_report("envelope")
    report["input_summary"] = {"d_min": d_min, "d_max": d_max, "mode": mode, "limit": limit}
    try:
        results, largest = envelope.envelope_range(d_min, d_max, mode, limit=limit)
    except envelope.EnvelopeConsistencyError as exc:
        raise CliError(str(exc), EXIT_CONSISTENCY) from None
    report["envelope"] = {
        "mode": mode,
        "results": [feasibility_json(r) for r in results],
        "largest_feasible": largest,
        "caveat": envelope.CAVEAT,
    }
    return report, EXIT_OK


def cmd_reproduce() -> tuple[dict, int]:
    report = new_report("reproduce")
    main = bounds.theorem_main_bound()
    pog = bounds.theorem_c_bound()
    main_trace = []
    for d in (main, main + 1):
        lhs, rhs = bounds.main_bound_sides(d)
        main_trace.append({"d": d, "lhs": lhs, "relation": "<=" if lhs <= rhs else ">",
                           "rhs": rhs, "feasible": lhs <= rhs,
                           "expression": "25(d-3)(d-19) vs 24(d(d-1)-16)"})
    pog_trace = []
    for d in (pog, pog + 1):
        lhs, rhs = bounds.theorem_c_sides(d)
        pog_trace.append({"d": d, "lhs": lhs, "relation": "<=" if lhs <= rhs else ">",
                          "rhs": rhs, "feasible": bounds.theorem_c_feasible(d),
                          "expression": "(d-11)^2 vs 4(2+7d)"})
    report["values"] = {
        "main_bound": main,
        "pog_bound": pog,
        "main_boundary": main_trace,
        "pog_boundary": pog_trace,
    }
    ok = main_trace[0]["feasible"] and not main_trace[1]["feasible"] \
        and pog_trace[0]["feasible"] and not pog_trace[1]["feasible"]
    return report, EXIT_OK if ok else EXIT_CONSISTENCY


def random_suite_entry(a: Arrangement, r_max: int | None = None) -> dict:
    """Analyze one arrangement and list every invariant it violates (ideally none)."""
    pts = singular_points(a)
    p = profile(a)
    violations = []
    if not p.satisfies_pair_identity():
        violations.append("pair_count")
    for i in range(a.d):
        if sum((r - 1) * n for r, n in per_line_profile(a, i, pts).items()) != a.d - 1:
            violations.append(f"per_line[{i}]")
    entry = {"lines": [[str(c) for c in l.coeffs] for l in a.lines], "profile": profile_json(p)}
    checks = [bounds.melchior_check(p), bounds.shnurnikov_check(p)]
    if a.d >= 3:
        an = syzygy.analyze(a, r_max)
        if an.tau != tau_combinatorial(p):
            violations.append("tau_oracle")
        try:
            c = report_from_analysis(an)
        except ConsistencyError as exc:
            violations.append(f"classification: {exc}")
        else:
            entry["classification"] = {"exponents": list(c.gen_degrees), "type": c.type_t,
                                       "is_free": c.is_free, "is_pog": c.is_pog, "h": c.h,
                                       "tau": c.tau}
            checks = theorem_checks(p, c)
    violations.extend(failed_checks(checks))
    entry["violations"] = violations
    return entry


def cmd_random(d: int, seed: int, count: int, coeff_bound: int = 3, r_max: int | None = None) -> tuple[dict, int]:
    if d < 2:
        raise CliError("--d must be at least 2", EXIT_PRECONDITION)
    if count < 1:
        raise CliError("--count must be positive", EXIT_PRECONDITION)
    report = new_report("random")
    report["input_summary"] = {"d": d, "seed": seed, "count": count, "coeff_bound": coeff_bound}
    entries = []
    for i in range(count):
        try:
            a = random_arrangement(d, f"{seed}:{i}", coeff_bound)
        except GenerationError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        entries.append(random_suite_entry(a, r_max))
    total = sum(len(e["violations"]) for e in entries)
    report["random"] = {
        "arrangements": entries,
        "classified": d >= 3,
        "violation_count": total,
    }
    return report, EXIT_CONSISTENCY if total else EXIT_OK


# ---------------------------------------------------------------- argparse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="linarr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="intersection combinatorics of a file")
    p.add_argument("path")

    p = sub.add_parser("classify", parents=[common], help="syzygies and free / plus-one generated verdict")
    p.add_argument("path")
    p.add_argument("--r-max", type=int, default=None)

    p = sub.add_parser("bounds", parents=[common], help="t_k bounds for given d and k")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=5)

    p = sub.add_parser("envelope", parents=[common], help="profile feasibility over a range of d")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--mode", choices=("free", "pog"), default="free")
    p.add_argument("--limit", type=int, default=envelope.WITNESS_LIMIT)

    sub.add_parser("reproduce", parents=[common], help="recompute the bounds 522 and 47")

    p = sub.add_parser("random", parents=[common], help="invariant checks on random arrangements")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--r-max", type=int, default=None)
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        report, code = cmd_analyze(args.path)
    elif args.command == "classify":
        report, code = cmd_classify(args.path, args.r_max)
    elif args.command == "bounds":
        report, code = cmd_bounds(args.d, args.k)
    elif args.command == "envelope":
        report, code = cmd_envelope(args.d_min, args.d_max, args.mode, args.limit)
    elif args.command == "reproduce":
        report, code = cmd_reproduce()
    else:
        report, code = cmd_random(args.d, args.seed, args.count, args.coeff_bound, args.r_max)
    text = serialize(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        return "", code
    return text, code


def main(argv: list[str] | None = None) -> int:
    try:
        text, code = run(argv)
    except CliError as exc:
        print(f"linarr: error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
