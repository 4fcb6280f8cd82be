"""Command line front end.

Subcommands: check, classify, dual, projective, overorders, census.
Exit codes: 0 success, 1 negative verdict for a queried predicate, 2 input
or configuration error, 3 internal consistency failure (the structural
classifier and the brute-force oracle disagree, which would falsify a
theorem implementation and is therefore reported loudly).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    BudgetExceededError,
    MonordersError,
    NotAnOrderError,
    ParseError,
    SearchTooLargeError,
)
from .census import FILTERS, CensusQuery, census, match_family
from .classify import classify
from .duality import dual_level, lattice_violation, projective_witness
from .families import load_families
from .levelio import load_level
from .levels import (
    DEFAULT_SEARCH_CAP,
    normalize_positive,
    order_violation,
)
from .oracle import DEFAULT_BUDGET, bass_oracle, overorder_bound, overorders

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_DISAGREEMENT = 3

BUDGET_ENV = "MONORDERS_BUDGET"


def _default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise MonordersError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return value


def format_level_compact(m) -> str:
    return "[" + "; ".join(" ".join(str(e) for e in row) for row in m.entries) + "]"


def format_level_block(m, indent="  ") -> str:
    width = max(len(str(e)) for row in m.entries for e in row)
    return "\n".join(
        indent + " ".join(str(e).rjust(width) for e in row) for row in m.entries
    )


def _violation_text(witness) -> str:
    if isinstance(witness, tuple):
        i, j, k = witness
        return f"m[{i},{k}] > m[{i},{j}] + m[{j},{k}] at (i,j,k)=({i},{j},{k})"
    return f"diagonal entry m[{witness},{witness}] is nonzero"


def _yesno(flag) -> str:
    return "yes" if flag else "no"


def _add_format(parser):
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monorders",
        description="Decide whether integer level matrices define orders and "
        "classify them (Gorenstein, Eichler, hereditary, Bass).",
        epilog="Exit codes: 0 success; 1 negative verdict; 2 input error; "
        "3 classifier/oracle disagreement.  The environment variable "
        f"{BUDGET_ENV} overrides the default oracle budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test the order condition")
    p_check.add_argument("file", help="level file (text or JSON)")
    _add_format(p_check)
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="full classification report")
    p_classify.add_argument("file")
    _add_format(p_classify)
    p_classify.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the Bass verdict against the brute-force overorder oracle",
    )
    p_classify.add_argument("--budget", type=int, default=None, help="oracle search budget")
    p_classify.add_argument(
        "--cap", type=int, default=DEFAULT_SEARCH_CAP, help="n! search cap (default 8)"
    )
    p_classify.set_defaults(func=cmd_classify)

    p_dual = sub.add_parser("dual", help="dual module level (raw and normalized)")
    p_dual.add_argument("file")
    _add_format(p_dual)
    p_dual.set_defaults(func=cmd_dual)

    p_proj = sub.add_parser(
        "projective", help="test a column lattice type for projectivity"
    )
    p_proj.add_argument("file")
    p_proj.add_argument(
        "--type",
        required=True,
        dest="type_vector",
        help="comma- or space-separated integer exponents, e.g. '0,1,2,2'",
    )
    _add_format(p_proj)
    p_proj.set_defaults(func=cmd_projective)

    p_over = sub.add_parser("overorders", help="enumerate all orders containing the input")
    p_over.add_argument("file")
    _add_format(p_over)
    p_over.add_argument("--budget", type=int, default=None, help="search budget")
    p_over.add_argument("--dump", action="store_true", help="list every member")
    p_over.set_defaults(func=cmd_overorders)

    p_census = sub.add_parser("census", help="enumerate conjugacy classes of orders")
    p_census.add_argument("n", type=int, help="matrix size")
    p_census.add_argument("--bound", type=int, default=1, help="entry bound (default 1)")
    p_census.add_argument(
        "--filter",
        action="append",
        choices=FILTERS,
        default=None,
        help="keep only classes with this property (repeatable)",
    )
    _add_format(p_census)
    p_census.add_argument("--dump", action="store_true", help="list every class")
    p_census.add_argument(
        "--families",
        action="store_true",
        help="match Gorenstein classes against the 4x4 family table (n=4 only)",
    )
    p_census.add_argument("--budget", type=int, default=None, help="raw-space budget")
    p_census.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    p_census.set_defaults(func=cmd_census)

    return parser


def cmd_check(args) -> int:
    level = load_level(args.file)
    witness = order_violation(level)
    if args.format == "json":
        payload = {
            "is_order": witness is None,
            "violation": list(witness) if isinstance(witness, tuple) else witness,
        }
        print(json.dumps(payload))
    elif witness is None:
        print("order: yes")
    else:
        print("order: no")
        print("violation: " + _violation_text(witness))
    return EXIT_OK if witness is None else EXIT_NEGATIVE


def _oracle_section(level, report, budget):
    verdict, witness = bass_oracle(level, budget)
    return {
        "is_bass": verdict,
        "agrees": verdict == report.is_bass,
        "witness": None if witness is None else witness.to_lists(),
    }


def cmd_classify(args) -> int:
    level = load_level(args.file)
    budget = args.budget if args.budget is not None else _default_budget()
    report = classify(level, args.cap)
    oracle = None
    if args.oracle and report.is_order:
        oracle = _oracle_section(level, report, budget)

    if args.format == "json":
        payload = report.to_dict()
        if oracle is not None:
            payload["oracle"] = oracle
        print(json.dumps(payload))
    else:
        _print_report_text(level, report, oracle)

    if oracle is not None and not oracle["agrees"]:
        print(
            "error: classifier and brute-force oracle disagree on the Bass verdict",
            file=sys.stderr,
        )
        return EXIT_DISAGREEMENT
    return EXIT_OK if report.is_order else EXIT_NEGATIVE


def _print_report_text(level, report, oracle):
    print("level:")
    print(format_level_block(level))
    print(f"order: {_yesno(report.is_order)}")
    if not report.is_order:
        print("violation: " + _violation_text(report.order_violation))
        return
    print("canonical:")
    print(format_level_block(report.canonical))
    print(f"gorenstein: {_yesno(report.is_gorenstein)}")
    if report.is_gorenstein:
        parts = [
            f"row {i} -> column {j}, c={c}"
            for i, (c, j) in enumerate(report.gorenstein_witnesses, start=1)
        ]
        print("  witnesses: " + "; ".join(parts))
    else:
        print(f"  failing row: {report.gorenstein_failing_row}")
    if report.eichler is None:
        print("eichler: no")
    else:
        shape = report.eichler
        inv = ",".join(str(k) for k in shape.invariant)
        suffix = "" if shape.a is None else f", a={shape.a}"
        print(f"eichler: period {shape.period}, invariant ({inv}){suffix}")
    print(f"hereditary: {_yesno(report.is_hereditary)}")
    print(f"bass: {_yesno(report.is_bass)} ({report.bass_reason})")
    if oracle is not None:
        print(f"oracle bass: {_yesno(oracle['is_bass'])} "
              f"({'agrees' if oracle['agrees'] else 'DISAGREES'})")


def cmd_dual(args) -> int:
    level = load_level(args.file)
    _require_order_input(level)
    dual = dual_level(level)
    if args.format == "json":
        payload = {"raw": dual.raw.to_lists(), "normalized": dual.normalized.to_lists()}
        print(json.dumps(payload))
    else:
        print("raw dual:")
        print(format_level_block(dual.raw))
        print("normalized dual:")
        print(format_level_block(dual.normalized))
    return EXIT_OK


def _parse_type_vector(raw, n):
    tokens = [t for t in raw.replace(",", " ").split() if t]
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise MonordersError(f"type vector must be integers, got {raw!r}")
    if len(values) != n:
        raise MonordersError(f"type vector has length {len(values)}, expected {n}")
    return values


def cmd_projective(args) -> int:
    level = load_level(args.file)
    _require_order_input(level)
    lattice_type = _parse_type_vector(args.type_vector, level.n)
    form = normalize_positive(level)
    normalized = form.level
    adjusted = tuple(
        lattice_type[i] + form.applied.shifts[i] for i in range(level.n)
    )
    violation = lattice_violation(normalized, adjusted)
    if violation is not None:
        if args.format == "json":
            print(json.dumps({
                "is_lattice": False,
                "is_projective": False,
                "lattice_violation": list(violation),
            }))
        else:
            i, j = violation
            print("lattice: no")
            print(f"violation: m[{i},{j}] + l[{j}] < l[{i}]")
        return EXIT_NEGATIVE
    witness = projective_witness(normalized, adjusted)
    if args.format == "json":
        payload = {
            "is_lattice": True,
            "is_projective": witness is not None,
            "witness": None if witness is None else list(witness),
            "normalized_level": normalized.to_lists(),
            "normalized_type": list(adjusted),
        }
        print(json.dumps(payload))
    else:
        print("lattice: yes")
        if witness is None:
            print("projective: no")
        else:
            j, c = witness
            print(f"projective: yes (column {j}, shift c={c})")
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_overorders(args) -> int:
    level = load_level(args.file)
    _require_order_input(level)
    budget = args.budget if args.budget is not None else _default_budget()
    result = overorders(level, budget)
    if args.format == "json":
        payload = {"count": len(result), "bound": overorder_bound(level)}
        if args.dump:
            payload["members"] = [member.to_lists() for member in result]
        print(json.dumps(payload))
    else:
        print(f"overorders: {len(result)} (search bound {overorder_bound(level)})")
        if args.dump:
            for member in result:
                print("  " + format_level_compact(member))
    return EXIT_OK


def cmd_census(args) -> int:
    filters = frozenset(args.filter or ())
    if args.families and args.n != 4:
        raise MonordersError("--families requires n=4")
    budget = args.budget if args.budget is not None else _default_budget()
    query = CensusQuery(args.n, args.bound, filters)
    result = census(query, budget, args.cap)

    if args.format == "json":
        for cls in result.classes:
            line = {
                "canonical": cls.canonical.to_lists(),
                "count": cls.count,
                "report": cls.report.to_dict(),
            }
            if args.families:
                line["family"] = _family_match(cls)
            print(json.dumps(line))
        print(json.dumps({"summary": result.totals}))
        return EXIT_OK

    print(f"census: n={args.n} bound={args.bound}"
          + (f" filters={','.join(sorted(filters))}" if filters else ""))
    print(f"raw orders enumerated: {result.totals['raw_orders']}")
    print(f"conjugacy classes: {result.totals['classes']}")
    for name in FILTERS:
        print(f"  {name}: {result.totals[name]}")
    if filters:
        print(f"classes selected: {len(result.classes)}")
    if args.dump:
        for cls in result.classes:
            report = cls.report
            marks = []
            if report.is_gorenstein:
                marks.append("gorenstein")
            if report.eichler is not None:
                marks.append("eichler")
            if report.is_hereditary:
                marks.append("hereditary")
            if report.is_bass:
                marks.append("bass")
            print(
                f"  {format_level_compact(cls.canonical)} count={cls.count} "
                + (" ".join(marks) if marks else "-")
            )
    if args.families:
        print("family matches:")
        for cls in result.classes:
            if not cls.report.is_gorenstein:
                continue
            match = _family_match(cls)
            if match is None:
                print(f"  {format_level_compact(cls.canonical)} -> UNMATCHED")
            else:
                params = ", ".join(f"{k}={v}" for k, v in sorted(match["params"].items()))
                print(
                    f"  {format_level_compact(cls.canonical)} -> family {match['index']}"
                    + (f" ({params})" if params else "")
                )
    return EXIT_OK


def _family_match(cls):
    for family in load_families():
        params = match_family(cls.canonical, family)
        if params is not None:
            return {"index": family.index, "params": params}
    return None


def _require_order_input(level):
    witness = order_violation(level)
    if witness is not None:
        raise NotAnOrderError(
            f"input level is not an order ({_violation_text(witness)})", witness
        )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceededError, SearchTooLargeError, NotAnOrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MonordersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
