"""Command line front end.

Exit codes: 0 on success, 1 when a verification fails or a counterexample
is found, 2 on usage or parse errors, 3 when a set operation is applied
outside its domain.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .binary_eval import verify_equation
from .development import develop, develop_by_intersections
from .interpretation import interpret, solve
from .proposition import TruthTable, development_to_dnf, op_table, table_to_development, term_table
from .set_model import PartialityError, SetAssignment, check_collapse, set_eval, set_text, value_set_text
from .term import ParseError, Term, free_vars, parse_term

__all__ = ["main", "build_parser"]


def _split_vars(text: Optional[str]) -> Optional[list]:
    if text is None:
        return None
    return [name.strip() for name in text.split(",") if name.strip()]


def _split_equation(text: str):
    if text.count("=") != 1:
        raise ValueError("equation must contain exactly one '='")
    lhs_text, rhs_text = text.split("=")
    return parse_term(lhs_text), parse_term(rhs_text)


_ASSIGN_RE = re.compile(r"\s*([a-z][a-z0-9_]*)\s*=\s*\{([0-9\s,]*)\}\s*")


def _parse_set_assignment(text: str, universe: int, term: Term) -> SetAssignment:
    values = {}
    if text.strip():
        for chunk in text.split(";"):
            match = _ASSIGN_RE.fullmatch(chunk)
            if match is None:
                raise ValueError(
                    f"bad assignment entry {chunk.strip()!r}, expected name={{0,2}}"
                )
            name, body = match.group(1), match.group(2)
            mask = 0
            for piece in body.split(","):
                piece = piece.strip()
                if not piece:
                    continue
                element = int(piece)
                if not 0 <= element < universe:
                    raise ValueError(
                        f"element {element} outside universe of size {universe}"
                    )
                mask |= 1 << element
            values[name] = mask
    missing = [name for name in free_vars(term) if name not in values]
    if missing:
        raise ValueError(f"assignment missing variables: {', '.join(missing)}")
    return SetAssignment(universe, values)


def _cmd_develop(args) -> int:
    term = parse_term(args.term)
    development = develop(term, _split_vars(args.vars))
    if args.json:
        print(json.dumps(development.to_payload()))
    else:
        print(development.render())
    return 0


def _cmd_intersect(args) -> int:
    term = parse_term(args.term)
    order = _split_vars(args.vars)
    development = develop_by_intersections(term, order)
    if development != develop(term, order):
        print("method of intersections disagrees with direct development",
              file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(development.to_payload()))
    else:
        print(development.render())
    return 0


def _cmd_interpret(args) -> int:
    term = parse_term(args.term)
    reading = interpret(develop(term, _split_vars(args.vars)))
    if args.json:
        print(json.dumps(reading.to_payload()))
    else:
        print(reading.render())
    return 0


def _cmd_verify(args) -> int:
    lhs, rhs = _split_equation(args.equation)
    if args.sets is not None:
        verdict = check_collapse(lhs, rhs, u_max=args.sets)
        if verdict.valid_all_sets:
            print("valid")
            return 0
        universe, assignment = verdict.witness_all_sets
        rendered = " ".join(
            f"{name}={set_text(mask)}" for name, mask in assignment.items()
        )
        print(f"counterexample at u={universe}: {rendered}")
        return 1
    verdict = verify_equation(lhs, rhs, mode=args.mode)
    if verdict.valid:
        print("valid")
        return 0
    point = " ".join(f"{k}={v}" for k, v in verdict.counterexample.items())
    print(
        f"counterexample at {point}: "
        f"lhs = {verdict.lhs_value.render()}, rhs = {verdict.rhs_value.render()}"
    )
    return 1


def _cmd_solve(args) -> int:
    lhs, rhs = _split_equation(args.equation)
    reading = solve(lhs, rhs, args.target)
    if args.json:
        print(json.dumps(reading.to_payload()))
    else:
        print(reading.render())
    return 0


def _cmd_seteval(args) -> int:
    term = parse_term(args.term)
    assignment = _parse_set_assignment(args.assign, args.universe, term)
    values = set_eval(term, assignment, strict=args.strict)
    print(value_set_text(values))
    return 0


def _cmd_table(args) -> int:
    if args.what in ("*", "+", "-", "/"):
        print(op_table(args.what).render())
        return 0
    term = parse_term(args.what)
    order = _split_vars(args.vars) or free_vars(term)
    print(term_table(term, order))
    return 0


def _cmd_dnf(args) -> int:
    order = _split_vars(args.vars)
    if not order:
        raise ValueError("--vars must name at least one variable")
    table = TruthTable.from_text(args.table, order)
    formula = development_to_dnf(table_to_development(table))
    print(formula.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolecalc",
        description="Boole's class calculus: developments, readings, set semantics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("develop", help="expand a term over its constituents")
    p.add_argument("term")
    p.add_argument("--vars", help="comma-separated variable order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_develop)

    p = sub.add_parser(
        "intersect",
        help="expand by the method of intersections and cross-check",
    )
    p.add_argument("term")
    p.add_argument("--vars")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("interpret", help="logical reading of a term's development")
    p.add_argument("term")
    p.add_argument("--vars")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_interpret)

    p = sub.add_parser("verify", help="check an equation lhs=rhs")
    p.add_argument("equation")
    p.add_argument("--mode", choices=("free", "star"), default="free")
    p.add_argument(
        "--sets", type=int, metavar="U",
        help="check over set assignments for universes 1..U (division-free only)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="solve an equation for a variable")
    p.add_argument("equation")
    p.add_argument("--for", dest="target", required=True, metavar="VAR")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("seteval", help="evaluate over subsets of a finite universe")
    p.add_argument("term")
    p.add_argument("--universe", type=int, required=True, metavar="N")
    p.add_argument(
        "--assign", default="", metavar="A",
        help="semicolon-separated entries like x={0,2};y={}",
    )
    p.add_argument("--strict", action="store_true",
                   help="fail on any undefined operand combination")
    p.set_defaults(func=_cmd_seteval)

    p = sub.add_parser("table", help="operation table (* + - /) or term value table")
    p.add_argument("what", metavar="op-or-term")
    p.add_argument("--vars")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("dnf", help="full DNF of a truth table")
    p.add_argument("--table", required=True, metavar="BITS",
                   help="bitstring, all-ones row first")
    p.add_argument("--vars", required=True)
    p.set_defaults(func=_cmd_dnf)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PartialityError as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
