"""Logical readings of developments, and solving class equations.

A development's coefficients sort its constituents into four buckets:

  * 1        keep the constituent (it is part of the described class),
  * 0        drop it,
  * 0/0      indefinite: an arbitrary, unconstrained part of it may be
             taken; each such constituent gets a fresh symbol v1, v2, ...
  * others   the constituent itself must be empty.  A coefficient that is
             neither 0 nor 1 cannot satisfy the idempotent constraints
             unless the constituent vanishes, so it becomes a side
             condition "constituent = 0".  This covers the unbounded 1/0
             and any stray rational like 2 or -1.

Coefficients outside Boole's own repertoire (for example the two-valued
{0, 2}, which only arises from the set-valued extension arithmetic) still
equate their constituent to zero but are additionally reported in
extension_flagged, so callers can tell a classical reading from one that
leaned on the extension.

solve eliminates a chosen variable from an equation by Boole's general
method: write the equation as E = 0, split E on the target w via
E = w*P + (1-w)*Q at the binary points, and develop Q/(Q - P) over the
remaining variables.  The reading of that development is the solution,
side conditions included.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple

from .binary_eval import ExtValue, ZERO_OVER_ZERO
from .development import (
    Constituent,
    Development,
    DivisionUnsupportedError,
    develop,
    to_multilinear,
)
from .term import Add, Const, Div, Mul, Sub, Term, Var, ZERO, free_vars

__all__ = [
    "CoeffClass",
    "classify",
    "ClassReading",
    "interpret",
    "SolveError",
    "solve",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class CoeffClass(Enum):
    KEEP = "keep"
    DROP = "drop"
    INDEFINITE = "indefinite"
    EQUATE_ZERO = "equate_zero"


def classify(value: ExtValue) -> CoeffClass:
    """Sort one coefficient into its reading bucket.

    Exactly {1} keeps, exactly {0} drops, exactly the two-valued {0,1}
    (no infinite marker) is indefinite, and everything else forces the
    constituent to be empty.
    """
    if value.is_singleton:
        q = value.singleton()
        if q == _F1:
            return CoeffClass.KEEP
        if q == _F0:
            return CoeffClass.DROP
        return CoeffClass.EQUATE_ZERO
    if value == ZERO_OVER_ZERO:
        return CoeffClass.INDEFINITE
    return CoeffClass.EQUATE_ZERO


def _is_classical_equate_zero(value: ExtValue) -> bool:
    # Boole's own non-class coefficients: one rational outside {0,1}, or
    # the bare unbounded marker.  Anything else came from the extension.
    if value.is_singleton:
        return True
    return value.has_infinite and not value.finites


@dataclass(frozen=True)
class ClassReading:
    """The logical content of a development.

    kept and indefinite are stored in descending constituent-index order,
    the order render() prints them in; indefinite pairs each constituent
    with its fresh symbol.  Dropped constituents are implicit.
    """

    order: Tuple[str, ...]
    kept: Tuple[Constituent, ...]
    indefinite: Tuple[Tuple[str, Constituent], ...]
    side_conditions: Tuple[Constituent, ...]
    extension_flagged: Tuple[Constituent, ...] = field(default=())

    def render(self) -> str:
        """Classical prose form, e.g. "x*y + v1*(1-x)*(1-y), with x*(1-y) = 0"."""
        members = []
        for constituent in self.kept:
            members.append((constituent.index, constituent.render()))
        for symbol, constituent in self.indefinite:
            body = constituent.render()
            text = symbol if body == "1" else f"{symbol}*{body}"
            members.append((constituent.index, text))
        members.sort(key=lambda pair: -pair[0])
        out = " + ".join(text for _, text in members) if members else "0"
        if self.side_conditions:
            conditions = ", ".join(
                f"{constituent.render()} = 0" for constituent in self.side_conditions
            )
            out += f", with {conditions}"
        return out

    def to_payload(self) -> dict:
        return {
            "vars": list(self.order),
            "kept": [c.sign_string() for c in self.kept],
            "indefinite": [
                {"symbol": symbol, "signs": c.sign_string()}
                for symbol, c in self.indefinite
            ],
            "equate_zero": [c.sign_string() for c in self.side_conditions],
            "extension_flagged": [c.sign_string() for c in self.extension_flagged],
        }

    @classmethod
    def from_payload(cls, payload: Mapping) -> "ClassReading":
        order = tuple(payload["vars"])

        def constituent(signs: str) -> Constituent:
            return Constituent.from_sign_string(order, signs)

        return cls(
            order,
            tuple(constituent(s) for s in payload.get("kept", ())),
            tuple(
                (entry["symbol"], constituent(entry["signs"]))
                for entry in payload.get("indefinite", ())
            ),
            tuple(constituent(s) for s in payload.get("equate_zero", ())),
            tuple(constituent(s) for s in payload.get("extension_flagged", ())),
        )


def _fresh_symbols(order: Sequence[str]):
    taken = set(order)
    counter = 0
    while True:
        counter += 1
        name = f"v{counter}"
        if name not in taken:
            yield name


def interpret(development: Development) -> ClassReading:
    """Classify every coefficient of a development into a ClassReading.

    Fresh indefinite symbols are handed out in descending constituent-index
    order, so v1 belongs to the first indefinite constituent as printed.
    """
    kept = []
    indefinite = []
    side_conditions = []
    flagged = []
    symbols = _fresh_symbols(development.order)
    for constituent, value in development.entries():
        bucket = classify(value)
        if bucket is CoeffClass.KEEP:
            kept.append(constituent)
        elif bucket is CoeffClass.INDEFINITE:
            indefinite.append((next(symbols), constituent))
        elif bucket is CoeffClass.EQUATE_ZERO:
            side_conditions.append(constituent)
            if not _is_classical_equate_zero(value):
                flagged.append(constituent)
    return ClassReading(
        development.order,
        tuple(kept),
        tuple(indefinite),
        tuple(side_conditions),
        tuple(flagged),
    )


class SolveError(ValueError):
    """The equation cannot be solved for the requested variable."""


def _substitute(term: Term, name: str, replacement: Term) -> Term:
    if isinstance(term, Const):
        return term
    if isinstance(term, Var):
        return replacement if term.name == name else term
    if isinstance(term, Add):
        return Add(
            _substitute(term.left, name, replacement),
            _substitute(term.right, name, replacement),
        )
    if isinstance(term, Sub):
        return Sub(
            _substitute(term.left, name, replacement),
            _substitute(term.right, name, replacement),
        )
    if isinstance(term, Mul):
        return Mul(
            _substitute(term.left, name, replacement),
            _substitute(term.right, name, replacement),
        )
    if isinstance(term, Div):
        return Div(
            _substitute(term.numerator, name, replacement),
            _substitute(term.denominator, name, replacement),
        )
    raise TypeError(f"not a term: {term!r}")


def _contains_div(term: Term) -> bool:
    if isinstance(term, Div):
        return True
    if isinstance(term, (Add, Sub, Mul)):
        return _contains_div(term.left) or _contains_div(term.right)
    return False


def solve(lhs: Term, rhs: Term, target: str) -> ClassReading:
    """Solve the class equation lhs = rhs for the variable target.

    Division-free input only; the equation is automatically linear in the
    target on binary values, so with E = lhs - rhs, P = E[target:=1] and
    Q = E[target:=0], the solution is the reading of the development of
    Q/(Q - P) over the remaining variables (in first-occurrence order).

    Raises SolveError when the target does not occur, or when Q - P is
    identically zero (the equation does not constrain the target).
    """
    equation = Sub(lhs, rhs)
    if _contains_div(equation):
        raise DivisionUnsupportedError(
            "solving is defined for division-free equations only"
        )
    if target not in free_vars(equation):
        raise SolveError(f"variable {target!r} does not occur in the equation")
    at_one = _substitute(equation, target, Const(1))
    at_zero = _substitute(equation, target, ZERO)
    denominator = Sub(at_zero, at_one)
    if to_multilinear(denominator).is_zero:
        raise SolveError(
            f"equation does not constrain {target!r}: "
            "both substitutions leave the same remainder"
        )
    remaining = tuple(name for name in free_vars(equation) if name != target)
    return interpret(develop(Div(at_zero, denominator), remaining))
