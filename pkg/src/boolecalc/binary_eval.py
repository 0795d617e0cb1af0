"""Evaluation over binary assignments, with Boole's division anomalies.

On {0,1} the operations + - * behave as ordinary rational arithmetic, and
so does p/q while q is non-zero.  The two remaining division cases get the
readings Boole actually used:

  * k/0 with k non-zero denotes some rational other than 0 and 1.  No
    particular representative is chosen here; the value carries an
    "unbounded" marker instead (think of k/epsilon as epsilon shrinks).
  * 0/0 denotes 0 or 1, indifferently.  Boole's indefinite class symbol
    lives exactly here.

eval_sym therefore returns a small set of exact rationals plus an optional
infinite marker (ExtValue), never a float.  eval_policy is the companion
that picks one concrete value per anomaly (a DivisionPolicy) and returns a
plain Fraction, which is what you want when substituting arbitrary
rationals or checking representative independence.

All values are exact; nothing in this module is random or stateful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Optional, Union

from .term import Add, Const, Div, Mul, Sub, Term, Var, free_vars

__all__ = [
    "ExtValue",
    "ZERO_OVER_ZERO",
    "INFINITE",
    "DivisionPolicy",
    "DEFAULT_POLICY",
    "Assignment",
    "binary_assignments",
    "eval_sym",
    "eval_policy",
    "check_duality",
    "Verdict",
    "verify_equation",
]

Rational = Union[int, Fraction]
Assignment = Mapping[str, Rational]

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class ExtValue:
    """A finite set of exact rationals, optionally extended by an infinite marker.

    The infinite marker stands for the k/0 outcome (k non-zero): some value
    outside {0,1}, unboundedly large under perturbation.  It absorbs in
    arithmetic: once a computation passes through k/0, finite bookkeeping
    for that branch stops.  Invariant: finites is non-empty or has_infinite
    is set.
    """

    finites: frozenset
    has_infinite: bool = False

    def __post_init__(self):
        object.__setattr__(
            self, "finites", frozenset(Fraction(q) for q in self.finites)
        )
        if not self.finites and not self.has_infinite:
            raise ValueError("ExtValue must contain at least one value")

    @classmethod
    def of(cls, value: Rational) -> "ExtValue":
        return cls(frozenset((Fraction(value),)))

    @property
    def is_singleton(self) -> bool:
        return not self.has_infinite and len(self.finites) == 1

    def singleton(self) -> Fraction:
        if not self.is_singleton:
            raise ValueError(f"not a singleton: {self.render()}")
        return next(iter(self.finites))

    @property
    def is_binary(self) -> bool:
        """True when the value is a singleton 0 or a singleton 1."""
        return self.is_singleton and next(iter(self.finites)) in (_F0, _F1)

    def _lift(self, other: "ExtValue", op) -> "ExtValue":
        return ExtValue(
            frozenset(op(p, q) for p in self.finites for q in other.finites),
            self.has_infinite or other.has_infinite,
        )

    def __add__(self, other: "ExtValue") -> "ExtValue":
        return self._lift(other, lambda p, q: p + q)

    def __sub__(self, other: "ExtValue") -> "ExtValue":
        return self._lift(other, lambda p, q: p - q)

    def __mul__(self, other: "ExtValue") -> "ExtValue":
        return self._lift(other, lambda p, q: p * q)

    def __truediv__(self, other: "ExtValue") -> "ExtValue":
        finites = set()
        infinite = self.has_infinite or other.has_infinite
        for q in other.finites:
            for p in self.finites:
                if q != 0:
                    finites.add(p / q)
                elif p == 0:
                    finites.update((_F0, _F1))
                else:
                    infinite = True
        return ExtValue(frozenset(finites), infinite)

    def render(self) -> str:
        """Compact text: "2", "0/0" for {0,1}, "1/0" for the bare infinite."""
        if self == ZERO_OVER_ZERO:
            return "0/0"
        if not self.finites:
            return "1/0"
        if self.is_singleton:
            return str(self.singleton())
        parts = [str(q) for q in sorted(self.finites)]
        if self.has_infinite:
            parts.append("1/0")
        return "{" + ", ".join(parts) + "}"


ZERO_OVER_ZERO = ExtValue(frozenset((_F0, _F1)))
INFINITE = ExtValue(frozenset(), True)


@dataclass(frozen=True)
class DivisionPolicy:
    """One concrete choice per division anomaly.

    nonzero_over_zero_rep: the rational standing in for k/0; must itself
    avoid 0 and 1, else the anomaly would masquerade as a class value.
    zero_over_zero_branch: which of the two legitimate readings 0/0 takes.
    """

    nonzero_over_zero_rep: Fraction = Fraction(2)
    zero_over_zero_branch: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(
            self, "nonzero_over_zero_rep", Fraction(self.nonzero_over_zero_rep)
        )
        object.__setattr__(
            self, "zero_over_zero_branch", Fraction(self.zero_over_zero_branch)
        )
        if self.nonzero_over_zero_rep in (_F0, _F1):
            raise ValueError("representative for k/0 must avoid 0 and 1")
        if self.zero_over_zero_branch not in (_F0, _F1):
            raise ValueError("0/0 branch must be 0 or 1")


DEFAULT_POLICY = DivisionPolicy()


def binary_assignments(
    names: Iterable[str], descending: bool = True
) -> Iterator[dict]:
    """All 0/1 assignments over names.

    descending (the default) starts from all-ones and ends at all-zeros,
    the order Boole's tables are laid out in; the first listed name varies
    slowest.
    """
    names = tuple(names)
    bits = (1, 0) if descending else (0, 1)
    for combo in product(bits, repeat=len(names)):
        yield dict(zip(names, combo))


def eval_sym(term: Term, assignment: Assignment) -> ExtValue:
    """Exact set-valued evaluation of a term at an assignment."""
    if isinstance(term, Const):
        return ExtValue.of(term.value)
    if isinstance(term, Var):
        return ExtValue.of(assignment[term.name])
    if isinstance(term, Add):
        return eval_sym(term.left, assignment) + eval_sym(term.right, assignment)
    if isinstance(term, Sub):
        return eval_sym(term.left, assignment) - eval_sym(term.right, assignment)
    if isinstance(term, Mul):
        return eval_sym(term.left, assignment) * eval_sym(term.right, assignment)
    if isinstance(term, Div):
        return eval_sym(term.numerator, assignment) / eval_sym(
            term.denominator, assignment
        )
    raise TypeError(f"not a term: {term!r}")


def eval_policy(
    term: Term, assignment: Assignment, policy: DivisionPolicy = DEFAULT_POLICY
) -> Fraction:
    """Single-valued evaluation: each division anomaly resolved by policy.

    Assignment values may be arbitrary rationals here, not just 0/1; this
    is the evaluator used for identities that hold over all of Q.
    """
    if isinstance(term, Const):
        return term.value
    if isinstance(term, Var):
        return Fraction(assignment[term.name])
    if isinstance(term, Add):
        return eval_policy(term.left, assignment, policy) + eval_policy(
            term.right, assignment, policy
        )
    if isinstance(term, Sub):
        return eval_policy(term.left, assignment, policy) - eval_policy(
            term.right, assignment, policy
        )
    if isinstance(term, Mul):
        return eval_policy(term.left, assignment, policy) * eval_policy(
            term.right, assignment, policy
        )
    if isinstance(term, Div):
        numerator = eval_policy(term.numerator, assignment, policy)
        denominator = eval_policy(term.denominator, assignment, policy)
        if denominator != 0:
            return numerator / denominator
        if numerator == 0:
            return policy.zero_over_zero_branch
        return policy.nonzero_over_zero_rep
    raise TypeError(f"not a term: {term!r}")


def check_duality(term: Term) -> bool:
    """Does t satisfy the law of duality t*t = t over every binary assignment?

    Requires the value to be a definite class value, i.e. a singleton 0 or 1,
    at every point; a term evaluating to the two-valued 0/0 anywhere fails.
    """
    squared = Mul(term, term)
    for assignment in binary_assignments(free_vars(term)):
        value = eval_sym(term, assignment)
        if not value.is_binary:
            return False
        if eval_sym(squared, assignment) != value:
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equation check, with the first failing point if any."""

    valid: bool
    counterexample: Optional[dict] = None
    lhs_value: object = None
    rhs_value: object = None

    def __bool__(self) -> bool:
        return self.valid


def verify_equation(
    lhs: Term,
    rhs: Term,
    mode: str = "free",
    policy: Optional[DivisionPolicy] = None,
) -> Verdict:
    """Check lhs = rhs over all binary assignments to the shared variables.

    mode "free" compares values at every assignment.  mode "star" first
    discards assignments where either side is not a definite class value
    (a singleton 0 or 1), mirroring the constraint system in which every
    subterm is forced to satisfy the duality law; equality is then required
    on the surviving assignments only.

    With a policy given, both sides are evaluated single-valued through
    eval_policy instead of set-valued; this is how representative
    independence of a verdict is probed.

    Assignments are enumerated from all-ones down to all-zeros over the
    sorted union of both sides' variables, so counterexamples are reported
    in table order.
    """
    if mode not in ("free", "star"):
        raise ValueError(f"unknown mode {mode!r}")
    names = sorted(set(free_vars(lhs)) | set(free_vars(rhs)))
    for assignment in binary_assignments(names, descending=True):
        if policy is None:
            lhs_value = eval_sym(lhs, assignment)
            rhs_value = eval_sym(rhs, assignment)
            if mode == "star" and not (lhs_value.is_binary and rhs_value.is_binary):
                continue
        else:
            lhs_value = eval_policy(lhs, assignment, policy)
            rhs_value = eval_policy(rhs, assignment, policy)
            if mode == "star" and not (
                lhs_value in (_F0, _F1) and rhs_value in (_F0, _F1)
            ):
                continue
        if lhs_value != rhs_value:
            return Verdict(False, dict(assignment), lhs_value, rhs_value)
    return Verdict(True)
