"""Developments: expansion of a term over the constituents of its variables.

For variables x1..xn, the constituent of a 0/1 vector s is the product of
xi where si = 1 and (1 - xi) where si = 0.  Constituents are orthogonal
idempotents of the multilinear algebra: ci*cj reduces to 0 for i != j and
to ci for i = j, and they sum to 1 as ordinary polynomials, with no appeal
to the idempotent law.  Every term t then expands as

    t = sum over s of  eval(t at s) * constituent(s)

which is the development of t.  Two independent ways of computing the
coefficients are provided:

  * develop: evaluate t at each binary point directly (eval_sym).
  * develop_by_intersections: never evaluate t; instead reduce the product
    t*c against each constituent c by structural induction, using the
    orthogonality and idempotence of constituents for * and linearity for
    + and -.   For a quotient s/u the reduction of s*c gives alpha*c, that
    of u*c gives beta*c, and the coefficient is alpha/beta in the extended
    arithmetic.

The two must agree on every term; that equivalence is a theorem of the
calculus and a standing test here, not an implementation shortcut.

Indexing convention: constituents are numbered by reading the sign vector
as binary with the FIRST variable as the most significant bit.  Descending
index order therefore starts at the all-ones constituent, which is how the
classical tables are laid out and how renderings are printed.  Storage in
Development.coeffs is by index, i.e. coeffs[0] belongs to all-zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .binary_eval import ExtValue, eval_sym
from .term import Add, Const, Div, Mul, ONE, Sub, Term, Var, free_vars

__all__ = [
    "DivisionUnsupportedError",
    "constituent_index",
    "index_assignment",
    "Constituent",
    "Development",
    "develop",
    "develop_by_intersections",
    "eval_development",
    "MultilinearPoly",
    "to_multilinear",
]


class DivisionUnsupportedError(ValueError):
    """Raised where an operation is defined for division-free terms only."""


def check_order(order: Sequence[str], term: Optional[Term] = None) -> Tuple[str, ...]:
    """Validate a variable order: distinct names, covering the term's variables.

    Extra names beyond the term's variables are fine; the development then
    repeats coefficients across the unused dimensions.
    """
    order = tuple(order)
    if len(set(order)) != len(order):
        raise ValueError(f"variable order has repeats: {order}")
    if term is not None:
        missing = [name for name in free_vars(term) if name not in order]
        if missing:
            raise ValueError(f"order omits variables {missing} of the term")
    return order


def constituent_index(order: Sequence[str], assignment: Mapping[str, int]) -> int:
    """Pack a binary assignment into an index, first variable most significant."""
    index = 0
    for name in order:
        index = (index << 1) | int(assignment[name])
    return index


def index_assignment(order: Sequence[str], index: int) -> dict:
    """Inverse of constituent_index."""
    n = len(order)
    return {name: (index >> (n - 1 - i)) & 1 for i, name in enumerate(order)}


@dataclass(frozen=True)
class Constituent:
    """A product of variables and complements, one factor per order entry."""

    order: Tuple[str, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.order) != len(self.signs):
            raise ValueError("one sign per variable required")
        if any(s not in (0, 1) for s in self.signs):
            raise ValueError("signs must be 0 or 1")

    @classmethod
    def from_index(cls, order: Sequence[str], index: int) -> "Constituent":
        order = tuple(order)
        n = len(order)
        if not 0 <= index < (1 << n):
            raise ValueError(f"index {index} out of range for {n} variables")
        return cls(order, tuple((index >> (n - 1 - i)) & 1 for i in range(n)))

    @classmethod
    def from_sign_string(cls, order: Sequence[str], signs: str) -> "Constituent":
        return cls(tuple(order), tuple(int(c) for c in signs))

    @property
    def index(self) -> int:
        value = 0
        for s in self.signs:
            value = (value << 1) | s
        return value

    def sign_string(self) -> str:
        return "".join(str(s) for s in self.signs)

    def assignment(self) -> dict:
        return dict(zip(self.order, self.signs))

    def term(self) -> Term:
        """The constituent as a term; the empty product is 1."""
        factors = [
            Var(name) if sign else Sub(ONE, Var(name))
            for name, sign in zip(self.order, self.signs)
        ]
        if not factors:
            return ONE
        result = factors[0]
        for factor in factors[1:]:
            result = Mul(result, factor)
        return result

    def render(self) -> str:
        if not self.order:
            return "1"
        return "*".join(
            name if sign else f"(1-{name})"
            for name, sign in zip(self.order, self.signs)
        )


@dataclass(frozen=True)
class Development:
    """A variable order plus one coefficient per constituent, indexed by sign vector."""

    order: Tuple[str, ...]
    coeffs: Tuple[ExtValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != 1 << len(self.order):
            raise ValueError("coefficient count must be 2**len(order)")

    def constituent(self, index: int) -> Constituent:
        return Constituent.from_index(self.order, index)

    def entries(self) -> Iterator[Tuple[Constituent, ExtValue]]:
        """(constituent, coefficient) pairs in descending index order."""
        for index in range(len(self.coeffs) - 1, -1, -1):
            yield self.constituent(index), self.coeffs[index]

    def coefficient(self, assignment: Mapping[str, int]) -> ExtValue:
        return self.coeffs[constituent_index(self.order, assignment)]

    def render(self) -> str:
        """Classical layout: descending constituents joined additively.

        Coefficient 1 prints as the bare constituent, a negative singleton
        folds into a subtraction, the two-valued 0/0 and the unbounded 1/0
        print parenthesized.
        """
        pieces = []
        for constituent, value in self.entries():
            body = constituent.render()
            sign = "+"
            if value.is_singleton:
                q = value.singleton()
                if q < 0:
                    sign = "-"
                    q = -q
                if body == "1":
                    text = str(q)
                elif q == 1:
                    text = body
                else:
                    text = f"{q}*{body}"
            else:
                rendered = value.render()
                text = f"({rendered})*{body}" if body != "1" else f"({rendered})"
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def to_payload(self) -> dict:
        """JSON-ready form: variable list plus coefficients in index order."""
        coeffs = []
        for value in self.coeffs:
            entry: dict = {}
            if value.has_infinite:
                entry["infinite"] = True
            entry["finite"] = [str(q) for q in sorted(value.finites)]
            coeffs.append(entry)
        return {"vars": list(self.order), "coeffs": coeffs}

    @classmethod
    def from_payload(cls, payload: Mapping) -> "Development":
        order = tuple(payload["vars"])
        coeffs = tuple(
            ExtValue(
                frozenset(Fraction(text) for text in entry.get("finite", ())),
                bool(entry.get("infinite", False)),
            )
            for entry in payload["coeffs"]
        )
        return cls(order, coeffs)


def develop(term: Term, order: Optional[Sequence[str]] = None) -> Development:
    """Expand a term over constituents by direct evaluation at binary points."""
    if order is None:
        order = free_vars(term)
    order = check_order(order, term)
    coeffs = tuple(
        eval_sym(term, index_assignment(order, index))
        for index in range(1 << len(order))
    )
    return Development(order, coeffs)


def eval_development(development: Development, assignment: Mapping[str, int]) -> ExtValue:
    """Read a development's value at a binary point straight off its table."""
    return development.coefficient(assignment)


class MultilinearPoly:
    """Polynomial in which every variable has degree at most one.

    Reduction of products uses monomial union (x*x collapses to x), which
    is sound on binary values and is exactly the reduction the development
    by intersections relies on.  Coefficients are Fractions; zero
    coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[frozenset, Fraction]] = None):
        cleaned = {}
        if coeffs:
            for monomial, q in coeffs.items():
                q = Fraction(q)
                if q != 0:
                    cleaned[frozenset(monomial)] = q
        self._coeffs = cleaned

    @classmethod
    def constant(cls, value) -> "MultilinearPoly":
        return cls({frozenset(): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "MultilinearPoly":
        return cls({frozenset((name,)): Fraction(1)})

    def coefficients(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, monomial: Iterable[str]) -> Fraction:
        return self._coeffs.get(frozenset(monomial), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if self.is_zero:
            return "MultilinearPoly(0)"
        parts = []
        for monomial in sorted(self._coeffs, key=lambda m: (len(m), sorted(m))):
            name = "*".join(sorted(monomial)) or "1"
            parts.append(f"{self._coeffs[monomial]}*{name}")
        return "MultilinearPoly(" + " + ".join(parts) + ")"

    def _combine(self, other: "MultilinearPoly", sign: int) -> "MultilinearPoly":
        coeffs = dict(self._coeffs)
        for monomial, q in other._coeffs.items():
            coeffs[monomial] = coeffs.get(monomial, Fraction(0)) + sign * q
        return MultilinearPoly(coeffs)

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return self._combine(other, -1)

    def __mul__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        coeffs: dict = {}
        for m1, q1 in self._coeffs.items():
            for m2, q2 in other._coeffs.items():
                monomial = m1 | m2
                coeffs[monomial] = coeffs.get(monomial, Fraction(0)) + q1 * q2
        return MultilinearPoly(coeffs)

    def scale(self, value) -> "MultilinearPoly":
        q = Fraction(value)
        return MultilinearPoly({m: c * q for m, c in self._coeffs.items()})

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for monomial, q in self._coeffs.items():
            value = q
            for name in monomial:
                value *= Fraction(assignment[name])
            total += value
        return total


def to_multilinear(term: Term) -> MultilinearPoly:
    """Reduce a division-free term to its multilinear normal form.

    Sound for binary values: the normal form agrees with eval_sym at every
    0/1 point.  Terms containing a quotient are rejected, because division
    has no polynomial normal form.
    """
    if isinstance(term, Const):
        return MultilinearPoly.constant(term.value)
    if isinstance(term, Var):
        return MultilinearPoly.variable(term.name)
    if isinstance(term, Add):
        return to_multilinear(term.left) + to_multilinear(term.right)
    if isinstance(term, Sub):
        return to_multilinear(term.left) - to_multilinear(term.right)
    if isinstance(term, Mul):
        return to_multilinear(term.left) * to_multilinear(term.right)
    if isinstance(term, Div):
        raise DivisionUnsupportedError(
            "term contains division; multilinear reduction is undefined"
        )
    raise TypeError(f"not a term: {term!r}")


def _scalar_against(poly: MultilinearPoly, base: MultilinearPoly, top: frozenset) -> Fraction:
    # base is the multilinear form of a constituent, so its coefficient on
    # the full monomial is +-1 and determines any scalar multiple uniquely.
    k = poly.coefficient(top) / base.coefficient(top)
    if base.scale(k) != poly:
        raise ArithmeticError(
            "product did not reduce to a scalar multiple of the constituent"
        )
    return k


def _coefficient_by_intersection(
    term: Term, constituent: Constituent, base: MultilinearPoly, top: frozenset
) -> ExtValue:
    if isinstance(term, (Const, Var)):
        product = to_multilinear(term) * base
        return ExtValue.of(_scalar_against(product, base, top))
    if isinstance(term, Mul):
        return _coefficient_by_intersection(
            term.left, constituent, base, top
        ) * _coefficient_by_intersection(term.right, constituent, base, top)
    if isinstance(term, Add):
        return _coefficient_by_intersection(
            term.left, constituent, base, top
        ) + _coefficient_by_intersection(term.right, constituent, base, top)
    if isinstance(term, Sub):
        return _coefficient_by_intersection(
            term.left, constituent, base, top
        ) - _coefficient_by_intersection(term.right, constituent, base, top)
    if isinstance(term, Div):
        return _coefficient_by_intersection(
            term.numerator, constituent, base, top
        ) / _coefficient_by_intersection(term.denominator, constituent, base, top)
    raise TypeError(f"not a term: {term!r}")


def develop_by_intersections(
    term: Term, order: Optional[Sequence[str]] = None
) -> Development:
    """Expand a term without ever evaluating it at a point.

    Each coefficient is found by reducing t*c against the constituent c:
    products use the idempotence c*c = c, sums distribute, and a quotient
    divides the two reduced scalars in the extended arithmetic.  Agrees
    with develop() on every term.
    """
    if order is None:
        order = free_vars(term)
    order = check_order(order, term)
    top = frozenset(order)
    coeffs = []
    for index in range(1 << len(order)):
        constituent = Constituent.from_index(order, index)
        base = to_multilinear(constituent.term())
        coeffs.append(_coefficient_by_intersection(term, constituent, base, top))
    return Development(order, tuple(coeffs))
