"""Truth tables, developments of propositions, and full DNF extraction.

A development whose coefficients are all 0 or 1 is a Boolean function in
disguise: keep the constituents with coefficient 1 and each one turns into
a conjunction of literals, giving the full disjunctive normal form.  The
conversion is lossless in both directions, and because distinct
constituents exclude each other, reading the top-level disjunction as
exclusive or changes nothing.

Truth tables share the constituent indexing of developments (first
variable most significant); their text form lists rows from the all-ones
assignment down to all-zeros, so "10110011" over x,y,z gives row 111 the
value 1, row 110 the value 0, and so on.

op_table renders the classical operation tables over operand values 0 and
1.  Cells are derived from eval_sym, never quoted: a definite 0 or 1
prints as itself, the two-valued quotient prints "0 or 1", the unbounded
quotient prints "q != 0,1", and any other number falls outside the
calculus and prints "not allowed".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple

from .binary_eval import ExtValue, ZERO_OVER_ZERO, eval_sym
from .development import (
    Constituent,
    Development,
    check_order,
    constituent_index,
    develop,
    index_assignment,
)
from .term import Add, Div, Mul, Sub, Term, Var, format_term

__all__ = [
    "TruthTable",
    "PropFormula",
    "NonBinaryCoefficient",
    "table_to_development",
    "development_to_table",
    "development_to_dnf",
    "OpTableRow",
    "OpTable",
    "op_table",
    "term_table",
]


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function as one 0/1 value per constituent index."""

    order: Tuple[str, ...]
    rows: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "rows", tuple(int(v) for v in self.rows))
        if len(self.rows) != 1 << len(self.order):
            raise ValueError("row count must be 2**len(order)")
        if any(v not in (0, 1) for v in self.rows):
            raise ValueError("table values must be 0 or 1")

    @classmethod
    def from_text(cls, bits: str, order: Sequence[str]) -> "TruthTable":
        """Bitstring in descending row order: first character is the all-ones row."""
        order = check_order(order)
        if len(bits) != 1 << len(order):
            raise ValueError(
                f"expected {1 << len(order)} bits for {len(order)} variables, "
                f"got {len(bits)}"
            )
        if any(c not in "01" for c in bits):
            raise ValueError("bitstring must contain only 0 and 1")
        return cls(order, tuple(int(c) for c in reversed(bits)))

    def to_text(self) -> str:
        return "".join(str(v) for v in reversed(self.rows))

    def value(self, assignment: Mapping[str, int]) -> int:
        return self.rows[constituent_index(self.order, assignment)]


class NonBinaryCoefficient(ValueError):
    """A development coefficient prevents a propositional reading."""

    def __init__(self, constituent: Constituent, value: ExtValue):
        self.constituent = constituent
        self.value = value
        super().__init__(
            f"coefficient of {constituent.render()} is {value.render()}, not 0 or 1"
        )


def table_to_development(table: TruthTable) -> Development:
    return Development(
        table.order, tuple(ExtValue.of(v) for v in table.rows)
    )


def development_to_table(development: Development) -> TruthTable:
    rows = []
    for index, value in enumerate(development.coeffs):
        if not value.is_binary:
            raise NonBinaryCoefficient(development.constituent(index), value)
        rows.append(int(value.singleton()))
    return TruthTable(development.order, tuple(rows))


@dataclass(frozen=True)
class PropFormula:
    """A full DNF: each conjunct fixes the sign of every variable."""

    order: Tuple[str, ...]
    conjuncts: Tuple[Tuple[int, ...], ...]

    def evaluate(self, assignment: Mapping[str, int], exclusive: bool = False) -> int:
        hits = 0
        point = tuple(int(assignment[name]) for name in self.order)
        for conjunct in self.conjuncts:
            if conjunct == point:
                hits += 1
        if exclusive:
            return hits % 2
        return 1 if hits else 0

    def render(self) -> str:
        if not self.conjuncts:
            return "false"
        parts = []
        for conjunct in self.conjuncts:
            literals = [
                name if sign else f"~{name}"
                for name, sign in zip(self.order, conjunct)
            ]
            text = " & ".join(literals) if literals else "true"
            if len(literals) > 1 and len(self.conjuncts) > 1:
                text = f"({text})"
            parts.append(text)
        return " | ".join(parts)


def development_to_dnf(development: Development) -> PropFormula:
    """Keep the coefficient-1 constituents as conjuncts, descending index order."""
    table = development_to_table(development)  # validates 0/1 coefficients
    conjuncts = []
    for index in range(len(table.rows) - 1, -1, -1):
        if table.rows[index]:
            conjuncts.append(
                tuple(index_assignment(table.order, index)[name] for name in table.order)
            )
    return PropFormula(table.order, tuple(conjuncts))


@dataclass(frozen=True)
class OpTableRow:
    left: int
    right: int
    value: ExtValue
    cell: str


@dataclass(frozen=True)
class OpTable:
    symbol: str
    header: str
    rows: Tuple[OpTableRow, ...]

    def render(self) -> str:
        lines = [f"a b | {self.header}"]
        for row in self.rows:
            lines.append(f"{row.left} {row.right} | {row.cell}")
        return "\n".join(lines)


def _cell_text(value: ExtValue) -> str:
    if value.is_binary:
        return str(value.singleton())
    if value == ZERO_OVER_ZERO:
        return "0 or 1"
    if value.has_infinite and not value.finites:
        return "q != 0,1"
    return "not allowed"


_OP_TERMS = {
    "*": Mul(Var("a"), Var("b")),
    "+": Add(Var("a"), Var("b")),
    "-": Sub(Var("a"), Var("b")),
    "/": Div(Var("a"), Var("b")),
}


def op_table(symbol: str) -> OpTable:
    """The classical table of one operation over operand values 0 and 1."""
    if symbol not in _OP_TERMS:
        raise ValueError(f"unknown operation {symbol!r}, expected one of * + - /")
    term = _OP_TERMS[symbol]
    rows = []
    for left, right in ((1, 1), (1, 0), (0, 1), (0, 0)):
        value = eval_sym(term, {"a": left, "b": right})
        rows.append(OpTableRow(left, right, value, _cell_text(value)))
    return OpTable(symbol, format_term(term), tuple(rows))


def term_table(term: Term, order: Sequence[str]) -> str:
    """Value table of an arbitrary term, rows in descending constituent order."""
    order = check_order(order, term)
    development = develop(term, order)
    lines = [" ".join(order) + f" | {format_term(term)}"]
    for constituent, value in development.entries():
        bits = " ".join(str(s) for s in constituent.signs)
        lines.append(f"{bits} | {value.render()}")
    return "\n".join(lines)
