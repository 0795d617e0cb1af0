"""Term language for Boole's class calculus.

Terms are built from integer constants, lower-case variables and the four
operations + - * /.  The concrete grammar is

    sum     := product (('+' | '-') product)*
    product := atom (('*' | '/') atom)*
    atom    := integer | variable | '(' sum ')' | '-' atom

with + and - on one precedence level, * and / on a higher one, and both
levels left-associative, so a/b*c parses as (a/b)*c.  Multiplication is
always written out: juxtaposition like "xy" is a syntax error, which keeps
multi-letter identifiers unambiguous.  Unary minus is sugar for subtraction
from 0.

This module only parses and prints.  It never simplifies and never
evaluates, so x*x and x stay distinct terms here even though the calculus
will identify them on binary values.  Nodes are frozen dataclasses: they
are immutable, hashable and safe to share.

Round trip: parse_term(format_term(t)) == t for every term the parser can
produce.  Terms built programmatically with constants outside the grammar
(negative or non-integer rationals) still print as their exact rational
string, but that text re-parses to an equivalent, differently shaped term
("-1" becomes 0 - 1, "1/2" becomes a quotient).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Term",
    "Const",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "ZERO",
    "ONE",
    "ParseError",
    "parse_term",
    "format_term",
    "free_vars",
    "as_term",
]

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*")


class Term:
    """Base class for syntax tree nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class Const(Term):
    """A rational constant.  Accepts int or Fraction and stores a Fraction."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Div(Term):
    numerator: Term
    denominator: Term


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


class ParseError(ValueError):
    """Syntax error carrying the byte offset and the acceptable-token set."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = frozenset(expected)
        text = f"{message} at offset {offset}"
        if self.expected:
            text += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(text)


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", one of "+-*/()" or "end"
    text: str
    offset: int


_TOKEN_RE = re.compile(r"[0-9]+|[a-z][a-z0-9_]*|[+\-*/()]")

_ATOM_EXPECTED = frozenset({"integer", "variable", "'('", "'-'"})
_OPERATOR_EXPECTED = frozenset({"'+'", "'-'", "'*'", "'/'"})


def _byte_offset(text: str, pos: int) -> int:
    # Offsets are reported in bytes of the UTF-8 encoding, not code points.
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                _byte_offset(text, pos),
                _ATOM_EXPECTED | _OPERATOR_EXPECTED | {"'('", "')'"},
            )
        lexeme = match.group()
        if lexeme[0].isdigit():
            kind = "int"
        elif lexeme[0].isalpha():
            kind = "name"
        else:
            kind = lexeme
        tokens.append(_Token(kind, lexeme, _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(_Token("end", "", _byte_offset(text, len(text))))
    return tokens


def _describe(token: _Token) -> str:
    if token.kind == "end":
        return "end of input"
    return f"{token.text!r}"


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def parse(self) -> Term:
        term = self._sum()
        token = self._peek()
        if token.kind != "end":
            raise ParseError(
                f"unexpected {_describe(token)}",
                token.offset,
                _OPERATOR_EXPECTED | {"end of input"},
            )
        return term

    def _sum(self) -> Term:
        term = self._product()
        while self._peek().kind in ("+", "-"):
            op = self._advance()
            right = self._product()
            term = Add(term, right) if op.kind == "+" else Sub(term, right)
        return term

    def _product(self) -> Term:
        term = self._atom()
        while self._peek().kind in ("*", "/"):
            op = self._advance()
            right = self._atom()
            term = Mul(term, right) if op.kind == "*" else Div(term, right)
        return term

    def _atom(self) -> Term:
        token = self._peek()
        if token.kind == "int":
            self._advance()
            return Const(Fraction(int(token.text)))
        if token.kind == "name":
            self._advance()
            return Var(token.text)
        if token.kind == "(":
            self._advance()
            term = self._sum()
            closing = self._peek()
            if closing.kind != ")":
                raise ParseError(
                    f"unexpected {_describe(closing)}",
                    closing.offset,
                    _OPERATOR_EXPECTED | {"')'"},
                )
            self._advance()
            return term
        if token.kind == "-":
            self._advance()
            return Sub(ZERO, self._atom())
        raise ParseError(
            f"unexpected {_describe(token)}", token.offset, _ATOM_EXPECTED
        )


def parse_term(text: str) -> Term:
    """Parse concrete syntax into a Term.

    Raises ParseError with a byte offset and expected-token set on bad input;
    empty input fails the same way at offset 0.
    """
    return _Parser(_tokenize(text)).parse()


_PREC_SUM = 1
_PREC_PROD = 2
_PREC_ATOM = 3


def _prec(term: Term) -> int:
    if isinstance(term, (Const, Var)):
        return _PREC_ATOM
    if isinstance(term, (Mul, Div)):
        return _PREC_PROD
    return _PREC_SUM


def format_term(term: Term) -> str:
    """Render a term with minimal parentheses.

    Left children keep their text bare at equal precedence, right children
    get parenthesized, matching the parser's left associativity.  Additive
    operators are spaced ("x + y"), multiplicative ones are not ("x*y").
    """

    def wrap(child: Term, parent_prec: int, right_side: bool) -> str:
        text = render(child)
        prec = _prec(child)
        if prec < parent_prec or (prec == parent_prec and right_side):
            return f"({text})"
        return text

    def render(t: Term) -> str:
        if isinstance(t, Const):
            return str(t.value)
        if isinstance(t, Var):
            return t.name
        if isinstance(t, Add):
            return f"{wrap(t.left, _PREC_SUM, False)} + {wrap(t.right, _PREC_SUM, True)}"
        if isinstance(t, Sub):
            return f"{wrap(t.left, _PREC_SUM, False)} - {wrap(t.right, _PREC_SUM, True)}"
        if isinstance(t, Mul):
            return f"{wrap(t.left, _PREC_PROD, False)}*{wrap(t.right, _PREC_PROD, True)}"
        if isinstance(t, Div):
            return f"{wrap(t.numerator, _PREC_PROD, False)}/{wrap(t.denominator, _PREC_PROD, True)}"
        raise TypeError(f"not a term: {t!r}")

    return render(term)


def free_vars(term: Term) -> tuple[str, ...]:
    """Variable names in first-occurrence order, left to right, no repeats."""
    seen: dict[str, None] = {}

    def walk(t: Term):
        if isinstance(t, Var):
            seen.setdefault(t.name)
        elif isinstance(t, (Add, Sub, Mul)):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, Div):
            walk(t.numerator)
            walk(t.denominator)

    walk(term)
    return tuple(seen)


TermLike = Union[Term, str]


def as_term(value: TermLike) -> Term:
    """Coerce a string through the parser; pass Terms through unchanged."""
    if isinstance(value, Term):
        return value
    return parse_term(value)
