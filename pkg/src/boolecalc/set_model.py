"""Finite-universe set semantics with Boole's partial operations.

Subsets of a universe of size u (at most 6 here) are bitmask ints.  The
operations are deliberately partial, following the side conditions Boole
attached to them:

  * product    intersection, always defined;
  * sum        union, defined only for disjoint operands;
  * difference p - q defined only when q is contained in p;
  * quotient   p / q defined only when p is contained in q, and then
               multivalued: every z with z intersect q = p qualifies,
               which is exactly the interval from p to p union (complement
               of q).

Only the constants 0 (empty set) and 1 (universe) denote; any other
constant is a hard error.  Because the quotient is multivalued, evaluation
carries a set of candidate set-values throughout.  At a compound operation
the undefined operand combinations are discarded branch by branch; only
when no combination survives is a PartialityError raised.  strict=True
tightens this to "every combination must be defined", the reading under
which a single undefined branch poisons the whole term.

check_partiality_correspondence compares these partial tables against the
numeric evaluation over {empty, universe} at u = 1, row by row, deriving
both sides rather than quoting them.  check_collapse probes the classical
claim that validity over all set assignments coincides with validity over
the two trivial sets alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

from .binary_eval import ExtValue, eval_sym
from .interpretation import ClassReading
from .term import Add, Const, Div, Mul, Sub, Term, Var, free_vars

__all__ = [
    "MAX_UNIVERSE",
    "PartialityError",
    "SetAssignment",
    "full_mask",
    "set_text",
    "value_set_text",
    "submasks",
    "set_eval",
    "CorrespondenceRow",
    "check_partiality_correspondence",
    "CollapseVerdict",
    "check_collapse",
    "reading_extension",
]

MAX_UNIVERSE = 6

SetVal = int
ValueSet = FrozenSet[int]


def full_mask(universe: int) -> int:
    return (1 << universe) - 1


def set_text(mask: int) -> str:
    """Render a mask as an element listing, e.g. "{0,2}"."""
    elements = [str(i) for i in range(mask.bit_length()) if (mask >> i) & 1]
    return "{" + ",".join(elements) + "}"


def value_set_text(values: ValueSet) -> str:
    """Render a set of candidate values, smallest sets first."""
    ordered = sorted(values, key=lambda m: (bin(m).count("1"), m))
    return ", ".join(set_text(m) for m in ordered)


def submasks(mask: int) -> Iterator[int]:
    """All subsets of a bitmask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SetAssignment:
    """A universe size together with one subset (mask) per variable."""

    universe: int
    values: Mapping[str, int]

    def __post_init__(self):
        if not 1 <= self.universe <= MAX_UNIVERSE:
            raise ValueError(f"universe size must be 1..{MAX_UNIVERSE}")
        full = full_mask(self.universe)
        object.__setattr__(self, "values", dict(self.values))
        for name, mask in self.values.items():
            if not 0 <= mask <= full:
                raise ValueError(f"{name} = {mask} is not a subset of the universe")


class PartialityError(Exception):
    """An operation was applied outside its domain of definition."""

    def __init__(self, operation: str, operands: tuple, universe: int, detail: str = ""):
        self.operation = operation
        self.operands = operands
        self.universe = universe
        rendered = []
        for operand in operands:
            if isinstance(operand, frozenset):
                rendered.append(value_set_text(operand))
            elif isinstance(operand, int):
                rendered.append(set_text(operand))
            else:
                rendered.append(str(operand))
        message = f"'{operation}' undefined for {' and '.join(rendered)}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


def set_eval(term: Term, assignment: SetAssignment, strict: bool = False) -> ValueSet:
    """Evaluate a term to its set of candidate subsets.

    With strict=False (default), operand combinations outside an
    operation's domain are pruned; PartialityError is raised only when no
    combination at all survives.  With strict=True any undefined
    combination raises immediately.
    """
    full = full_mask(assignment.universe)

    def run(t: Term) -> ValueSet:
        if isinstance(t, Const):
            if t.value == 0:
                return frozenset((0,))
            if t.value == 1:
                return frozenset((full,))
            raise PartialityError(
                "constant", (t.value,), assignment.universe,
                "only 0 and 1 denote classes",
            )
        if isinstance(t, Var):
            return frozenset((assignment.values[t.name],))
        if isinstance(t, Mul):
            left, right = run(t.left), run(t.right)
            return frozenset(p & q for p in left for q in right)
        if isinstance(t, Add):
            left, right = run(t.left), run(t.right)
            results = set()
            for p in left:
                for q in right:
                    if p & q:
                        if strict:
                            raise PartialityError(
                                "+", (p, q), assignment.universe,
                                "operands overlap",
                            )
                        continue
                    results.add(p | q)
            if not results:
                raise PartialityError(
                    "+", (left, right), assignment.universe,
                    "every operand combination overlaps",
                )
            return frozenset(results)
        if isinstance(t, Sub):
            left, right = run(t.left), run(t.right)
            results = set()
            for p in left:
                for q in right:
                    if q & ~p & full:
                        if strict:
                            raise PartialityError(
                                "-", (p, q), assignment.universe,
                                "subtrahend is not contained in the minuend",
                            )
                        continue
                    results.add(p & ~q & full)
            if not results:
                raise PartialityError(
                    "-", (left, right), assignment.universe,
                    "no operand combination is nested",
                )
            return frozenset(results)
        if isinstance(t, Div):
            left, right = run(t.numerator), run(t.denominator)
            results = set()
            for p in left:
                for q in right:
                    if p & ~q & full:
                        if strict:
                            raise PartialityError(
                                "/", (p, q), assignment.universe,
                                "numerator is not contained in the denominator",
                            )
                        continue
                    # Every z with z intersect q = p, i.e. p plus any part
                    # of the complement of q.
                    for extra in submasks(~q & full):
                        results.add(p | extra)
            if not results:
                raise PartialityError(
                    "/", (left, right), assignment.universe,
                    "no operand combination is nested",
                )
            return frozenset(results)
        raise TypeError(f"not a term: {t!r}")

    return run(term)


@dataclass(frozen=True)
class CorrespondenceRow:
    """One cell of an operation table, numeric and set side by side.

    predicted is derived from the numeric value: each finite value in
    {0,1} maps to the corresponding trivial set (empty or universe) at
    u = 1, and an empty prediction means the set operation should be
    undefined there.  ok records whether set_eval agreed.
    """

    operation: str
    left: int
    right: int
    numeric: ExtValue
    set_values: Optional[ValueSet]
    predicted: Optional[ValueSet]
    ok: bool


def check_partiality_correspondence(n: int = 2) -> Tuple[CorrespondenceRow, ...]:
    """Compare the partial set tables with numeric evaluation over {0, 1}.

    Twelve rows: +, -, / at the four binary operand pairs, in table order.
    Both columns are computed (eval_sym and set_eval at u = 1), nothing is
    quoted.  n bounds the variable count of the probe terms and must stay
    small; the binary tables themselves involve two variables.
    """
    if not 1 <= n <= 3:
        raise ValueError("n must be 1..3")
    rows = []
    terms = {
        "+": Add(Var("a"), Var("b")),
        "-": Sub(Var("a"), Var("b")),
        "/": Div(Var("a"), Var("b")),
    }
    for symbol, term in terms.items():
        for left, right in ((1, 1), (1, 0), (0, 1), (0, 0)):
            numeric = eval_sym(term, {"a": left, "b": right})
            predicted_values = frozenset(
                1 if q == 1 else 0 for q in numeric.finites if q in (0, 1)
            )
            predicted = predicted_values or None
            assignment = SetAssignment(1, {"a": left, "b": right})
            try:
                set_values: Optional[ValueSet] = set_eval(term, assignment)
            except PartialityError:
                set_values = None
            rows.append(
                CorrespondenceRow(
                    symbol, left, right, numeric, set_values, predicted,
                    set_values == predicted,
                )
            )
    return tuple(rows)


@dataclass(frozen=True)
class CollapseVerdict:
    """Validity over all set assignments vs over the trivial sets only."""

    valid_all_sets: bool
    valid_binary_sets: bool
    witness_all_sets: Optional[Tuple[int, Dict[str, int]]] = None
    witness_binary_sets: Optional[Tuple[int, Dict[str, int]]] = None

    @property
    def agree(self) -> bool:
        return self.valid_all_sets == self.valid_binary_sets


def _holds_at(lhs: Term, rhs: Term, assignment: SetAssignment) -> bool:
    # Directional reading of a class equation: wherever the left side is
    # defined, the right side must be defined with the same candidates.
    # An undefined left side asserts nothing.  The direction matters:
    # z*(x+y) = z*x + z*y holds (the right side is defined whenever the
    # left is), while (x+y)-z = x+(y-z) fails wherever z fits inside x+y
    # but not inside y, the left side being defined there and the right
    # side not.
    try:
        left = set_eval(lhs, assignment)
    except PartialityError:
        return True
    try:
        right = set_eval(rhs, assignment)
    except PartialityError:
        return False
    return left == right


def check_collapse(lhs: Term, rhs: Term, u_max: int = 3) -> CollapseVerdict:
    """Does lhs = rhs hold over all set assignments iff over {empty, U} alone?

    Division-free terms only, universes 1..u_max (u_max at most 3).  An
    equation holds at an assignment when the left side, if defined, is
    matched by a defined right side with the same candidate sets; see
    _holds_at for why the reading is directional.
    """
    if not 1 <= u_max <= 3:
        raise ValueError("u_max must be 1..3")
    for side in (lhs, rhs):
        if _term_contains_div(side):
            raise ValueError("check_collapse expects division-free terms")
    names = sorted(set(free_vars(lhs)) | set(free_vars(rhs)))

    def scan(binary_only: bool):
        for universe in range(1, u_max + 1):
            full = full_mask(universe)
            masks = (0, full) if binary_only else tuple(range(full + 1))
            for combo in product(masks, repeat=len(names)):
                assignment = SetAssignment(universe, dict(zip(names, combo)))
                if not _holds_at(lhs, rhs, assignment):
                    return False, (universe, dict(zip(names, combo)))
        return True, None

    valid_all, witness_all = scan(binary_only=False)
    valid_binary, witness_binary = scan(binary_only=True)
    return CollapseVerdict(valid_all, valid_binary, witness_all, witness_binary)


def _term_contains_div(term: Term) -> bool:
    if isinstance(term, Div):
        return True
    if isinstance(term, (Add, Sub, Mul)):
        return _term_contains_div(term.left) or _term_contains_div(term.right)
    return False


def _region(constituent, assignment: SetAssignment) -> int:
    full = full_mask(assignment.universe)
    mask = full
    for name, sign in zip(constituent.order, constituent.signs):
        value = assignment.values[name]
        mask &= value if sign else (~value & full)
    return mask


def reading_extension(
    reading: ClassReading, assignment: SetAssignment
) -> Optional[ValueSet]:
    """All subsets a reading can denote once its symbols range over classes.

    The kept constituents' regions are always included; each indefinite
    region contributes any of its subsets independently, so the result is
    the interval from the kept union to the kept-plus-indefinite union.
    Returns None when a side condition is violated, i.e. some constituent
    that the reading requires to be empty has a non-empty region.
    """
    for constituent in reading.side_conditions:
        if _region(constituent, assignment):
            return None
    base = 0
    for constituent in reading.kept:
        base |= _region(constituent, assignment)
    indefinite_union = 0
    for _, constituent in reading.indefinite:
        indefinite_union |= _region(constituent, assignment)
    return frozenset(base | extra for extra in submasks(indefinite_union))
