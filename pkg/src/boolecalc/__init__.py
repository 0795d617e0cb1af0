"""boolecalc: George Boole's original class calculus, taken literally.

The package implements the pseudo-binary calculus of The Laws of Thought
(1854): terms over + - * / with constants 0 and 1, development over
constituents, the method of intersections, logical readings with
indefinite classes and side conditions, general solution of class
equations, and a finite-universe semantics of partial, multivalued set
operations.
"""

from .term import (
    Term,
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    ZERO,
    ONE,
    ParseError,
    parse_term,
    format_term,
    free_vars,
    as_term,
)
from .binary_eval import (
    ExtValue,
    ZERO_OVER_ZERO,
    INFINITE,
    DivisionPolicy,
    DEFAULT_POLICY,
    binary_assignments,
    eval_sym,
    eval_policy,
    check_duality,
    Verdict,
    verify_equation,
)
from .development import (
    DivisionUnsupportedError,
    Constituent,
    Development,
    constituent_index,
    index_assignment,
    develop,
    develop_by_intersections,
    eval_development,
    MultilinearPoly,
    to_multilinear,
)
from .interpretation import (
    CoeffClass,
    classify,
    ClassReading,
    interpret,
    SolveError,
    solve,
)
from .set_model import (
    MAX_UNIVERSE,
    PartialityError,
    SetAssignment,
    full_mask,
    set_text,
    value_set_text,
    submasks,
    set_eval,
    CorrespondenceRow,
    check_partiality_correspondence,
    CollapseVerdict,
    check_collapse,
    reading_extension,
)
from .proposition import (
    TruthTable,
    PropFormula,
    NonBinaryCoefficient,
    table_to_development,
    development_to_table,
    development_to_dnf,
    OpTable,
    OpTableRow,
    op_table,
    term_table,
)

__version__ = "0.1.0"

__all__ = [
    "Term", "Const", "Var", "Add", "Sub", "Mul", "Div", "ZERO", "ONE",
    "ParseError", "parse_term", "format_term", "free_vars", "as_term",
    "ExtValue", "ZERO_OVER_ZERO", "INFINITE", "DivisionPolicy",
    "DEFAULT_POLICY", "binary_assignments", "eval_sym", "eval_policy",
    "check_duality", "Verdict", "verify_equation",
    "DivisionUnsupportedError", "Constituent", "Development",
    "constituent_index", "index_assignment", "develop",
    "develop_by_intersections", "eval_development", "MultilinearPoly",
    "to_multilinear",
    "CoeffClass", "classify", "ClassReading", "interpret", "SolveError",
    "solve",
    "MAX_UNIVERSE", "PartialityError", "SetAssignment", "full_mask",
    "set_text", "value_set_text", "submasks", "set_eval",
    "CorrespondenceRow", "check_partiality_correspondence",
    "CollapseVerdict", "check_collapse", "reading_extension",
    "TruthTable", "PropFormula", "NonBinaryCoefficient",
    "table_to_development", "development_to_table", "development_to_dnf",
    "OpTable", "OpTableRow", "op_table", "term_table",
    "__version__",
]
