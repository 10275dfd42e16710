from fractions import Fraction as Rat

from .expr import (
    DomainError,
    Expr,
    MissingBindingError,
    as_expr,
    const,
    eval_rational,
    eval_tropical,
    evaluate,
    expr_prod,
    expr_sum,
    substitute,
    valuation_probe,
    var,
)
from .laurent import LaurentFraction, LaurentPoly

__all__ = [
    "Rat", "LaurentPoly", "LaurentFraction", "Expr", "var", "const", "as_expr",
    "expr_sum", "expr_prod", "evaluate", "eval_rational", "eval_tropical",
    "valuation_probe", "substitute", "DomainError", "MissingBindingError",
]
