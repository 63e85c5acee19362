"""Lambda-calculus and mini-compilers laboratory."""

from .combinators import COMBINATORS, church, church_of, combinator, selector, tuple_term
from .parser import parse_term
from .printer import print_term, term_from_json, term_to_json
from .reduce import (
    BETA,
    BETA_ETA,
    DEFAULT_FUEL,
    FUEL_EXHAUSTED,
    KERNEL_NAME,
    NORMAL_FORM,
    ReductionTrace,
    Step,
    beta_eta_nf,
    beta_nf,
    normalize,
)
from .terms import Abs, App, Term, Var, alpha_eq, free_vars, size, substitute

__version__ = "0.1.0"

__all__ = [
    "Abs",
    "App",
    "BETA",
    "BETA_ETA",
    "COMBINATORS",
    "DEFAULT_FUEL",
    "FUEL_EXHAUSTED",
    "KERNEL_NAME",
    "NORMAL_FORM",
    "ReductionTrace",
    "Step",
    "Term",
    "Var",
    "alpha_eq",
    "beta_eta_nf",
    "beta_nf",
    "church",
    "church_of",
    "combinator",
    "free_vars",
    "normalize",
    "parse_term",
    "print_term",
    "selector",
    "size",
    "substitute",
    "term_from_json",
    "term_to_json",
    "tuple_term",
]
