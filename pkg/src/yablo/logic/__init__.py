"""Formula language over {R, s, =}: syntax, parser, evaluator and scheme builders."""

from .parser import FormulaSyntaxError, parse, parse_term
from .schemes import (
    axiom,
    no_odd_cycle,
    russell_sentence,
    russell_validity_check,
    theta,
    translate_to_successor,
    yablo_instance,
)
from .semantics import EvaluationError, Evaluator, compile_formula, defined_set, evaluate, theta_set, theta_universal
from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Rel,
    Succ,
    Term,
    Var,
    free_vars,
    is_sentence,
    substitute,
    unparse,
    unparse_term,
)

__all__ = [
    "And", "Eq", "EvaluationError", "Evaluator", "Exists", "Forall", "Formula",
    "FormulaSyntaxError", "Iff", "Implies", "Not", "Or", "Rel", "Succ", "Term", "Var",
    "axiom", "compile_formula", "defined_set", "evaluate", "free_vars", "is_sentence", "no_odd_cycle",
    "parse", "parse_term", "russell_sentence", "russell_validity_check", "substitute",
    "theta", "theta_set", "theta_universal", "translate_to_successor", "unparse",
    "unparse_term", "yablo_instance",
]
