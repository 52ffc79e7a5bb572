"""A small term language for compact closed categories."""
from .equality import RandomEval, Verdict, terms_equal
from .semantics import (
    Env,
    TermTypeError,
    UnboundGenerator,
    elaborate,
    env_with,
    eval_term,
    load_program,
    push_daggers,
    random_model,
    typecheck,
)
from .syntax import TermSyntaxError, parse, parse_object, parse_program, show
from .wiring import Wiring, wiring_normal_form

__all__ = [
    "Env", "RandomEval", "TermSyntaxError", "TermTypeError", "UnboundGenerator",
    "Verdict", "Wiring", "elaborate", "env_with", "eval_term", "load_program",
    "parse", "parse_object", "parse_program", "push_daggers", "random_model",
    "show", "terms_equal", "typecheck", "wiring_normal_form",
]
