"""First-order terms and formulas over the signature {R, s, =}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

KEYWORDS = frozenset({"forall", "exists", "s", "R"})


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Succ:
    arg: Term


Term = Union[Var, Succ]


@dataclass(frozen=True)
class Rel:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


Formula = Union[Rel, Eq, Not, And, Or, Implies, Iff, Forall, Exists]
Atom = (Rel, Eq)
Binary = (And, Or, Implies, Iff)
Quantifier = (Forall, Exists)


def iterate_succ(term: Term, k: int) -> Term:
    """``s`` applied ``k`` times."""
    for _ in range(k):
        term = Succ(term)
    return term


def forall(names: str, body: Formula) -> Formula:
    """Nest universals over space-separated ``names``, outermost first."""
    for name in reversed(names.split()):
        body = Forall(name, body)
    return body


def exists(names: str, body: Formula) -> Formula:
    for name in reversed(names.split()):
        body = Exists(name, body)
    return body


# -- structural queries ------------------------------------------------------


def term_vars(t: Term) -> set[str]:
    while isinstance(t, Succ):
        t = t.arg
    return {t.name}


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset(term_vars(f.left) | term_vars(f.right))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, Binary):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def all_vars(f: Formula) -> set[str]:
    """Every variable name occurring in ``f``, free or bound."""
    if isinstance(f, Atom):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, Binary):
        return all_vars(f.left) | all_vars(f.right)
    return all_vars(f.body) | {f.var}


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not) or isinstance(f, Quantifier):
        yield from subformulas(f.body)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def _term_has_succ(t: Term) -> bool:
    return isinstance(t, Succ)


def mentions_succ(f: Formula) -> bool:
    return any(
        isinstance(g, Atom) and (_term_has_succ(g.left) or _term_has_succ(g.right))
        for g in subformulas(f)
    )


def mentions_equality(f: Formula) -> bool:
    return any(isinstance(g, Eq) for g in subformulas(f))


def fresh_var(avoid: set[str] | frozenset[str], base: str = "v") -> str:
    if base not in avoid and base not in KEYWORDS:
        return base
    for i in itertools.count(1):
        name = f"{base}{i}"
        if name not in avoid:
            return name
    raise AssertionError("unreachable")


# -- substitution ------------------------------------------------------------


def _subst_term(t: Term, name: str, repl: Term) -> Term:
    if isinstance(t, Succ):
        return Succ(_subst_term(t.arg, name, repl))
    return repl if t.name == name else t


def substitute(f: Formula, name: str, repl: Term) -> Formula:
    """Replace free occurrences of variable ``name`` by ``repl``, renaming binders to avoid capture."""
    if isinstance(f, Atom):
        return type(f)(_subst_term(f.left, name, repl), _subst_term(f.right, name, repl))
    if isinstance(f, Not):
        return Not(substitute(f.body, name, repl))
    if isinstance(f, Binary):
        return type(f)(substitute(f.left, name, repl), substitute(f.right, name, repl))
    if f.var == name or name not in free_vars(f.body):
        return f
    incoming = term_vars(repl)
    if f.var in incoming:
        new = fresh_var(all_vars(f.body) | incoming | {name}, f.var)
        body = substitute(f.body, f.var, Var(new))
        return type(f)(new, substitute(body, name, repl))
    return type(f)(f.var, substitute(f.body, name, repl))


# -- unparsing ---------------------------------------------------------------

# Binding strength; quantifiers bind weakest because their body extends to the right.
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_UNARY = 5


def unparse_term(t: Term) -> str:
    if isinstance(t, Succ):
        return f"s({unparse_term(t.arg)})"
    return t.name


def _prec(f: Formula) -> int:
    if isinstance(f, Quantifier):
        return 0
    return _PREC.get(type(f), _UNARY)


def _render(f: Formula, need: int, tail: bool) -> str:
    """Render ``f`` where the context requires binding strength ``need``.

    ``tail`` says nothing follows ``f`` inside the current bracket, which is
    the only place a bare quantifier may appear.
    """
    if isinstance(f, Quantifier):
        if not tail:
            return "(" + _render(f, 0, True) + ")"
        kw = "forall" if isinstance(f, Forall) else "exists"
        if isinstance(f.body, Binary):
            body = "(" + _render(f.body, 0, True) + ")"
        else:
            body = _render(f.body, 0, True)
        return f"{kw} {f.var}. {body}"
    if _prec(f) < need:
        return "(" + _render(f, 0, True) + ")"
    if isinstance(f, Rel):
        return f"R({unparse_term(f.left)},{unparse_term(f.right)})"
    if isinstance(f, Eq):
        return f"{unparse_term(f.left)} = {unparse_term(f.right)}"
    if isinstance(f, Not):
        return "~" + _render(f.body, _UNARY, tail)
    p = _PREC[type(f)]
    if isinstance(f, Implies):
        left_need, right_need = p + 1, p
    else:
        left_need, right_need = p, p + 1
    left = _render(f.left, left_need, False)
    right = _render(f.right, right_need, tail)
    return f"{left} {_SYMBOL[type(f)]} {right}"


def unparse(f: Formula) -> str:
    """Concrete syntax accepted by :func:`yablo.logic.parser.parse`."""
    return _render(f, 0, True)
