"""Builders for the concrete formulas and schemes the workbench checks."""

from __future__ import annotations

import re

from ..graph import GraphError, enumerate_all
from .semantics import Evaluator
from .syntax import (
    And,
    Binary,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Quantifier,
    Rel,
    Succ,
    Var,
    all_vars,
    exists,
    forall,
    fresh_var,
    free_vars,
    iterate_succ,
    mentions_succ,
    substitute,
)

x, y, z = Var("x"), Var("y"), Var("z")


def theta(n: int, var: str = "x") -> Formula:
    """theta_n with free variable ``var``.

    The innermost level binds ``y``/``z``; level k above it binds ``yk``/``zk``.
    Every level's names are distinct, so no substitution can capture.
    """
    if n < 0:
        raise ValueError(f"theta index must be non-negative, got {n}")
    f = Exists("y", And(Rel(x, y), Forall("z", Implies(Rel(y, z), Rel(x, z)))))
    for k in range(1, n + 1):
        yk, zk = Var(f"y{k}"), Var(f"z{k}")
        inner = substitute(f, "x", zk)
        f = Exists(yk.name, And(Rel(x, yk), Forall(zk.name, Implies(Rel(yk, zk), inner))))
    return f if var == "x" else substitute(f, "x", Var(var))


_NO_ODD_CYCLE = re.compile(r"no_odd_cycle\((\d+)\)\Z")


def no_odd_cycle(k: int) -> Formula:
    """~exists x. s^(2k+1)(x) = x"""
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    return Not(Exists("x", Eq(iterate_succ(x, 2 * k + 1), x)))


def axiom(name: str) -> Formula:
    """Named sentence: ``A1``, ``A2``, ``A``, ``S`` or ``no_odd_cycle(k)``."""
    if name == "A1":
        return forall("x", exists("y", Rel(x, y)))
    if name == "A2":
        return forall("x y z", Implies(And(Rel(x, y), Rel(y, z)), Rel(x, z)))
    if name == "A":
        return Forall("x", theta(0))
    if name == "S":
        return forall("x y", Implies(Eq(Succ(x), Succ(y)), Eq(x, y)))
    m = _NO_ODD_CYCLE.match(name)
    if m:
        return no_odd_cycle(int(m.group(1)))
    raise ValueError(f"unknown axiom {name!r}; expected A1, A2, A, S or no_odd_cycle(k)")


def yablo_instance(phi: Formula) -> Formula:
    """~forall x. (phi(x) <-> forall y. (R(x,y) -> ~phi(y))) for a one-variable phi."""
    fv = free_vars(phi)
    if len(fv) != 1:
        raise ValueError(f"phi must have exactly one free variable, found {sorted(fv)}")
    (v,) = fv
    other = fresh_var(all_vars(phi), "y")
    phi_other = substitute(phi, v, Var(other))
    return Not(
        Forall(v, Iff(phi, Forall(other, Implies(Rel(Var(v), Var(other)), Not(phi_other)))))
    )


def translate_to_successor(f: Formula) -> Formula:
    """Rewrite every atom R(t1,t2) as s(t1) = t2."""
    if mentions_succ(f):
        raise ValueError("formula already mentions s; refusing to translate twice")
    return _translate(f)


def _translate(f: Formula) -> Formula:
    if isinstance(f, Rel):
        return Eq(Succ(f.left), f.right)
    if isinstance(f, Eq):
        return f
    if isinstance(f, Not):
        return Not(_translate(f.body))
    if isinstance(f, Binary):
        return type(f)(_translate(f.left), _translate(f.right))
    assert isinstance(f, Quantifier)
    return type(f)(f.var, _translate(f.body))


def russell_sentence() -> Formula:
    """~exists y. forall x. (R(y,x) <-> ~R(x,x))"""
    return Not(Exists("y", Forall("x", Iff(Rel(y, x), Not(Rel(x, x))))))


def russell_validity_check(max_n: int) -> bool:
    """Check the Russell/Barber sentence in every digraph on 1..max_n nodes."""
    if max_n > 4:
        raise GraphError(f"refusing exhaustive check above 4 nodes, got {max_n}")
    sentence = russell_sentence()
    return all(
        Evaluator(g).holds(sentence) for n in range(1, max_n + 1) for g in enumerate_all(n)
    )
