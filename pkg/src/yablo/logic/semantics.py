"""Tarskian satisfaction of formulas in finite digraphs.

``R`` is the edge relation; ``s`` is the unique out-neighbor, so any formula
mentioning ``s`` requires a functional graph. Quantifiers range over
``0..n-1``; on the empty domain universals are true and existentials false.

Formulas are compiled once into nested closures over an environment list
(one slot per variable name), then run against any number of graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

from ..graph import Digraph, VertexSet
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
    all_vars,
    free_vars,
    mentions_succ,
)


class EvaluationError(ValueError):
    pass


_node_ids = itertools.count()


@dataclass(frozen=True)
class Plan:
    formula: Formula
    run: Callable[["Evaluator", list], bool]
    slots: dict[str, int]
    free: frozenset[str]
    uses_succ: bool


def _compile_term(t: Term, slots: dict[str, int]):
    if isinstance(t, Var):
        i = slots[t.name]
        return lambda ctx, env: env[i]
    inner = _compile_term(t.arg, slots)
    return lambda ctx, env: ctx.s[inner(ctx, env)]


def _compile(f: Formula, slots: dict[str, int]):
    if isinstance(f, Rel):
        left, right = _compile_term(f.left, slots), _compile_term(f.right, slots)
        return lambda ctx, env: ctx.adj[left(ctx, env)] >> right(ctx, env) & 1 == 1
    if isinstance(f, Eq):
        left, right = _compile_term(f.left, slots), _compile_term(f.right, slots)
        return lambda ctx, env: left(ctx, env) == right(ctx, env)
    if isinstance(f, Not):
        body = _compile(f.body, slots)
        return lambda ctx, env: not body(ctx, env)
    if isinstance(f, (And, Or, Implies, Iff)):
        a, b = _compile(f.left, slots), _compile(f.right, slots)
        if isinstance(f, And):
            return lambda ctx, env: a(ctx, env) and b(ctx, env)
        if isinstance(f, Or):
            return lambda ctx, env: a(ctx, env) or b(ctx, env)
        if isinstance(f, Implies):
            return lambda ctx, env: not a(ctx, env) or b(ctx, env)
        return lambda ctx, env: a(ctx, env) == b(ctx, env)

    # Quantifier: memoize on the values of the free variables, which keeps
    # nested definitions like theta_n polynomial instead of exponential.
    body = _compile(f.body, slots)
    slot = slots[f.var]
    free_slots = tuple(slots[v] for v in sorted(free_vars(f)))
    node = next(_node_ids)
    want = isinstance(f, Exists)

    def quantifier(ctx, env):
        key = (node,) + tuple(env[i] for i in free_slots)
        memo = ctx.memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        saved = env[slot]
        result = not want
        for value in range(ctx.n):
            env[slot] = value
            if body(ctx, env) == want:
                result = want
                break
        env[slot] = saved
        memo[key] = result
        return result

    return quantifier


# Keyed by id(); each entry keeps its formula alive, so an id cannot be reused
# while its entry exists. Hashing the formula itself would walk the whole tree.
_plans: dict[int, Plan] = {}
_MAX_PLANS = 4096


def compile_formula(f: Formula) -> Plan:
    plan = _plans.get(id(f))
    if plan is not None and plan.formula is f:
        return plan
    if len(_plans) >= _MAX_PLANS:
        _plans.clear()
    slots = {name: i for i, name in enumerate(sorted(all_vars(f)))}
    plan = Plan(f, _compile(f, slots), slots, free_vars(f), mentions_succ(f))
    _plans[id(f)] = plan
    return plan


class Evaluator:
    """Evaluates formulas in one fixed graph, sharing a memo across calls."""

    def __init__(self, g: Digraph):
        self.g = g
        self.n = g.n
        self.adj = g.succ_masks
        self.s = [row[0] for row in g.succ] if g.is_functional() else None
        self.memo: dict[tuple, bool] = {}

    def holds(self, f: Formula, env: Mapping[str, int] | None = None) -> bool:
        plan = compile_formula(f)
        env = env or {}
        missing = plan.free - env.keys()
        if missing:
            raise EvaluationError(f"unbound free variable(s): {', '.join(sorted(missing))}")
        if plan.uses_succ and self.s is None:
            raise EvaluationError("formula mentions s but the graph is not functional")
        values: list = [None] * len(plan.slots)
        for name, value in env.items():
            if name in plan.slots:
                if not 0 <= value < self.n:
                    raise EvaluationError(f"{name}={value} is not a node of the graph")
                values[plan.slots[name]] = value
        return plan.run(self, values)


def evaluate(g: Digraph, f: Formula, env: Mapping[str, int] | None = None) -> bool:
    return Evaluator(g).holds(f, env)


def defined_set(g: Digraph, phi: Formula, var: str | None = None) -> VertexSet:
    """``{v : g |= phi[var := v]}`` for a formula with one free variable."""
    fv = free_vars(phi)
    if var is None:
        if len(fv) != 1:
            raise EvaluationError(f"expected exactly one free variable, found {sorted(fv)}")
        (var,) = fv
    ev = Evaluator(g)
    return VertexSet.of(g.n, (v for v in g.nodes if ev.holds(phi, {var: v})))


def theta_set(g: Digraph, n: int) -> VertexSet:
    """Nodes satisfying theta_n, computed level by level with bitmasks.

    Level 0 keeps x when some out-neighbor y has all of its out-neighbors
    among x's; level k+1 keeps x when some out-neighbor y has all of its
    out-neighbors in level k.
    """
    if n < 0:
        raise ValueError(f"theta index must be non-negative, got {n}")
    adj = g.succ_masks
    current = 0
    for x in g.nodes:
        if any(adj[y] & ~adj[x] == 0 for y in g.succ[x]):
            current |= 1 << x
    for _ in range(n):
        nxt = 0
        for x in g.nodes:
            if any(adj[y] & ~current == 0 for y in g.succ[x]):
                nxt |= 1 << x
        current = nxt
    return VertexSet.from_mask(g.n, current)


def theta_universal(g: Digraph, n: int) -> bool:
    """Whether ``forall x. theta_n(x)`` holds in ``g``."""
    return theta_set(g, n).is_full()
