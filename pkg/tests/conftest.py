import random

from yablo.logic import And, Eq, Exists, Forall, Iff, Implies, Not, Or, Rel, Succ, Var

VARS = ["x", "y", "z", "u", "v1", "w_2"]


def random_term(rng: random.Random):
    t = Var(rng.choice(VARS))
    for _ in range(rng.choice([0, 0, 0, 1, 2])):
        t = Succ(t)
    return t


def random_formula(rng: random.Random, depth: int):
    """Random AST of depth <= ``depth`` over the full connective set."""
    if depth <= 1 or rng.random() < 0.2:
        if rng.random() < 0.5:
            return Rel(random_term(rng), random_term(rng))
        return Eq(random_term(rng), random_term(rng))
    kind = rng.randrange(7)
    if kind == 0:
        return Not(random_formula(rng, depth - 1))
    if kind in (1, 2, 3, 4):
        cls = (And, Or, Implies, Iff)[kind - 1]
        return cls(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
    cls = Forall if kind == 5 else Exists
    return cls(rng.choice(VARS), random_formula(rng, depth - 1))


def ast_depth(f) -> int:
    if isinstance(f, (Rel, Eq)):
        return 1
    if isinstance(f, (Not, Forall, Exists)):
        return 1 + ast_depth(f.body)
    return 1 + max(ast_depth(f.left), ast_depth(f.right))


# Lines reported by tests/test_acceptance.py, one per criterion.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
