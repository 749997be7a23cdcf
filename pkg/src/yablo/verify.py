"""Desk-scale replay of the Yablo/kernel results.

Each ``check_*`` function returns a :class:`Report` mapping check names to
pass/fail counts. A failing case carries its structure in edge-list form so it
can be replayed with the CLI.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .graph import (
    Digraph,
    GraphError,
    build,
    enumerate_all,
    format_edge_list,
    has_odd_closed_walk,
    random_digraph,
    witness_chain,
)
from .kernel import has_kernel_brute_force, is_kernel, kernel_for_odd_cycle_free, solve
from .logic import (
    Evaluator,
    Exists,
    Rel,
    Var,
    axiom,
    defined_set,
    no_odd_cycle,
    russell_sentence,
    theta,
    theta_set,
    yablo_instance,
)
from .successor import (
    SuccessorStructure,
    classify,
    cycle_multisets,
    even_index_kernel,
    fragment_satisfaction,
    kernel_exists_symbolic,
    realize,
)

MAX_THETA_INDEX = 5
MAX_EXHAUSTIVE_NODES = 4
MAX_Y1_NODES = 3
MAX_LEMMA_TOTAL = 12
MAX_COMPACTNESS_N = 100
SOLVER_CYCLE_LIMIT = 31
EVALUATOR_COMPACTNESS_LIMIT = 5
MAX_WITNESSES = 10

# The named fixture graphs; nodes a, b, c, d are 0, 1, 2, 3.
GRAPH1 = build(3, [(0, 1), (0, 2), (2, 2)])
GRAPH2 = build(3, [(0, 1), (1, 2), (2, 2)])
GRAPH3 = build(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3), (3, 3)])

COMPACTNESS_HEADER = (
    "A first-order sentence equivalent to the Yablo sentence would make "
    "S + {~exists x. s^(2n+1)(x) = x : n in N} finitely axiomatizable. "
    "Every finite fragment stops at some n = N, and the odd cycle C_(2N+3) "
    "satisfies that fragment while having no kernel, so no finite fragment "
    "axiomatizes the full theory."
)


class CapError(ValueError):
    """A verification parameter exceeds its desk-scale cap."""


def _cap(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise CapError(f"{name}={value} exceeds cap {limit}")
    if value < 0:
        raise CapError(f"{name}={value} must be non-negative")


@dataclass
class CheckResult:
    passed: int = 0
    failed: int = 0
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, what: str = "", graph: Digraph | None = None) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.witnesses) < MAX_WITNESSES:
                w: dict[str, Any] = {"what": what}
                if graph is not None:
                    w["graph"] = format_edge_list(graph)
                self.witnesses.append(w)
        return ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "fail": self.failed,
            "witnesses": self.witnesses,
            **({"details": self.details} if self.details else {}),
        }


@dataclass
class Report:
    suite: str
    params: dict[str, Any] = field(default_factory=dict)
    header: list[str] = field(default_factory=list)
    checks: dict[str, CheckResult] = field(default_factory=dict)

    def check(self, name: str) -> CheckResult:
        return self.checks.setdefault(name, CheckResult())

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    @property
    def failures(self) -> int:
        return sum(c.failed for c in self.checks.values())

    def merge(self, other: Report, prefix: str = "") -> None:
        self.header.extend(h for h in other.header if h not in self.header)
        for name, res in other.checks.items():
            self.checks[prefix + name] = res

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "header": self.header,
            "ok": self.ok,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        if self.params:
            lines.append("params: " + " ".join(f"{k}={v}" for k, v in self.params.items()))
        lines.extend(f"note: {h}" for h in self.header)
        for name, res in self.checks.items():
            status = "PASS" if res.ok else "FAIL"
            extra = "".join(f" {k}={v}" for k, v in res.details.items())
            lines.append(f"{status} {name} pass={res.passed} fail={res.failed}{extra}")
            for w in res.witnesses:
                lines.append(f"  witness: {w['what']}")
                if "graph" in w:
                    lines.extend("    " + ln for ln in w["graph"].splitlines())
        lines.append(
            f"summary: {len(self.checks)} checks, {self.failures} failures -> "
            + ("OK" if self.ok else "FAILED")
        )
        return "\n".join(lines) + "\n"


# -- fixtures ----------------------------------------------------------------


def _truths(g: Digraph) -> dict[str, bool]:
    ev = Evaluator(g)
    no_kernel = not solve(g).found
    return {
        "Y": no_kernel,
        "Y_bruteforce": not has_kernel_brute_force(g),
        "A1": ev.holds(axiom("A1")),
        "A2": ev.holds(axiom("A2")),
        "A": ev.holds(axiom("A")),
    }


def check_fixtures() -> Report:
    report = Report("fixtures")
    expected = {
        "graph1": (GRAPH1, {"Y": True, "A1": False, "A2": True}),
        "graph2": (GRAPH2, {"Y": True, "A1": True, "A2": False}),
        "graph3": (GRAPH3, {"A": True, "A2": False}),
    }
    for name, (g, want) in expected.items():
        observed = _truths(g)
        res = report.check(name)
        res.details["observed"] = {k: observed[k] for k in want}
        for key, value in want.items():
            res.record(observed[key] == value, f"{name}: {key} expected {value}", g)
        res.record(
            observed["Y"] == observed["Y_bruteforce"], f"{name}: solver vs brute force", g
        )
    # The Yablo sentence does not imply forall x. theta_0(x): graph1 is a model of one only.
    res = report.check("yablo_not_implies_theta0")
    obs = _truths(GRAPH1)
    res.record(obs["Y"] and not obs["A"], "graph1 should satisfy Y but not A", GRAPH1)
    return report


# -- theta hierarchy ---------------------------------------------------------


def small_graphs(max_nodes: int, min_nodes: int = 1) -> Iterator[Digraph]:
    for n in range(min_nodes, max_nodes + 1):
        yield from enumerate_all(n)


def sampled_graphs(samples: int, seed: int, lo: int = 5, hi: int = 10) -> Iterator[Digraph]:
    """``samples`` random digraphs with ``lo..hi`` nodes; edge density drawn per graph."""
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(lo, hi)
        p = rng.random()
        yield random_digraph(n, p, rng.randrange(2**32))


def check_theorem_thetas(
    max_n: int = 2,
    exhaustive_nodes: int = 3,
    samples: int = 200,
    seed: int = 0,
    sample_nodes: tuple[int, int] = (5, 10),
) -> Report:
    """Check that forall x theta_n forces no kernel and forall x theta_n+1, for
    n <= max_n, over small and sampled graphs. Strictness is checked on
    witness chains for n < max_n."""
    _cap("max_n", max_n, MAX_THETA_INDEX)
    _cap("exhaustive_nodes", exhaustive_nodes, MAX_EXHAUSTIVE_NODES)
    report = Report(
        "thetas",
        {"max_n": max_n, "exhaustive_nodes": exhaustive_nodes, "samples": samples, "seed": seed},
    )
    implies_y = [report.check(f"theta{k}_implies_Y") for k in range(max_n + 1)]
    monotone = [report.check(f"theta{k}_implies_theta{k + 1}") for k in range(max_n + 1)]
    antecedent = [0] * (max_n + 1)

    graphs: Iterable[Digraph] = small_graphs(exhaustive_nodes)
    if samples:
        graphs = itertools.chain(graphs, sampled_graphs(samples, seed, *sample_nodes))
    for g in graphs:
        full = [theta_set(g, k).is_full() for k in range(max_n + 2)]
        has_kernel = None
        for k in range(max_n + 1):
            if not full[k]:
                implies_y[k].record(True)
                monotone[k].record(True)
                continue
            antecedent[k] += 1
            if has_kernel is None:
                has_kernel = solve(g).found
            implies_y[k].record(not has_kernel, f"forall x theta{k} holds but a kernel exists", g)
            monotone[k].record(full[k + 1], f"forall x theta{k} holds but theta{k + 1} fails", g)
    for k in range(max_n + 1):
        implies_y[k].details["antecedent_held"] = antecedent[k]
        monotone[k].details["antecedent_held"] = antecedent[k]

    for k in range(max_n):
        res = report.check(f"theta{k + 1}_not_implies_theta{k}")
        chain = witness_chain(k + 1)
        ev = Evaluator(chain)
        upper = theta_set(chain, k + 1).is_full()
        lower = theta_set(chain, k).is_full()
        res.record(upper, f"witness_chain({k + 1}) should satisfy forall x theta{k + 1}", chain)
        res.record(not lower, f"witness_chain({k + 1}) should falsify forall x theta{k}", chain)
        res.record(
            ev.holds(theta(k + 1), {"x": 0}) and not ev.holds(theta(k), {"x": 0}),
            f"evaluator disagrees at node 0 of witness_chain({k + 1})",
            chain,
        )
    return report


# -- successor lemma ---------------------------------------------------------


def check_lemma(max_total: int = MAX_LEMMA_TOTAL) -> Report:
    _cap("max_total", max_total, MAX_LEMMA_TOTAL)
    report = Report("lemma", {"max_total": max_total})
    verdict = report.check("solver_matches_no_odd_cycle")
    brute = report.check("bruteforce_matches_no_odd_cycle")
    parity = report.check("odd_walk_detector_matches")
    construction = report.check("even_index_construction_is_kernel")
    fragments = report.check("axioms_match_no_odd_cycle")
    structures = 0
    for s in cycle_multisets(max_total):
        structures += 1
        g = realize(s)
        symbolic = kernel_exists_symbolic(s)
        verdict.record(solve(g).found == symbolic, f"{s}: solver disagrees with parity rule", g)
        brute.record(has_kernel_brute_force(g) == symbolic, f"{s}: brute force disagrees", g)
        parity.record(has_odd_closed_walk(g) != symbolic, f"{s}: odd-walk detector disagrees", g)
        # cycles have length <= max_total, so k up to max_total covers every odd period
        fragments.record(
            fragment_satisfaction(s, max_total) == symbolic, f"{s}: axiom fragment mismatch", g
        )
        if symbolic:
            ok = is_kernel(g, even_index_kernel(s)) and is_kernel(g, kernel_for_odd_cycle_free(g))
            construction.record(ok, f"{s}: even-index set is not a kernel", g)
    verdict.details["structures"] = structures
    return report


# -- compactness -------------------------------------------------------------


def compactness_demo(N: int) -> Report:
    """The odd cycle C_(2N+3) satisfies S and no_odd_cycle(k) for k <= N yet has no kernel."""
    _cap("N", N, MAX_COMPACTNESS_N)
    m = 2 * N + 3
    s = SuccessorStructure((m,))
    g = realize(s)
    report = Report("compactness", {"N": N, "cycle": m}, [COMPACTNESS_HEADER])
    tag = f"C{m}"

    res = report.check(f"{tag}.satisfies_S")
    try:
        res.record(classify(g) == s, f"{tag} does not classify as a single cycle", g)
    except GraphError as exc:
        res.record(False, f"{tag}: {exc}", g)
    if N <= EVALUATOR_COMPACTNESS_LIMIT:
        res.record(Evaluator(g).holds(axiom("S")), f"{tag}: evaluator rejects S", g)

    res = report.check(f"{tag}.satisfies_fragment")
    res.record(fragment_satisfaction(s, N), f"{tag}: arithmetic says a fragment axiom fails", g)
    res.record(
        not fragment_satisfaction(s, N + 1),
        f"{tag}: should violate no_odd_cycle({N + 1}), so it is no model of the full theory",
        g,
    )
    if N <= EVALUATOR_COMPACTNESS_LIMIT:
        ev = Evaluator(g)
        for k in range(N + 1):
            res.record(ev.holds(no_odd_cycle(k)), f"{tag}: evaluator rejects no_odd_cycle({k})", g)
        res.record(
            not ev.holds(no_odd_cycle(N + 1)),
            f"{tag}: evaluator accepts no_odd_cycle({N + 1})",
            g,
        )

    res = report.check(f"{tag}.no_kernel")
    res.record(not kernel_exists_symbolic(s), f"{tag}: symbolic verdict says kernel exists", g)
    if m <= SOLVER_CYCLE_LIMIT:
        res.record(not solve(g).found, f"{tag}: solver found a kernel", g)
    res.details["solver_used"] = m <= SOLVER_CYCLE_LIMIT
    return report


def compactness_sweep(max_N: int = MAX_COMPACTNESS_N) -> Report:
    _cap("max_N", max_N, MAX_COMPACTNESS_N)
    report = Report("compactness", {"max_N": max_N}, [COMPACTNESS_HEADER])
    for N in range(max_N + 1):
        report.merge(compactness_demo(N))
    return report


# -- first-order scheme and Russell ------------------------------------------


def y1_family() -> dict[str, Any]:
    x, y = Var("x"), Var("y")
    return {
        "theta0": theta(0),
        "theta1": theta(1),
        "R(x,x)": Rel(x, x),
        "exists y. R(x,y)": Exists("y", Rel(x, y)),
    }


def check_scheme_y1(exhaustive_nodes: int = MAX_Y1_NODES) -> Report:
    """A1 & A2 -> Y1(phi) and A -> Y1(phi) for each phi in the family, plus the
    reading of Y1(phi) as 'the set defined by phi is not a kernel'."""
    _cap("exhaustive_nodes", exhaustive_nodes, MAX_Y1_NODES)
    report = Report("y1", {"exhaustive_nodes": exhaustive_nodes})
    family = y1_family()
    instances = {name: yablo_instance(phi) for name, phi in family.items()}
    a1, a2, a = axiom("A1"), axiom("A2"), axiom("A")
    for g in small_graphs(exhaustive_nodes):
        ev = Evaluator(g)
        trans_total = ev.holds(a1) and ev.holds(a2)
        weak = ev.holds(a)
        for name, inst in instances.items():
            holds = ev.holds(inst)
            report.check(f"A1&A2->Y1[{name}]").record(
                not trans_total or holds, f"A1 & A2 hold but Y1[{name}] fails", g
            )
            report.check(f"A->Y1[{name}]").record(
                not weak or holds, f"A holds but Y1[{name}] fails", g
            )
            kernel = is_kernel(g, defined_set(g, family[name]))
            report.check(f"Y1[{name}]<->not_kernel").record(
                holds != kernel, f"Y1[{name}] disagrees with the kernel test", g
            )
    return report


def check_russell(max_n: int = 3) -> Report:
    _cap("max_n", max_n, MAX_EXHAUSTIVE_NODES)
    report = Report("russell", {"max_n": max_n})
    sentence = russell_sentence()
    res = report.check("russell_valid")
    for g in small_graphs(max_n):
        res.record(Evaluator(g).holds(sentence), "Russell sentence fails", g)
    return report


# -- suites ------------------------------------------------------------------

SUITES = ("fixtures", "thetas", "lemma", "compactness", "y1", "all")


def run_suite(
    name: str,
    *,
    max_n: int = 2,
    exhaustive_nodes: int = 3,
    samples: int = 200,
    seed: int = 0,
    max_total: int = MAX_LEMMA_TOTAL,
    N: int | None = None,
    max_N: int = MAX_COMPACTNESS_N,
) -> Report:
    if name == "fixtures":
        return check_fixtures()
    if name == "thetas":
        return check_theorem_thetas(max_n, exhaustive_nodes, samples, seed)
    if name == "lemma":
        return check_lemma(max_total)
    if name == "compactness":
        return compactness_demo(N) if N is not None else compactness_sweep(max_N)
    if name == "y1":
        report = check_scheme_y1(exhaustive_nodes)
        report.merge(check_russell(exhaustive_nodes), "russell.")
        return report
    if name == "all":
        kwargs = dict(
            max_n=max_n, exhaustive_nodes=exhaustive_nodes, samples=samples, seed=seed,
            max_total=max_total, N=N, max_N=max_N,
        )
        report = Report("all", {k: v for k, v in kwargs.items() if v is not None})
        for sub in SUITES[:-1]:
            sub_kwargs = dict(kwargs)
            if sub == "y1":
                sub_kwargs["exhaustive_nodes"] = min(exhaustive_nodes, MAX_Y1_NODES)
            report.merge(run_suite(sub, **sub_kwargs), f"{sub}.")
        return report
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
