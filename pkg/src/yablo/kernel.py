"""Kernels of finite digraphs.

A kernel is a set K with x in K exactly when no out-neighbor of x is in K;
a finite graph satisfies the Yablo sentence iff it has no kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Digraph, GraphError, VertexSet, topological_order

MAX_BRUTE_FORCE_NODES = 20


@dataclass
class SolveStats:
    nodes_visited: int = 0
    decisions: int = 0
    propagations: int = 0


@dataclass
class SolveResult:
    kernel: VertexSet | None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def found(self) -> bool:
        return self.kernel is not None

    def __str__(self) -> str:
        return f"KERNEL {self.kernel}" if self.found else "NO-KERNEL"


def is_kernel(g: Digraph, k: VertexSet) -> bool:
    if k.n != g.n:
        raise GraphError(f"vertex set is bound to n={k.n}, graph has n={g.n}")
    mask = k.mask
    return all(bool(mask >> x & 1) == (g.succ_masks[x] & mask == 0) for x in g.nodes)


def kernel_masks(g: Digraph) -> np.ndarray:
    """Bitmasks of all kernels in increasing order, by testing every subset."""
    if g.n > MAX_BRUTE_FORCE_NODES:
        raise GraphError(
            f"brute force over 2^{g.n} subsets refused; cap is {MAX_BRUTE_FORCE_NODES} nodes"
        )
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for x in g.nodes:
        inside = (masks >> x) & 1 == 1
        blocked = masks & g.succ_masks[x] != 0
        ok &= inside != blocked
    return masks[ok]


def brute_force_kernels(g: Digraph) -> list[VertexSet]:
    return [VertexSet.from_mask(g.n, int(m)) for m in kernel_masks(g)]


def has_kernel_brute_force(g: Digraph) -> bool:
    return kernel_masks(g).size > 0


class _Search:
    """Unit propagation plus chronological backtracking over one boolean per node.

    Clauses: for every edge (u, v), ~k_u | ~k_v; for every node u,
    k_u | k_v for v among u's out-neighbors. A literal is ``(node, polarity)``.
    """

    def __init__(self, g: Digraph):
        self.g = g
        self.n = g.n
        clauses: list[tuple[tuple[int, bool], ...]] = []
        for u, v in g.edges:
            clauses.append(((u, False),) if u == v else ((u, False), (v, False)))
        for u in g.nodes:
            # a loop contributes nothing: k_u | k_u is subsumed
            clauses.append(((u, True),) + tuple((v, True) for v in g.succ[u] if v != u))
        self.clauses = clauses
        self.watch: list[list[int]] = [[] for _ in range(self.n)]
        for ci, clause in enumerate(clauses):
            for var in {lit[0] for lit in clause}:
                self.watch[var].append(ci)
        self.value: list[bool | None] = [None] * self.n
        self.trail: list[int] = []
        self.stats = SolveStats()

    def assign(self, var: int, val: bool, queue: list[int]) -> None:
        self.value[var] = val
        self.trail.append(var)
        queue.append(var)

    def undo_to(self, size: int) -> None:
        while len(self.trail) > size:
            self.value[self.trail.pop()] = None

    def check_clause(self, ci: int, queue: list[int]) -> bool:
        """Returns False on conflict; assigns the last open literal of a unit clause."""
        open_lit = None
        n_open = 0
        for var, pol in self.clauses[ci]:
            val = self.value[var]
            if val is None:
                n_open += 1
                open_lit = (var, pol)
            elif val == pol:
                return True
        if n_open == 0:
            return False
        if n_open == 1:
            self.stats.propagations += 1
            self.assign(open_lit[0], open_lit[1], queue)
        return True

    def propagate(self, queue: list[int]) -> bool:
        while queue:
            var = queue.pop()
            for ci in self.watch[var]:
                if not self.check_clause(ci, queue):
                    return False
        return True

    def initial(self) -> bool:
        queue: list[int] = []
        for ci, clause in enumerate(self.clauses):
            if len(clause) == 1:
                if not self.check_clause(ci, queue):
                    return False
        return self.propagate(queue)

    def run(self) -> VertexSet | None:
        if not self.initial():
            return None
        self.stats.nodes_visited += 1
        # (trail size before the decision, node, whether the True branch is active)
        decisions: list[tuple[int, int, bool]] = []
        queue: list[int] = []
        next_free = 0
        while True:
            while next_free < self.n and self.value[next_free] is not None:
                next_free += 1
            if next_free == self.n:
                return VertexSet.of(self.n, (v for v in range(self.n) if self.value[v]))
            decisions.append((len(self.trail), next_free, True))
            self.stats.decisions += 1
            self.stats.nodes_visited += 1
            self.assign(next_free, True, queue)
            while not self.propagate(queue):
                queue.clear()
                while decisions and not decisions[-1][2]:
                    decisions.pop()
                if not decisions:
                    return None
                size, var, _ = decisions.pop()
                self.undo_to(size)
                decisions.append((size, var, False))
                self.stats.nodes_visited += 1
                self.assign(var, False, queue)
                next_free = min(next_free, var)


def solve(g: Digraph) -> SolveResult:
    """Find a kernel by propagation and backtracking, or prove none exists."""
    search = _Search(g)
    kernel = search.run()
    if kernel is not None:
        assert is_kernel(g, kernel), "search returned a non-kernel"
    return SolveResult(kernel, search.stats)


def kernel_for_odd_cycle_free(g: Digraph) -> VertexSet:
    """Build a kernel directly for an acyclic graph or an odd-cycle-free functional graph.

    Acyclic: sweep in reverse topological order, putting a node in unless one
    of its out-neighbors is already in. Functional: on every cycle take the
    nodes at even distance from its lowest-index node, then fill the trees
    hanging off the cycles so that x is in iff its successor is out.
    """
    order = topological_order(g)
    if order is not None:
        inside = 0
        for u in reversed(order):
            if g.succ_masks[u] & inside == 0:
                inside |= 1 << u
        return VertexSet.from_mask(g.n, inside)

    bad = next((u for u in g.nodes if g.out_degree(u) != 1), None)
    if bad is not None:
        raise GraphError(
            f"graph is cyclic and not functional: node {bad} has out-degree {g.out_degree(bad)}"
        )
    cycle = find_odd_cycle_functional(g)
    if cycle is not None:
        raise GraphError(f"graph has an odd cycle: {' -> '.join(map(str, cycle))}")

    member: list[bool | None] = [None] * g.n
    for start, length in functional_cycles(g):
        v = start
        for i in range(length):
            member[v] = i % 2 == 0
            v = g.successor(v)
    for u in g.nodes:
        path = []
        v = u
        while member[v] is None:
            path.append(v)
            v = g.successor(v)
        for w in reversed(path):
            member[w] = not member[g.successor(w)]
    return VertexSet.of(g.n, (v for v in g.nodes if member[v]))


def functional_cycles(g: Digraph) -> list[tuple[int, int]]:
    """(lowest node, length) for each cycle of a functional graph, by lowest node."""
    state = [0] * g.n  # 0 unseen, 1 on current walk, 2 done
    found = []
    for root in g.nodes:
        walk = []
        v = root
        while state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = g.successor(v)
        if state[v] == 1:
            cyc = walk[walk.index(v):]
            found.append((min(cyc), len(cyc)))
        for w in walk:
            state[w] = 2
    return sorted(found)


def find_odd_cycle_functional(g: Digraph) -> list[int] | None:
    for start, length in functional_cycles(g):
        if length % 2 == 1:
            cyc = [start]
            for _ in range(length):
                cyc.append(g.successor(cyc[-1]))
            return cyc
    return None


__all__ = [
    "SolveResult",
    "SolveStats",
    "brute_force_kernels",
    "has_kernel_brute_force",
    "is_kernel",
    "kernel_for_odd_cycle_free",
    "kernel_masks",
    "solve",
]
