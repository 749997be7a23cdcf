"""Finite directed graphs on dense node indices, plus generators and odd-cycle detection."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ENUMERATION_NODES = 4


class GraphError(ValueError):
    """Raised for malformed graphs, vertex sets, or edge-list files."""


@dataclass(frozen=True)
class Digraph:
    """Directed graph on nodes ``0..n-1`` with sorted, duplicate-free out-neighbor lists.

    Use :func:`build` rather than calling the constructor directly; the
    constructor only validates, it does not canonicalize.
    """

    n: int
    succ: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"node count must be non-negative, got {self.n}")
        if len(self.succ) != self.n:
            raise GraphError(f"expected {self.n} adjacency lists, got {len(self.succ)}")
        for u, row in enumerate(self.succ):
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise GraphError(f"adjacency list of {u} is not sorted and duplicate-free")
            for v in row:
                if not 0 <= v < self.n:
                    raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, row in enumerate(self.succ) for v in row)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            rows[v].append(u)
        return tuple(tuple(r) for r in rows)

    @cached_property
    def succ_masks(self) -> tuple[int, ...]:
        """Out-neighborhoods as integer bitmasks (bit v set iff u -> v)."""
        return tuple(sum(1 << v for v in row) for row in self.succ)

    @cached_property
    def mask(self) -> int:
        """Adjacency matrix as a bitmask; bit ``u*n + v`` is the edge (u, v)."""
        return sum(1 << (u * self.n + v) for u, v in self.edges)

    @property
    def nodes(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.succ_masks[u] >> v & 1)

    def out_degree(self, u: int) -> int:
        return len(self.succ[u])

    def in_degree(self, v: int) -> int:
        return len(self.pred[v])

    def is_functional(self) -> bool:
        """True iff every node has out-degree exactly 1."""
        return all(len(row) == 1 for row in self.succ)

    def successor(self, u: int) -> int:
        row = self.succ[u]
        if len(row) != 1:
            raise GraphError(f"node {u} has out-degree {len(row)}, successor undefined")
        return row[0]

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexSet:
    """A set of node indices bound to a node count ``n``."""

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = [v for v in self.members if not 0 <= v < self.n]
        if bad:
            raise GraphError(f"vertex {min(bad)} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> VertexSet:
        return cls(n, frozenset(members))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> VertexSet:
        return cls(n, frozenset(v for v in range(n) if mask >> v & 1))

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, frozenset(range(n)))

    @cached_property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def is_full(self) -> bool:
        return len(self.members) == self.n

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted())) + "}"


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> Digraph:
    """Build a canonical digraph; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    rows: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        rows[u].add(v)
    return Digraph(n, tuple(tuple(sorted(r)) for r in rows))


def from_mask(n: int, mask: int) -> Digraph:
    return Digraph(
        n,
        tuple(tuple(v for v in range(n) if mask >> (u * n + v) & 1) for u in range(n)),
    )


def enumerate_all(n: int) -> Iterator[Digraph]:
    """Yield every labeled digraph on ``n`` nodes (loops allowed) in bitmask order."""
    if n > MAX_ENUMERATION_NODES:
        raise GraphError(
            f"refusing to enumerate 2^{n * n} digraphs; cap is n={MAX_ENUMERATION_NODES}"
        )
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    for mask in range(1 << (n * n)):
        yield from_mask(n, mask)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return build(n, [(u, v) for u in range(n) for v in range(n) if rng.random() < p])


def witness_chain(n: int) -> Digraph:
    """Path 0 -> 1 -> ... -> 2n ending in a loop at 2n."""
    if n < 0:
        raise GraphError(f"chain index must be non-negative, got {n}")
    last = 2 * n
    return build(last + 1, [(i, i + 1) for i in range(last)] + [(last, last)])


def directed_cycle(m: int) -> Digraph:
    if m < 1:
        raise GraphError(f"cycle length must be positive, got {m}")
    return build(m, [(i, (i + 1) % m) for i in range(m)])


def directed_path(m: int) -> Digraph:
    return build(m, [(i, i + 1) for i in range(m - 1)])


def disjoint_union(graphs: Sequence[Digraph]) -> Digraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build(offset, edges)


def strongly_connected_components(n: int, succ: Sequence[Sequence[int]]) -> list[int]:
    """Iterative Tarjan; returns a component id for each node."""
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            u, i = work[-1]
            if i < len(succ[u]):
                work[-1] = (u, i + 1)
                v = succ[u][i]
                if index[v] == -1:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                    work.append((v, 0))
                elif on_stack[v]:
                    low[u] = min(low[u], index[v])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[u])
            if low[u] == index[u]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == u:
                        break
                n_comp += 1
    return comp


def has_odd_closed_walk(g: Digraph) -> bool:
    """True iff ``g`` contains a directed closed walk (equivalently a cycle) of odd length.

    Node (u, b) of the parity product is ``2*u + b``; an edge u -> v becomes
    (u, b) -> (v, 1-b). An odd closed walk through u exists iff (u, 0) and
    (u, 1) share a strongly connected component.
    """
    succ = [[] for _ in range(2 * g.n)]
    for u, v in g.edges:
        succ[2 * u].append(2 * v + 1)
        succ[2 * u + 1].append(2 * v)
    comp = strongly_connected_components(2 * g.n, succ)
    return any(comp[2 * u] == comp[2 * u + 1] for u in range(g.n))


def topological_order(g: Digraph) -> list[int] | None:
    """Kahn's algorithm; ``None`` if ``g`` has a cycle (loops included)."""
    indeg = [g.in_degree(v) for v in g.nodes]
    ready = [v for v in g.nodes if indeg[v] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in g.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return order if len(order) == g.n else None


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Digraph:
    n: int | None = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "digraph" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected header 'digraph <n>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (u < n and v < n):
            raise GraphError(f"line {lineno}: edge ({u},{v}) out of range for n={n}")
        edges.append((u, v))
    if n is None:
        raise GraphError("missing 'digraph <n>' header")
    return build(n, edges)


def format_edge_list(g: Digraph) -> str:
    lines = [f"digraph {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
