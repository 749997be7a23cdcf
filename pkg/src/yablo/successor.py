"""Models of the injective-successor theory.

A model decomposes into disjoint N-chains, Z-chains and finite cycles. Only
cycle-only models are finite; chains are carried as symbolic counts.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .graph import Digraph, GraphError, VertexSet, build


@dataclass(frozen=True, eq=False)
class SuccessorStructure:
    """Cycle lengths (a multiset, kept in the given order for layout) plus chain counts."""

    cycles: tuple[int, ...] = ()
    n_chains: int = 0
    z_chains: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if any(c < 1 for c in self.cycles):
            raise ValueError(f"cycle lengths must be positive, got {list(self.cycles)}")
        if self.n_chains < 0 or self.z_chains < 0:
            raise ValueError("chain counts must be non-negative")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuccessorStructure):
            return NotImplemented
        return (
            Counter(self.cycles) == Counter(other.cycles)
            and self.n_chains == other.n_chains
            and self.z_chains == other.z_chains
        )

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.cycles)), self.n_chains, self.z_chains))

    @property
    def realizable(self) -> bool:
        return self.n_chains == 0 and self.z_chains == 0

    @property
    def size(self) -> int:
        """Number of elements in the finite part."""
        return sum(self.cycles)

    def __str__(self) -> str:
        return f"cycles=[{','.join(map(str, self.cycles))}] n={self.n_chains} z={self.z_chains}"


_SPEC = re.compile(
    r"\s*cycles\s*=\s*\[(?P<cycles>[\d\s,]*)\]"
    r"(?:\s+n\s*=\s*(?P<n>\d+))?(?:\s+z\s*=\s*(?P<z>\d+))?\s*\Z"
)


def parse_structure(text: str) -> SuccessorStructure:
    """Parse ``cycles=[l1,l2,...] n=<count> z=<count>``; ``n`` and ``z`` default to 0."""
    m = _SPEC.match(text)
    if not m:
        raise ValueError(f"cannot parse successor structure {text!r}")
    items = [c.strip() for c in m.group("cycles").split(",") if c.strip()]
    if not all(c.isdigit() for c in items):
        raise ValueError(f"cycle lengths must be integers in {text!r}")
    return SuccessorStructure(
        tuple(int(c) for c in items), int(m.group("n") or 0), int(m.group("z") or 0)
    )


def realize(s: SuccessorStructure) -> Digraph:
    """Disjoint union of directed cycles, consecutive indices per cycle in the given order."""
    if not s.realizable:
        raise ValueError(f"{s} has infinite chains and is not finitely realizable")
    edges = []
    start = 0
    for length in s.cycles:
        for i in range(length):
            edges.append((start + i, start + (i + 1) % length))
        start += length
    return build(start, edges)


def classify(g: Digraph) -> SuccessorStructure:
    """Cycle decomposition of a functional, injective digraph (cycles ordered by lowest node)."""
    for u in g.nodes:
        if g.out_degree(u) != 1:
            raise GraphError(f"node {u} has out-degree {g.out_degree(u)}; s must be total")
    for v in g.nodes:
        if g.in_degree(v) > 1:
            a, b = g.pred[v][:2]
            raise GraphError(
                f"node {v} has in-degree {g.in_degree(v)} (s({a}) = s({b}) = {v}); s must be injective"
            )
    seen = [False] * g.n
    cycles = []
    for root in g.nodes:
        if seen[root]:
            continue
        length = 0
        v = root
        while not seen[v]:
            seen[v] = True
            length += 1
            v = g.successor(v)
        cycles.append(length)
    return SuccessorStructure(tuple(cycles))


def kernel_exists_symbolic(s: SuccessorStructure) -> bool:
    """Chains always admit the even-position kernel; a kernel exists iff no cycle is odd."""
    return all(c % 2 == 0 for c in s.cycles)


def even_index_kernel(s: SuccessorStructure) -> VertexSet:
    """Positions 0, 2, 4, ... of every cycle in the layout used by :func:`realize`."""
    if not s.realizable:
        raise ValueError(f"{s} is not finitely realizable")
    if not kernel_exists_symbolic(s):
        raise ValueError(f"{s} has an odd cycle; no kernel exists")
    members = []
    start = 0
    for length in s.cycles:
        members.extend(range(start, start + length, 2))
        start += length
    return VertexSet.of(s.size, members)


def fragment_satisfaction(s: SuccessorStructure, up_to: int) -> bool:
    """Whether s has no point with s^(2k+1)(x) = x for any k <= up_to.

    A point on a cycle of length L returns to itself after m steps iff L | m;
    chains have no periodic points.
    """
    return not any((2 * k + 1) % c == 0 for c in set(s.cycles) for k in range(up_to + 1))


def cycle_multisets(max_total: int) -> Iterator[SuccessorStructure]:
    """Every cycle-only structure with total size <= ``max_total`` (cycles non-increasing)."""

    def parts(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    yield from (SuccessorStructure(p) for p in parts(max_total, max_total))
