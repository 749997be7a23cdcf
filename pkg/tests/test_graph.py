import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yablo.graph import (
    Digraph,
    GraphError,
    VertexSet,
    build,
    directed_cycle,
    disjoint_union,
    enumerate_all,
    format_edge_list,
    has_odd_closed_walk,
    parse_edge_list,
    random_digraph,
    read_edge_list,
    strongly_connected_components,
    topological_order,
    witness_chain,
    write_edge_list,
)


def odd_closed_walk_by_matrix_powers(g):
    """Oracle: an odd closed walk exists iff some odd power k <= n of A has a nonzero diagonal."""
    if g.n == 0:
        return False
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        a[u, v] = True
    power = a.copy()
    square = (a.astype(int) @ a.astype(int)) > 0
    for _ in range(1, g.n + 1, 2):
        if power.diagonal().any():
            return True
        power = (power.astype(int) @ square.astype(int)) > 0
    return False


digraphs = st.integers(0, 7).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20).map(
        lambda es: build(n, es)
    )
    if n
    else st.just(build(0, []))
)


class TestBuild:
    def test_named_fixture_graph(self):
        g = build(3, [(0, 1), (0, 2), (2, 2)])
        assert g.succ == ((1, 2), (), (2,))
        assert g.edges == ((0, 1), (0, 2), (2, 2))

    def test_isolated_node(self):
        g = build(1, [])
        assert g.n == 1 and g.edges == ()

    def test_duplicates_collapse(self):
        assert build(3, [(0, 1), (0, 1), (2, 2)]) == build(3, [(0, 1), (2, 2)])

    def test_unsorted_input_is_canonicalized(self):
        assert build(3, [(0, 2), (0, 1)]).succ[0] == (1, 2)

    def test_out_of_range_names_pair(self):
        with pytest.raises(GraphError, match=r"\(0,3\)"):
            build(3, [(0, 3)])

    def test_constructor_rejects_noncanonical(self):
        with pytest.raises(GraphError):
            Digraph(2, ((1, 0), ()))

    @given(digraphs)
    def test_idempotent(self, g):
        assert build(g.n, g.edges) == g

    def test_degrees(self):
        g = build(3, [(0, 1), (2, 1), (1, 1)])
        assert [g.in_degree(v) for v in g.nodes] == [0, 3, 0]
        assert g.pred[1] == (0, 1, 2)
        assert g.is_functional()
        assert not build(2, [(0, 1), (0, 0)]).is_functional()
        assert not build(2, [(0, 1)]).is_functional()


class TestVertexSet:
    def test_range_checked(self):
        with pytest.raises(GraphError):
            VertexSet.of(2, [2])

    def test_mask_round_trip(self):
        k = VertexSet.of(5, [0, 3])
        assert k.mask == 0b1001
        assert VertexSet.from_mask(5, k.mask) == k
        assert str(k) == "{0, 3}"


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 2), (2, 16), (3, 512)])
    def test_counts(self, n, count):
        graphs = list(enumerate_all(n))
        assert len(graphs) == count
        assert len(set(graphs)) == count

    def test_bitmask_order(self):
        masks = [g.mask for g in enumerate_all(2)]
        assert masks == list(range(16))

    def test_n1(self):
        assert [g.edges for g in enumerate_all(1)] == [(), ((0, 0),)]

    def test_n4_count_without_materializing(self):
        assert sum(1 for _ in enumerate_all(4)) == 2**16

    def test_cap(self):
        with pytest.raises(GraphError, match="refusing"):
            next(enumerate_all(5))


class TestGenerators:
    def test_random_extremes(self):
        assert random_digraph(5, 0.0, 7).edge_count == 0
        full = random_digraph(5, 1.0, 7)
        assert full.edge_count == 25

    def test_random_deterministic(self):
        assert random_digraph(8, 0.3, seed=42) == random_digraph(8, 0.3, seed=42)
        assert random_digraph(8, 0.3, seed=42) != random_digraph(8, 0.3, seed=43)

    @pytest.mark.parametrize("p", [-0.1, 1.5])
    def test_random_bad_probability(self, p):
        with pytest.raises(GraphError):
            random_digraph(3, p, 0)

    def test_witness_chain(self):
        assert witness_chain(0) == build(1, [(0, 0)])
        assert set(witness_chain(1).edges) == {(0, 1), (1, 2), (2, 2)}
        assert set(witness_chain(2).edges) == {(0, 1), (1, 2), (2, 3), (3, 4), (4, 4)}
        assert witness_chain(2).n == 5


class TestOddClosedWalk:
    def test_examples(self):
        assert has_odd_closed_walk(directed_cycle(3))
        assert not has_odd_closed_walk(directed_cycle(4))
        assert has_odd_closed_walk(build(1, [(0, 0)]))
        assert not has_odd_closed_walk(build(0, []))

    def test_cycle_unions_match_arithmetic(self):
        def partitions(total, largest):
            yield ()
            for first in range(min(total, largest), 0, -1):
                for rest in partitions(total - first, first):
                    yield (first,) + rest

        checked = 0
        for lengths in partitions(12, 12):
            g = disjoint_union([directed_cycle(m) for m in lengths])
            assert has_odd_closed_walk(g) == any(m % 2 for m in lengths), lengths
            checked += 1
        assert checked == 272

    def test_all_three_node_graphs_match_oracle(self):
        for g in enumerate_all(3):
            assert has_odd_closed_walk(g) == odd_closed_walk_by_matrix_powers(g)

    @settings(max_examples=300)
    @given(digraphs)
    def test_random_match_oracle(self, g):
        assert has_odd_closed_walk(g) == odd_closed_walk_by_matrix_powers(g)

    def test_odd_cycle_through_even_structure(self):
        # 0->1->2->0 is odd even though 0<->3 is an even 2-cycle
        g = build(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)])
        assert has_odd_closed_walk(g)


def test_scc_matches_mutual_reachability():
    rng = random.Random(3)
    for _ in range(50):
        g = random_digraph(rng.randint(1, 9), rng.random() * 0.4, rng.randrange(1000))
        comp = strongly_connected_components(g.n, g.succ)
        reach = [[False] * g.n for _ in range(g.n)]
        for u in g.nodes:
            stack, seen = [u], {u}
            while stack:
                w = stack.pop()
                for v in g.succ[w]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            for v in seen:
                reach[u][v] = True
        for u, v in itertools.product(g.nodes, repeat=2):
            assert (comp[u] == comp[v]) == (reach[u][v] and reach[v][u])


def test_topological_order():
    order = topological_order(build(3, [(0, 1), (1, 2)]))
    assert order == [0, 1, 2]
    assert topological_order(build(2, [(1, 1)])) is None


class TestEdgeListFormat:
    def test_round_trip_is_canonical(self):
        text = "# graph1\ndigraph 3\n\n2 2\n0 2\n0 1\n0 1\n"
        g = parse_edge_list(text)
        assert format_edge_list(g) == "digraph 3\n0 1\n0 2\n2 2\n"
        assert parse_edge_list(format_edge_list(g)) == g

    @given(digraphs)
    def test_round_trip_property(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_file_io(self, tmp_path):
        g = witness_chain(2)
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g

    @pytest.mark.parametrize(
        "text",
        ["", "graph 3\n", "digraph x\n", "digraph 2\n0\n", "digraph 2\n0 2\n", "digraph 2\n0 -1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(GraphError):
            parse_edge_list(text)
