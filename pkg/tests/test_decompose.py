import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedflow.decompose import (
    EvenCover,
    OddTriple,
    check_even_cover,
    check_odd_triple,
    check_tree_partition,
    circuit_decomposition,
    enumerate_circuits,
    eulerian_trail,
    even_cover_from_triple,
    find_unbalanced_circuit,
    is_circuit,
    odd_triple_decomposition,
    odd_tree_partition,
    triply_odd,
    two_disjoint_unbalanced_circuits,
)
from signedflow.errors import InvalidArgument, Undecided
from signedflow.generators import bouquet, neg_digon, neg_loop, phi4_prototype
from signedflow.graph import Parity, negative_parity, subgraph_sign
from signedflow.oracle import brute_force_triply_odd

from support import eulerian_graphs, graph, random_tree

BOUQUET3 = bouquet(3)
PHI4 = phi4_prototype()


class TestTrails:
    def test_single_loop(self):
        t = eulerian_trail(graph(1, (0, 0, 1)), 0)
        assert t.edge_ids == (0,) and t.vertices == (0, 0)

    def test_positive_digon(self):
        assert eulerian_trail(graph(2, (0, 1, 1), (0, 1, 1)), 0).edge_ids == (0, 1)

    def test_bouquet_ascending(self):
        assert eulerian_trail(BOUQUET3, 0).edge_ids == (0, 1, 2)

    def test_not_eulerian(self):
        with pytest.raises(InvalidArgument):
            eulerian_trail(graph(2, (0, 1, 1)), 0)

    @given(eulerian_graphs(), st.data())
    def test_trail_is_closed_and_covers(self, g, data):
        start = data.draw(st.integers(0, g.vertex_count - 1))
        t = eulerian_trail(g, start)
        assert sorted(t.edge_ids) == list(range(g.edge_count))
        assert t.vertices[0] == t.vertices[-1] == start
        for a, e, b in zip(t.vertices, t.edge_ids, t.vertices[1:]):
            assert {a, b} == {g.edges[e].u, g.edges[e].v}

    def test_deterministic(self):
        g = graph(3, (0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 0, -1), (1, 1, 1))
        assert eulerian_trail(g, 0) == eulerian_trail(g, 0)


class TestCircuits:
    def test_single_circuit(self):
        g = graph(3, (0, 1, 1), (1, 2, 1), (2, 0, -1))
        assert circuit_decomposition(g).circuits == (frozenset({0, 1, 2}),)

    def test_bouquet(self):
        assert sorted(map(sorted, circuit_decomposition(BOUQUET3).circuits)) == [[0], [1], [2]]

    def test_figure_eight(self):
        g = graph(5, (0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (3, 4, 1), (4, 0, 1))
        assert set(circuit_decomposition(g).circuits) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}

    @given(eulerian_graphs())
    def test_decomposition_partitions_edges(self, g):
        cs = circuit_decomposition(g).circuits
        assert sum(len(c) for c in cs) == g.edge_count
        assert frozenset().union(*cs) == frozenset(range(g.edge_count))
        assert all(is_circuit(g, c) for c in cs)

    def test_enumerate_circuits_k4(self):
        # K4 has 7 circuits: 4 triangles and 3 four-cycles
        g = graph(4, (0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1))
        cs = enumerate_circuits(g)
        assert [len(c) for c in cs] == [3, 3, 3, 3, 4, 4, 4]

    def test_unbalanced_circuit(self):
        assert find_unbalanced_circuit(graph(3, (0, 1, 1), (1, 2, 1), (2, 0, 1))) is None
        assert find_unbalanced_circuit(neg_loop()) == frozenset({0})
        three_negative_parallels = graph(2, (0, 1, -1), (0, 1, -1), (0, 1, -1))
        assert find_unbalanced_circuit(three_negative_parallels) is None


class TestTwoDisjoint:
    def test_bouquet(self):
        pair = two_disjoint_unbalanced_circuits(BOUQUET3)
        assert pair is not None and set(pair) <= {frozenset({0}), frozenset({1}), frozenset({2})}

    def test_tightly_unbalanced(self):
        assert two_disjoint_unbalanced_circuits(neg_loop()) is None

    def test_phi4(self):
        assert set(two_disjoint_unbalanced_circuits(PHI4)) == {frozenset({0}), frozenset({7})}

    @given(eulerian_graphs())
    def test_pair_is_valid(self, g):
        pair = two_disjoint_unbalanced_circuits(g)
        if pair is not None:
            c, d = pair
            assert not c & d
            assert is_circuit(g, c) and is_circuit(g, d)
            assert subgraph_sign(g, c) == subgraph_sign(g, d) == -1


class TestTreePartition:
    def test_path_all_black(self):
        tree = {1: {2}, 2: {1, 3}, 3: {2}}
        assert sorted(map(sorted, odd_tree_partition(tree, {1, 2, 3}))) == [[1], [2], [3]]

    def test_star_with_white_centre(self):
        tree = {0: {1, 2, 3}, 1: {0}, 2: {0}, 3: {0}}
        parts = odd_tree_partition(tree, {1, 2, 3})
        assert sorted(map(sorted, parts)) == [[0, 3], [1], [2]]

    def test_random_twelve(self):
        rng = random.Random(12)
        tree = random_tree(rng, 12)
        black = set(rng.sample(range(12), 5))
        assert check_tree_partition(tree, black, odd_tree_partition(tree, black))

    @pytest.mark.parametrize(
        "tree, black",
        [
            ({0: {1}, 1: {0}}, {0, 1}),
            ({0: {1}, 1: {0, 2}, 2: {1}}, {0}),
            ({0: {1}, 1: {0, 2}, 2: {1, 0}}, {0, 1, 2}),
        ],
    )
    def test_rejects(self, tree, black):
        with pytest.raises(InvalidArgument):
            odd_tree_partition(tree, black)

    def test_checker_rejects_bad_parts(self):
        tree = {0: {1}, 1: {0, 2}, 2: {1, 3}, 3: {2}}
        black = {0, 1, 3}
        assert not check_tree_partition(tree, black, [frozenset({0, 2}), frozenset({1}), frozenset({3})])
        assert not check_tree_partition(tree, black, [frozenset({0, 1}), frozenset({2}), frozenset({3})])

    @given(st.integers(3, 30), st.integers(0, 2**32 - 1))
    def test_property(self, n, seed):
        rng = random.Random(seed)
        tree = random_tree(rng, n)
        k = rng.randrange(3, n + 1, 2) if n >= 3 else 3
        black = set(rng.sample(range(n), k))
        assert check_tree_partition(tree, black, odd_tree_partition(tree, black))


class TestOddTriple:
    def test_bouquet(self):
        t = odd_triple_decomposition(BOUQUET3)
        assert sorted(map(sorted, t.parts)) == [[0], [1], [2]]
        assert t.common_vertex == 0

    def test_phi4(self):
        t = odd_triple_decomposition(PHI4)
        assert check_odd_triple(PHI4, t)
        assert t.common_vertex is None

    def test_even_graph_rejected(self):
        with pytest.raises(InvalidArgument):
            odd_triple_decomposition(neg_digon())

    def test_checker_rejects(self):
        bad = OddTriple((frozenset({0, 1}), frozenset({2}), frozenset()))
        assert not check_odd_triple(BOUQUET3, bad)

    @settings(max_examples=80)
    @given(eulerian_graphs())
    def test_invariants(self, g):
        if negative_parity(g) is Parity.EVEN or two_disjoint_unbalanced_circuits(g) is None:
            return
        t = odd_triple_decomposition(g)
        assert check_odd_triple(g, t)
        c = even_cover_from_triple(g, t)
        assert check_even_cover(g, c)


class TestEvenCover:
    def test_bouquet(self):
        t = OddTriple((frozenset({0}), frozenset({1}), frozenset({2})), 0)
        c = even_cover_from_triple(BOUQUET3, t)
        assert (c.h1, c.h2) == (frozenset({0, 1}), frozenset({1, 2}))

    def test_phi4(self):
        c = even_cover_from_triple(PHI4, odd_triple_decomposition(PHI4))
        assert check_even_cover(PHI4, c)
        # the circuit graph is a path with black ends, so the loops become singleton
        # parts and each cover member is a loop plus the six middle edges
        assert (len(c.h1), len(c.h2)) == (7, 7)
        assert c.h1 | c.h2 == frozenset(range(8))

    def test_common_vertex_kept(self):
        t = triply_odd(BOUQUET3)
        c = even_cover_from_triple(BOUQUET3, t)
        for h in (c.h1, c.h2):
            assert any(t.common_vertex in (BOUQUET3.edges[e].u, BOUQUET3.edges[e].v) for e in h)

    def test_checker_rejects(self):
        assert not check_even_cover(BOUQUET3, EvenCover(frozenset({0}), frozenset({1, 2})))


class TestTriplyOdd:
    def test_examples(self):
        t = triply_odd(BOUQUET3)
        assert t is not None and check_odd_triple(BOUQUET3, t) and t.common_vertex == 0
        assert triply_odd(neg_digon()) is None
        assert triply_odd(PHI4) is None

    def test_budget(self):
        with pytest.raises(Undecided):
            triply_odd(PHI4, budget=1)

    @settings(max_examples=100)
    @given(eulerian_graphs(max_vertices=4, max_walks=3, max_length=3))
    def test_matches_oracle(self, g):
        if g.edge_count > 10:
            return
        t = triply_odd(g)
        assert (t is not None) == brute_force_triply_odd(g)
        if t is not None:
            assert check_odd_triple(g, t)
            assert all(
                any(t.common_vertex in (g.edges[e].u, g.edges[e].v) for e in p) for p in t.parts
            )
