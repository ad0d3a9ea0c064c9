"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from signedflow.graph import SignedMultigraph


def graph(n: int, *edges: tuple[int, int, int]) -> SignedMultigraph:
    return SignedMultigraph.from_edges(n, list(edges))


def closed_walk_graph(rng: random.Random, n: int, walks: int, length: int, neg_prob: float = 0.4) -> SignedMultigraph:
    """Union of random closed walks through vertex 0: connected, all degrees even."""
    edges = []
    for _ in range(walks):
        seq = [0] + [rng.randrange(n) for _ in range(length - 1)] + [0]
        for a, b in zip(seq, seq[1:]):
            edges.append((min(a, b), max(a, b), -1 if rng.random() < neg_prob else 1))
    used = sorted({v for u, v, _ in edges} | {u for u, _, _ in edges})
    relabel = {v: i for i, v in enumerate(used)}
    return SignedMultigraph.from_edges(len(used), [(relabel[u], relabel[v], s) for u, v, s in edges])


@st.composite
def eulerian_graphs(draw, max_vertices: int = 5, max_walks: int = 3, max_length: int = 4):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_vertices))
    walks = draw(st.integers(1, max_walks))
    length = draw(st.integers(1, max_length))
    return closed_walk_graph(random.Random(seed), n, walks, length)


@st.composite
def signed_graphs(draw, max_vertices: int = 5, max_edges: int = 8):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from([1, -1])),
            min_size=m,
            max_size=m,
        )
    )
    return SignedMultigraph.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {0: set()}
    for v in range(1, n):
        p = rng.randrange(v)
        adj[v] = {p}
        adj[p].add(v)
    return adj
