"""Deterministic prototype graphs, one per flow-number class and a few families.

The four class prototypes are built from the classification conditions
themselves, not copied from any drawing:

* ``neg-loop``: one negative loop; deleting it balances the graph, so no
  nowhere-zero flow exists.
* ``neg-digon``: two negative parallel edges; an even number of negative
  edges gives flow number 2.
* ``bouquet 3``: three negative loops at one vertex; three odd parts through
  one vertex give flow number 3.
* ``phi4-prototype``: negative loops at ``a`` and ``c``, positive digons
  ``a-x`` and ``c-y``, and a digon ``x-y`` signed ``(-, +)``.  It is odd and
  not tightly unbalanced, but the three odd parts can never share a vertex,
  so its flow number is 4.
"""

from __future__ import annotations

import random

from .errors import InvalidArgument
from .graph import SignedMultigraph, components

NAMES = ("neg-loop", "pos-loop", "neg-digon", "bouquet", "phi4-prototype", "barbell", "six-regular-antibalanced")


def neg_loop() -> SignedMultigraph:
    return SignedMultigraph.from_edges(1, [(0, 0, -1)])


def pos_loop() -> SignedMultigraph:
    return SignedMultigraph.from_edges(1, [(0, 0, 1)])


def neg_digon() -> SignedMultigraph:
    return SignedMultigraph.from_edges(2, [(0, 1, -1), (0, 1, -1)])


def bouquet(k: int, sign: int = -1) -> SignedMultigraph:
    if k < 1:
        raise InvalidArgument("a bouquet needs at least one loop")
    return SignedMultigraph.from_edges(1, [(0, 0, sign)] * k)


def phi4_prototype() -> SignedMultigraph:
    a, x, y, c = 0, 1, 2, 3
    return SignedMultigraph.from_edges(
        4,
        [
            (a, a, -1),
            (a, x, 1),
            (a, x, 1),
            (x, y, -1),
            (x, y, 1),
            (c, y, 1),
            (c, y, 1),
            (c, c, -1),
        ],
    )


def _unbalanced_circuit(first: int, length: int) -> list[tuple[int, int, int]]:
    """Circuit on ``first .. first+length-1`` whose first edge alone is negative."""
    vs = list(range(first, first + length))
    return [(vs[i], vs[(i + 1) % length], -1 if i == 0 else 1) for i in range(length)]


def barbell(l1: int, l2: int, p: int) -> SignedMultigraph:
    """Two unbalanced circuits of lengths ``l1``, ``l2`` joined by a positive path of length ``p``.

    ``p = 0`` makes the circuits share a vertex.
    """
    if l1 < 1 or l2 < 1 or p < 0:
        raise InvalidArgument("barbell needs l1, l2 >= 1 and p >= 0")
    edges = _unbalanced_circuit(0, l1)
    path = [0] + list(range(l1, l1 + p))
    edges += [(path[i], path[i + 1], 1) for i in range(p)]
    hub = path[-1]
    rest = l1 + p
    second = [hub] + list(range(rest, rest + l2 - 1))
    edges += [(second[i], second[(i + 1) % l2], -1 if i == 0 else 1) for i in range(l2)]
    return SignedMultigraph.from_edges(rest + l2 - 1, edges)


def six_regular_antibalanced(n: int, seed: int = 0) -> SignedMultigraph:
    """Connected all-negative 6-regular multigraph on ``n`` (odd) vertices.

    Random pairing of half-edges, seeded; loops and parallel edges allowed.
    Pairings are redrawn until connected.
    """
    if n < 1 or n % 2 == 0:
        raise InvalidArgument("six-regular-antibalanced needs an odd vertex count")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(6)]
    while True:
        rng.shuffle(stubs)
        pairs = sorted(tuple(sorted(stubs[i : i + 2])) for i in range(0, len(stubs), 2))
        g = SignedMultigraph.from_edges(n, [(u, v, -1) for u, v in pairs])
        if len(components(g)) == 1:
            return g


def generate(name: str, params: list[int] | tuple[int, ...] = ()) -> SignedMultigraph:
    params = list(params)

    def want(count: int, optional: int = 0) -> list[int]:
        if not count - optional <= len(params) <= count:
            raise InvalidArgument(f"{name} takes {count} parameter(s), got {len(params)}")
        return params

    if name == "neg-loop":
        want(0)
        return neg_loop()
    if name == "pos-loop":
        want(0)
        return pos_loop()
    if name == "neg-digon":
        want(0)
        return neg_digon()
    if name == "bouquet":
        (k,) = want(1)
        return bouquet(k)
    if name == "phi4-prototype":
        want(0)
        return phi4_prototype()
    if name == "barbell":
        return barbell(*want(3))
    if name == "six-regular-antibalanced":
        return six_regular_antibalanced(*want(2, optional=1))
    raise InvalidArgument(f"unknown generator {name!r}; choose from {', '.join(NAMES)}")
