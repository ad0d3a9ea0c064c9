"""Signed multigraphs: representation, switching, balance and structural predicates.

Edges are identified by contiguous integer ids; loops and parallel edges are
ordinary members of the edge list.  Every function here is pure.  Functions
that accept an ``edge_ids`` argument operate on the spanning subgraph formed
by those edges (all edges when ``None``).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidArgument


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class SignedMultigraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.vertex_count < 0:
            raise InvalidArgument("vertex_count must be nonnegative")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InvalidArgument(f"edge ids must be contiguous from 0, got {e.id} at position {i}")
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise InvalidArgument(f"edge {e.id} has an endpoint outside 0..{self.vertex_count - 1}")
            if e.sign not in (1, -1):
                raise InvalidArgument(f"edge {e.id} has sign {e.sign!r}, expected +1 or -1")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> SignedMultigraph:
        """Build a graph from ``(u, v, sign)`` triples, numbering edges in order."""
        return cls(vertex_count, tuple(Edge(i, u, v, s) for i, (u, v, s) in enumerate(edges)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def half_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident half-edges as ``(edge_id, half_index)`` pairs.

        Half 0 sits at ``end_u`` and half 1 at ``end_v``; a loop contributes
        both halves to its vertex.
        """
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            inc[e.u].append((e.id, 0))
            inc[e.v].append((e.id, 1))
        return tuple(tuple(h) for h in inc)

    def degree(self, v: int) -> int:
        return len(self.half_edges[v])

    def degrees(self) -> list[int]:
        return [len(h) for h in self.half_edges]

    def signs(self) -> list[int]:
        return [e.sign for e in self.edges]

    def with_signs(self, signs: Sequence[int]) -> SignedMultigraph:
        if len(signs) != self.edge_count:
            raise InvalidArgument("sign vector length differs from edge count")
        return SignedMultigraph(
            self.vertex_count, tuple(Edge(e.id, e.u, e.v, s) for e, s in zip(self.edges, signs))
        )

    def negated(self) -> SignedMultigraph:
        return self.with_signs([-s for s in self.signs()])


def _edge_set(g: SignedMultigraph, edge_ids: Iterable[int] | None) -> list[int]:
    if edge_ids is None:
        return list(range(g.edge_count))
    ids = sorted(set(edge_ids))
    for i in ids:
        if not 0 <= i < g.edge_count:
            raise InvalidArgument(f"unknown edge id {i}")
    return ids


def _check_vertices(g: SignedMultigraph, vertices: Iterable[int]) -> set[int]:
    vs = set(vertices)
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise InvalidArgument(f"vertex {v} out of range 0..{g.vertex_count - 1}")
    return vs


def adjacency(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> list[list[tuple[int, int]]]:
    """Per vertex, ``(edge_id, neighbour)`` pairs in ascending edge id.

    A loop is listed once at its vertex.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for i in _edge_set(g, edge_ids):
        e = g.edges[i]
        adj[e.u].append((i, e.v))
        if not e.is_loop:
            adj[e.v].append((i, e.u))
    return adj


def vertices_of(g: SignedMultigraph, edge_ids: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for i in edge_ids:
        e = g.edges[i]
        out.add(e.u)
        out.add(e.v)
    return out


def switch(g: SignedMultigraph, U: Iterable[int]) -> SignedMultigraph:
    """Negate the sign of every edge with exactly one endpoint in ``U``."""
    us = _check_vertices(g, U)
    return g.with_signs([-e.sign if (e.u in us) != (e.v in us) else e.sign for e in g.edges])


@dataclass
class _Labelling:
    label: list[int]
    parent_edge: list[int | None]
    parent: list[int | None]
    depth: list[int]
    violations: list[int]


def _sign_labelling(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> _Labelling:
    """Breadth-first +1/-1 vertex labelling, seeding each component at its least vertex.

    An edge is violated when its sign differs from the product of its end
    labels; the graph is balanced iff there are no violations.
    """
    ids = _edge_set(g, edge_ids)
    adj = adjacency(g, ids)
    n = g.vertex_count
    label = [0] * n
    parent_edge: list[int | None] = [None] * n
    parent: list[int | None] = [None] * n
    depth = [0] * n
    for root in range(n):
        if label[root]:
            continue
        label[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for eid, y in adj[x]:
                if not label[y]:
                    label[y] = label[x] * g.edges[eid].sign
                    parent_edge[y] = eid
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
    violations = [i for i in ids if g.edges[i].sign != label[g.edges[i].u] * label[g.edges[i].v]]
    return _Labelling(label, parent_edge, parent, depth, violations)


def is_balanced(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> bool:
    return not _sign_labelling(g, edge_ids).violations


def balanced_bipartition(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> dict[int, int] | None:
    """Harary bipartition ``{vertex: 1 | 2}`` if ``g`` is balanced, else ``None``.

    Negative edges cross the parts and positive edges stay inside a part.
    The least vertex of every component is placed in part 1.
    """
    lab = _sign_labelling(g, edge_ids)
    if lab.violations:
        return None
    return {v: 1 if lab.label[v] == 1 else 2 for v in range(g.vertex_count)}


def antibalanced_bipartition(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> dict[int, int] | None:
    """Bipartition with positive edges crossing and negative edges inside, or ``None``."""
    return balanced_bipartition(g.negated(), edge_ids)


def fundamental_unbalanced_circuit(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> frozenset[int] | None:
    """An unbalanced circuit of the subgraph, or ``None`` when it is balanced.

    Takes the least violated edge of the breadth-first labelling and closes it
    with the tree path between its ends.
    """
    lab = _sign_labelling(g, edge_ids)
    if not lab.violations:
        return None
    eid = lab.violations[0]
    e = g.edges[eid]
    circuit = {eid}
    a, b = e.u, e.v
    while a != b:
        if lab.depth[a] < lab.depth[b]:
            a, b = b, a
        circuit.add(lab.parent_edge[a])  # type: ignore[arg-type]
        a = lab.parent[a]  # type: ignore[assignment]
    return frozenset(circuit)


def subgraph_sign(g: SignedMultigraph, F: Iterable[int]) -> int:
    """Product of the signs over the edge set ``F`` (+1 when empty)."""
    s = 1
    for i in F:
        if not 0 <= i < g.edge_count:
            raise InvalidArgument(f"unknown edge id {i}")
        s *= g.edges[i].sign
    return s


def components(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    adj = adjacency(g, edge_ids)
    seen = [False] * g.vertex_count
    out = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for _, y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected_subgraph(g: SignedMultigraph, edge_ids: Iterable[int]) -> bool:
    """True iff the edges form a nonempty subgraph that is connected on the vertices they touch."""
    ids = _edge_set(g, edge_ids)
    if not ids:
        return False
    touched = vertices_of(g, ids)
    adj = adjacency(g, ids)
    start = min(touched)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for _, y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == touched


def even_degrees(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> bool:
    deg = [0] * g.vertex_count
    for i in _edge_set(g, edge_ids):
        e = g.edges[i]
        deg[e.u] += 1
        deg[e.v] += 1
    return all(d % 2 == 0 for d in deg)


def is_eulerian_subgraph(g: SignedMultigraph, edge_ids: Iterable[int]) -> bool:
    """Nonempty, connected on its own vertices, every degree even."""
    ids = list(edge_ids)
    return is_connected_subgraph(g, ids) and even_degrees(g, ids)


def is_eulerian(g: SignedMultigraph) -> bool:
    """Connected, no isolated vertices, at least one edge, all degrees even."""
    if g.edge_count == 0 or g.vertex_count == 0:
        return False
    degs = g.degrees()
    if any(d == 0 or d % 2 for d in degs):
        return False
    return len(components(g)) == 1


def negative_count(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> int:
    return sum(1 for i in _edge_set(g, edge_ids) if g.edges[i].sign < 0)


def negative_parity(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> Parity:
    return Parity.ODD if negative_count(g, edge_ids) % 2 else Parity.EVEN


def cycle_rank(g: SignedMultigraph) -> int:
    return g.edge_count - g.vertex_count + len(components(g))


def bridges(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> set[int]:
    """Edges whose removal increases the number of components (never loops)."""
    ids = _edge_set(g, edge_ids)
    base = len(components(g, ids))
    out = set()
    for i in ids:
        if g.edges[i].is_loop:
            continue
        rest = [j for j in ids if j != i]
        if len(components(g, rest)) > base:
            out.add(i)
    return out


def suppress_degree_two(g: SignedMultigraph) -> SignedMultigraph:
    """Repeatedly replace a 2-valent vertex on two distinct non-loop edges by one edge.

    The new edge carries the product of the two signs.  The least eligible
    vertex is suppressed first; the merged edge takes the place of the
    lower-id edge.  Surviving vertices and edges are renumbered in order.
    """
    n = g.vertex_count
    alive = [True] * n
    # edge slot -> [u, v, sign] or None once absorbed
    slots: list[list[int] | None] = [[e.u, e.v, e.sign] for e in g.edges]

    def incident(w: int) -> list[int]:
        return [i for i, s in enumerate(slots) if s is not None and w in (s[0], s[1])]

    changed = True
    while changed:
        changed = False
        for w in range(n):
            if not alive[w]:
                continue
            inc = incident(w)
            if len(inc) != 2:
                continue
            e1, e2 = inc
            s1, s2 = slots[e1], slots[e2]
            assert s1 is not None and s2 is not None
            if s1[0] == s1[1] or s2[0] == s2[1]:
                continue
            a = s1[0] if s1[1] == w else s1[1]
            b = s2[0] if s2[1] == w else s2[1]
            slots[e1] = [a, b, s1[2] * s2[2]]
            slots[e2] = None
            alive[w] = False
            changed = True
            break
    remap = {}
    for v in range(n):
        if alive[v]:
            remap[v] = len(remap)
    kept = [s for s in slots if s is not None]
    return SignedMultigraph.from_edges(len(remap), [(remap[u], remap[v], s) for u, v, s in kept])
