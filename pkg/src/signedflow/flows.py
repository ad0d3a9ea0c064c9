"""Bidirected orientations and group-valued flows on signed multigraphs.

An orientation stores, per edge, the direction of its two half-edges as a
pair ``(d0, d1)`` where half 0 sits at ``end_u`` and half 1 at ``end_v``
(for a loop: the first and second half in stored order).  ``OUT`` (+1)
points away from the vertex, ``IN`` (-1) towards it.  A positive edge is
ordinary (``d0 == -d1``), a negative edge broken (``d0 == d1``).

With this encoding Kirchhoff's law at ``v`` reads
``sum(d * value for each half-edge at v) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidArgument
from .graph import SignedMultigraph, switch
from .groups import GroupElement, GroupSpec

OUT = 1
IN = -1

HalfDirs = tuple[int, int]


def compatible(sign: int, dirs: HalfDirs) -> bool:
    d0, d1 = dirs
    if d0 not in (OUT, IN) or d1 not in (OUT, IN):
        return False
    return d0 == -d1 if sign > 0 else d0 == d1


def default_orientation(g: SignedMultigraph) -> tuple[HalfDirs, ...]:
    """Positive edges ``u -> v``, negative edges extroverted."""
    return tuple((OUT, IN) if e.sign > 0 else (OUT, OUT) for e in g.edges)


@dataclass(frozen=True)
class Flow:
    group: GroupSpec
    values: tuple[GroupElement, ...]
    orientation: tuple[HalfDirs, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "orientation", tuple(tuple(d) for d in self.orientation))
        if len(self.values) != len(self.orientation):
            raise InvalidArgument("flow values and orientation cover different edge sets")

    @property
    def edge_count(self) -> int:
        return len(self.values)

    def int_values(self) -> list[int]:
        if not self.group.is_integer:
            raise InvalidArgument(f"flow is over {self.group}, not Z")
        return [x[0] for x in self.values]


def zero_flow(g: SignedMultigraph, group: GroupSpec, orientation: Sequence[HalfDirs] | None = None) -> Flow:
    orient = tuple(orientation) if orientation is not None else default_orientation(g)
    return Flow(group, (group.zero(),) * g.edge_count, orient)


@dataclass(frozen=True)
class VerifyReport:
    kirchhoff_ok: bool
    zero_edges: list[int] = field(default_factory=list)
    max_abs: int | None = None
    violating_vertices: list[int] = field(default_factory=list)

    @property
    def nowhere_zero(self) -> bool:
        return self.kirchhoff_ok and not self.zero_edges

    def is_k_flow(self, k: int) -> bool:
        """Nowhere-zero integer flow with every |value| <= k - 1."""
        return self.nowhere_zero and self.max_abs is not None and self.max_abs <= k - 1


def _check_shape(g: SignedMultigraph, f: Flow) -> None:
    if f.edge_count != g.edge_count:
        raise InvalidArgument(f"flow has {f.edge_count} values but the graph has {g.edge_count} edges")
    for e in g.edges:
        if not compatible(e.sign, f.orientation[e.id]):
            raise InvalidArgument(f"orientation of edge {e.id} is incompatible with its sign")
        f.group.check(f.values[e.id])


def vertex_excess(g: SignedMultigraph, f: Flow) -> list[GroupElement]:
    """Per vertex, outflow minus inflow."""
    A = f.group
    total = [A.zero() for _ in range(g.vertex_count)]
    for e in g.edges:
        x = f.values[e.id]
        d0, d1 = f.orientation[e.id]
        total[e.u] = A.add(total[e.u], A.mul(d0, x))
        total[e.v] = A.add(total[e.v], A.mul(d1, x))
    return total


def verify_flow(g: SignedMultigraph, f: Flow) -> VerifyReport:
    _check_shape(g, f)
    A = f.group
    bad = [v for v, s in enumerate(vertex_excess(g, f)) if not A.is_zero(s)]
    zeros = [i for i, x in enumerate(f.values) if A.is_zero(x)]
    max_abs = max((abs(x[0]) for x in f.values), default=0) if A.is_integer else None
    return VerifyReport(not bad, zeros, max_abs, bad)


def reverse_edge(f: Flow, e: int) -> Flow:
    """Replace edge ``e`` by its reverse and negate its value."""
    if not 0 <= e < f.edge_count:
        raise InvalidArgument(f"unknown edge id {e}")
    values = list(f.values)
    orient = list(f.orientation)
    d0, d1 = orient[e]
    orient[e] = (-d0, -d1)
    values[e] = f.group.neg(values[e])
    return Flow(f.group, values, orient)


def switch_flow(g: SignedMultigraph, f: Flow, U: Iterable[int]) -> tuple[SignedMultigraph, Flow]:
    """Switch ``g`` at ``U`` and flip every half-edge at a vertex of ``U``; values are kept."""
    us = set(U)
    h = switch(g, us)
    orient = []
    for e in g.edges:
        d0, d1 = f.orientation[e.id]
        orient.append((-d0 if e.u in us else d0, -d1 if e.v in us else d1))
    return h, Flow(f.group, f.values, orient)


def _trail_sequence(trail) -> list[int]:
    if hasattr(trail, "edge_ids"):
        seq: list[int] = [trail.vertices[0]]
        for eid, v in zip(trail.edge_ids, trail.vertices[1:]):
            seq += [eid, v]
        return seq
    return list(trail)


def send_along_trail(g: SignedMultigraph, f: Flow, trail, b: GroupElement) -> Flow:
    """Send ``b`` along a trail ``v0, e1, v1, ..., ek, vk``.

    The trail edges are reoriented so the first leaves ``v0`` and each inner
    vertex is passed consistently (reversed edges have their values negated),
    then ``b`` is added on every trail edge.  ``trail`` is an alternating
    vertex/edge sequence or an object with ``vertices`` and ``edge_ids``.
    A loop is traversed from its half 0 to its half 1.
    """
    seq = _trail_sequence(trail)
    if len(seq) < 3 or len(seq) % 2 == 0:
        raise InvalidArgument("a trail is an alternating sequence v0, e1, v1, ..., ek, vk with k >= 1")
    A = f.group
    A.check(b)
    if f.edge_count != g.edge_count:
        raise InvalidArgument("flow and graph have different edge counts")
    values = list(f.values)
    orient = list(f.orientation)
    used: set[int] = set()
    tail_dir = OUT
    for k in range(1, len(seq), 2):
        a, eid, c = seq[k - 1], seq[k], seq[k + 1]
        if not 0 <= eid < g.edge_count:
            raise InvalidArgument(f"edge {eid} is not in the graph")
        if eid in used:
            raise InvalidArgument(f"edge {eid} repeats; not a trail")
        used.add(eid)
        e = g.edges[eid]
        if e.is_loop:
            if not a == c == e.u:
                raise InvalidArgument(f"loop {eid} does not sit at vertex {a}")
            tail_half = 0
        elif (a, c) == (e.u, e.v):
            tail_half = 0
        elif (a, c) == (e.v, e.u):
            tail_half = 1
        else:
            raise InvalidArgument(f"edge {eid} does not join {a} and {c}")
        head_dir = -e.sign * tail_dir
        want = (tail_dir, head_dir) if tail_half == 0 else (head_dir, tail_dir)
        have = orient[eid]
        if have != want:
            if have != (-want[0], -want[1]):
                raise InvalidArgument(f"orientation of edge {eid} is incompatible with its sign")
            values[eid] = A.neg(values[eid])
            orient[eid] = want
        values[eid] = A.add(values[eid], b)
        tail_dir = -head_dir
    return Flow(A, values, orient)


def extroverted_negative_sum(g: SignedMultigraph, f: Flow) -> GroupElement:
    """Sum over negative edges of their values, each taken in extroverted form."""
    A = f.group
    total = A.zero()
    for e in g.edges:
        if e.sign > 0:
            continue
        x = f.values[e.id]
        total = A.add(total, x if f.orientation[e.id][0] == OUT else A.neg(x))
    return total


def align(f: Flow, orientation: Sequence[HalfDirs]) -> Flow:
    """Re-express ``f`` under ``orientation`` by reversing edges where they differ."""
    if len(orientation) != f.edge_count:
        raise InvalidArgument("orientation covers a different edge set")
    values = list(f.values)
    for i, (have, want) in enumerate(zip(f.orientation, orientation)):
        if tuple(have) == tuple(want):
            continue
        if tuple(have) != (-want[0], -want[1]):
            raise InvalidArgument(f"edge {i} is oriented incompatibly in the two flows")
        values[i] = f.group.neg(values[i])
    return Flow(f.group, values, orientation)


def combine_flows(f1: Flow, f2: Flow, c: int) -> Flow:
    """``f1 + c * f2`` under ``f1``'s orientation, in any group."""
    if f1.group != f2.group:
        raise InvalidArgument(f"group mismatch: {f1.group} vs {f2.group}")
    if f1.edge_count != f2.edge_count:
        raise InvalidArgument("flows live on different graphs")
    A = f1.group
    g2 = align(f2, f1.orientation)
    values = [A.add(x, A.mul(c, y)) for x, y in zip(f1.values, g2.values)]
    return Flow(A, values, f1.orientation)


def combine_integer_flows(f1: Flow, f2: Flow, c: int) -> Flow:
    if not (f1.group.is_integer and f2.group.is_integer):
        raise InvalidArgument("combine_integer_flows needs two Z-flows")
    return combine_flows(f1, f2, c)


def positively_oriented(f: Flow) -> Flow:
    """Reverse every edge with a negative integer value."""
    out = f
    for i, x in enumerate(f.int_values()):
        if x < 0:
            out = reverse_edge(out, i)
    return out


def is_stable(g: SignedMultigraph, f: Flow) -> bool:
    """Whether a nowhere-zero 3-flow never has one value both entering and leaving a vertex.

    The flow is positively oriented first; each edge is seen once per
    incident half-edge, so a positive loop with its value is unstable.
    """
    if not f.group.is_integer:
        raise InvalidArgument("stability is defined for integer flows")
    if not verify_flow(g, f).is_k_flow(3):
        raise InvalidArgument("stability needs a nowhere-zero 3-flow")
    p = positively_oriented(f)
    for v in range(g.vertex_count):
        seen: dict[int, int] = {}
        for eid, half in g.half_edges[v]:
            x = p.values[eid][0]
            d = p.orientation[eid][half]
            if seen.setdefault(x, d) != d:
                return False
    return True
