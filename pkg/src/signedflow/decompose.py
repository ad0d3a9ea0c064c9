"""Eulerian trails, circuit decompositions and odd/even eulerian decompositions.

Edge sets are ``frozenset`` objects of edge ids of the ambient graph; many
helpers take an ``edge_ids`` argument to work inside a spanning subgraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InternalError, InvalidArgument, Undecided
from .graph import (
    Parity,
    SignedMultigraph,
    adjacency,
    cycle_rank,
    even_degrees,
    fundamental_unbalanced_circuit,
    is_connected_subgraph,
    is_eulerian,
    is_eulerian_subgraph,
    negative_count,
    negative_parity,
    subgraph_sign,
    vertices_of,
)

EdgeSet = frozenset[int]


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    closed: bool

    def sequence(self) -> list[int]:
        """The alternating form ``v0, e1, v1, ..., ek, vk``."""
        seq = [self.vertices[0]]
        for e, v in zip(self.edge_ids, self.vertices[1:]):
            seq += [e, v]
        return seq


@dataclass(frozen=True)
class CircuitDecomposition:
    circuits: tuple[EdgeSet, ...]


@dataclass(frozen=True)
class OddTriple:
    parts: tuple[EdgeSet, EdgeSet, EdgeSet]
    common_vertex: int | None = None


@dataclass(frozen=True)
class EvenCover:
    h1: EdgeSet
    h2: EdgeSet


CANONICAL_RANK_LIMIT = 16


def _all_edges(g: SignedMultigraph) -> EdgeSet:
    return frozenset(range(g.edge_count))


# -- trails ---------------------------------------------------------------


def trail_in(g: SignedMultigraph, edge_ids: Iterable[int], start: int) -> Trail:
    """Closed trail through every edge of a connected even subgraph, from ``start``.

    Hierholzer's method: walk greedily along the least unused edge until
    stuck, then splice in sub-walks at the earliest vertex that still has
    unused edges.
    """
    ids = sorted(set(edge_ids))
    if not ids or not is_eulerian_subgraph(g, ids):
        raise InvalidArgument("edge set is not a connected subgraph with even degrees")
    if start not in vertices_of(g, ids):
        raise InvalidArgument(f"start vertex {start} has no edge in the subgraph")
    adj = adjacency(g, ids)
    ptr = [0] * g.vertex_count
    used: set[int] = set()

    def walk(v: int) -> tuple[list[int], list[int]]:
        verts, edges = [v], []
        cur = v
        while True:
            row = adj[cur]
            while ptr[cur] < len(row) and row[ptr[cur]][0] in used:
                ptr[cur] += 1
            if ptr[cur] == len(row):
                return verts, edges
            eid, nxt = row[ptr[cur]]
            used.add(eid)
            edges.append(eid)
            verts.append(nxt)
            cur = nxt

    verts, edges = walk(start)
    i = 0
    while i < len(verts):
        sub_v, sub_e = walk(verts[i])
        if sub_e:
            verts = verts[:i] + sub_v + verts[i + 1 :]
            edges = edges[:i] + sub_e + edges[i:]
        i += 1
    if len(edges) != len(ids):
        raise InternalError("eulerian walk missed edges")
    return Trail(tuple(verts), tuple(edges), True)


def eulerian_trail(g: SignedMultigraph, start: int) -> Trail:
    if not is_eulerian(g):
        raise InvalidArgument("graph is not eulerian")
    return trail_in(g, range(g.edge_count), start)


# -- circuits -------------------------------------------------------------


def decompose_into_circuits(g: SignedMultigraph, edge_ids: Iterable[int]) -> list[EdgeSet]:
    """Circuit partition of an even (possibly disconnected) edge set.

    From the least unused edge, walk along least unused edges until a vertex
    repeats; the closed part becomes a circuit and the rest is released.
    """
    unused = set(edge_ids)
    if not even_degrees(g, unused):
        raise InvalidArgument("edge set has a vertex of odd degree")
    adj = adjacency(g, unused)
    out = []
    while unused:
        e0 = g.edges[min(unused)]
        pos = {e0.u: 0}
        walk: list[int] = []
        eid, cur = e0.id, e0.v
        while True:
            walk.append(eid)
            if cur in pos:
                circuit = frozenset(walk[pos[cur] :])
                break
            pos[cur] = len(walk)
            eid, cur = next((i, w) for i, w in adj[cur] if i in unused and i not in walk)
        unused -= circuit
        out.append(circuit)
    return out


def circuit_decomposition(g: SignedMultigraph) -> CircuitDecomposition:
    return CircuitDecomposition(tuple(decompose_into_circuits(g, range(g.edge_count))))


def is_circuit(g: SignedMultigraph, edge_ids: Iterable[int]) -> bool:
    ids = set(edge_ids)
    if not ids:
        return False
    deg: dict[int, int] = {}
    for i in ids:
        e = g.edges[i]
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
    return all(d == 2 for d in deg.values()) and is_connected_subgraph(g, ids)


def enumerate_circuits(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> list[EdgeSet]:
    """Every circuit of the subgraph, found by walking its whole cycle space.

    Exponential in the cycle rank; intended for small graphs.  Sorted by
    size, then by sorted edge ids.
    """
    ids = sorted(set(range(g.edge_count) if edge_ids is None else edge_ids))
    adj = adjacency(g, ids)
    seen = [False] * g.vertex_count
    tree_edge: list[int | None] = [None] * g.vertex_count
    parent: list[int | None] = [None] * g.vertex_count
    depth = [0] * g.vertex_count
    tree: set[int] = set()
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for eid, y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    tree_edge[y], parent[y], depth[y] = eid, x, depth[x] + 1
                    tree.add(eid)
                    queue.append(y)
    basis = []
    for eid in ids:
        if eid in tree:
            continue
        mask = 1 << eid
        a, b = g.edges[eid].u, g.edges[eid].v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            mask ^= 1 << tree_edge[a]  # type: ignore[operator]
            a = parent[a]  # type: ignore[assignment]
        basis.append(mask)
    out = []
    mask = 0
    # Gray-code walk over all nonzero combinations of the fundamental cycles
    for k in range(1, 1 << len(basis)):
        bit = (k & -k).bit_length() - 1
        mask ^= basis[bit]
        members = [i for i in ids if mask >> i & 1]
        if is_circuit(g, members):
            out.append(frozenset(members))
    out.sort(key=lambda c: (len(c), sorted(c)))
    return out


def find_unbalanced_circuit(g: SignedMultigraph, edge_ids: Iterable[int] | None = None) -> EdgeSet | None:
    return fundamental_unbalanced_circuit(g, edge_ids)


def two_disjoint_unbalanced_circuits(g: SignedMultigraph) -> tuple[EdgeSet, EdgeSet] | None:
    """Two edge-disjoint unbalanced circuits, or ``None`` after exhaustive search.

    On graphs of small cycle rank the answer is canonical: the first disjoint
    pair in circuit order (size, then sorted ids).  Larger graphs try the
    fundamental circuits first.
    """
    if not is_eulerian(g):
        raise InvalidArgument("graph is not eulerian")
    everything = _all_edges(g)
    first = find_unbalanced_circuit(g)
    if first is None:
        return None
    if cycle_rank(g) > CANONICAL_RANK_LIMIT:
        second = find_unbalanced_circuit(g, everything - first)
        if second is not None:
            return first, second
    odd = [c for c in enumerate_circuits(g) if subgraph_sign(g, c) < 0]
    for i, c in enumerate(odd):
        for d in odd[i + 1 :]:
            if not c & d:
                return c, d
    return None


# -- tree partition -------------------------------------------------------


def _validate_tree(tree: Mapping[int, Iterable[int]]) -> dict[int, set[int]]:
    adj = {v: set(nbrs) for v, nbrs in tree.items()}
    for v, nbrs in adj.items():
        for w in nbrs:
            if w == v or w not in adj or v not in adj[w]:
                raise InvalidArgument("adjacency is not a simple undirected graph")
    if not adj:
        raise InvalidArgument("empty tree")
    n_edges = sum(len(n) for n in adj.values()) // 2
    start = min(adj)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(adj) or n_edges != len(adj) - 1:
        raise InvalidArgument("adjacency is not a tree")
    return adj


def odd_tree_partition(tree: Mapping[int, Iterable[int]], black: Iterable[int]) -> list[frozenset[int]]:
    """Split a tree into three subtrees, each with an odd number of black vertices.

    Needs an odd number (at least 3) of black vertices.  Take the two least
    leaves: two black leaves become singletons and everything else the
    third part; otherwise strip a white leaf, solve the rest, and give the
    leaf to the part holding its neighbour.
    """
    adj = _validate_tree(tree)
    blacks = set(black)
    if not blacks <= set(adj):
        raise InvalidArgument("black vertices must belong to the tree")
    if len(blacks) < 3 or len(blacks) % 2 == 0:
        raise InvalidArgument("need an odd number of black vertices, at least 3")
    stripped: list[tuple[int, int]] = []
    while True:
        leaves = sorted(v for v, n in adj.items() if len(n) == 1)
        v1, v2 = leaves[0], leaves[1]
        if v1 in blacks and v2 in blacks:
            parts = [{v1}, {v2}, set(adj) - {v1, v2}]
            break
        w = v1 if v1 not in blacks else v2
        (nb,) = adj.pop(w)
        adj[nb].discard(w)
        stripped.append((w, nb))
    for w, nb in reversed(stripped):
        next(p for p in parts if nb in p).add(w)
    return [frozenset(p) for p in parts]


def check_tree_partition(tree: Mapping[int, Iterable[int]], black: Iterable[int], parts: list[frozenset[int]]) -> bool:
    adj = {v: set(n) for v, n in tree.items()}
    blacks = set(black)
    if len(parts) != 3 or any(not p for p in parts):
        return False
    if sum(len(p) for p in parts) != len(adj) or set().union(*parts) != set(adj):
        return False
    for p in parts:
        if len(p & blacks) % 2 == 0:
            return False
        start = min(p)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()] & p:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != p:
            return False
    return True


# -- odd triples and even covers -----------------------------------------


def check_odd_triple(g: SignedMultigraph, t: OddTriple) -> bool:
    """Parts partition E(g); each is eulerian with an odd number of negative edges."""
    parts = t.parts
    if len(parts) != 3 or sum(len(p) for p in parts) != g.edge_count:
        return False
    if frozenset().union(*parts) != _all_edges(g):
        return False
    for p in parts:
        if not is_eulerian_subgraph(g, p) or negative_count(g, p) % 2 == 0:
            return False
    if t.common_vertex is not None:
        return all(t.common_vertex in vertices_of(g, p) for p in parts)
    return True


def check_even_cover(g: SignedMultigraph, c: EvenCover) -> bool:
    if c.h1 | c.h2 != _all_edges(g):
        return False
    return all(is_eulerian_subgraph(g, h) and negative_count(g, h) % 2 == 0 for h in (c.h1, c.h2))


def _common_vertex(g: SignedMultigraph, parts: Iterable[EdgeSet]) -> int | None:
    shared = set.intersection(*(vertices_of(g, p) for p in parts))
    return min(shared) if shared else None


def odd_triple_decomposition(g: SignedMultigraph) -> OddTriple:
    """Three edge-disjoint odd eulerian subgraphs covering ``g``.

    Decompose into circuits with two edge-disjoint unbalanced circuits first,
    take a breadth-first spanning tree of the circuit intersection graph,
    colour the unbalanced circuits black and split the tree into three
    subtrees with odd black counts.
    """
    if not is_eulerian(g):
        raise InvalidArgument("graph is not eulerian")
    if negative_parity(g) is not Parity.ODD:
        raise InvalidArgument("graph has an even number of negative edges")
    pair = two_disjoint_unbalanced_circuits(g)
    if pair is None:
        raise InvalidArgument("graph has no two edge-disjoint unbalanced circuits")
    c1, c2 = pair
    K = [c1, c2] + decompose_into_circuits(g, _all_edges(g) - c1 - c2)
    vsets = [vertices_of(g, c) for c in K]
    tree: dict[int, set[int]] = {i: set() for i in range(len(K))}
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(len(K)):
            if j not in seen and vsets[i] & vsets[j]:
                seen.add(j)
                tree[i].add(j)
                tree[j].add(i)
                queue.append(j)
    if len(seen) != len(K):
        raise InternalError("circuit intersection graph of a connected graph is disconnected")
    black = [i for i, c in enumerate(K) if subgraph_sign(g, c) < 0]
    groups = odd_tree_partition(tree, black)
    parts = tuple(frozenset().union(*(K[i] for i in grp)) for grp in groups)
    return OddTriple(parts, _common_vertex(g, parts))  # type: ignore[arg-type]


def even_cover_from_triple(g: SignedMultigraph, t: OddTriple) -> EvenCover:
    """Cover ``g`` by the unions of a middle part with each of the other two.

    The middle part is the first of parts 2, 1, 3 sharing a vertex with both
    others.
    """
    vs = [vertices_of(g, p) for p in t.parts]
    for mid in (1, 0, 2):
        a, b = (i for i in range(3) if i != mid)
        if vs[mid] & vs[a] and vs[mid] & vs[b]:
            return EvenCover(t.parts[a] | t.parts[mid], t.parts[mid] | t.parts[b])
    raise InternalError("no part meets both others; the graph cannot be connected")


# -- triply odd search ----------------------------------------------------


class _Search:
    """Backtracking assignment of edges to three parts around a fixed vertex."""

    def __init__(self, g: SignedMultigraph, budget: int | None):
        self.g = g
        self.m = g.edge_count
        self.budget = budget
        self.nodes = 0
        self.ends = [(e.u, e.v) for e in g.edges]
        self.loop = [e.is_loop for e in g.edges]
        self.neg = [e.sign < 0 for e in g.edges]
        self.adj = adjacency(g)

    def run(self, v: int) -> list[int] | None:
        g = self.g
        self.v = v
        self.part = [-1] * self.m
        self.odd = [[0] * g.vertex_count for _ in range(3)]
        self.open_nonloop = [0] * g.vertex_count
        for e in g.edges:
            if not e.is_loop:
                self.open_nonloop[e.u] += 1
                self.open_nonloop[e.v] += 1
        self.negpar = [0, 0, 0]
        self.open_neg = sum(self.neg)
        self.touch = [0, 0, 0]
        self.open_at_v = sum(1 for e in g.edges if v in (e.u, e.v))
        self.size = [0, 0, 0]
        return self._dfs(0, 0)

    def _feasible(self, eid: int) -> bool:
        u, w = self.ends[eid]
        if not self.loop[eid]:
            for x in (u, w):
                odd_parts = self.odd[0][x] + self.odd[1][x] + self.odd[2][x]
                if odd_parts > self.open_nonloop[x]:
                    return False
        if self.negpar.count(0) > self.open_neg:
            return False
        if self.touch.count(0) > self.open_at_v:
            return False
        return self._reachable()

    def _reachable(self) -> bool:
        """Every assigned edge of a part can still connect to ``v`` through its part or open edges."""
        for p in range(3):
            if not self.size[p]:
                continue
            seen = {self.v}
            stack = [self.v]
            reached = 0
            while stack:
                x = stack.pop()
                for eid, y in self.adj[x]:
                    q = self.part[eid]
                    if q != p and q != -1:
                        continue
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            for eid in range(self.m):
                if self.part[eid] == p:
                    a, b = self.ends[eid]
                    if a in seen or b in seen:
                        reached += 1
            if reached != self.size[p]:
                return False
        return True

    def _apply(self, eid: int, p: int, sign: int) -> None:
        u, w = self.ends[eid]
        self.part[eid] = p if sign > 0 else -1
        if not self.loop[eid]:
            self.odd[p][u] ^= 1
            self.odd[p][w] ^= 1
            self.open_nonloop[u] -= sign
            self.open_nonloop[w] -= sign
        if self.neg[eid]:
            self.negpar[p] ^= 1
            self.open_neg -= sign
        if self.v in (u, w):
            self.touch[p] += sign
            self.open_at_v -= sign
        self.size[p] += sign

    def _dfs(self, i: int, opened: int) -> list[int] | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise Undecided(self.nodes)
        if i == self.m:
            if opened == 3 and self._complete():
                return list(self.part)
            return None
        for p in range(min(opened + 1, 3)):
            self._apply(i, p, 1)
            if self._feasible(i):
                found = self._dfs(i + 1, max(opened, p + 1))
                if found is not None:
                    return found
            self._apply(i, p, -1)
        return None

    def _complete(self) -> bool:
        if any(self.negpar[p] == 0 or self.touch[p] == 0 for p in range(3)):
            return False
        return all(not any(self.odd[p]) for p in range(3))


def triply_odd(g: SignedMultigraph, budget: int | None = None) -> OddTriple | None:
    """A decomposition into three odd eulerian subgraphs through one vertex, or ``None``.

    Exact backtracking over edge-to-part assignments, trying common vertices
    in ascending order.  ``budget`` caps the number of search nodes; running
    out raises ``Undecided``.
    """
    if not is_eulerian(g):
        raise InvalidArgument("graph is not eulerian")
    if negative_parity(g) is Parity.EVEN:
        return None
    search = _Search(g, budget)
    for v in range(g.vertex_count):
        found = search.run(v)
        if found is not None:
            parts = tuple(frozenset(i for i, p in enumerate(found) if p == q) for q in range(3))
            return OddTriple(parts, v)  # type: ignore[arg-type]
    return None
