"""Brute-force ground truth for cross-checking the classifier at desk scale.

Nothing here calls into ``decompose`` or ``classify`` search code: flows are
found by exhaustive assignment under one fixed orientation, and triply-odd
decompositions by plain enumeration of all 3^|E| edge colourings.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidArgument
from .flows import IN, OUT, Flow, verify_flow
from .graph import Edge, SignedMultigraph, components, is_eulerian
from .groups import GroupSpec

DEFAULT_MAX_K = 6


def _orientation(g: SignedMultigraph) -> list[tuple[int, int]]:
    return [(OUT, IN) if e.sign > 0 else (OUT, OUT) for e in g.edges]


class _KirchhoffSearch:
    """Vertex-by-vertex backtracking over edge values with forced closing edges.

    ``coeffs[e]`` lists ``(vertex, c)`` with ``c`` the net half-edge direction
    of ``e`` at that vertex.  Edges with no nonzero coefficient (positive
    loops) never affect Kirchhoff's law and take any value.
    """

    def __init__(self, g: SignedMultigraph):
        self.n = g.vertex_count
        orient = _orientation(g)
        self.coeffs: list[list[tuple[int, int]]] = []
        for e in g.edges:
            d0, d1 = orient[e.id]
            if e.is_loop:
                c = [(e.u, d0 + d1)] if d0 + d1 else []
            else:
                c = [(e.u, d0), (e.v, d1)]
            self.coeffs.append(c)
        order: list[int] = []
        placed: set[int] = set()
        for v in range(self.n):
            for e in range(g.edge_count):
                if e not in placed and any(w == v for w, _ in self.coeffs[e]):
                    order.append(e)
                    placed.add(e)
        self.order = order
        self.free = [e for e in range(g.edge_count) if e not in placed]
        self.closing: list[list[tuple[int, int]]] = [[] for _ in order]
        self.remaining: list[list[int]] = []
        last = {}
        for pos, e in enumerate(order):
            for w, _ in self.coeffs[e]:
                last[w] = pos
        for pos, e in enumerate(order):
            self.closing[pos] = [(w, c) for w, c in self.coeffs[e] if last[w] == pos]
        # remaining[pos][w]: sum of |c| over edges at positions > pos
        rem = [0] * self.n
        rows = []
        for e in reversed(order):
            rows.append(list(rem))
            for w, c in self.coeffs[e]:
                rem[w] += abs(c)
        self.remaining = list(reversed(rows))


def _integer_search(g: SignedMultigraph, k: int) -> list[int] | None:
    s = _KirchhoffSearch(g)
    values = [0] * g.edge_count
    for e in s.free:
        values[e] = 1
    choices = [x for a in range(1, k) for x in (a, -a)]
    partial = [0] * s.n
    top = k - 1

    def dfs(pos: int) -> bool:
        if pos == len(s.order):
            return True
        e = s.order[pos]
        cands = choices
        for w, c in s.closing[pos]:
            if partial[w] % c:
                return False
            x = -partial[w] // c
            if x == 0 or abs(x) > top:
                return False
            cands = [x]
            break
        for x in cands:
            ok = True
            for w, c in s.coeffs[e]:
                partial[w] += c * x
            for w, c in s.coeffs[e]:
                if abs(partial[w]) > top * s.remaining[pos][w]:
                    ok = False
            if ok:
                values[e] = x
                if dfs(pos + 1):
                    return True
            for w, c in s.coeffs[e]:
                partial[w] -= c * x
        return False

    return values if dfs(0) else None


def brute_force_k_flow(g: SignedMultigraph, k: int) -> list[int] | None:
    """Values of some nowhere-zero k-flow under the extroverted default orientation, or ``None``."""
    if g.edge_count == 0:
        raise InvalidArgument("edgeless graph")
    if k < 2:
        return None
    return _integer_search(g, k)


def brute_force_flow_number(g: SignedMultigraph, max_k: int = DEFAULT_MAX_K) -> int | None:
    """The least ``k <= max_k`` admitting a nowhere-zero k-flow, or ``None``."""
    if g.edge_count == 0:
        raise InvalidArgument("edgeless graph")
    # one exhaustive pass settles the absent case; smaller k only matter if it succeeds
    if _integer_search(g, max_k) is None:
        return None
    for k in range(2, max_k):
        if _integer_search(g, k) is not None:
            return k
    return max_k


def integer_flow_from_values(g: SignedMultigraph, values: list[int]) -> Flow:
    return Flow(GroupSpec.integers(), [(x,) for x in values], _orientation(g))


def brute_force_group_flow(g: SignedMultigraph, spec: GroupSpec) -> Flow | None:
    """Some nowhere-zero ``spec``-flow by exhaustive search, verified, or ``None``."""
    if g.edge_count == 0:
        raise InvalidArgument("edgeless graph")
    if spec.is_integer:
        raise InvalidArgument("Z is infinite; use brute_force_flow_number")
    elems = list(itertools.product(*(range(n) for n in spec.moduli)))
    index = {x: i for i, x in enumerate(elems)}
    mods = spec.moduli
    add = [[index[tuple((a + b) % n for a, b, n in zip(x, y, mods))] for y in elems] for x in elems]
    scale = {c: [index[tuple(c * a % n for a, n in zip(x, mods))] for x in elems] for c in (-2, -1, 1, 2)}
    neg = scale[-1]
    s = _KirchhoffSearch(g)
    values = [0] * g.edge_count
    for e in s.free:
        values[e] = 1
    nonzero = list(range(1, len(elems)))
    partial = [0] * s.n

    def dfs(pos: int) -> bool:
        if pos == len(s.order):
            return True
        e = s.order[pos]
        cands = nonzero
        for w, c in s.closing[pos]:
            if abs(c) == 1:
                # c * x = -partial  =>  x = c * (-partial) since c is its own inverse
                x = scale[c][neg[partial[w]]]
                cands = [x] if x else []
                break
        for x in cands:
            saved = [partial[w] for w, _ in s.coeffs[e]]
            for w, c in s.coeffs[e]:
                partial[w] = add[partial[w]][scale[c][x]]
            if all(partial[w] == 0 for w, _ in s.closing[pos]):
                values[e] = x
                if dfs(pos + 1):
                    return True
            for (w, _), old in zip(s.coeffs[e], saved):
                partial[w] = old
        return False

    if not dfs(0):
        return None
    f = Flow(spec, [elems[x] for x in values], _orientation(g))
    if not verify_flow(g, f).nowhere_zero:
        raise AssertionError("brute-force group flow failed verification")  # pragma: no cover
    return f


def brute_force_triply_odd(g: SignedMultigraph) -> bool:
    """Plain enumeration of all 3-colourings of the edges."""
    if not is_eulerian(g):
        raise InvalidArgument("graph is not eulerian")
    m = g.edge_count
    negatives = sum(1 for e in g.edges if e.sign < 0)
    if negatives % 2 == 0:
        return False
    parity_bits = [0 if e.is_loop else (1 << e.u) ^ (1 << e.v) for e in g.edges]
    vertex_bits = [(1 << e.u) | (1 << e.v) for e in g.edges]
    neg = [e.sign < 0 for e in g.edges]

    def good(part: list[int]) -> int:
        """Vertex mask of the part if it is an odd eulerian subgraph, else 0."""
        if not part or sum(neg[i] for i in part) % 2 == 0:
            return 0
        par = 0
        for i in part:
            par ^= parity_bits[i]
        if par:
            return 0
        reach = vertex_bits[part[0]]
        pending = list(part[1:])
        grew = True
        while grew:
            grew = False
            for i in list(pending):
                if vertex_bits[i] & reach:
                    reach |= vertex_bits[i]
                    pending.remove(i)
                    grew = True
        return 0 if pending else reach

    for colouring in itertools.product(range(3), repeat=m):
        parts: list[list[int]] = [[], [], []]
        for i, c in enumerate(colouring):
            parts[c].append(i)
        masks = [good(p) for p in parts]
        if all(masks) and masks[0] & masks[1] & masks[2]:
            return True
    return False


# -- enumeration ----------------------------------------------------------


@dataclass(frozen=True)
class EnumSpec:
    max_vertices: int
    max_edges: int
    eulerian_only: bool = False
    connected_only: bool = False

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_edges < 1:
            raise InvalidArgument("enumeration bounds must be >= 1")


def _slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u, n)]


def _structure_ok(n: int, multiset: tuple[tuple[int, int], ...], eulerian: bool, connected: bool) -> bool:
    if not (eulerian or connected):
        return True
    deg = [0] * n
    for u, v in multiset:
        deg[u] += 1
        deg[v] += 1
    if eulerian and (not multiset or any(d == 0 or d % 2 for d in deg)):
        return False
    probe = SignedMultigraph.from_edges(n, [(u, v, 1) for u, v in multiset])
    return len(components(probe)) == 1


def _sign_patterns(multiset: tuple[tuple[int, int], ...]) -> Iterator[list[int]]:
    """Sign vectors with ``+`` before ``-`` inside each run of equal slots, in lex order (+ < -)."""
    runs = [len(list(grp)) for _, grp in itertools.groupby(multiset)]
    for negs in itertools.product(*(range(c + 1) for c in runs)):
        signs: list[int] = []
        for c, j in zip(runs, negs):
            signs += [1] * (c - j) + [-1] * j
        yield signs


def enumerate_graphs(spec: EnumSpec) -> Iterator[SignedMultigraph]:
    """Labeled signed multigraphs on exactly ``n`` vertices, ``n = 1..max_vertices``.

    Order: vertex count, then edge count, then the sorted edge multiset over
    slots ``(u, v)`` with ``u <= v`` in lex order, then the sign vector.
    """
    for n in range(1, spec.max_vertices + 1):
        slots = _slots(n)
        for m in range(0, spec.max_edges + 1):
            for multiset in itertools.combinations_with_replacement(slots, m):
                if not _structure_ok(n, multiset, spec.eulerian_only, spec.connected_only):
                    continue
                for signs in _sign_patterns(multiset):
                    yield SignedMultigraph(n, tuple(Edge(i, u, v, s) for i, ((u, v), s) in enumerate(zip(multiset, signs))))


def _canonical(n: int, multiset: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        image = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in multiset))
        if best is None or image < best:
            best = image
    return best  # type: ignore[return-value]


def enumerate_switching_classes(max_vertices: int, max_edges: int) -> Iterator[SignedMultigraph]:
    """Connected signed eulerian multigraphs up to vertex relabelling and switching.

    Underlying multigraphs are reduced by brute-force canonical labelling; for
    each, the edges of a breadth-first spanning tree stay positive and every
    sign pattern on the remaining edges is emitted, which meets each
    switching class at least once.
    """
    for n in range(1, max_vertices + 1):
        slots = _slots(n)
        seen: set[tuple[tuple[int, int], ...]] = set()
        for m in range(1, max_edges + 1):
            for multiset in itertools.combinations_with_replacement(slots, m):
                if not _structure_ok(n, multiset, True, True):
                    continue
                canon = _canonical(n, multiset)
                if canon in seen:
                    continue
                seen.add(canon)
                tree = _bfs_tree_edges(n, canon)
                free = [i for i in range(m) if i not in tree]
                for pattern in itertools.product((1, -1), repeat=len(free)):
                    signs = [1] * m
                    for i, s in zip(free, pattern):
                        signs[i] = s
                    yield SignedMultigraph(n, tuple(Edge(i, u, v, s) for i, ((u, v), s) in enumerate(zip(canon, signs))))


def _bfs_tree_edges(n: int, multiset: tuple[tuple[int, int], ...]) -> set[int]:
    seen = {0}
    frontier = [0]
    tree = set()
    while frontier:
        nxt = []
        for x in frontier:
            for i, (u, v) in enumerate(multiset):
                y = v if u == x else u if v == x else None
                if y is not None and y not in seen:
                    seen.add(y)
                    tree.add(i)
                    nxt.append(y)
        frontier = nxt
    return tree


# -- sweep ----------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    index: int
    edges: str
    parity: str
    classifier: str
    oracle: str
    triply_odd_classifier: bool
    triply_odd_oracle: bool

    @property
    def passed(self) -> bool:
        return self.classifier == self.oracle and self.triply_odd_classifier == self.triply_odd_oracle


def edge_string(g: SignedMultigraph) -> str:
    return " ".join(f"{e.u}{'+' if e.sign > 0 else '-'}{e.v}" for e in g.edges)


def _check_one(args: tuple[int, SignedMultigraph, int, int | None]) -> SweepRow:
    from .classify import flow_number
    from .decompose import triply_odd

    index, g, max_k, budget = args
    verdict = flow_number(g, budget).verdict.value
    k = brute_force_flow_number(g, max_k)
    parity = "odd" if sum(e.sign < 0 for e in g.edges) % 2 else "even"
    return SweepRow(
        index,
        edge_string(g),
        parity,
        verdict,
        "none" if k is None else str(k),
        triply_odd(g, budget) is not None,
        brute_force_triply_odd(g),
    )


def sweep(spec: EnumSpec, max_k: int = DEFAULT_MAX_K, budget: int | None = None, jobs: int = 1) -> Iterator[SweepRow]:
    """Compare classifier and oracle on every enumerated eulerian graph, in enumeration order."""
    spec = EnumSpec(spec.max_vertices, spec.max_edges, True, True)
    tasks = ((i, g, max_k, budget) for i, g in enumerate(enumerate_graphs(spec)))
    if jobs <= 1:
        yield from map(_check_one, tasks)
        return
    with ProcessPoolExecutor(jobs) as pool:
        yield from pool.map(_check_one, tasks, chunksize=64)
