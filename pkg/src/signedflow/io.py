"""Plain-text graph and flow files.

Graph file::

    v <vertex_count>
    e <edge_id> <u> <v> <+|->

Flow file::

    group <spec>
    f <edge_id> <du> <dv> <value>

``du``/``dv`` are ``out`` or ``in`` for the half-edge at ``end_u``/``end_v``
(for a loop: half 0 and half 1).  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .errors import InvalidArgument, ParseError
from .flows import IN, OUT, Flow, compatible
from .graph import Edge, SignedMultigraph
from .groups import GroupSpec

_DIR_NAME = {OUT: "out", IN: "in"}
_DIR_VALUE = {"out": OUT, "in": IN}


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def serialize_graph(g: SignedMultigraph) -> str:
    out = [f"v {g.vertex_count}"]
    out += [f"e {e.id} {e.u} {e.v} {'+' if e.sign > 0 else '-'}" for e in g.edges]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> SignedMultigraph:
    n: int | None = None
    found: dict[int, Edge] = {}
    for number, tok in _lines(text):
        if n is None:
            if tok[0] != "v" or len(tok) != 2 or not tok[1].isdigit():
                raise ParseError("expected 'v <vertex_count>' first", number)
            n = int(tok[1])
            continue
        if tok[0] != "e" or len(tok) != 5:
            raise ParseError(f"expected 'e <id> <u> <v> <+|->', got {' '.join(tok)!r}", number)
        try:
            eid, u, v = int(tok[1]), int(tok[2]), int(tok[3])
        except ValueError:
            raise ParseError("edge id and endpoints must be integers", number) from None
        if tok[4] not in ("+", "-"):
            raise ParseError(f"sign must be + or -, got {tok[4]!r}", number)
        if eid in found:
            raise ParseError(f"duplicate edge id {eid}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", number)
        found[eid] = Edge(eid, u, v, 1 if tok[4] == "+" else -1)
    if n is None:
        raise ParseError("empty graph file")
    if sorted(found) != list(range(len(found))):
        raise ParseError("edge ids must be exactly 0..m-1")
    return SignedMultigraph(n, tuple(found[i] for i in range(len(found))))


def serialize_flow(f: Flow) -> str:
    out = [f"group {f.group}"]
    for i, (x, (d0, d1)) in enumerate(zip(f.values, f.orientation)):
        out.append(f"f {i} {_DIR_NAME[d0]} {_DIR_NAME[d1]} {f.group.format(x)}")
    return "\n".join(out) + "\n"


def parse_flow(text: str, g: SignedMultigraph) -> Flow:
    spec: GroupSpec | None = None
    values: dict[int, tuple] = {}
    orient: dict[int, tuple[int, int]] = {}
    for number, tok in _lines(text):
        if spec is None:
            if tok[0] != "group" or len(tok) != 2:
                raise ParseError("expected 'group <spec>' first", number)
            try:
                spec = GroupSpec.parse(tok[1])
            except InvalidArgument as exc:
                raise ParseError(str(exc), number) from None
            continue
        if tok[0] != "f" or len(tok) != 5:
            raise ParseError("expected 'f <id> <du> <dv> <value>'", number)
        try:
            eid = int(tok[1])
        except ValueError:
            raise ParseError("edge id must be an integer", number) from None
        if not 0 <= eid < g.edge_count:
            raise ParseError(f"edge {eid} is not in the graph", number)
        if eid in values:
            raise ParseError(f"duplicate value for edge {eid}", number)
        if tok[2] not in _DIR_VALUE or tok[3] not in _DIR_VALUE:
            raise ParseError("directions must be 'out' or 'in'", number)
        dirs = (_DIR_VALUE[tok[2]], _DIR_VALUE[tok[3]])
        if not compatible(g.edges[eid].sign, dirs):
            raise ParseError(f"orientation of edge {eid} is incompatible with its sign", number)
        try:
            values[eid] = spec.parse_element(tok[4])
        except InvalidArgument as exc:
            raise ParseError(str(exc), number) from None
        orient[eid] = dirs
    if spec is None:
        raise ParseError("empty flow file")
    missing = [i for i in range(g.edge_count) if i not in values]
    if missing:
        raise ParseError(f"no value for edges {missing}")
    return Flow(spec, [values[i] for i in range(g.edge_count)], [orient[i] for i in range(g.edge_count)])
