import pytest
from hypothesis import given, settings

from signedflow.classify import construct_flow, flow_number, Verdict
from signedflow.errors import ParseError
from signedflow.flows import IN, OUT, Flow, verify_flow
from signedflow.generators import bouquet, phi4_prototype
from signedflow.groups import GroupSpec
from signedflow.io import parse_flow, parse_graph, serialize_flow, serialize_graph

from support import eulerian_graphs, signed_graphs


def test_negative_loop():
    g = parse_graph("v 1\ne 0 0 0 -\n")
    assert g.vertex_count == 1 and [(e.u, e.v, e.sign) for e in g.edges] == [(0, 0, -1)]


def test_extroverted_loop_flow():
    g = parse_graph("v 1\ne 0 0 0 -\n")
    f = parse_flow("group Z\nf 0 out out 1\n", g)
    assert f.orientation == ((OUT, OUT),) and f.values == ((1,),)


def test_endpoint_out_of_range_line_number():
    with pytest.raises(ParseError) as err:
        parse_graph("v 2\ne 0 0 5 +\n")
    assert err.value.line == 2
    assert "line 2" in str(err.value)


def test_comments_and_blank_lines():
    g = parse_graph("# a loop\n\nv 1   # one vertex\ne 0 0 0 +\n")
    assert g.edge_count == 1


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 0 0 0 +\n",
        "v x\n",
        "v 1\ne 0 0 0 *\n",
        "v 1\ne 1 0 0 +\n",
        "v 1\ne 0 0 0 +\ne 0 0 0 +\n",
        "v 1\ne 0 0\n",
    ],
)
def test_graph_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text",
    [
        "f 0 out out 1\n",
        "group Q\nf 0 out out 1\n",
        "group Z\nf 0 out in 1\n",
        "group Z\nf 3 out out 1\n",
        "group Z\nf 0 out out 1\nf 0 out out 1\n",
        "group Z\n",
        "group Z3\nf 0 out out 4\n",
        "group Z\nf 0 up out 1\n",
    ],
)
def test_flow_errors(text):
    g = parse_graph("v 1\ne 0 0 0 -\n")
    with pytest.raises(ParseError):
        parse_flow(text, g)


@given(signed_graphs())
def test_graph_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=40, deadline=None)
@given(eulerian_graphs(max_vertices=4))
def test_flow_round_trip(g):
    fc = flow_number(g)
    if fc.flow is None:
        return
    assert parse_flow(serialize_flow(fc.flow), g) == fc.flow


def test_group_flow_round_trip():
    g = bouquet(3)
    A = GroupSpec.parse("Z2xZ4")
    f = Flow(A, [(1, 0), (0, 2), (1, 3)], [(OUT, OUT), (IN, IN), (OUT, OUT)])
    assert parse_flow(serialize_flow(f), g) == f


def test_serialized_certificate_verifies():
    g = phi4_prototype()
    f = parse_flow(serialize_flow(construct_flow(g, Verdict.FOUR)), parse_graph(serialize_graph(g)))
    assert verify_flow(g, f).is_k_flow(4)
