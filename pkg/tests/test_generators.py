import pytest

from signedflow.classify import Verdict, flow_number
from signedflow.errors import InvalidArgument
from signedflow.generators import NAMES, barbell, generate, six_regular_antibalanced
from signedflow.graph import components, is_eulerian, subgraph_sign
from signedflow.io import serialize_graph
from signedflow.oracle import brute_force_flow_number


@pytest.mark.parametrize(
    "name, params, verdict",
    [
        ("neg-loop", [], Verdict.NOT_ADMISSIBLE),
        ("pos-loop", [], Verdict.TWO),
        ("neg-digon", [], Verdict.TWO),
        ("bouquet", [3], Verdict.THREE),
        ("phi4-prototype", [], Verdict.FOUR),
    ],
)
def test_prototype_classes(name, params, verdict):
    g = generate(name, params)
    assert flow_number(g).verdict is verdict
    assert brute_force_flow_number(g, 6) == verdict.k


def test_phi4_shape():
    g = generate("phi4-prototype")
    assert (g.vertex_count, g.edge_count) == (4, 8)
    assert sorted(e.sign for e in g.edges).count(-1) == 3


def test_barbell():
    g = barbell(3, 2, 2)
    assert g.edge_count == 3 + 2 + 2
    assert len(components(g)) == 1
    assert subgraph_sign(g, [0, 1, 2]) == -1
    assert subgraph_sign(g, [5, 6]) == -1
    shared = barbell(1, 1, 0)
    assert shared.vertex_count == 1 and is_eulerian(shared)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_six_regular(n):
    g = six_regular_antibalanced(n, seed=4)
    assert g.degrees() == [6] * n
    assert all(e.sign == -1 for e in g.edges)
    assert len(components(g)) == 1


@pytest.mark.parametrize("name", NAMES)
def test_byte_stable(name):
    params = {"bouquet": [3], "barbell": [2, 3, 1], "six-regular-antibalanced": [5, 2]}.get(name, [])
    assert serialize_graph(generate(name, params)) == serialize_graph(generate(name, params))


@pytest.mark.parametrize(
    "name, params",
    [
        ("six-regular-antibalanced", [4]),
        ("six-regular-antibalanced", []),
        ("bouquet", []),
        ("bouquet", [0]),
        ("neg-loop", [1]),
        ("barbell", [1, 1]),
        ("barbell", [0, 1, 1]),
        ("petersen", []),
    ],
)
def test_bad_params(name, params):
    with pytest.raises(InvalidArgument):
        generate(name, params)
