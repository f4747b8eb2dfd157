import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowdom.errors import InvalidParameter, ParseError
from rainbowdom.graphs import (
    closed_neighborhood, make_circulant, make_custom, make_generalized_petersen,
    open_neighborhood, parse_graph_spec, regular_degree, to_dot,
)
from rainbowdom.rdf import parse_assignment


def test_circulant_examples():
    assert set(make_circulant(9, {1, 4}).neighbors(0)) == {1, 4, 5, 8}
    tri = make_circulant(3, {1})
    assert [tri.degree(v) for v in range(3)] == [2, 2, 2]
    c8 = make_circulant(8, {1, 4})
    assert all(c8.degree(v) == 3 for v in range(8))


@pytest.mark.parametrize("n,jumps", [(2, [1]), (9, [5]), (9, [0]), (9, [1, 1]), (9, [])])
def test_circulant_rejects(n, jumps):
    with pytest.raises(InvalidParameter):
        make_circulant(n, jumps)


def test_petersen_examples():
    p = make_generalized_petersen(5, 2)
    assert p.n == 10 and regular_degree(p) == 3
    assert nx.girth(nx.Graph(p.edges)) == 5
    assert nx.is_isomorphic(nx.Graph(p.edges), nx.petersen_graph())
    prism = make_generalized_petersen(3, 1)
    assert prism.n == 6 and prism.num_edges == 9
    p10 = make_generalized_petersen(10, 2)
    assert (p10.n, p10.num_edges) == (20, 30)


@pytest.mark.parametrize("n,k", [(2, 1), (6, 3), (5, 0), (7, 4)])
def test_petersen_rejects(n, k):
    with pytest.raises(InvalidParameter):
        make_generalized_petersen(n, k)


def test_neighborhoods():
    g = make_circulant(9, {1, 4})
    assert open_neighborhood(g, 0) == {1, 4, 5, 8}
    assert closed_neighborhood(g, 0) == {0, 1, 4, 5, 8}
    assert closed_neighborhood(make_circulant(3, {1}), 0) == {0, 1, 2}
    assert open_neighborhood(make_circulant(12, {1, 4}), 2) == {1, 3, 6, 10}
    with pytest.raises(InvalidParameter):
        open_neighborhood(g, 9)
    with pytest.raises(InvalidParameter):
        closed_neighborhood(g, -1)


def test_regular_degree():
    assert regular_degree(make_circulant(19, {1, 4})) == 4
    assert regular_degree(make_generalized_petersen(5, 2)) == 3
    assert regular_degree(make_custom(3, [(0, 1), (1, 2)])) is None


def test_parse_graph_spec():
    g = parse_graph_spec("circulant:19:1,4")
    assert g == make_circulant(19, [1, 4]) and g.spec() == "circulant:19:1,4"
    p = parse_graph_spec("petersen:5:2")
    assert p == make_generalized_petersen(5, 2) and p.spec() == "petersen:5:2"


@pytest.mark.parametrize("text", [
    "circulant:9:0,4", "circulant:9:4,1", "circulant:9:1,1", "circulant:9", "circ:9:1",
    "circulant:x:1", "petersen:5:", "circulant:9:1,,4", "",
])
def test_parse_graph_spec_errors(text):
    with pytest.raises(ParseError) as exc:
        parse_graph_spec(text)
    assert exc.value.position is not None


def test_parse_graph_spec_forwards_range_errors():
    with pytest.raises(InvalidParameter):
        parse_graph_spec("circulant:9:1,5")
    with pytest.raises(InvalidParameter):
        parse_graph_spec("petersen:6:3")


@given(st.integers(3, 200), st.data())
def test_circulant_matches_networkx(n, data):
    jumps = data.draw(st.sets(st.integers(1, n // 2), min_size=1, max_size=4))
    g = make_circulant(n, jumps)
    ref = nx.circulant_graph(n, sorted(jumps))
    assert set(g.edges) == {tuple(sorted(e)) for e in ref.edges}


@given(st.integers(3, 200), st.data())
def test_circulant_invariants(n, data):
    jumps = data.draw(st.sets(st.integers(1, n // 2), min_size=1, max_size=3))
    g = make_circulant(n, jumps)
    adj = [set(a) for a in g.adjacency]
    for v in range(n):
        assert v not in adj[v]
        assert list(g.adjacency[v]) == sorted(set(g.adjacency[v]))
        for u in adj[v]:
            assert v in adj[u]
            assert (v + 1) % n in adj[(u + 1) % n]
    antipodal = any(2 * s == n for s in jumps)
    expect = 2 * len(jumps) - (1 if antipodal else 0)
    assert regular_degree(g) == expect


@given(st.integers(3, 60), st.data())
def test_petersen_invariants(n, data):
    k = data.draw(st.integers(1, (n - 1) // 2))
    g = make_generalized_petersen(n, k)
    assert g.n == 2 * n and g.num_edges == 3 * n and regular_degree(g) == 3
    for v in range(g.n):
        for u in g.adjacency[v]:
            assert v in g.adjacency[u] and u != v


def test_to_dot_plain():
    text = to_dot(make_circulant(3, {1}))
    assert text.count(" -- ") == 3
    assert text.count(";") - 1 == 3 + 3  # node default line excluded


def test_to_dot_labelled():
    g = make_circulant(9, {1, 4})
    f = parse_assignment("300200100", 2)
    text = to_dot(g, f)
    assert 'v0 [label="{1,2}"' in text
    assert 'v3 [label="{2}"' in text
    assert 'v1 [label="{}"' in text
    with pytest.raises(InvalidParameter):
        to_dot(g, parse_assignment("3002", 2))


@pytest.mark.parametrize("spec,assign", [("circulant:9:1,4", "300200100"), ("petersen:5:2", None)])
def test_to_dot_roundtrip_pydot(spec, assign):
    pydot = pytest.importorskip("pydot")
    g = parse_graph_spec(spec)
    f = parse_assignment(assign, 2) if assign else None
    (parsed,) = pydot.graph_from_dot_data(to_dot(g, f))
    nodes = [nd for nd in parsed.get_nodes() if nd.get_name() not in ("node", "edge", "graph")]
    assert len(nodes) == g.n
    assert len(parsed.get_edges()) == g.num_edges
