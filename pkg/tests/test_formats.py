import networkx as nx
import pytest
from hypothesis import given

from slater.formats import from_edge_list, from_graph6, read_graph, to_edge_list, to_graph6
from slater.graph import Graph, InputError, complete, cycle

from conftest import graphs


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_encodings():
    assert to_graph6(Graph.empty(1)) == "@"
    assert to_graph6(complete(4)) == "C~"
    assert to_graph6(cycle(4), header=True) == ">>graph6<<Cl"


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expected


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_large_order_round_trip():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_read_graph_detects_format():
    assert read_graph("Cl\n") == cycle(4)
    assert read_graph("4 4\n0 1\n1 2\n2 3\n3 0\n") == cycle(4)


@pytest.mark.parametrize("text", ["", ":Fa@x^", "C", "C~~", "3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 0\n"])
def test_malformed_input_rejected(text):
    with pytest.raises(InputError):
        read_graph(text)
