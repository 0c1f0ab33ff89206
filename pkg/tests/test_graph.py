import pytest
from hypothesis import given

from slater.graph import (
    Graph,
    InputError,
    closed_neighborhood,
    complete,
    cycle,
    degree_sequence,
    disjoint_union,
    induced_subgraph,
    path,
    star,
    to_mask,
    vertices_by_degree,
)
from slater.generators import family_clique_plus_isolated

from conftest import graphs


def test_closed_neighborhood_examples():
    assert closed_neighborhood(Graph.empty(1), 0) == 0b1
    assert closed_neighborhood(path(3), 1) == 0b111
    assert closed_neighborhood(star(4), 0).bit_count() == 5


def test_degree_sequence_examples():
    assert degree_sequence(cycle(4)) == [2, 2, 2, 2]
    assert degree_sequence(family_clique_plus_isolated(4)) == [3, 3, 3, 3, 0, 0, 0, 0]


def test_degree_sequence_rejects_null_graph():
    with pytest.raises(InputError):
        degree_sequence(Graph.empty(0))


def test_vertices_by_degree_breaks_ties_by_index():
    g = Graph.from_edges(4, [(2, 3), (1, 3)])
    assert vertices_by_degree(g) == [3, 1, 2, 0]


def test_induced_subgraph_examples():
    c4 = cycle(4)
    assert induced_subgraph(c4, c4.vertices) == c4
    assert induced_subgraph(c4, 0b0111) == path(3)
    c4k1 = disjoint_union(c4, Graph.empty(1))
    assert induced_subgraph(c4k1, 0b01111) == c4


def test_induced_subgraph_relabeling_order():
    g = Graph.from_edges(5, [(1, 4), (3, 4)])
    assert induced_subgraph(g, [4, 1, 3]).edges() == [(0, 1), (0, 2)]
    assert induced_subgraph(g, to_mask([4, 1, 3])).edges() == [(0, 2), (1, 2)]
    with pytest.raises(InputError):
        induced_subgraph(g, [1, 1])


def test_disjoint_union_examples():
    k1 = Graph.empty(1)
    two = disjoint_union(k1, k1)
    assert (two.n, two.m) == (2, 0)
    forbidden = disjoint_union(complete(2), Graph.empty(2))
    assert (forbidden.n, forbidden.edges()) == (4, [(0, 1)])
    c4k1 = disjoint_union(cycle(4), k1)
    assert (c4k1.n, c4k1.m) == (5, 4)


@pytest.mark.parametrize(
    "n, adj",
    [
        (2, (0b10, 0b00)),  # asymmetric
        (1, (0b1,)),  # loop
        (2, (0b100, 0b0)),  # out of range
        (-1, ()),
        (2, (0,)),
    ],
)
def test_invalid_graphs_rejected(n, adj):
    with pytest.raises(InputError):
        Graph(n, adj)


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 3)])


def test_connectivity_and_trees():
    assert path(5).is_tree()
    assert not cycle(5).is_tree()
    assert not disjoint_union(path(2), path(2)).is_connected()
    assert Graph.empty(1).is_tree()


@given(graphs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees()) == 2 * g.m
    assert len(g.edges()) == g.m


@given(graphs(), graphs())
def test_disjoint_union_adds_orders_and_sizes(a, b):
    u = disjoint_union(a, b)
    assert (u.n, u.m) == (a.n + b.n, a.m + b.m)
    assert induced_subgraph(u, to_mask(range(a.n))) == a
