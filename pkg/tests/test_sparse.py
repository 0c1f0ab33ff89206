from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slater.flow import FlowNetwork
from slater.generators import (
    family_gstar,
    family_outerplanar_extremal,
    random_cactus,
    random_maximal_outerplanar,
    random_tree,
)
from slater.graph import Graph, InputError, complete, cycle, disjoint_union, induced_subgraph, path
from slater.sparse import (
    OuterplanarEmbedding,
    RationalPair,
    audit_lemma1,
    certify_outerplanar,
    check_theorem3,
    check_theorem6,
    check_theorem7,
    is_member,
    max_edge_excess,
    max_edge_excess_bruteforce,
    max_edge_excess_mincut,
    parse_rational,
    theorem6_factor,
    validate_embedding,
)

from conftest import graphs

alphas = st.fractions(min_value=0, max_value=4, max_denominator=6)


def _excess_by_subsets(g: Graph, alpha: F) -> F:
    best = None
    for mask in range(1, 1 << g.n):
        h = induced_subgraph(g, mask)
        value = h.m - alpha * h.n
        best = value if best is None else max(best, value)
    return best


@pytest.mark.parametrize("text, value", [("3/2", F(3, 2)), ("2", F(2)), (" -1/3 ", F(-1, 3)), ("4/6", F(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "a/b", "", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text)


def test_rational_pair_validation():
    with pytest.raises(InputError):
        RationalPair(F(-1), F(-2))
    with pytest.raises(InputError):
        RationalPair(F(1), F(2))
    assert RationalPair("3/2", "3/2").alpha == F(3, 2)


def test_excess_examples():
    for seed in range(5):
        t = random_tree(9, seed)
        assert max_edge_excess(t, F(1))[0] == -1
        assert is_member(t, RationalPair(F(1), F(1))).member
    assert max_edge_excess(Graph.empty(1), F(1, 2))[0] == F(-1, 2)


def test_gstar_excess_is_attained_by_a_single_vertex():
    g = family_gstar(6)
    excess, mask = max_edge_excess(g, F(2))
    assert excess == -2
    assert mask.bit_count() == 1
    assert is_member(g, RationalPair(F(2), F(2))).member
    # the biclique on its own is strictly sparser
    biclique = induced_subgraph(g, range(7))
    assert biclique.m - 2 * biclique.n == -4


def test_cactus_and_cycle_membership():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    assert is_member(bowtie, RationalPair("3/2", "3/2")).member
    verdict = is_member(cycle(4), RationalPair(F(1), F(1)))
    assert not verdict.member
    assert verdict.violating_subgraph == 0b1111
    assert verdict.max_excess == 0


def test_mincut_handles_negative_optimum_off_single_vertices():
    # the best non-null subgraph of P3 at alpha = 3/4 is the whole path
    assert max_edge_excess_mincut(path(3), F(3, 4)) == (F(-1, 4), 0b111)
    assert max_edge_excess_bruteforce(path(3), F(3, 4))[0] == F(-1, 4)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), alphas)
def test_excess_methods_agree_with_subset_enumeration(g, alpha):
    expected = _excess_by_subsets(g, alpha)
    for method in (max_edge_excess_bruteforce, max_edge_excess_mincut):
        value, mask = method(g, alpha)
        assert value == expected
        h = induced_subgraph(g, mask)
        assert mask and h.m - alpha * h.n == value


def test_method_selection():
    with pytest.raises(InputError):
        max_edge_excess(path(3), F(1), method="magic")
    with pytest.raises(InputError):
        max_edge_excess_bruteforce(Graph.empty(21), F(1))
    big = random_cactus(30, seed=3)
    assert max_edge_excess(big, F(3, 2), method="mincut") == max_edge_excess(big, F(3, 2))


def test_flow_network_small_cut():
    net = FlowNetwork(4)
    net.add_edge(0, 1, 3)
    net.add_edge(0, 2, 2)
    net.add_edge(1, 2, 5)
    net.add_edge(1, 3, 2)
    net.add_edge(2, 3, 3)
    assert net.max_flow(0, 3) == 5
    assert 0 in net.source_side(0) and 3 not in net.source_side(0)


def test_theorem3_examples():
    trees = RationalPair(F(1), F(1))
    for seed in range(10):
        assert check_theorem3(random_tree(15, seed), trees)
    cacti = RationalPair("3/2", "3/2")
    for seed in range(10):
        assert check_theorem3(random_cactus(20, seed), cacti)
    assert check_theorem3(Graph.empty(1), RationalPair(0, 0))


def test_theorem3_preconditions():
    with pytest.raises(InputError):
        check_theorem3(cycle(4), RationalPair(F(1), F(1)))
    with pytest.raises(InputError):
        check_theorem3(complete(4), RationalPair(F(2), F(2)))


def test_theorem6_factors_and_checks():
    assert theorem6_factor(RationalPair(F(1), F(1))) == 15
    assert theorem6_factor(RationalPair("3/2", "3/2")) == F(51, 2)
    assert theorem6_factor(RationalPair("1/2", 0)) == F(25, 3)
    assert check_theorem6(random_tree(12, 1), RationalPair(F(1), F(1)))
    assert check_theorem6(Graph.empty(1), RationalPair("1/2", 0))
    with pytest.raises(InputError):
        check_theorem6(family_gstar(4), RationalPair(F(2), F(2)))


def test_validate_embedding_examples():
    assert validate_embedding(cycle(4), OuterplanarEmbedding([0, 1, 2, 3]))
    assert not validate_embedding(complete(4), OuterplanarEmbedding([0, 1, 2, 3], [(0, 2), (1, 3)]))
    n = 8
    fan = Graph.from_edges(n, [(i, i + 1) for i in range(1, n - 1)] + [(0, i) for i in range(1, n)])
    assert validate_embedding(fan, OuterplanarEmbedding(range(n), [(0, i) for i in range(2, n - 1)]))
    with pytest.raises(InputError):
        validate_embedding(cycle(4), OuterplanarEmbedding([0, 1, 2]))


def test_embedding_rejects_wrong_edges():
    assert not validate_embedding(path(4), OuterplanarEmbedding([0, 1, 2, 3]))
    assert not validate_embedding(cycle(4), OuterplanarEmbedding([0, 2, 1, 3]))


def test_certify_allows_isolated_extras_only():
    g = disjoint_union(cycle(4), Graph.empty(2))
    assert certify_outerplanar(g, OuterplanarEmbedding([0, 1, 2, 3]))
    g2 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5)])
    assert not certify_outerplanar(g2, OuterplanarEmbedding([0, 1, 2, 3]))


def test_embedding_text_round_trip():
    g, emb = random_maximal_outerplanar(9, seed=2)
    n, back = OuterplanarEmbedding.from_text(emb.to_text(g.n))
    assert n == 9 and back == emb
    with pytest.raises(InputError):
        OuterplanarEmbedding.from_text("3\n0 x 2\n")


def test_lemma1_examples():
    audit = audit_lemma1(complete(3), OuterplanarEmbedding([0, 1, 2]), 0b111)
    assert (audit.m_s, audit.t_2, audit.lhs, audit.bound, audit.holds) == (3, 0, 6, 9, True)
    audit = audit_lemma1(cycle(4), OuterplanarEmbedding([0, 1, 2, 3]), 0b0011)
    assert (audit.m_s, audit.m_2, audit.t_2, audit.lhs, audit.bound) == (1, 0, 0, 2, 4)
    with pytest.raises(InputError):
        audit_lemma1(cycle(4), OuterplanarEmbedding([0, 1, 2, 3]), 0b1)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 25), st.integers(0, 2**32), st.data())
def test_lemma1_on_random_sets(n, seed, data):
    g, emb = random_maximal_outerplanar(n, seed)
    size = data.draw(st.integers(2, n))
    s = sum(1 << v for v in data.draw(st.permutations(range(n)))[:size])
    assert audit_lemma1(g, emb, s).holds


def test_lemma1_on_every_small_set_of_a_fan():
    n = 8
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(0, i) for i in range(1, n)]
    fan = Graph.from_edges(n, edges)
    emb = OuterplanarEmbedding(range(n), [(0, i) for i in range(2, n - 1)])
    lhs_values = [audit_lemma1(fan, emb, sum(1 << v for v in c)).lhs - (5 * k - 6)
                  for k in (2, 3) for c in combinations(range(n), k)]
    assert max(lhs_values) <= 0


def test_theorem7_examples():
    assert check_theorem7(cycle(5), OuterplanarEmbedding(range(5)), gamma=2)
    g, emb = family_outerplanar_extremal(4)
    assert check_theorem7(g, emb)
    n = 8
    fan = Graph.from_edges(n, [(i, i + 1) for i in range(1, n - 1)] + [(0, i) for i in range(1, n)])
    with pytest.raises(InputError):
        check_theorem7(fan, OuterplanarEmbedding(range(n), [(0, i) for i in range(2, n - 1)]))
