import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slater.domination import domination_number
from slater.generators import enumerate_labeled_trees, prufer_to_edges, random_tree
from slater.graph import Graph, InputError, complete, cycle, degree_sequence, path, star
from slater.trees import (
    check_dhh_tree_upper,
    check_slater_tree_lower,
    check_theorem4,
    prufer_profile,
    prufer_sequences,
    theorem4_from_degrees,
    tree_domination_number,
)


def test_theorem4_star():
    check = check_theorem4(star(4))
    assert (check.total_slater, check.holds, check.equality, check.predicted_equality) == (2, True, False, False)


def test_theorem4_path():
    check = check_theorem4(path(4))
    assert (check.n, check.n1, check.total_slater, check.next_degree) == (4, 2, 2, 1)
    assert check.holds and check.equality and check.predicted_equality


def test_theorem4_edge_is_the_exhausted_case():
    # sl_t(K2) = n, so the degree after the prefix does not exist
    check = check_theorem4(complete(2))
    assert check.exhausted and check.next_degree == 0
    assert check.holds and not check.equality and check.predicted_equality


def test_theorem4_requires_tree():
    with pytest.raises(InputError):
        check_theorem4(cycle(4))
    with pytest.raises(InputError):
        check_theorem4(Graph.empty(1))


def test_theorem4_characterization_beyond_k2():
    mismatches = []
    for n in range(3, 8):
        for t in enumerate_labeled_trees(n):
            check = check_theorem4(t)
            assert check.holds
            if check.equality != check.predicted_equality:
                mismatches.append(degree_sequence(t))
    assert mismatches == []


def test_slater_tree_lower_examples():
    assert check_slater_tree_lower(path(3))
    with pytest.raises(InputError):
        check_slater_tree_lower(path(2))
    assert all(check_slater_tree_lower(random_tree(50, seed)) for seed in range(200))


def test_dhh_upper_examples():
    assert check_dhh_tree_upper(Graph.empty(1))
    assert all(check_dhh_tree_upper(random_tree(40, seed)) for seed in range(50))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**32))
def test_tree_dp_matches_branch_and_bound(n, seed):
    t = random_tree(n, seed)
    assert tree_domination_number(t) == domination_number(t).value


@pytest.mark.parametrize("n", range(2, 7))
def test_prufer_profile_matches_decoded_tree(n):
    for seq in prufer_sequences(n):
        t = Graph.from_edges(n, prufer_to_edges(seq, n))
        degrees, gamma = prufer_profile(seq, n)
        assert degrees == t.degrees()
        assert gamma == domination_number(t).value


def test_sequence_enumeration_bounds():
    with pytest.raises(InputError):
        prufer_sequences(10)
    assert sum(1 for _ in prufer_sequences(5)) == 125


def test_theorem4_degree_identities_are_checked():
    with pytest.raises(AssertionError):
        theorem4_from_degrees([2, 2, 2])
