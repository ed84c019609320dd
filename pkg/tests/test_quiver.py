import numpy as np
import pytest

from conftest import QQ, star_d4, three_cycle
from koszul_check.exceptions import QuiverError, SearchExceededError
from koszul_check.quiver import (
    Quiver,
    check_cy2_incidence,
    connected_components,
    degree_profile,
    disjoint_union,
    double_quiver,
    incidence_matrix,
    is_connected,
    is_strongly_connected,
    preprojective_presentation,
)


def test_incidence_counts_arrows_by_target_row():
    q = Quiver.from_names(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1")])
    b = incidence_matrix(q)
    assert b.tolist() == [[0, 1], [2, 0]]
    profile = degree_profile(q)
    assert profile.indegree == (1, 2)
    assert profile.outdegree == (2, 1)


def test_connectivity():
    single = Quiver.from_names(["1", "2"], [("a", "1", "2")])
    assert is_connected(single)
    assert not is_strongly_connected(single)
    assert is_strongly_connected(three_cycle())
    union = disjoint_union(three_cycle(), three_cycle())
    assert not is_connected(union)
    assert connected_components(union) == [(0, 1, 2), (3, 4, 5)]


def test_invalid_quivers():
    with pytest.raises(QuiverError):
        Quiver.from_names(["1", "1"], [])
    with pytest.raises(QuiverError):
        Quiver.from_names(["1"], [("a", "1", "2")])
    with pytest.raises(QuiverError):
        Quiver.from_names(["1"], [("a", "1", "1"), ("a", "1", "1")])


def test_opposite_reverses_and_stars():
    q = Quiver.from_names(["1", "2"], [("a", "1", "2")])
    op = q.opposite()
    assert op.arrow("a*").source == 1
    assert op.arrow("a*").target == 0


def test_double_quiver_and_preprojective_a2():
    doubled = double_quiver(three_cycle())
    assert doubled.num_arrows == 6
    pres = preprojective_presentation(three_cycle(), QQ)
    assert len(pres.relations) == 3
    assert all(len(r.terms) == 2 for r in pres.relations)


def test_preprojective_leaf_relation_is_monomial():
    pres = preprojective_presentation(star_d4(), QQ)
    # four leaves give a* a = 0, the center gives the sum over all arms
    assert sorted(len(r.terms) for r in pres.relations) == [1, 1, 1, 1, 4]


def test_cy2_incidence_on_symmetric_double():
    b = incidence_matrix(double_quiver(three_cycle()))
    p = check_cy2_incidence(b)
    assert p is not None
    assert np.array_equal(p @ b.T, b)


def test_cy2_incidence_fails_for_one_way_arrow():
    b = incidence_matrix(Quiver.from_names(["1", "2"], [("a", "1", "2")]))
    assert check_cy2_incidence(b) is None


def test_cy2_incidence_search_limit():
    b = np.zeros((5, 5), dtype=np.int64)
    with pytest.raises(SearchExceededError):
        check_cy2_incidence(b, exhaustive_limit=2, search_limit=4)


def test_cy2_incidence_multiset_matching_beyond_exhaustive_limit():
    q = disjoint_union(double_quiver(three_cycle()), double_quiver(three_cycle()))
    b = incidence_matrix(q)
    p = check_cy2_incidence(b, exhaustive_limit=3)
    assert p is not None
    assert np.array_equal(p @ b.T, b)
