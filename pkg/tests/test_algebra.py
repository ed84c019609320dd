import pytest
from hypothesis import given, strategies as st

from conftest import GF2, GF3, QQ, exterior_two, one_vertex, polynomial_two
from koszul_check.algebra import (
    QuadraticPresentation,
    build_algebra,
    double_dual_roundtrip,
    hilbert,
    numerical_koszul_identity,
    path_basis,
    quadratic_dual,
    series_string,
)
from koszul_check.exceptions import DegreeOverflowError, RelationError
from koszul_check.quiver import Quiver

LOOP_PATHS = [("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]


@st.composite
def two_loop_presentations(draw):
    field = draw(st.sampled_from([GF2, GF3]))
    rows = draw(st.lists(
        st.lists(st.integers(0, field.p - 1), min_size=4, max_size=4),
        max_size=4,
    ))
    relations = [[(c, path) for c, path in zip(row, LOOP_PATHS) if c] for row in rows]
    return one_vertex(field, ["x", "y"], relations)


@st.composite
def small_quiver_presentations(draw):
    """Up to three vertices and four arrows, with random relations in every corner."""
    field = draw(st.sampled_from([GF2, GF3]))
    r = draw(st.integers(1, 3))
    vertices = [str(v) for v in range(r)]
    ends = draw(st.lists(st.tuples(st.sampled_from(vertices), st.sampled_from(vertices)), min_size=1, max_size=4))
    quiver = Quiver.from_names(vertices, [(f"a{k}", s, t) for k, (s, t) in enumerate(ends)])
    relations = []
    for paths in path_basis(quiver, 2).corners.values():
        rows = draw(st.lists(
            st.lists(st.integers(0, field.p - 1), min_size=len(paths), max_size=len(paths)),
            max_size=len(paths),
        ))
        relations.extend([(c, path) for c, path in zip(row, paths) if c] for row in rows)
    return QuadraticPresentation.create(field, quiver, [rel for rel in relations if rel])


@given(two_loop_presentations())
def test_double_dual_is_the_identity(pres):
    assert pres.same_relation_span(double_dual_roundtrip(pres))


@given(two_loop_presentations())
def test_dual_relation_dimensions_are_complementary(pres):
    dual = quadratic_dual(pres)
    assert len(pres.relations) + len(dual.relations) == 4


def test_polynomial_ring_hilbert_series(k_xy_commutative):
    alg = build_algebra(k_xy_commutative, 5)
    assert hilbert(alg).total_series() == (1, 2, 3, 4, 5, 6)
    assert not alg.complete
    assert alg.graded_length is None


def test_exterior_algebra_is_finite(exterior):
    alg = build_algebra(exterior, 5)
    assert hilbert(alg).total_series() == (1, 2, 1, 0, 0, 0)
    assert alg.complete
    assert alg.graded_length == 3
    assert alg.top_degree == 2


def test_dual_of_polynomial_ring_is_exterior(k_xy_commutative):
    dual = quadratic_dual(k_xy_commutative)
    assert dual.quiver.vertices == ("1",)
    assert [a.name for a in dual.quiver.arrows] == ["x*", "y*"]
    assert hilbert(build_algebra(dual, 4)).total_series() == (1, 2, 1, 0, 0)


def test_numerical_identity_for_dual_pair(k_xy_commutative):
    alg = build_algebra(k_xy_commutative, 6)
    dual = build_algebra(quadratic_dual(k_xy_commutative), 6)
    holds, coefficients = numerical_koszul_identity(alg, dual)
    assert holds
    assert coefficients == [1, 0, 0, 0, 0, 0, 0]


def test_numerical_identity_requires_one_vertex(preprojective_a2):
    alg = build_algebra(preprojective_a2, 3)
    with pytest.raises(ValueError):
        numerical_koszul_identity(alg, alg)


def test_multiplication_normal_forms(k_xy_commutative, xy):
    commutative = build_algebra(k_xy_commutative, 3)
    assert commutative.from_path(("x", "y")) == commutative.from_path(("y", "x"))
    free_quotient = build_algebra(xy, 3)
    assert free_quotient.from_path(("x", "y")).is_zero()
    assert not free_quotient.from_path(("y", "x")).is_zero()


@pytest.mark.parametrize("make", [polynomial_two, exterior_two])
def test_associativity(make):
    assert build_algebra(make(), 4).associativity_failures() == []


def test_preprojective_a2_is_associative_and_grows_linearly(preprojective_a2):
    alg = build_algebra(preprojective_a2, 4)
    assert alg.associativity_failures() == []
    data = hilbert(alg)
    for j in range(3):
        assert data.vertex_series(j) == (1, 2, 3, 4, 5)


def test_corner_grid_orientation():
    q = Quiver.from_names(["1", "2"], [("a", "1", "2")])
    alg = build_algebra(QuadraticPresentation.create(QQ, q, []), 3)
    grid = alg.corner_grid(1)
    # row is the target, column the source
    assert grid.tolist() == [[0, 0], [1, 0]]
    assert alg.graded_length == 2


def test_degree_overflow_on_infinite_algebra(k_x):
    alg = build_algebra(k_x, 3)
    assert alg.dim(3) == 1
    with pytest.raises(DegreeOverflowError):
        alg.dim(4)


def test_degrees_past_a_vanishing_one_are_zero(exterior):
    alg = build_algebra(exterior, 3)
    assert alg.dim(10) == 0


def test_truncation_bound_must_cover_relations(k_x):
    with pytest.raises(ValueError):
        build_algebra(k_x, 1)


def test_dependent_relations_are_dropped():
    pres = one_vertex(QQ, ["x", "y"], [
        [(1, ("x", "y"))],
        [(2, ("x", "y"))],
        [(1, ("y", "x")), (-1, ("y", "x"))],
    ])
    assert len(pres.relations) == 1


@pytest.mark.parametrize("relation", [
    [(1, ("x",))],
    [(1, ("x", "x", "x"))],
    [(1, ("x", "z"))],
])
def test_malformed_relations(relation):
    with pytest.raises(RelationError):
        one_vertex(QQ, ["x", "y"], [relation])


def test_non_composable_relation():
    q = Quiver.from_names(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    with pytest.raises(RelationError):
        QuadraticPresentation.create(QQ, q, [[(1, ("a", "b"))]])


def test_relation_splits_by_corner():
    q = Quiver.from_names(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    pres = QuadraticPresentation.create(GF3, q, [[(1, ("a", "b")), (1, ("b", "a"))]])
    assert sorted((r.source, r.target) for r in pres.relations) == [(0, 0), (1, 1)]
    assert all(len(r.terms) == 1 for r in pres.relations)


def test_series_string():
    assert series_string([1, 2, 1]) == "1 + 2t + t^2"
    assert series_string([0, 0]) == "0"


@given(small_quiver_presentations())
def test_double_dual_is_the_identity_on_small_quivers(pres):
    assert pres.same_relation_span(double_dual_roundtrip(pres))


@given(small_quiver_presentations())
def test_dual_relation_dimensions_are_complementary_on_small_quivers(pres):
    dual = quadratic_dual(pres)
    assert len(pres.relations) + len(dual.relations) == sum(len(p) for p in path_basis(pres.quiver, 2).corners.values())
