from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from koszul_check.exceptions import DependentColumnsError, FieldMismatchError
from koszul_check.linalg import (
    FieldSpec,
    Matrix,
    QuotientMap,
    Scalar,
    complement_basis,
    count_projective_points,
    independent_subset,
    kernel_basis,
    nonzero_vectors,
    projective_points,
    rank,
    solve,
)

QQ = FieldSpec.rational()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)


def matrices(field, max_side=5):
    return st.integers(0, max_side).flatmap(
        lambda rows: st.integers(0, max_side).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(-3, 3), min_size=cols, max_size=cols),
                min_size=rows, max_size=rows,
            ).map(lambda data: Matrix.from_rows(field, data, cols))
        )
    )


@settings(max_examples=500)
@given(st.sampled_from([QQ, GF2, GF3]).flatmap(matrices))
def test_rank_nullity(m):
    kernel = kernel_basis(m)
    assert rank(m) + kernel.cols == m.cols
    assert (m @ kernel).is_zero()
    assert rank(kernel) == kernel.cols


@given(st.sampled_from([QQ, GF3]).flatmap(matrices))
def test_complement_completes_a_basis(m):
    independent = m.select_columns(independent_subset(m.field, m.columns(), m.rows))
    extra = complement_basis(independent, m.rows)
    assert rank(independent.hstack(extra)) == m.rows
    assert independent.cols + extra.cols == m.rows


@given(st.integers(-20, 20).filter(bool), st.integers(1, 20))
def test_rational_inverse_laws(numerator, denominator):
    x = Scalar.of(QQ, f"{numerator}/{denominator}")
    assert x * x.inverse() == 1
    assert x / x == 1
    assert x - x == 0
    assert x ** -1 == Fraction(denominator, numerator)


@given(st.integers(1, 6))
def test_prime_field_inverses(residue):
    field = FieldSpec.prime(7)
    x = Scalar.of(field, residue)
    assert x * x.inverse() == 1
    assert x ** 6 == 1


def test_field_parse_labels():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("p5") == FieldSpec.prime(5)
    assert FieldSpec.parse("GF(3)") == GF3
    with pytest.raises(ValueError):
        FieldSpec.parse("p4")
    with pytest.raises(ValueError):
        FieldSpec.parse("reals")


def test_exact_coefficients():
    assert QQ.format(QQ.element("2/5")) == "2/5"
    assert GF3.element("1/2") == GF3.element(2)
    with pytest.raises(ValueError):
        QQ.element("2/0")
    with pytest.raises(ValueError):
        GF3.element("1/3")


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatchError):
        Scalar.of(QQ, 1) + Scalar.of(GF2, 1)
    with pytest.raises(FieldMismatchError):
        Matrix.identity(QQ, 2) @ Matrix.identity(GF2, 2)


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    x = solve(m, Matrix.from_rows(QQ, [[3], [6]]))
    assert x is not None
    assert m @ x == Matrix.from_rows(QQ, [[3], [6]])
    assert solve(m, Matrix.from_rows(QQ, [[1], [0]])) is None


def test_complement_rejects_dependent_columns():
    sub = Matrix.from_rows(QQ, [[1, 2], [1, 2]])
    with pytest.raises(DependentColumnsError):
        complement_basis(sub, 2)


def test_quotient_map_keeps_lowest_indices():
    # span of e0 - e1 in k^3: e0 survives, e1 reduces to e0
    quotient = QuotientMap(QQ, [[1, -1, 0]], 3)
    assert quotient.complement == (0, 2)
    assert quotient.image_of(1) == {0: QQ.one}
    assert quotient.reduce([1, 1, 1]) == (2, 1)


def test_projective_enumeration_counts():
    points = list(projective_points(GF3, 2))
    assert len(points) == count_projective_points(3, 2) == 4
    assert all(next(c for c in p if c) == 1 for p in points)
    assert len(list(nonzero_vectors(GF2, 3))) == 7
