import pytest

from conftest import GF2, QQ, exterior_two, polynomial_two, star_d4, three_cycle, xy_algebra
from koszul_check.algebra import QuadraticPresentation, build_algebra, quadratic_dual
from koszul_check.exceptions import FieldMismatchError
from koszul_check.oracle import (
    NO_WITNESS,
    PARTIAL,
    WITNESS,
    OracleConfig,
    compare_syzygy_tables,
    engine_syzygy_table,
    koszul_oracle,
    primeness_oracle,
    zero_divisor_search,
)
from koszul_check.quiver import Quiver, disjoint_union, preprojective_presentation


class TestZeroDivisors:
    def test_xy_witness_over_f2(self):
        alg = build_algebra(xy_algebra(GF2), 4)
        report = zero_divisor_search(alg, OracleConfig(GF2, 2))
        assert report.outcome == WITNESS
        assert report.witness.degrees == (1, 1)
        assert report.witness.verify(alg)
        data = report.to_dict(alg)
        assert data["witness"]["x"] == "x"
        assert data["witness"]["y"] == "y"
        assert data["witness"]["verified"]
        assert data["pairsChecked"] == 3

    def test_polynomial_ring_has_no_zero_divisors(self):
        alg = build_algebra(polynomial_two(GF2), 4)
        report = zero_divisor_search(alg, OracleConfig(GF2, 4))
        assert report.outcome == NO_WITNESS
        assert report.full_coverage
        assert report.exhausted == ((1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1))

    @pytest.mark.parametrize("make", [xy_algebra, polynomial_two, exterior_two])
    def test_full_enumeration_agrees_with_projective_points(self, make):
        alg = build_algebra(make(GF2), 4)
        fast = zero_divisor_search(alg, OracleConfig(GF2, 3))
        full = zero_divisor_search(alg, OracleConfig(GF2, 3, full_enumeration=True))
        assert fast.outcome == full.outcome
        if fast.witness is not None:
            assert fast.witness.degrees == full.witness.degrees
            assert full.witness.verify(alg)

    def test_budget_gives_partial_coverage(self):
        alg = build_algebra(polynomial_two(GF2), 4)
        report = zero_divisor_search(alg, OracleConfig(GF2, 4, budget=2))
        assert report.outcome == PARTIAL
        assert not report.full_coverage
        assert report.to_dict(alg)["fullCoverage"] is False

    def test_field_must_match(self):
        alg = build_algebra(xy_algebra(QQ), 3)
        with pytest.raises(FieldMismatchError):
            zero_divisor_search(alg, OracleConfig(GF2, 2))

    def test_rational_oracle_is_rejected(self):
        with pytest.raises(ValueError):
            OracleConfig(QQ)

    def test_preprojective_d4_witness_verifies(self):
        alg = build_algebra(preprojective_presentation(star_d4(), GF2), 3)
        report = zero_divisor_search(alg, OracleConfig(GF2, 2))
        assert report.outcome == WITNESS
        assert report.witness.verify(alg)


class TestPrimeness:
    def test_strongly_connected_quiver(self):
        alg = build_algebra(preprojective_presentation(three_cycle(), QQ), 3)
        report = primeness_oracle(alg)
        assert report.prime_by_corners
        assert set(report.first_hits.values()) == {1}

    def test_two_components(self):
        q = disjoint_union(three_cycle(), three_cycle())
        alg = build_algebra(preprojective_presentation(q, QQ), 3)
        report = primeness_oracle(alg)
        assert not report.prime_by_corners
        assert report.first_hits[(0, 3)] is None

    def test_one_way_arrow(self):
        q = Quiver.from_names(["1", "2"], [("a", "1", "2")])
        report = primeness_oracle(build_algebra(QuadraticPresentation.create(QQ, q, []), 3))
        assert report.first_hits == {(0, 1): 1, (1, 0): None}
        assert report.to_dict()["firstHits"] == {"1->2": 1, "2->1": None}


class TestKoszulOracle:
    def test_exterior_resolution_matches_engine(self):
        alg = build_algebra(exterior_two(GF2), 4)
        report = koszul_oracle(alg, 0, 3)
        assert report.koszul_within
        assert report.complete
        assert report.steps[1].dims.as_dict() == {1: (2,), 2: (1,)}
        assert compare_syzygy_tables(report, engine_syzygy_table(alg, 0, 3))

    def test_dual_of_xy_is_koszul(self):
        dual = build_algebra(quadratic_dual(xy_algebra(GF2)), 4)
        report = koszul_oracle(dual, 0, 3)
        assert report.koszul_within
        assert compare_syzygy_tables(report, engine_syzygy_table(dual, 0, 3))

    def test_polynomial_ring_resolution_stops(self):
        alg = build_algebra(polynomial_two(GF2), 4)
        report = koszul_oracle(alg, 0, 5)
        assert report.koszul_within
        assert report.reached == 3
        assert [s.generation_degrees for s in report.steps] == [(0,), (1,), (2,), ()]

    def test_dual_of_preprojective_a2(self):
        dual = build_algebra(quadratic_dual(preprojective_presentation(three_cycle(), GF2)), 4)
        for j in range(3):
            report = koszul_oracle(dual, j, 3)
            assert report.koszul_within
            assert compare_syzygy_tables(report, engine_syzygy_table(dual, j, 3))
