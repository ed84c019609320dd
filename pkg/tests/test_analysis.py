import pytest

from conftest import GF2, QQ, exterior_two, polynomial_one, polynomial_two, xy_algebra
from koszul_check.algebra import QuadraticPresentation, build_algebra, hilbert, quadratic_dual
from koszul_check.analysis import (
    NO,
    YES,
    annihilating_arrows,
    arrow_zero_products,
    classify,
    cy2_classify,
    ext_algebra,
    fast_path,
    frobenius_check,
    koszul_syzygy_condition,
    left_socle,
    same_degree_checks,
    syzygy_recursion,
)
from koszul_check.analysis.syzygy_condition import EXHAUSTIVE, FAST_PATH
from koszul_check.modules import (
    HOLDS,
    functor_F,
    functor_F_on_map,
    generated_in_degree,
    identity_map,
    maps_to_simple,
    simple_module,
)
from koszul_check.oracle import OracleConfig
from koszul_check.quiver import Quiver
from koszul_check.utils.worker_pool import WorkerPool


def dual_algebra(pres, bound=4):
    return build_algebra(quadratic_dual(pres), bound)


class TestFrobenius:
    def test_exterior_algebra_is_frobenius(self, exterior):
        verdict = frobenius_check(build_algebra(exterior, 4))
        assert verdict.graded_length == 3
        assert verdict.socle_concentrated
        assert verdict.socle_permutation == (0,)
        assert verdict.passes

    def test_left_socle_of_exterior_algebra(self, exterior):
        assert left_socle(build_algebra(exterior, 4), 0).as_dict() == {2: (1,)}

    def test_dual_of_xy_has_a_low_socle(self):
        verdict = frobenius_check(dual_algebra(xy_algebra()))
        assert not verdict.socle_concentrated
        assert not verdict.passes

    def test_infinite_algebra_makes_no_claim(self, k_x):
        verdict = frobenius_check(build_algebra(k_x, 4))
        assert verdict.graded_length is None
        assert not verdict.passes


class TestFastPath:
    def test_applies_to_exterior_algebra(self, exterior):
        report = fast_path(build_algebra(exterior, 4), 3)
        assert report.applies
        assert all(r.matches for r in report.recursions)

    def test_recursion_for_exterior_algebra(self, exterior):
        recursion = syzygy_recursion(build_algebra(exterior, 4), 0, 3)
        assert recursion.predicted == (((1,), (0,)), ((2,), (1,)), ((3,), (2,)), ((4,), (3,)))
        assert recursion.matches
        assert recursion.top_exceeds_bottom

    def test_applies_to_dual_of_preprojective_a2(self, preprojective_a2):
        report = fast_path(dual_algebra(preprojective_a2), 3)
        assert report.applies
        assert report.indegrees == (2, 2, 2)
        assert [r.predicted[2] for r in report.recursions][0] == ((1, 1, 1), (0, 1, 1))

    def test_rejects_wrong_graded_length(self, k_x):
        report = fast_path(dual_algebra(k_x), 3)
        assert not report.applies
        assert report.failed_hypotheses == ("graded length is 2, not 3",)

    def test_rejects_scattered_socle(self):
        report = fast_path(dual_algebra(xy_algebra()), 3)
        assert not report.applies
        assert "socle is not concentrated in degree 2" in report.failed_hypotheses


class TestSyzygyCondition:
    def test_dual_of_xy_fails_with_a_witness(self):
        verdict = koszul_syzygy_condition(dual_algebra(xy_algebra()), 3)
        assert verdict.fails
        assert verdict.witness.step == 1
        assert verdict.witness.kernel_verdict.fails

    def test_detectors_agree_over_f2(self):
        verdict = koszul_syzygy_condition(dual_algebra(xy_algebra(GF2)), 3)
        assert verdict.fails
        assert verdict.method == EXHAUSTIVE
        assert verdict.disagreements == ()
        assert verdict.agreements >= 1

    def test_holds_for_dual_of_polynomial_ring_in_one_variable(self, k_x):
        verdict = koszul_syzygy_condition(dual_algebra(k_x), 3)
        assert verdict.holds
        assert not verdict.unconditional

    def test_worker_pool_gives_the_same_verdict(self, preprojective_a2):
        dual = dual_algebra(preprojective_a2)
        serial = koszul_syzygy_condition(dual, 2)
        with WorkerPool(max_workers=2) as pool:
            parallel = koszul_syzygy_condition(dual, 2, pool=pool)
        assert serial.status == parallel.status
        assert serial.maps_checked == parallel.maps_checked

    def test_same_degree_checks_on_identity(self, exterior):
        s = simple_module(build_algebra(exterior, 4), 0)
        assert same_degree_checks(identity_map(s)) == {
            "injectivity": True, "surjectivity": True, "exactness": True,
        }

    def test_same_degree_checks_on_a_cover(self, exterior):
        s = simple_module(build_algebra(exterior, 4), 0)
        checks = same_degree_checks(s.cover.cover_map)
        assert checks == {"injectivity": None, "surjectivity": True, "exactness": None}

    def test_same_degree_checks_on_maps_onto_a_simple(self, exterior):
        s = simple_module(build_algebra(exterior, 4), 0)
        for f in maps_to_simple(functor_F(s), 0, s):
            assert generated_in_degree(f.kernel()[0], 0)
            assert same_degree_checks(f) == {"injectivity": None, "surjectivity": True, "exactness": True}

    def test_same_degree_surjectivity_with_a_late_kernel(self, xy):
        s = simple_module(dual_algebra(xy), 0)
        maps = maps_to_simple(functor_F(s), 0, s)
        kernels_ok = [generated_in_degree(f.kernel()[0], 0) for f in maps]
        assert not all(kernels_ok)
        for f, kernel_ok in zip(maps, kernels_ok):
            assert f.is_surjective()
            assert functor_F_on_map(f).is_surjective() == kernel_ok
            assert same_degree_checks(f)["surjectivity"]


class TestExt:
    @pytest.mark.parametrize("name", ["k_x", "k_xy_commutative", "xy", "preprojective_a2"])
    def test_ext_of_the_dual_reconstructs_the_algebra(self, name, request):
        pres = request.getfixturevalue(name)
        orbital = ext_algebra(dual_algebra(pres, 4), 5)
        direct = hilbert(build_algebra(pres, 5))
        for n in range(6):
            assert orbital.corner_grid(n).tolist() == direct.grids[n].tolist()

    def test_ext_products_commute(self, k_xy_commutative):
        orbital = ext_algebra(dual_algebra(k_xy_commutative, 4), 2)
        for i in range(2):
            for j in range(2):
                assert orbital.basis_product(1, i, 1, j) == orbital.basis_product(1, j, 1, i)
        assert len(orbital.structure_constants(1, 1)) == 4


class TestClassify:
    def test_polynomial_ring_is_a_domain(self, k_xy_commutative):
        report = classify(k_xy_commutative, 6, 3)
        assert report.piecewise_domain.status == YES
        assert report.piecewise_domain.unconditional
        assert report.syzygy_condition.method == FAST_PATH
        assert report.prime.status == YES
        assert report.domain.status == YES

    def test_one_variable_yes_is_bounded(self, k_x):
        report = classify(k_x, 6, 3)
        assert report.domain.status == YES
        assert not report.domain.unconditional
        assert report.domain.qualifier == "checked through syzygy 3"

    def test_zero_product_gives_a_witness(self, xy):
        report = classify(xy, 5, 2)
        assert report.piecewise_domain.status == NO
        assert report.piecewise_domain.witness["zeroProduct"]["product"] == "xy"
        assert report.domain.status == NO

    def test_arrow_zero_products_on_d4(self, preprojective_d4):
        pairs = arrow_zero_products(build_algebra(preprojective_d4, 3))
        assert pairs[0] == ("a1*", "a1")
        assert len(pairs) == 4

    def test_preprojective_a2_is_a_prime_piecewise_domain(self, preprojective_a2):
        report = classify(preprojective_a2, 6, 3)
        assert report.piecewise_domain.status == YES
        assert report.piecewise_domain.unconditional
        assert report.prime.status == YES
        assert report.domain.status == NO
        assert report.domain.witness["zeroProduct"]["degrees"] == [0, 0]

    def test_preprojective_d4_is_not_a_piecewise_domain(self, preprojective_d4):
        report = classify(preprojective_d4, 4, 2)
        assert report.piecewise_domain.status == NO
        assert report.piecewise_domain.witness["zeroProduct"]["product"] == "a1*·a1"

    def test_xy_arrows_annihilate_each_other(self, xy):
        report = classify(xy, 5, 2)
        assert report.prime.status == NO
        assert report.prime.unconditional
        assert report.prime.witness == {"annihilatingArrows": {"left": "x", "right": "y"}}
        assert not report.undetermined

    def test_d4_arrows_reach_each_other(self, preprojective_d4):
        alg = build_algebra(preprojective_d4, 3)
        assert annihilating_arrows(alg, arrow_zero_products(alg)) is None
        assert classify(preprojective_d4, 4, 2).prime.status == "undetermined"

    def test_polynomial_ring_has_no_annihilating_arrows(self, k_xy_commutative):
        alg = build_algebra(k_xy_commutative, 3)
        assert annihilating_arrows(alg, arrow_zero_products(alg)) is None

    def test_cy2_screen_on_preprojective_a2(self, preprojective_a2):
        report = cy2_classify(preprojective_a2, 6, 3)
        screen = report.cy2
        assert screen.outdegree_ok
        assert screen.incidence == "passes"
        assert screen.permutation == (0, 1, 2)
        assert screen.dual_length_three
        assert screen.dual_frobenius
        assert screen.passes
        assert report.semiprime.status == YES
        assert report.semiprime.unconditional
        assert report.prime.status == YES
        assert report.components == ()

    def test_cy2_screen_on_preprojective_d4(self, preprojective_d4):
        report = cy2_classify(preprojective_d4, 4, 2)
        screen = report.cy2
        assert not screen.outdegree_ok
        assert not screen.passes
        assert screen.incidence == "passes"
        assert screen.permutation == (0, 1, 2, 3, 4)
        assert screen.component_count == 1
        assert report.piecewise_domain.status == NO
        assert report.semiprime.status == NO
        assert report.prime.status == "undetermined"
        assert any("outdegree below 2" in note for note in report.notes)

    def test_one_way_arrow_is_not_prime(self):
        q = Quiver.from_names(["1", "2"], [("a", "1", "2")])
        report = classify(QuadraticPresentation.create(QQ, q, []), 4, 2)
        assert report.prime.status == NO
        assert report.prime.witness == {"emptyCorner": {"from": "2", "to": "1"}}

    def test_two_components_are_semiprime_but_not_prime(self, two_a2):
        report = cy2_classify(two_a2, 5, 2)
        assert report.semiprime.status == YES
        assert report.prime.status == NO
        assert len(report.components) == 2
        assert all(c.prime.status == YES for c in report.components)
        assert report.cy2.component_count == 2
        assert report.cy2.incidence == "passes"

    def test_oracle_cross_check_agrees(self):
        report = classify(xy_algebra(GF2), 5, 2, oracle_config=OracleConfig(GF2, 2))
        assert report.oracle["agrees"]
        assert report.oracle["zeroDivisors"]["outcome"] == "witness"

    def test_oracle_skipped_for_other_fields(self, xy):
        report = classify(xy, 5, 2, oracle_config=OracleConfig(GF2, 2))
        assert report.oracle is None


@pytest.mark.parametrize("make", [polynomial_one, polynomial_two, exterior_two])
def test_report_serializes(make):
    data = classify(make(), 5, 2).to_dict()
    assert set(data) >= {"input", "hilbert", "koszul", "piecewiseDomain", "prime", "domain"}
    assert data["koszul"]["status"] == HOLDS
