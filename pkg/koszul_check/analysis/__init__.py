"""
Koszul-duality analysis: quasi-Frobenius checks, the syzygy condition, the
fast path, Ext reconstruction and the domain/primeness classifiers.
"""

from koszul_check.analysis.classify import (
    NO,
    YES,
    ClassificationReport,
    CY2Screen,
    Verdict,
    annihilating_arrows,
    arrow_zero_products,
    classify,
    cy2_classify,
)
from koszul_check.analysis.ext import OrbitalAlgebra, ext_algebra
from koszul_check.analysis.fastpath import FastPathReport, fast_path, syzygy_recursion
from koszul_check.analysis.frobenius import FrobeniusVerdict, frobenius_check, left_socle
from koszul_check.analysis.syzygy_condition import (
    SyzygyConditionVerdict,
    fast_path_verdict,
    koszul_syzygy_condition,
    same_degree_checks,
)

__all__ = [
    "NO",
    "YES",
    "ClassificationReport",
    "CY2Screen",
    "FastPathReport",
    "FrobeniusVerdict",
    "OrbitalAlgebra",
    "SyzygyConditionVerdict",
    "Verdict",
    "annihilating_arrows",
    "arrow_zero_products",
    "classify",
    "cy2_classify",
    "ext_algebra",
    "fast_path",
    "fast_path_verdict",
    "frobenius_check",
    "koszul_syzygy_condition",
    "left_socle",
    "same_degree_checks",
    "syzygy_recursion",
]
