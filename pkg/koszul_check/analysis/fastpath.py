"""
Fast path for graded-length-3 Frobenius algebras.

When Lambda has graded length 3, socle Lambda_2, every vertex of its quiver has
indegree at least 2 and Lambda is Koszul, the syzygy condition holds outright.
Each F^n(S_j) then lives in degrees 0 and 1 with dimension vectors (a_n, b_n)
following

    a_{n+1} = H_1^T a_n - b_n,    b_{n+1} = H_2^T a_n,

which is checked against the module engine as part of the report.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from koszul_check.algebra import PathAlgebraQuotient
from koszul_check.analysis.frobenius import FrobeniusVerdict, frobenius_check
from koszul_check.exceptions import WindowExhaustedError
from koszul_check.modules import KoszulVerdict, functor_F, is_koszul, simple_module
from koszul_check.quiver import degree_profile
from koszul_check.utils.logger import debug


@dataclass(frozen=True)
class SyzygyRecursion:
    """Predicted and computed (a_n, b_n) for one simple."""

    simple: int
    predicted: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    computed: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    top_exceeds_bottom: bool

    @property
    def matches(self) -> bool:
        return self.predicted[:len(self.computed)] == self.computed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "simple": self.simple,
            "predicted": [[list(a), list(b)] for a, b in self.predicted],
            "computed": [[list(a), list(b)] for a, b in self.computed],
            "matches": self.matches,
            "topExceedsBottom": self.top_exceeds_bottom,
        }


@dataclass(frozen=True)
class FastPathReport:
    applies: bool
    failed_hypotheses: Tuple[str, ...]
    indegrees: Tuple[int, ...]
    frobenius: Optional[FrobeniusVerdict]
    koszul: Tuple[KoszulVerdict, ...] = ()
    recursions: Tuple[SyzygyRecursion, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "applies": self.applies,
            "failedHypotheses": list(self.failed_hypotheses),
            "indegrees": list(self.indegrees),
            "koszul": [v.to_dict() for v in self.koszul],
            "recursions": [r.to_dict() for r in self.recursions],
        }


def predicted_syzygy_dims(alg: PathAlgebraQuotient, j: int, steps: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(a_n, b_n) for n = 0..steps from the Hilbert recursion, starting at S_j."""
    h1 = alg.corner_grid(1)
    h2 = alg.corner_grid(2)
    a = np.zeros(alg.num_vertices, dtype=np.int64)
    a[j] = 1
    b = np.zeros(alg.num_vertices, dtype=np.int64)
    table = []
    for _ in range(steps + 1):
        table.append((tuple(int(x) for x in a), tuple(int(x) for x in b)))
        a, b = h1.T @ a - b, h2.T @ a
    return table


def computed_syzygy_dims(alg: PathAlgebraQuotient, j: int, steps: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(dims in degree 0, dims in degree 1) of F^n(S_j) from the module engine."""
    table = []
    current = simple_module(alg, j)
    for n in range(steps + 1):
        if n:
            try:
                current = functor_F(current)
            except WindowExhaustedError:
                break
        table.append((current.dims(0), current.dims(1)))
    return table


def syzygy_recursion(alg: PathAlgebraQuotient, j: int, steps: int) -> SyzygyRecursion:
    predicted = predicted_syzygy_dims(alg, j, steps)
    computed = computed_syzygy_dims(alg, j, steps)
    exceeds = all(sum(a) > sum(b) for a, b in predicted)
    return SyzygyRecursion(j, tuple(predicted), tuple(computed), exceeds)


def fast_path(dual: PathAlgebraQuotient, max_steps: int) -> FastPathReport:
    """Check the hypotheses of the fast path on Lambda and, when they hold, the recursion."""
    profile = degree_profile(dual.quiver)
    failed = []
    if dual.graded_length != 3:
        failed.append(f"graded length is {dual.graded_length}, not 3")
        return FastPathReport(False, tuple(failed), profile.indegree, None)

    frobenius = frobenius_check(dual)
    if not frobenius.socle_concentrated:
        failed.append("socle is not concentrated in degree 2")
    elif not frobenius.passes:
        failed.append("socles do not permute the vertices")
    if not profile.min_indegree_ok:
        low = [dual.vertex_names[v] for v, d in enumerate(profile.indegree) if d < 2]
        failed.append(f"vertices with indegree below 2: {', '.join(low)}")

    verdicts = tuple(is_koszul(simple_module(dual, j), max_steps) for j in range(dual.num_vertices))
    if not all(v.holds for v in verdicts):
        failed.append("Lambda is not Koszul within the window")

    recursions: Tuple[SyzygyRecursion, ...] = ()
    if not failed:
        recursions = tuple(syzygy_recursion(dual, j, max_steps) for j in range(dual.num_vertices))
        for r in recursions:
            if not r.matches:
                failed.append(f"syzygy dimensions of S_{dual.vertex_names[r.simple]} leave the recursion")
    debug(f"fast path: {'applies' if not failed else '; '.join(failed)}")
    return FastPathReport(not failed, tuple(failed), profile.indegree, frobenius, verdicts, recursions)
