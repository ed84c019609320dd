"""
The Koszul syzygy condition on Lambda.

For every simple S_j, every i up to the bound and every nonzero map
f: F^i(S_j) -> S_ell, the kernel of f must be Koszul. Two independent
detectors run on each map: the kernel's syzygies are tested for generation in
degree 0, and the maps F^k(f) are tested for surjectivity. They must agree.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from koszul_check.algebra import PathAlgebraQuotient
from koszul_check.analysis.fastpath import FastPathReport, fast_path
from koszul_check.exceptions import DegreeOverflowError, FunctorDomainError, WindowExhaustedError
from koszul_check.linalg import FieldSpec, projective_points
from koszul_check.modules import (
    FAILS,
    HOLDS,
    UNDETERMINED,
    DimensionVector,
    GradedModuleMap,
    GradedRightModule,
    KoszulVerdict,
    common_generation_degree,
    functional_map,
    functor_F,
    functor_F_on_map,
    generated_in_degree,
    is_koszul,
    maps_to_simple,
    simple_module,
)
from koszul_check.utils.logger import debug, info
from koszul_check.utils.worker_pool import WorkerPool

EXHAUSTIVE = "exhaustive-enumeration"
MULTIPLICITY_ONE = "multiplicity-one"
FAST_PATH = "fast-path"

_TRUNCATION_ERRORS = (WindowExhaustedError, DegreeOverflowError)


@dataclass(frozen=True)
class MapCheck:
    """Both detectors' findings on one map F^step(S_simple) -> S_target."""

    simple: int
    target: int
    step: int
    functional: Tuple[str, ...]
    kernel_dims: DimensionVector
    kernel_verdict: KoszulVerdict
    surjectivity: str
    first_non_surjective: Optional[int] = None

    @property
    def status(self) -> str:
        return self.kernel_verdict.status

    @property
    def detectors_agree(self) -> Optional[bool]:
        if self.kernel_verdict.status == UNDETERMINED or self.surjectivity == UNDETERMINED:
            return None
        return self.kernel_verdict.fails == (self.surjectivity == FAILS)

    def to_dict(self, vertex_names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        name = (lambda v: vertex_names[v]) if vertex_names else str
        data = {
            "simple": name(self.simple),
            "target": name(self.target),
            "step": self.step,
            "functional": list(self.functional),
            "kernelDims": self.kernel_dims.to_dict(),
            "kernelVerdict": self.kernel_verdict.to_dict(),
            "surjectivity": self.surjectivity,
        }
        if self.first_non_surjective is not None:
            data["firstNonSurjective"] = self.first_non_surjective
        return data


@dataclass(frozen=True)
class SyzygyConditionVerdict:
    status: str
    bound: int
    method: str
    unconditional: bool = False
    maps_checked: int = 0
    witness: Optional[MapCheck] = None
    obstructions: Tuple[str, ...] = ()
    disagreements: Tuple[MapCheck, ...] = ()
    agreements: int = 0

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_dict(self, vertex_names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        return {
            "status": self.status,
            "bound": self.bound,
            "method": self.method,
            "unconditional": self.unconditional,
            "mapsChecked": self.maps_checked,
            "witness": None if self.witness is None else self.witness.to_dict(vertex_names),
            "obstructions": list(self.obstructions),
            "detectorAgreements": self.agreements,
            "detectorDisagreements": [d.to_dict(vertex_names) for d in self.disagreements],
        }


def surjectivity_detector(f: GradedModuleMap, steps: int) -> Tuple[str, Optional[int]]:
    """Status of "F^k(f) surjective for k = 1..steps" and the first k where it fails."""
    current = f
    for k in range(1, steps + 1):
        try:
            current = functor_F_on_map(current)
            surjective = current.is_surjective()
        except _TRUNCATION_ERRORS + (FunctorDomainError,):
            return UNDETERMINED, None
        if not surjective:
            return FAILS, k
    return HOLDS, None


def check_map(f: GradedModuleMap, simple: int, target: int, step: int, depth: int) -> MapCheck:
    """Run both detectors on f, the kernel one through ``depth`` syzygies."""
    try:
        kernel, _ = f.kernel()
        kernel_dims = kernel.dimension_vector()
        verdict = is_koszul(kernel, depth)
    except _TRUNCATION_ERRORS as exc:
        kernel_dims = DimensionVector(())
        verdict = KoszulVerdict(UNDETERMINED, -1, reason=str(exc))
    surjectivity, first = surjectivity_detector(f, depth + 1)
    phi = f.component(0, target).row(0)
    return MapCheck(
        simple, target, step,
        tuple(f.field.format(x) for x in phi),
        kernel_dims, verdict, surjectivity, first,
    )


def candidate_functionals(
    basis: Sequence[GradedModuleMap], field: FieldSpec, target: int, budget: int
) -> Optional[List[Tuple[Any, ...]]]:
    """Functionals of every map up to scalars, or None when they cannot be enumerated."""
    rows = [f.component(0, target).row(0) for f in basis]
    if len(rows) == 1:
        return [tuple(rows[0])]
    if not field.is_prime or field.p ** len(rows) > budget:
        return None
    width = len(rows[0])
    functionals = []
    for point in projective_points(field, len(rows)):
        phi = [field.zero] * width
        for c, row in zip(point, rows):
            if c:
                phi = [x + c * y for x, y in zip(phi, row)]
        functionals.append(tuple(phi))
    return functionals


@dataclass
class _SimpleOutcome:
    status: str = HOLDS
    witness: Optional[MapCheck] = None
    maps_checked: int = 0
    enumerated: bool = False
    obstructions: List[str] = field(default_factory=list)
    disagreements: List[MapCheck] = field(default_factory=list)
    agreements: int = 0


def _check_simple(
    dual: PathAlgebraQuotient,
    simples: Sequence[GradedRightModule],
    j: int,
    max_i: int,
    budget: int,
) -> _SimpleOutcome:
    outcome = _SimpleOutcome()
    names = dual.vertex_names
    field = dual.field
    current = simples[j]
    for i in range(max_i + 1):
        if i:
            try:
                current = functor_F(current)
            except _TRUNCATION_ERRORS as exc:
                outcome.status = UNDETERMINED
                outcome.obstructions.append(f"S_{names[j]}: window exhausted at step {i} ({exc})")
                return outcome
        if not generated_in_degree(current, 0):
            outcome.status = UNDETERMINED
            outcome.obstructions.append(f"S_{names[j]}: F^{i} is not generated in degree 0, so Lambda is not Koszul")
            return outcome
        depth = max(max_i - i, 1)
        for ell in range(dual.num_vertices):
            basis = maps_to_simple(current, ell, simples[ell])
            if not basis:
                continue
            functionals = candidate_functionals(basis, field, ell, budget)
            if functionals is None:
                # only the basis maps are tried; a failure among them is still a proof
                outcome.status = UNDETERMINED
                outcome.obstructions.append(
                    f"Hom(F^{i} S_{names[j]}, S_{names[ell]}) has dimension {len(basis)} over {field}; "
                    "re-run over a small prime field"
                )
                functionals = [f.component(0, ell).row(0) for f in basis]
            else:
                outcome.enumerated = outcome.enumerated or len(basis) > 1
            for phi in functionals:
                check = check_map(functional_map(current, simples[ell], ell, phi), j, ell, i, depth)
                outcome.maps_checked += 1
                agree = check.detectors_agree
                if agree is False:
                    outcome.disagreements.append(check)
                elif agree:
                    outcome.agreements += 1
                if check.kernel_verdict.fails:
                    outcome.status = FAILS
                    outcome.witness = check
                    return outcome
                if check.status == UNDETERMINED and outcome.status == HOLDS:
                    outcome.status = UNDETERMINED
                    outcome.obstructions.append(
                        f"kernel of a map F^{i} S_{names[j]} -> S_{names[ell]}: {check.kernel_verdict.reason}"
                    )
        debug(f"syzygy condition: S_{names[j]} step {i} done, {outcome.maps_checked} maps so far")
    return outcome


def fast_path_verdict(
    dual: PathAlgebraQuotient, max_steps: int, report: Optional[FastPathReport] = None
) -> Optional[SyzygyConditionVerdict]:
    """An unconditional verdict when the fast path applies, else None."""
    report = report or fast_path(dual, max_steps)
    if not report.applies:
        return None
    return SyzygyConditionVerdict(HOLDS, max_steps, FAST_PATH, unconditional=True)


def koszul_syzygy_condition(
    dual: PathAlgebraQuotient,
    max_i: int,
    budget: int = 10 ** 6,
    pool: Optional[WorkerPool] = None,
) -> SyzygyConditionVerdict:
    """Check the syzygy condition on Lambda through F^max_i.

    Args:
        dual: Lambda, usually the quadratic dual of the algebra under study
        max_i: Largest syzygy step whose maps are examined
        budget: Largest p^dim for which a Hom-space is enumerated point by point
        pool: Optional worker pool; simples are then checked concurrently

    Returns:
        The verdict, with the first failing map (in simple, step, target,
        enumeration order) as witness
    """
    simples = [simple_module(dual, j) for j in range(dual.num_vertices)]

    def task(j: int) -> _SimpleOutcome:
        return _check_simple(dual, simples, j, max_i, budget)

    indices = list(range(dual.num_vertices))
    outcomes = pool.map(task, indices) if pool is not None else [task(j) for j in indices]

    maps_checked = sum(o.maps_checked for o in outcomes)
    agreements = sum(o.agreements for o in outcomes)
    disagreements = tuple(d for o in outcomes for d in o.disagreements)
    method = EXHAUSTIVE if any(o.enumerated for o in outcomes) else MULTIPLICITY_ONE
    obstructions = tuple(text for o in outcomes for text in o.obstructions)

    failure = next((o for o in outcomes if o.status == FAILS), None)
    if failure is not None:
        verdict = SyzygyConditionVerdict(
            FAILS, max_i, method, maps_checked=maps_checked, witness=failure.witness,
            obstructions=obstructions, disagreements=disagreements, agreements=agreements,
        )
    elif any(o.status == UNDETERMINED for o in outcomes):
        shortcut = fast_path_verdict(dual, max_i)
        if shortcut is not None:
            verdict = SyzygyConditionVerdict(
                HOLDS, max_i, FAST_PATH, unconditional=True, maps_checked=maps_checked,
                obstructions=obstructions, disagreements=disagreements, agreements=agreements,
            )
        else:
            verdict = SyzygyConditionVerdict(
                UNDETERMINED, max_i, method, maps_checked=maps_checked,
                obstructions=obstructions, disagreements=disagreements, agreements=agreements,
            )
    else:
        verdict = SyzygyConditionVerdict(
            HOLDS, max_i, method, maps_checked=maps_checked,
            disagreements=disagreements, agreements=agreements,
        )
    info(f"syzygy condition through step {max_i}: {verdict.status} ({maps_checked} maps, {verdict.method})")
    return verdict


def same_degree_checks(f: GradedModuleMap) -> Dict[str, Optional[bool]]:
    """Properties of F on a map between modules generated in one common degree.

    Returns:
        ``injectivity``: f injective implies F(f) injective (None when f is not injective);
        ``surjectivity``: for surjective f, F(f) surjective iff ker f is generated in the
        common degree (None when f is not surjective);
        ``exactness``: for surjective f with ker f generated in that degree,
        dim F(ker f) + dim F(N) = dim F(M) (None otherwise)
    """
    n = common_generation_degree(f.source, f.target)
    image = functor_F_on_map(f)
    results: Dict[str, Optional[bool]] = {"injectivity": None, "surjectivity": None, "exactness": None}
    if f.is_injective():
        results["injectivity"] = image.is_injective()
    if f.is_surjective():
        kernel, _ = f.kernel()
        kernel_ok = generated_in_degree(kernel, n)
        results["surjectivity"] = image.is_surjective() == kernel_ok
        if kernel_ok:
            left = functor_F(kernel).dimension_vector().as_dict()
            middle = functor_F(f.source).dimension_vector().as_dict()
            right = functor_F(f.target).dimension_vector().as_dict()
            degrees = set(left) | set(middle) | set(right)
            r = f.source.num_vertices
            zero = (0,) * r
            results["exactness"] = all(
                left.get(d, zero)[v] + right.get(d, zero)[v] == middle.get(d, zero)[v]
                for d in degrees for v in range(r)
            )
    return results
