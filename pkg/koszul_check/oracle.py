"""
Brute-force verifiers over small prime fields.

Nothing here goes through the module engine: zero divisors are searched
directly in the Peirce corners, primeness is read off corner dimensions, and
syzygies of simples are recomputed from raw kernels of presentation maps built
from structure constants.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from koszul_check.algebra import PathAlgebraQuotient, TruncatedGradedAlgebra
from koszul_check.exceptions import FieldMismatchError, WindowExhaustedError
from koszul_check.linalg import (
    FieldSpec,
    Matrix,
    SparseVector,
    count_projective_points,
    densify,
    independent_subset,
    kernel_basis,
    nonzero_vectors,
    projective_points,
    rank,
)
from koszul_check.modules import DimensionVector, functor_F, shift, simple_module
from koszul_check.utils.logger import debug, info

NO_WITNESS = "no-witness"
WITNESS = "witness"
PARTIAL = "partial"


@dataclass(frozen=True)
class OracleConfig:
    field: FieldSpec = FieldSpec.prime(2)
    max_total_degree: int = 4
    budget: int = 10 ** 6
    full_enumeration: bool = False

    def __post_init__(self):
        if not self.field.is_prime:
            raise ValueError("the oracle enumerates over prime fields only")


@dataclass(frozen=True)
class ZeroDivisorWitness:
    """x in e_i A_d e_j and y in e_j A_e e_ell, both nonzero, with x y = 0."""

    degrees: Tuple[int, int]
    corners: Tuple[int, int, int]
    x: Tuple[Any, ...]
    y: Tuple[Any, ...]

    def verify(self, alg: TruncatedGradedAlgebra) -> bool:
        """Re-multiply through the structure constants."""
        d, e = self.degrees
        i, j, ell = self.corners
        if not any(self.x) or not any(self.y):
            return False
        x_positions = alg.corner_positions(d, j, i)
        y_positions = alg.corner_positions(e, ell, j)
        x = {p: c for p, c in zip(x_positions, self.x) if c}
        y = {p: c for p, c in zip(y_positions, self.y) if c}
        return not alg.multiply_sparse(d, x, e, y)

    def to_dict(self, alg: TruncatedGradedAlgebra) -> Dict[str, Any]:
        d, e = self.degrees
        i, j, ell = self.corners
        x_positions = alg.corner_positions(d, j, i)
        y_positions = alg.corner_positions(e, ell, j)
        return {
            "degrees": [d, e],
            "corners": [alg.vertex_names[v] for v in self.corners],
            "x": _format_element(alg, d, x_positions, self.x),
            "y": _format_element(alg, e, y_positions, self.y),
            "verified": self.verify(alg),
        }


def _format_element(alg: TruncatedGradedAlgebra, degree: int, positions: Sequence[int], coeffs: Sequence[Any]) -> str:
    vector = densify(alg.field, {p: c for p, c in zip(positions, coeffs) if c}, alg.dim(degree))
    return alg.format_element(alg.element(degree, vector))


@dataclass(frozen=True)
class ZeroDivisorReport:
    field: FieldSpec
    witness: Optional[ZeroDivisorWitness]
    pairs_checked: int
    exhausted: Tuple[Tuple[int, int], ...]
    max_total_degree: int
    budget_exceeded: bool = False

    @property
    def full_coverage(self) -> bool:
        return not self.budget_exceeded

    @property
    def outcome(self) -> str:
        if self.witness is not None:
            return WITNESS
        return PARTIAL if self.budget_exceeded else NO_WITNESS

    def to_dict(self, alg: TruncatedGradedAlgebra) -> Dict[str, Any]:
        return {
            "field": str(self.field),
            "outcome": self.outcome,
            "witness": None if self.witness is None else self.witness.to_dict(alg),
            "pairsChecked": self.pairs_checked,
            "exhaustedDegreePairs": [list(p) for p in self.exhausted],
            "maxTotalDegree": self.max_total_degree,
            "fullCoverage": self.full_coverage,
        }


def _left_multiplication(alg: TruncatedGradedAlgebra, d: int, x: SparseVector, e: int, y_positions: Sequence[int], out_positions: Sequence[int]) -> Matrix:
    """Matrix of y -> x y from the corner coordinates of y to those of the product."""
    index = {p: k for k, p in enumerate(out_positions)}
    columns = []
    for p in y_positions:
        product = alg.multiply_sparse(d, x, e, {p: alg.field.one})
        column = [alg.field.zero] * len(out_positions)
        for q, c in product.items():
            column[index[q]] = c
        columns.append(column)
    return Matrix.from_columns(alg.field, columns, len(out_positions))


def _degree_pairs(alg: TruncatedGradedAlgebra, max_total: int) -> List[Tuple[int, int]]:
    limit = max_total if alg.complete else min(max_total, alg.bound)
    return [(d, t - d) for t in range(2, limit + 1) for d in range(1, t)]


def zero_divisor_search(alg: TruncatedGradedAlgebra, cfg: OracleConfig) -> ZeroDivisorReport:
    """First nonzero corner pair with x y = 0, in (total degree, d, i, j, ell, x, y) order.

    In the default mode x and y range over projective points (leading
    coordinate 1); with ``cfg.full_enumeration`` every nonzero vector is tried.
    The budget caps the number of (x, y) pairs accounted for.
    """
    if alg.field != cfg.field:
        raise FieldMismatchError(f"algebra over {alg.field}, oracle over {cfg.field}")
    r = alg.num_vertices
    p = cfg.field.p
    checked = 0
    exhausted: List[Tuple[int, int]] = []
    for d, e in _degree_pairs(alg, cfg.max_total_degree):
        for i in range(r):
            for j in range(r):
                x_positions = alg.corner_positions(d, j, i)
                if not x_positions:
                    continue
                for ell in range(r):
                    y_positions = alg.corner_positions(e, ell, j)
                    if not y_positions:
                        continue
                    out_positions = alg.corner_positions(d + e, ell, i)
                    if cfg.full_enumeration:
                        xs = nonzero_vectors(cfg.field, len(x_positions))
                        y_count = p ** len(y_positions) - 1
                    else:
                        xs = projective_points(cfg.field, len(x_positions))
                        y_count = count_projective_points(p, len(y_positions))
                    for x in xs:
                        if checked + y_count > cfg.budget:
                            info(f"zero-divisor search stopped by the budget after {checked} pairs")
                            return ZeroDivisorReport(cfg.field, None, checked, tuple(exhausted), cfg.max_total_degree, True)
                        x_sparse = {pos: c for pos, c in zip(x_positions, x) if c}
                        found = _find_partner(alg, cfg, d, x_sparse, e, y_positions, out_positions)
                        if found is None:
                            checked += y_count
                            continue
                        y, tried = found
                        checked += tried
                        witness = ZeroDivisorWitness((d, e), (i, j, ell), tuple(x), tuple(y))
                        info(f"zero divisor found in degrees ({d}, {e}) after {checked} pairs")
                        return ZeroDivisorReport(cfg.field, witness, checked, tuple(exhausted), cfg.max_total_degree)
        exhausted.append((d, e))
        debug(f"zero-divisor search: degrees ({d}, {e}) exhausted, {checked} pairs")
    return ZeroDivisorReport(cfg.field, None, checked, tuple(exhausted), cfg.max_total_degree)


def _find_partner(
    alg: TruncatedGradedAlgebra,
    cfg: OracleConfig,
    d: int,
    x: SparseVector,
    e: int,
    y_positions: Sequence[int],
    out_positions: Sequence[int],
) -> Optional[Tuple[Tuple[Any, ...], int]]:
    """The first y (in enumeration order) with x y = 0 and the number of y tried."""
    if not out_positions:
        ys = nonzero_vectors if cfg.full_enumeration else projective_points
        return next(iter(ys(cfg.field, len(y_positions)))), 1
    left = _left_multiplication(alg, d, x, e, y_positions, out_positions)
    if rank(left) == len(y_positions):
        return None
    ys = nonzero_vectors(cfg.field, len(y_positions)) if cfg.full_enumeration else projective_points(cfg.field, len(y_positions))
    for tried, y in enumerate(ys, start=1):
        if not any(left.apply(y)):
            return tuple(y), tried
    return None


@dataclass(frozen=True)
class PrimenessReport:
    """Least degree n with e_j A_n e_i != 0, for each ordered pair i != j."""

    vertex_names: Tuple[str, ...]
    first_hits: Dict[Tuple[int, int], Optional[int]]
    window: int

    @property
    def prime_by_corners(self) -> bool:
        return all(n is not None for n in self.first_hits.values())

    def to_dict(self) -> Dict[str, Any]:
        names = self.vertex_names
        return {
            "window": self.window,
            "primeByCorners": self.prime_by_corners,
            "firstHits": {
                f"{names[i]}->{names[j]}": n for (i, j), n in sorted(self.first_hits.items())
            },
        }


def primeness_oracle(alg: TruncatedGradedAlgebra, cfg: Optional[OracleConfig] = None) -> PrimenessReport:
    window = alg.top_degree if alg.complete else alg.bound
    hits: Dict[Tuple[int, int], Optional[int]] = {}
    for i in range(alg.num_vertices):
        for j in range(alg.num_vertices):
            if i == j:
                continue
            hits[(i, j)] = next((n for n in range(window + 1) if alg.corner_dim(n, i, j)), None)
    return PrimenessReport(alg.vertex_names, hits, window)


@dataclass(frozen=True)
class SyzygyStep:
    step: int
    dims: DimensionVector
    generation_degrees: Tuple[int, ...]

    @property
    def generated_in_step_degree(self) -> bool:
        return set(self.generation_degrees) <= {self.step}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "dims": self.dims.to_dict(),
            "generationDegrees": list(self.generation_degrees),
            "generatedInDegree": self.generated_in_step_degree,
        }


@dataclass(frozen=True)
class KoszulOracleReport:
    simple: int
    steps: Tuple[SyzygyStep, ...]
    complete: bool
    reached: Optional[int] = None

    @property
    def koszul_within(self) -> bool:
        return all(s.generated_in_step_degree for s in self.steps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "simple": self.simple,
            "steps": [s.to_dict() for s in self.steps],
            "koszulWithin": self.koszul_within,
            "complete": self.complete,
            "reached": self.reached,
        }


Gen = Tuple[int, int]  # (degree, vertex) of a free generator
Coordinate = Tuple[int, int]  # (generator, basis index in Lambda)


def _free_coordinates(alg: PathAlgebraQuotient, gens: Sequence[Gen], n: int, u: int) -> List[Coordinate]:
    """Basis of (sum_g e_{v_g} Lambda(-d_g))_n e_u."""
    coords = []
    for g, (degree, vertex) in enumerate(gens):
        if n >= degree:
            coords.extend((g, idx) for idx in alg.corner_positions(n - degree, u, vertex))
    return coords


def _free_window(alg: PathAlgebraQuotient, gens: Sequence[Gen], previous: Sequence[Gen]) -> Tuple[int, int]:
    lo = min(d for d, _ in gens)
    if alg.complete:
        return lo, max(d for d, _ in gens) + alg.top_degree
    return lo, min(d for d, _ in list(gens) + list(previous)) + alg.bound


def _presentation_matrix(
    alg: PathAlgebraQuotient,
    gens: Sequence[Gen],
    images: Optional[Sequence[Dict[Coordinate, Any]]],
    previous: Sequence[Gen],
    n: int,
    u: int,
) -> Tuple[List[Coordinate], Matrix]:
    """The degree-n, vertex-u block of the map from the free module on ``gens``.

    ``images is None`` stands for the cover of the simple, whose kernel is
    everything of positive degree.
    """
    domain = _free_coordinates(alg, gens, n, u)
    if images is None:
        codomain = domain if n == 0 else []
    else:
        codomain = _free_coordinates(alg, previous, n, u)
    index = {c: k for k, c in enumerate(codomain)}
    columns = []
    for g, idx in domain:
        column = [alg.field.zero] * len(codomain)
        if images is None:
            if codomain:
                column[index[(g, idx)]] = alg.field.one
        else:
            degree = gens[g][0]
            for (h, c_idx), coeff in images[g].items():
                product = alg.basis_product(degree - previous[h][0], c_idx, n - degree, idx)
                for out, value in product.items():
                    column[index[(h, out)]] += coeff * value
        columns.append(column)
    return domain, Matrix.from_columns(alg.field, columns, len(codomain))


def _radical_vectors(
    alg: PathAlgebraQuotient,
    gens: Sequence[Gen],
    kernels: Dict[Tuple[int, int], Tuple[List[Coordinate], Matrix]],
    n: int,
    u: int,
) -> List[List[Any]]:
    """Kernel vectors of degree n - 1 moved to (n, u) by every arrow with source u."""
    domain, _ = kernels[(n, u)]
    index = {c: k for k, c in enumerate(domain)}
    moved_vectors = []
    for a_index, arrow in enumerate(alg.basis[1]):
        if arrow.source != u or (n - 1, arrow.target) not in kernels:
            continue
        before_domain, before = kernels[(n - 1, arrow.target)]
        for col in before.columns():
            moved = [alg.field.zero] * len(domain)
            for (g, idx), coeff in zip(before_domain, col):
                if coeff:
                    for out, value in alg.basis_product(n - 1 - gens[g][0], idx, 1, a_index).items():
                        moved[index[(g, out)]] += coeff * value
            moved_vectors.append(moved)
    return moved_vectors


def koszul_oracle(dual: PathAlgebraQuotient, simple_index: int, up_to: int) -> KoszulOracleReport:
    """Omega^n(S_j) for n <= up_to from raw kernels of presentation maps.

    Omega^{n+1} is the kernel of the map from the free module on the
    generators of Omega^n, written down from the structure constants of
    Lambda and the coordinates of those generators. Generators are picked
    greedily against the radical in every (degree, vertex) block.
    """
    alg = dual
    r = alg.num_vertices
    steps = [SyzygyStep(0, DimensionVector.from_mapping({0: [int(v == simple_index) for v in range(r)]}), (0,))]
    gens: List[Gen] = [(0, simple_index)]
    images: Optional[List[Dict[Coordinate, Any]]] = None
    previous: List[Gen] = []

    for step in range(1, up_to + 1):
        lo, hi = _free_window(alg, gens, previous)
        if hi < lo:
            raise WindowExhaustedError(f"syzygy {step} of S_{alg.vertex_names[simple_index]} lies beyond the window", reached=step - 1)
        kernels: Dict[Tuple[int, int], Tuple[List[Coordinate], Matrix]] = {}
        for n in range(lo, hi + 1):
            for u in range(r):
                domain, presentation = _presentation_matrix(alg, gens, images, previous, n, u)
                kernels[(n, u)] = (domain, kernel_basis(presentation))

        new_gens: List[Gen] = []
        new_images: List[Dict[Coordinate, Any]] = []
        for n in range(lo, hi + 1):
            for u in range(r):
                domain, basis = kernels[(n, u)]
                if not basis.cols:
                    continue
                radical = _radical_vectors(alg, gens, kernels, n, u)
                candidates = radical + [list(col) for col in basis.columns()]
                for k in independent_subset(alg.field, candidates, len(domain)):
                    if k >= len(radical):
                        col = candidates[k]
                        new_gens.append((n, u))
                        new_images.append({c: v for c, v in zip(domain, col) if v})

        dims = {n: [kernels[(n, u)][1].cols for u in range(r)] for n in range(lo, hi + 1)}
        steps.append(SyzygyStep(step, DimensionVector.from_mapping(dims), tuple(sorted({d for d, _ in new_gens}))))
        debug(f"oracle syzygy {step} of S_{alg.vertex_names[simple_index]}: {steps[-1].dims}")
        if not new_gens:
            return KoszulOracleReport(simple_index, tuple(steps), alg.complete, step)
        previous, gens, images = gens, new_gens, new_images
    return KoszulOracleReport(simple_index, tuple(steps), alg.complete, up_to)


def engine_syzygy_table(dual: PathAlgebraQuotient, simple_index: int, up_to: int) -> List[DimensionVector]:
    """Dimension vectors of Omega^n(S_j) = F^n(S_j)(-n) from the module engine, for comparison."""
    table = []
    current = simple_module(dual, simple_index)
    for n in range(up_to + 1):
        if n:
            current = functor_F(current)
        table.append(shift(current, -n).dimension_vector())
        if current.is_zero():
            break
    return table


def compare_syzygy_tables(report: KoszulOracleReport, engine: Sequence[DimensionVector]) -> bool:
    return all(step.dims == dims for step, dims in zip(report.steps, engine))
