"""
Graded right modules over a truncated quotient of a path algebra.

A module is stored by its components M_n e_v (degree n, vertex v) and, for
every arrow a, the action M_n e_tgt(a) -> M_{n+1} e_src(a). Components are
known in the window [lo, hi]; below lo they vanish, and above hi they vanish
when the module is ``complete`` and are unknown otherwise. Every verdict
computed from an incomplete module is relative to its window.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Tuple

from koszul_check.algebra import PathAlgebraQuotient
from koszul_check.exceptions import FunctorDomainError, KoszulCheckError, WindowExhaustedError
from koszul_check.linalg import FieldSpec, Matrix, QuotientMap, kernel_basis, rank, solve

Key = Tuple[int, int]  # (degree, vertex)

HOLDS = "holds"
FAILS = "fails"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class DimensionVector:
    """Per-degree, per-vertex dimensions; degrees with all-zero entries are dropped."""

    entries: Tuple[Tuple[int, Tuple[int, ...]], ...]

    @classmethod
    def from_mapping(cls, dims: Mapping[int, Sequence[int]]) -> "DimensionVector":
        return cls(tuple((n, tuple(d)) for n, d in sorted(dims.items()) if any(d)))

    def as_dict(self) -> Dict[int, Tuple[int, ...]]:
        return dict(self.entries)

    def at(self, n: int, v: int) -> int:
        row = self.as_dict().get(n)
        return row[v] if row else 0

    def degree_totals(self) -> Dict[int, int]:
        return {n: sum(d) for n, d in self.entries}

    def degrees(self) -> List[int]:
        return [n for n, _ in self.entries]

    def total(self) -> int:
        return sum(sum(d) for _, d in self.entries)

    def shifted(self, k: int) -> "DimensionVector":
        """Dimension vector of M(k), whose degree n part is M_{n+k}."""
        return DimensionVector(tuple((n - k, d) for n, d in self.entries))

    def to_dict(self) -> Dict[str, List[int]]:
        return {str(n): list(d) for n, d in self.entries}

    def __str__(self) -> str:
        return ", ".join(f"deg {n}: {list(d)}" for n, d in self.entries) or "0"


class GradedRightModule:
    """A degreewise finite-dimensional graded right module, known on a window."""

    def __init__(
        self,
        algebra: PathAlgebraQuotient,
        dims: Mapping[int, Sequence[int]],
        action: Mapping[Tuple[int, str], Matrix],
        lo: int,
        hi: int,
        complete: bool,
    ):
        self.algebra = algebra
        self.complete = complete
        r = algebra.num_vertices
        window = {n: tuple(dims.get(n, (0,) * r)) for n in range(lo, hi + 1)}
        nonzero = [n for n, d in window.items() if any(d)]
        if nonzero:
            lo = nonzero[0]
            if complete:
                hi = nonzero[-1]
        elif complete:
            lo, hi = 0, -1
        else:
            lo = hi + 1
        self.lo = lo
        self.hi = hi
        self._dims: Dict[int, Tuple[int, ...]] = {n: window[n] for n in range(lo, hi + 1)}
        self._action: Dict[Tuple[int, str], Matrix] = {
            key: m for key, m in action.items()
            if lo <= key[0] < hi and m.rows and m.cols
        }

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def num_vertices(self) -> int:
        return self.algebra.num_vertices

    def knows(self, n: int) -> bool:
        return n <= self.hi or self.complete

    def dim(self, n: int, v: int) -> int:
        if n < self.lo:
            return 0
        if n > self.hi:
            if self.complete:
                return 0
            raise WindowExhaustedError(f"degree {n} lies beyond the known window (hi = {self.hi})", reached=self.hi)
        return self._dims[n][v]

    def dims(self, n: int) -> Tuple[int, ...]:
        return tuple(self.dim(n, v) for v in range(self.num_vertices))

    def total_dim(self, n: int) -> int:
        return sum(self.dims(n))

    def act(self, n: int, arrow: str) -> Matrix:
        """Right action of an arrow: M_n e_tgt(a) -> M_{n+1} e_src(a)."""
        a = self.algebra.quiver.arrow(arrow)
        stored = self._action.get((n, arrow))
        if stored is not None:
            return stored
        return Matrix.zeros(self.field, self.dim(n + 1, a.source), self.dim(n, a.target))

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def is_zero(self) -> bool:
        return self.complete and self.hi < self.lo

    def dimension_vector(self) -> DimensionVector:
        return DimensionVector.from_mapping(self._dims)

    def signature(self) -> Tuple:
        """Hashable description of the data; equal signatures mean equal modules."""
        return (
            self.lo,
            self.hi,
            self.complete,
            tuple(self._dims[n] for n in self.degrees()),
            tuple(sorted((n, a, m.key()) for (n, a), m in self._action.items() if not m.is_zero())),
        )

    def relation_defects(self) -> List[Tuple[int, int]]:
        """(degree, relation index) pairs where m * rho != 0 for some m."""
        defects = []
        last = self.hi if self.complete else self.hi - 2
        for n in range(self.lo, last + 1):
            for k, relation in enumerate(self.algebra.presentation.relations):
                total = Matrix.zeros(self.field, self.dim(n + 2, relation.source), self.dim(n, relation.target))
                for (first, second), coeff in relation.terms:
                    total = total + (self.act(n + 1, second) @ self.act(n, first)).scale(coeff)
                if not total.is_zero():
                    defects.append((n, k))
        return defects

    @cached_property
    def cover(self) -> "ProjectiveCover":
        return _projective_cover(self)

    @cached_property
    def normalized_syzygy(self) -> "GradedRightModule":
        return shift(self.cover.kernel, 1)

    def __repr__(self) -> str:
        state = "complete" if self.complete else f"known to degree {self.hi}"
        return f"GradedRightModule({self.dimension_vector()}; {state})"


class GradedModuleMap:
    """A graded map M -> N(s): components f_n e_v : M_n e_v -> N_{n+s} e_v."""

    def __init__(
        self,
        source: GradedRightModule,
        target: GradedRightModule,
        components: Mapping[Key, Matrix],
        shift: int = 0,
    ):
        self.source = source
        self.target = target
        self.shift = shift
        self._components = {k: m for k, m in components.items() if m.rows and m.cols}

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def degrees(self) -> List[int]:
        """Source degrees where both ends are known."""
        return [n for n in self.source.degrees() if self.target.knows(n + self.shift)]

    def component(self, n: int, v: int) -> Matrix:
        stored = self._components.get((n, v))
        if stored is not None:
            return stored
        return Matrix.zeros(self.field, self.target.dim(n + self.shift, v), self.source.dim(n, v))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._components.values())

    def compose(self, inner: "GradedModuleMap") -> "GradedModuleMap":
        """self o inner."""
        components = {}
        for n in inner.degrees():
            if not self.target.knows(n + inner.shift + self.shift):
                continue
            for v in range(self.source.num_vertices):
                components[(n, v)] = self.component(n + inner.shift, v) @ inner.component(n, v)
        return GradedModuleMap(inner.source, self.target, components, inner.shift + self.shift)

    def __add__(self, other: "GradedModuleMap") -> "GradedModuleMap":
        if other.shift != self.shift:
            raise ValueError("maps of different degree cannot be added")
        keys = set(self._components) | set(other._components)
        return GradedModuleMap(
            self.source,
            self.target,
            {(n, v): self.component(n, v) + other.component(n, v) for n, v in keys},
            self.shift,
        )

    def scale(self, c: Any) -> "GradedModuleMap":
        return GradedModuleMap(
            self.source, self.target, {k: m.scale(c) for k, m in self._components.items()}, self.shift
        )

    def commutes(self) -> bool:
        """Whether f(m * a) = f(m) * a on every known component."""
        for n in self.degrees():
            if not (self.source.knows(n + 1) and self.target.knows(n + 1 + self.shift)):
                continue
            for a in self.source.algebra.quiver.arrows:
                left = self.target.act(n + self.shift, a.name) @ self.component(n, a.target)
                right = self.component(n + 1, a.source) @ self.source.act(n, a.name)
                if left != right:
                    return False
        return True

    def is_surjective(self) -> bool:
        for m in self.target.degrees():
            n = m - self.shift
            if not self.source.knows(n):
                continue
            for v in range(self.target.num_vertices):
                if rank(self.component(n, v)) != self.target.dim(m, v):
                    return False
        return True

    def is_injective(self) -> bool:
        for n in self.degrees():
            for v in range(self.source.num_vertices):
                if rank(self.component(n, v)) != self.source.dim(n, v):
                    return False
        return True

    def kernel(self) -> Tuple[GradedRightModule, "GradedModuleMap"]:
        """The kernel submodule and its inclusion into the source."""
        hi = self.source.hi
        complete = self.source.complete
        if not self.target.complete and self.target.hi - self.shift < hi:
            hi, complete = self.target.hi - self.shift, False
        bases = {
            (n, v): kernel_basis(self.component(n, v))
            for n in range(self.source.lo, hi + 1)
            for v in range(self.source.num_vertices)
        }
        return induced_submodule(self.source, bases, self.source.lo, hi, complete)

    def __repr__(self) -> str:
        return f"GradedModuleMap({self.source!r} -> {self.target!r}, shift {self.shift})"


def identity_map(m: GradedRightModule) -> GradedModuleMap:
    return GradedModuleMap(
        m, m, {(n, v): Matrix.identity(m.field, m.dim(n, v)) for n in m.degrees() for v in range(m.num_vertices)}
    )


def induced_submodule(
    m: GradedRightModule,
    bases: Mapping[Key, Matrix],
    lo: int,
    hi: int,
    complete: bool,
) -> Tuple[GradedRightModule, GradedModuleMap]:
    """The submodule spanned componentwise by the columns of ``bases``.

    The columns must span a submodule; the action is recovered by solving
    act @ basis = basis' @ X degree by degree.
    """
    r = m.num_vertices
    dims = {n: tuple(bases[(n, v)].cols for v in range(r)) for n in range(lo, hi + 1)}
    action: Dict[Tuple[int, str], Matrix] = {}
    for n in range(lo, hi):
        for a in m.algebra.quiver.arrows:
            inner = bases[(n, a.target)]
            outer = bases[(n + 1, a.source)]
            if not inner.cols or not outer.cols:
                continue
            moved = m.act(n, a.name) @ inner
            coefficients = solve(outer, moved)
            if coefficients is None:
                raise KoszulCheckError(f"subspace is not closed under the action of {a.name} in degree {n}")
            action[(n, a.name)] = coefficients
    sub = GradedRightModule(m.algebra, dims, action, lo, hi, complete)
    inclusion = GradedModuleMap(sub, m, {k: b for k, b in bases.items() if sub.knows(k[0])})
    return sub, inclusion


def simple_module(alg: PathAlgebraQuotient, i: int) -> GradedRightModule:
    """S_i = e_i S, one-dimensional at vertex i in degree 0."""
    if not 0 <= i < alg.num_vertices:
        raise ValueError(f"no vertex {i}")
    dims = {0: tuple(1 if v == i else 0 for v in range(alg.num_vertices))}
    return GradedRightModule(alg, dims, {}, 0, 0, True)


def projective_module(alg: PathAlgebraQuotient, i: int) -> GradedRightModule:
    """e_i Lambda, with (e_i Lambda)_n e_u = e_i Lambda_n e_u."""
    hi = alg.top_degree if alg.complete else alg.bound
    r = alg.num_vertices
    dims = {n: tuple(alg.corner_dim(n, u, i) for u in range(r)) for n in range(hi + 1)}
    action = {}
    for n in range(hi):
        for a in alg.quiver.arrows:
            action[(n, a.name)] = alg.right_multiplication_matrix(n, a.name, i)
    return GradedRightModule(alg, dims, action, 0, hi, alg.complete)


def shift(m: GradedRightModule, k: int) -> GradedRightModule:
    """M(k), with M(k)_n = M_{k+n}."""
    dims = {n - k: m.dims(n) for n in m.degrees()}
    action = {(n - k, a): mat for (n, a), mat in m._action.items()}
    return GradedRightModule(m.algebra, dims, action, m.lo - k, m.hi - k, m.complete)


@dataclass(frozen=True)
class Generator:
    degree: int
    vertex: int
    position: int


@dataclass(frozen=True)
class TopData:
    """M / J(M): its dimensions, the chosen generators and the per-component quotients."""

    dims: DimensionVector
    generators: Tuple[Generator, ...]
    quotients: Dict[Key, QuotientMap]

    def degrees(self) -> List[int]:
        return sorted({g.degree for g in self.generators})


def radical_columns(m: GradedRightModule, n: int, v: int) -> List[Tuple[Any, ...]]:
    """Vectors spanning J(M)_n e_v = sum over arrows of M_{n-1} * a."""
    columns: List[Tuple[Any, ...]] = []
    if n - 1 < m.lo:
        return columns
    for a in m.algebra.quiver.arrows:
        if a.source == v:
            columns.extend(m.act(n - 1, a.name).columns())
    return columns


def top(m: GradedRightModule) -> TopData:
    dims: Dict[int, List[int]] = {}
    generators: List[Generator] = []
    quotients: Dict[Key, QuotientMap] = {}
    for n in m.degrees():
        dims[n] = []
        for v in range(m.num_vertices):
            quotient = QuotientMap(m.field, radical_columns(m, n, v), m.dim(n, v))
            quotients[(n, v)] = quotient
            dims[n].append(quotient.quotient_dim)
            generators.extend(Generator(n, v, p) for p in quotient.complement)
    return TopData(DimensionVector.from_mapping(dims), tuple(generators), quotients)


def generation_degrees(m: GradedRightModule) -> List[int]:
    return top(m).degrees()


def generated_in_degree(m: GradedRightModule, n: int) -> bool:
    """All generators (within the window) sit in degree n; the zero module qualifies."""
    return set(generation_degrees(m)) <= {n}


class ProjectiveCover:
    """P = direct sum of e_v Lambda(-d) over the generators of M, with the cover and its kernel."""

    def __init__(
        self,
        module: GradedRightModule,
        generators: Tuple[Generator, ...],
        blocks: Dict[Key, List[Tuple[int, int, int]]],
        projective: GradedRightModule,
        cover_map: GradedModuleMap,
        kernel: GradedRightModule,
        inclusion: GradedModuleMap,
    ):
        self.module = module
        self.generators = generators
        self._blocks = blocks
        self.projective = projective
        self.cover_map = cover_map
        self.kernel = kernel
        self.inclusion = inclusion

    def blocks(self, n: int, u: int) -> List[Tuple[int, int, int]]:
        """(generator index, offset, size) of each summand's share of P_n e_u."""
        return self._blocks.get((n, u), [])


def _projective_cover(m: GradedRightModule) -> ProjectiveCover:
    alg = m.algebra
    field = m.field
    r = m.num_vertices
    if not m.complete and m.hi < 0:
        raise WindowExhaustedError("no degree >= 0 of the module is known", reached=m.hi)

    generators = top(m).generators
    if not generators:
        lo, hi, complete = m.lo, m.hi, m.complete
    else:
        lo = min(g.degree for g in generators)
        if alg.complete:
            projective_hi = max(g.degree for g in generators) + alg.top_degree
            if m.complete:
                hi, complete = max(projective_hi, m.hi), True
            else:
                hi, complete = m.hi, False
        else:
            hi = lo + alg.bound
            complete = False
            if not m.complete:
                hi = min(hi, m.hi)

    blocks: Dict[Key, List[Tuple[int, int, int]]] = {}
    dims: Dict[int, List[int]] = {}
    for n in range(lo, hi + 1):
        dims[n] = []
        for u in range(r):
            offset = 0
            entries = []
            for k, g in enumerate(generators):
                size = alg.corner_dim(n - g.degree, u, g.vertex) if n >= g.degree else 0
                entries.append((k, offset, size))
                offset += size
            blocks[(n, u)] = entries
            dims[n].append(offset)

    action: Dict[Tuple[int, str], Matrix] = {}
    for n in range(lo, hi):
        for a in alg.quiver.arrows:
            parts = []
            for g in generators:
                k = n - g.degree
                if k < 0:
                    rows = alg.corner_dim(k + 1, a.source, g.vertex) if k + 1 >= 0 else 0
                    parts.append(Matrix.zeros(field, rows, 0))
                else:
                    parts.append(alg.right_multiplication_matrix(k, a.name, g.vertex))
            action[(n, a.name)] = Matrix.block_diag(field, parts)
    projective = GradedRightModule(alg, dims, action, lo, hi, complete)

    images: Dict[Tuple[int, int, int], Tuple[Any, ...]] = {}
    cover_components: Dict[Key, Matrix] = {}
    for n in range(lo, hi + 1):
        for u in range(r):
            columns = []
            for k, g in enumerate(generators):
                degree = n - g.degree
                if degree < 0:
                    continue
                for idx in alg.corner_positions(degree, u, g.vertex):
                    if degree == 0:
                        image = tuple(field.one if p == g.position else field.zero for p in range(m.dim(n, u)))
                    else:
                        parent = images[(k, degree - 1, alg.parent(degree, idx))]
                        image = m.act(n - 1, alg.last_arrow(degree, idx)).apply(parent)
                    images[(k, degree, idx)] = image
                    columns.append(image)
            cover_components[(n, u)] = Matrix.from_columns(field, columns, m.dim(n, u))
    cover_map = GradedModuleMap(projective, m, cover_components)

    bases = {key: kernel_basis(mat) for key, mat in cover_components.items()}
    kernel, inclusion = induced_submodule(projective, bases, lo, hi, complete)
    return ProjectiveCover(m, generators, blocks, projective, cover_map, kernel, inclusion)


def projective_cover(m: GradedRightModule) -> Tuple[GradedRightModule, GradedModuleMap]:
    cover = m.cover
    return cover.projective, cover.cover_map


def syzygy(m: GradedRightModule) -> GradedRightModule:
    """Omega M, the kernel of the projective cover."""
    return m.cover.kernel


def functor_F(m: GradedRightModule) -> GradedRightModule:
    """F(M) = Omega(M)(1)."""
    return m.normalized_syzygy


def common_generation_degree(*modules: GradedRightModule) -> int:
    degrees: Set[int] = set()
    for m in modules:
        degrees.update(generation_degrees(m))
    if len(degrees) > 1:
        raise FunctorDomainError(
            f"modules are generated in degrees {sorted(degrees)}; F on maps needs one common degree"
        )
    return degrees.pop() if degrees else 0


def functor_F_on_map(f: GradedModuleMap) -> GradedModuleMap:
    """F(f): F(M) -> F(N), lifted through the covers and restricted to the syzygies."""
    if f.shift != 0:
        raise FunctorDomainError("F on maps needs a degree-preserving map")
    source_cover, target_cover = f.source.cover, f.target.cover
    n = common_generation_degree(f.source, f.target)
    source_kernel, target_kernel = source_cover.kernel, target_cover.kernel
    field = f.field
    components: Dict[Key, Matrix] = {}
    degrees = [
        k for k in range(min(source_kernel.lo, target_kernel.lo), max(source_kernel.hi, target_kernel.hi) + 1)
        if source_kernel.knows(k) and target_kernel.knows(k)
    ]
    for k in degrees:
        for u in range(f.source.num_vertices):
            rows = target_cover.projective.dim(k, u)
            cols = source_cover.projective.dim(k, u)
            grid = [[field.zero] * cols for _ in range(rows)]
            for g_index, g_offset, size in source_cover.blocks(k, u):
                g = source_cover.generators[g_index]
                for h_index, h_offset, h_size in target_cover.blocks(k, u):
                    h = target_cover.generators[h_index]
                    if h.vertex != g.vertex or not size:
                        continue
                    c = f.component(n, g.vertex)[h.position, g.position]
                    if c:
                        for t in range(size):
                            grid[h_offset + t][g_offset + t] = c
            lift = Matrix(field, grid, rows, cols)
            inner = source_cover.inclusion.component(k, u)
            outer = target_cover.inclusion.component(k, u)
            restricted = solve(outer, lift @ inner)
            if restricted is None:
                raise KoszulCheckError(f"lifted map does not restrict to the syzygies in degree {k}")
            components[(k - 1, u)] = restricted
    return GradedModuleMap(functor_F(f.source), functor_F(f.target), components)


def maps_to_simple(
    m: GradedRightModule, ell: int, target: Optional[GradedRightModule] = None
) -> List[GradedModuleMap]:
    """A basis of Hom(M, S_ell), read off the top of M at (0, ell).

    Pass ``target`` to reuse an existing S_ell object, so that F applied to
    these maps lands on that object's cached syzygies.
    """
    if not m.knows(0):
        raise WindowExhaustedError("degree 0 of the module is unknown", reached=m.hi)
    if target is None:
        target = simple_module(m.algebra, ell)
    dim = m.dim(0, ell)
    radical = radical_columns(m, 0, ell)
    functionals = kernel_basis(Matrix(m.field, radical, len(radical), dim)).columns()
    return [functional_map(m, target, ell, phi) for phi in functionals]


def functional_map(m: GradedRightModule, target: GradedRightModule, ell: int, phi: Sequence[Any]) -> GradedModuleMap:
    """The map M -> S_ell given by a functional on M_0 e_ell."""
    return GradedModuleMap(m, target, {(0, ell): Matrix(m.field, [tuple(phi)], 1, len(phi))})


def hom_space(m: GradedRightModule, n_module: GradedRightModule, s: int = 0) -> List[GradedModuleMap]:
    """A basis of graded maps M -> N(s) commuting with the action, within the shared window."""
    field = m.field
    r = m.num_vertices
    degrees = [n for n in m.degrees() if n_module.knows(n + s)]
    offsets: Dict[Key, Tuple[int, int, int]] = {}
    count = 0
    for n in degrees:
        for v in range(r):
            rows, cols = n_module.dim(n + s, v), m.dim(n, v)
            offsets[(n, v)] = (count, rows, cols)
            count += rows * cols

    equations: List[Dict[int, Any]] = []
    for n in degrees:
        if not (m.knows(n + 1) and n_module.knows(n + s + 1)):
            continue
        for a in m.algebra.quiver.arrows:
            act_n = n_module.act(n + s, a.name)
            act_m = m.act(n, a.name)
            start_in, rows_in, cols_in = offsets[(n, a.target)]
            following = offsets.get((n + 1, a.source))
            for i in range(act_n.rows):
                for j in range(cols_in):
                    row: Dict[int, Any] = {}
                    for k in range(rows_in):
                        value = act_n[i, k]
                        if value:
                            row[start_in + k * cols_in + j] = value
                    if following is not None:
                        start_out, _, cols_out = following
                        for k in range(cols_out):
                            value = act_m[k, j]
                            if value:
                                index = start_out + i * cols_out + k
                                row[index] = row.get(index, field.zero) - value
                    row = {key: value for key, value in row.items() if value}
                    if row:
                        equations.append(row)

    system = Matrix(
        field,
        [[row.get(c, field.zero) for c in range(count)] for row in equations],
        len(equations),
        count,
    )
    maps = []
    for solution in kernel_basis(system).columns():
        components = {}
        for (n, v), (start, rows, cols) in offsets.items():
            entries = [list(solution[start + i * cols:start + (i + 1) * cols]) for i in range(rows)]
            components[(n, v)] = Matrix(field, entries, rows, cols)
        maps.append(GradedModuleMap(m, n_module, components, s))
    return maps


@dataclass(frozen=True)
class KoszulVerdict:
    """Outcome of checking that Omega^n(M) is generated in degree n for n <= checked_up_to."""

    status: str
    checked_up_to: int
    unconditional: bool = False
    failure_step: Optional[int] = None
    witness: Optional[DimensionVector] = None
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status,
            "checkedUpTo": self.checked_up_to,
            "unconditional": self.unconditional,
            "reason": self.reason,
        }
        if self.failure_step is not None:
            data["failureStep"] = self.failure_step
        if self.witness is not None:
            data["witnessTop"] = self.witness.to_dict()
        return data


def is_koszul(m: GradedRightModule, up_to: int) -> KoszulVerdict:
    """Check F^n(M) generated in degree 0 for n = 0..up_to.

    A vanishing syzygy or a syzygy that repeats an earlier one exactly
    settles the question for all n; otherwise the verdict holds only up to
    ``up_to``.
    """
    current = m
    seen: Dict[Tuple, int] = {}
    for step in range(up_to + 1):
        if step:
            try:
                current = functor_F(current)
            except WindowExhaustedError as exc:
                return KoszulVerdict(UNDETERMINED, step - 1, reason=f"window exhausted at step {step}: {exc}")
        if current.is_zero():
            return KoszulVerdict(HOLDS, step, unconditional=True, reason=f"syzygy {step} vanishes")
        if not current.knows(0):
            return KoszulVerdict(UNDETERMINED, step - 1, reason=f"degree {step} of syzygy {step} is outside the window")
        data = top(current)
        if set(data.degrees()) - {0}:
            return KoszulVerdict(
                FAILS,
                step,
                failure_step=step,
                witness=data.dims.shifted(-step),
                reason=f"syzygy {step} has generators in degrees {[d + step for d in data.degrees()]}",
            )
        if current.complete:
            signature = current.signature()
            if signature in seen:
                return KoszulVerdict(
                    HOLDS, step, unconditional=True,
                    reason=f"normalized syzygy {step} repeats syzygy {seen[signature]}",
                )
            seen[signature] = step
    return KoszulVerdict(HOLDS, up_to, reason=f"checked through syzygy {up_to}")


@dataclass(frozen=True)
class SocleData:
    dims: DimensionVector
    module: GradedRightModule
    inclusion: GradedModuleMap


def socle(m: GradedRightModule) -> SocleData:
    """{x : x * a = 0 for every arrow a}, on the degrees where the action is known."""
    hi = m.hi if m.complete else m.hi - 1
    bases = {}
    for n in range(m.lo, hi + 1):
        for v in range(m.num_vertices):
            maps = [m.act(n, a.name) for a in m.algebra.quiver.arrows_into(v)]
            if maps:
                stacked = maps[0].vstack(*maps[1:])
                bases[(n, v)] = kernel_basis(stacked)
            else:
                bases[(n, v)] = Matrix.identity(m.field, m.dim(n, v))
    sub, inclusion = induced_submodule(m, bases, m.lo, hi, m.complete)
    return SocleData(sub.dimension_vector(), sub, inclusion)
