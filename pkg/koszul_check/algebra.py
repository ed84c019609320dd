"""
Quadratic presentations kQ/(I_2), truncated graded algebras and the quadratic dual.

Paths are tuples of arrow names composed right to left: the path (a, b) is
the product a*b and requires src(a) == tgt(b). A path therefore runs from
the source of its last arrow to the target of its first arrow.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from koszul_check.exceptions import DegreeOverflowError, RelationError
from koszul_check.linalg import (
    FieldSpec,
    Matrix,
    QuotientMap,
    SparseVector,
    axpy,
    densify,
    independent_subset,
    kernel_basis,
    row_space,
)
from koszul_check.quiver import DUAL_SUFFIX, Quiver
from koszul_check.utils.logger import debug

Path = Tuple[str, ...]
Corner = Tuple[int, int]  # (source, target)


@dataclass(frozen=True)
class PathBasis:
    """Paths of one length, grouped by (source, target) corner, in lexicographic order."""

    degree: int
    corners: Dict[Corner, Tuple[Path, ...]]

    def paths(self, source: int, target: int) -> Tuple[Path, ...]:
        return self.corners.get((source, target), ())

    def index(self, source: int, target: int) -> Dict[Path, int]:
        return {p: k for k, p in enumerate(self.paths(source, target))}


def path_endpoints(q: Quiver, path: Path) -> Corner:
    """(source, target) of a nonempty composable path."""
    arrows = [q.arrow(name) for name in path]
    for left, right in zip(arrows, arrows[1:]):
        if left.source != right.target:
            raise RelationError(f"path {'·'.join(path)} is not composable: src({left.name}) != tgt({right.name})")
    return arrows[-1].source, arrows[0].target


def path_basis(q: Quiver, degree: int) -> PathBasis:
    corners: Dict[Corner, List[Path]] = defaultdict(list)
    if degree == 0:
        for v in range(q.num_vertices):
            corners[(v, v)].append(())
        return PathBasis(0, {c: tuple(p) for c, p in corners.items()})
    layer: List[Tuple[Path, int, int]] = [((a.name,), a.source, a.target) for a in q.arrows]
    for _ in range(degree - 1):
        layer = [
            (path + (a.name,), a.source, target)
            for path, source, target in layer
            for a in q.arrows
            if a.target == source
        ]
    for path, source, target in layer:
        corners[(source, target)].append(path)
    return PathBasis(degree, {c: tuple(p) for c, p in sorted(corners.items())})


@dataclass(frozen=True)
class Relation:
    """A degree-2 relation supported on a single corner."""

    source: int
    target: int
    terms: Tuple[Tuple[Path, Any], ...]


RelationInput = Union[Mapping[Path, Any], Sequence[Tuple[Any, Path]]]


class QuadraticPresentation:
    """A quiver with homogeneous quadratic relations, split by corner."""

    def __init__(self, field: FieldSpec, quiver: Quiver, relations: Sequence[Relation]):
        self.field = field
        self.quiver = quiver
        self.relations: Tuple[Relation, ...] = tuple(relations)
        self._paths2 = path_basis(quiver, 2)

    @classmethod
    def create(cls, field: FieldSpec, quiver: Quiver, relations: Iterable[RelationInput]) -> "QuadraticPresentation":
        """Validate, split into corner components and drop dependent relations."""
        paths2 = path_basis(quiver, 2)
        kept: List[Relation] = []
        per_corner: Dict[Corner, List[Tuple[Any, ...]]] = defaultdict(list)
        for number, relation in enumerate(relations):
            items = relation.items() if isinstance(relation, Mapping) else [(tuple(p), c) for c, p in relation]
            combined: Dict[Path, Any] = {}
            for path, coeff in items:
                path = tuple(path)
                if len(path) != 2:
                    raise RelationError(f"relation {number}: term {'·'.join(path) or '1'} is not homogeneous of degree 2")
                for name in path:
                    if not quiver.has_arrow(name):
                        raise RelationError(f"relation {number}: unknown arrow {name}")
                try:
                    path_endpoints(quiver, path)
                except RelationError as exc:
                    raise RelationError(f"relation {number}: endpoints inconsistent ({exc})")
                value = field.element(coeff)
                combined[path] = combined.get(path, field.zero) + value
            by_corner: Dict[Corner, List[Tuple[Path, Any]]] = defaultdict(list)
            for path, value in combined.items():
                if value:
                    by_corner[path_endpoints(quiver, path)].append((path, value))
            for corner in sorted(by_corner):
                index = paths2.index(*corner)
                terms = tuple(sorted(by_corner[corner], key=lambda t: index[t[0]]))
                vector = [field.zero] * len(index)
                for path, value in terms:
                    vector[index[path]] = value
                candidates = per_corner[corner] + [tuple(vector)]
                if len(independent_subset(field, candidates, len(index))) == len(candidates):
                    per_corner[corner].append(tuple(vector))
                    kept.append(Relation(corner[0], corner[1], terms))
        return cls(field, quiver, kept)

    def path_basis(self, degree: int = 2) -> PathBasis:
        return self._paths2 if degree == 2 else path_basis(self.quiver, degree)

    def corner_relations(self, source: int, target: int) -> List[Relation]:
        return [r for r in self.relations if (r.source, r.target) == (source, target)]

    def relation_vectors(self, source: int, target: int) -> List[Tuple[Any, ...]]:
        index = self._paths2.index(source, target)
        vectors = []
        for relation in self.corner_relations(source, target):
            vector = [self.field.zero] * len(index)
            for path, value in relation.terms:
                vector[index[path]] = value
            vectors.append(tuple(vector))
        return vectors

    def relation_space(self, source: int, target: int) -> Tuple[Tuple[Any, ...], ...]:
        """Canonical echelon basis of the relation span in one corner."""
        dim = len(self._paths2.paths(source, target))
        return row_space(self.field, self.relation_vectors(source, target), dim)

    def same_relation_span(self, other: "QuadraticPresentation") -> bool:
        if self.field != other.field or self.quiver != other.quiver:
            return False
        return all(
            self.relation_space(*corner) == other.relation_space(*corner)
            for corner in self._paths2.corners
        )

    def restrict(self, vertex_indices: Sequence[int]) -> "QuadraticPresentation":
        """Restriction to a union of connected components."""
        keep = set(vertex_indices)
        sub = self.quiver.restrict(sorted(keep))
        relations = [
            {path: value for path, value in r.terms}
            for r in self.relations
            if r.source in keep and r.target in keep
        ]
        return QuadraticPresentation.create(self.field, sub, relations)

    def relation_strings(self) -> List[str]:
        return [format_terms(self.field, r.terms) for r in self.relations]

    def __repr__(self) -> str:
        return f"QuadraticPresentation({self.field}, {len(self.quiver.arrows)} arrows, {len(self.relations)} relations)"


def format_terms(field: FieldSpec, terms: Sequence[Tuple[Path, Any]]) -> str:
    pieces = []
    for path, value in terms:
        coeff = field.to_fraction(value)
        word = path_label(path)
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        body = word if magnitude == 1 else f"{magnitude}{word}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class BasisElement:
    degree: int
    source: int
    target: int
    label: str
    path: Optional[Path] = None


@dataclass(frozen=True)
class AlgebraElement:
    """A homogeneous element given by coordinates in the degree's basis."""

    degree: int
    coeffs: Tuple[Any, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> List[int]:
        return [k for k, c in enumerate(self.coeffs) if c]


class TruncatedGradedAlgebra:
    """A graded algebra known in degrees 0..bound, with corner-tagged bases.

    Subclasses supply ``_compute_basis_product``. ``complete`` records that
    some degree <= bound vanished, so every later degree is zero.
    """

    def __init__(self, field: FieldSpec, vertex_names: Sequence[str], bound: int, basis: List[List[BasisElement]]):
        self.field = field
        self.vertex_names = tuple(vertex_names)
        self.bound = bound
        self.basis = basis
        self._corner_positions: List[Dict[Corner, List[int]]] = []
        self._position_in_corner: List[List[int]] = []
        for layer in basis:
            corners: Dict[Corner, List[int]] = defaultdict(list)
            positions = []
            for idx, element in enumerate(layer):
                bucket = corners[(element.source, element.target)]
                positions.append(len(bucket))
                bucket.append(idx)
            self._corner_positions.append(dict(corners))
            self._position_in_corner.append(positions)
        self._products: Dict[Tuple[int, int, int, int], SparseVector] = {}

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def complete(self) -> bool:
        return any(not layer for layer in self.basis)

    @property
    def graded_length(self) -> Optional[int]:
        """d + 1 where d is the top nonzero degree, when it lies inside the window."""
        for n, layer in enumerate(self.basis):
            if not layer:
                return n
        return None

    @property
    def top_degree(self) -> Optional[int]:
        length = self.graded_length
        return None if length is None else length - 1

    def _check_degree(self, n: int) -> bool:
        """True if degree n is inside the window, False if known to vanish."""
        if n < 0:
            return False
        if n > self.bound:
            if self.complete:
                return False
            raise DegreeOverflowError(f"degree {n} exceeds the truncation bound {self.bound}")
        return True

    def dim(self, n: int) -> int:
        return len(self.basis[n]) if self._check_degree(n) else 0

    def corner_positions(self, n: int, source: int, target: int) -> List[int]:
        if not self._check_degree(n):
            return []
        return self._corner_positions[n].get((source, target), [])

    def corner_dim(self, n: int, source: int, target: int) -> int:
        return len(self.corner_positions(n, source, target))

    def position_in_corner(self, n: int, idx: int) -> int:
        return self._position_in_corner[n][idx]

    def corner_grid(self, n: int) -> np.ndarray:
        """H_n[j][i] = dim e_j A_n e_i."""
        r = self.num_vertices
        grid = np.zeros((r, r), dtype=np.int64)
        for (source, target), positions in self._corner_positions[n].items():
            grid[target, source] = len(positions)
        return grid

    def element(self, degree: int, coeffs: Sequence[Any]) -> AlgebraElement:
        if len(coeffs) != self.dim(degree):
            raise ValueError(f"degree {degree} has dimension {self.dim(degree)}, got {len(coeffs)} coordinates")
        return AlgebraElement(degree, tuple(self.field.element(c) if isinstance(c, (int, str)) else c for c in coeffs))

    def basis_vector(self, degree: int, idx: int) -> AlgebraElement:
        coeffs = [self.field.zero] * self.dim(degree)
        coeffs[idx] = self.field.one
        return AlgebraElement(degree, tuple(coeffs))

    def idempotent(self, v: int) -> AlgebraElement:
        return self.basis_vector(0, self.corner_positions(0, v, v)[0])

    def zero(self, degree: int) -> AlgebraElement:
        return AlgebraElement(degree, (self.field.zero,) * self.dim(degree))

    def basis_product(self, m: int, i: int, n: int, j: int) -> SparseVector:
        """Product of basis element i of degree m with basis element j of degree n."""
        key = (m, i, n, j)
        cached = self._products.get(key)
        if cached is None:
            x, y = self.basis[m][i], self.basis[n][j]
            if x.source != y.target or not self._check_degree(m + n):
                cached = {}
            else:
                cached = self._compute_basis_product(m, i, n, j)
            self._products[key] = cached
        return cached

    def _compute_basis_product(self, m: int, i: int, n: int, j: int) -> SparseVector:
        raise NotImplementedError

    def multiply_sparse(self, m: int, x: SparseVector, n: int, y: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                axpy(result, self.basis_product(m, i, n, j), a * b)
        return result

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        degree = x.degree + y.degree
        dim = self.dim(degree)
        product = self.multiply_sparse(
            x.degree, {i: c for i, c in enumerate(x.coeffs) if c},
            y.degree, {j: c for j, c in enumerate(y.coeffs) if c},
        )
        return AlgebraElement(degree, densify(self.field, product, dim))

    def structure_constants(self, m: int, n: int) -> Dict[Tuple[int, int], SparseVector]:
        table = {}
        for i in range(self.dim(m)):
            for j in range(self.dim(n)):
                product = self.basis_product(m, i, n, j)
                if product:
                    table[(i, j)] = product
        return table

    def associativity_failures(self, max_total: Optional[int] = None) -> List[Tuple[Tuple[int, int], ...]]:
        """Basis triples (degree, index) with (xy)z != x(yz), up to total degree ``max_total``."""
        limit = self.bound if max_total is None else min(max_total, self.bound)
        failures = []
        for a in range(limit + 1):
            for b in range(limit + 1 - a):
                for c in range(limit + 1 - a - b):
                    for i in range(self.dim(a)):
                        for j in range(self.dim(b)):
                            left_inner = self.basis_product(a, i, b, j)
                            for k in range(self.dim(c)):
                                left = self.multiply_sparse(a + b, left_inner, c, {k: self.field.one})
                                right = self.multiply_sparse(a, {i: self.field.one}, b + c, self.basis_product(b, j, c, k))
                                if left != right:
                                    failures.append(((a, i), (b, j), (c, k)))
        return failures

    def format_element(self, x: AlgebraElement) -> str:
        terms = [(tuple([self.basis[x.degree][k].label]), c) for k, c in enumerate(x.coeffs) if c]
        return format_terms(self.field, terms) if terms else "0"

    def to_dict(self, include_products: bool = False) -> Dict[str, Any]:
        """Basis labels per degree and, optionally, every structure constant."""
        data: Dict[str, Any] = {
            "field": str(self.field),
            "vertices": list(self.vertex_names),
            "bound": self.bound,
            "gradedLength": self.graded_length,
            "basis": [
                [
                    {"label": e.label, "source": self.vertex_names[e.source], "target": self.vertex_names[e.target]}
                    for e in layer
                ]
                for layer in self.basis
            ],
        }
        if include_products:
            products = []
            for m in range(self.bound + 1):
                for n in range(self.bound + 1 - m):
                    for (i, j), vector in sorted(self.structure_constants(m, n).items()):
                        products.append({
                            "left": [m, i],
                            "right": [n, j],
                            "result": {str(k): self.field.format(v) for k, v in sorted(vector.items())},
                        })
            data["products"] = products
        return data


class PathAlgebraQuotient(TruncatedGradedAlgebra):
    """kQ/(I_2) truncated at ``bound``.

    Every basis element of degree n >= 1 is represented by a path whose
    prefix of length n - 1 is itself a basis element (its parent), so
    A_n = (A_{n-1} (x) kQ_1) / (A_{n-2} (x) I_2).
    """

    def __init__(
        self,
        presentation: QuadraticPresentation,
        bound: int,
        basis: List[List[BasisElement]],
        parents: List[List[Optional[int]]],
        right: List[Dict[Tuple[int, str], SparseVector]],
    ):
        super().__init__(presentation.field, presentation.quiver.vertices, bound, basis)
        self.presentation = presentation
        self.quiver = presentation.quiver
        self._parents = parents
        self._right = right
        self._matrices: Dict[Tuple[int, str, int], Matrix] = {}

    def parent(self, n: int, idx: int) -> Optional[int]:
        return self._parents[n][idx]

    def last_arrow(self, n: int, idx: int) -> Optional[str]:
        path = self.basis[n][idx].path
        return path[-1] if path else None

    def right_multiply(self, n: int, idx: int, arrow: str) -> SparseVector:
        """Basis element idx of degree n times an arrow, in degree n + 1 coordinates."""
        a = self.quiver.arrow(arrow)
        if self.basis[n][idx].source != a.target or not self._check_degree(n + 1):
            return {}
        return self._right[n].get((idx, arrow), {})

    def right_multiplication_matrix(self, n: int, arrow: str, target: int) -> Matrix:
        """Right multiplication by an arrow on the corner e_target A_n e_tgt(arrow).

        Maps into e_target A_{n+1} e_src(arrow); columns and rows follow corner order.
        """
        key = (n, arrow, target)
        cached = self._matrices.get(key)
        if cached is not None:
            return cached
        a = self.quiver.arrow(arrow)
        domain = self.corner_positions(n, a.target, target)
        codomain = self.corner_positions(n + 1, a.source, target)
        rows = [[self.field.zero] * len(domain) for _ in codomain]
        for col, idx in enumerate(domain):
            for out, value in self.right_multiply(n, idx, arrow).items():
                rows[self.position_in_corner(n + 1, out)][col] = value
        matrix = Matrix(self.field, rows, len(codomain), len(domain))
        self._matrices[key] = matrix
        return matrix

    def _compute_basis_product(self, m: int, i: int, n: int, j: int) -> SparseVector:
        path = self.basis[n][j].path
        current: SparseVector = {i: self.field.one}
        degree = m
        for arrow in path:
            following: SparseVector = {}
            for idx, value in current.items():
                axpy(following, self.right_multiply(degree, idx, arrow), value)
            current = following
            degree += 1
            if not current:
                break
        return current

    def arrow_element(self, name: str) -> AlgebraElement:
        position = next(k for k, e in enumerate(self.basis[1]) if e.path == (name,))
        return self.basis_vector(1, position)

    def from_path(self, path: Path) -> AlgebraElement:
        """Normal form of a path of kQ in the quotient basis."""
        if not path:
            raise ValueError("use idempotent() for trivial paths")
        current = self.arrow_element(path[0])
        for name in path[1:]:
            current = self.multiply(current, self.arrow_element(name))
        return current


def build_algebra(pres: QuadraticPresentation, bound: int) -> PathAlgebraQuotient:
    """Bases and right-multiplication tables of kQ/(I_2) in degrees 0..bound."""
    if bound < 2:
        raise ValueError("the truncation bound must be at least 2")
    field, q = pres.field, pres.quiver
    one = field.one

    basis: List[List[BasisElement]] = [[
        BasisElement(0, v, v, f"e_{name}", ()) for v, name in enumerate(q.vertices)
    ]]
    parents: List[List[Optional[int]]] = [[None] * q.num_vertices]
    right: List[Dict[Tuple[int, str], SparseVector]] = []

    basis.append([BasisElement(1, a.source, a.target, a.name, (a.name,)) for a in q.arrows])
    parents.append([a.target for a in q.arrows])
    right.append({(a.target, a.name): {k: one} for k, a in enumerate(q.arrows)})

    for n in range(2, bound + 1):
        previous = basis[n - 1]
        candidates: List[Tuple[int, str]] = []
        candidate_index: Dict[Tuple[int, str], int] = {}
        by_corner: Dict[Corner, List[int]] = defaultdict(list)
        for b_idx, b in enumerate(previous):
            for a in q.arrows:
                if a.target == b.source:
                    candidate_index[(b_idx, a.name)] = len(candidates)
                    by_corner[(a.source, b.target)].append(len(candidates))
                    candidates.append((b_idx, a.name))

        images: Dict[Corner, List[SparseVector]] = defaultdict(list)
        for c_idx, c in enumerate(basis[n - 2]):
            for relation in pres.relations:
                if relation.target != c.source:
                    continue
                image: SparseVector = {}
                for (first, second), coeff in relation.terms:
                    for b_idx, value in right[n - 2].get((c_idx, first), {}).items():
                        axpy(image, {candidate_index[(b_idx, second)]: one}, coeff * value)
                if image:
                    images[(relation.source, c.target)].append(image)

        chosen: List[int] = []
        rewrite: Dict[int, SparseVector] = {}
        for corner, members in by_corner.items():
            local = {g: k for k, g in enumerate(members)}
            rows = [densify(field, {local[g]: v for g, v in image.items()}, len(members)) for image in images[corner]]
            quotient = QuotientMap(field, rows, len(members))
            for k, g in enumerate(members):
                rewrite[g] = {members[quotient.complement[pos]]: v for pos, v in quotient.image_of(k).items()}
            chosen.extend(members[k] for k in quotient.complement)
        chosen.sort()
        renumber = {g: k for k, g in enumerate(chosen)}

        layer = []
        for g in chosen:
            b_idx, name = candidates[g]
            b, a = previous[b_idx], q.arrow(name)
            path = b.path + (name,)
            layer.append(BasisElement(n, a.source, b.target, path_label(path), path))
        basis.append(layer)
        parents.append([candidates[g][0] for g in chosen])
        right.append({
            candidates[g]: {renumber[h]: v for h, v in rewrite[g].items()}
            for g in range(len(candidates))
        })
        debug(f"degree {n}: {len(candidates)} candidate paths, {len(layer)} basis elements")

    return PathAlgebraQuotient(pres, bound, basis, parents, right)


def path_label(path: Path) -> str:
    """xy for one-letter arrow names, a·b·c otherwise."""
    return "".join(path) if all(len(name) == 1 for name in path) else "·".join(path)


def quadratic_dual(pres: QuadraticPresentation) -> QuadraticPresentation:
    """A^! = kQ^op / (I_2^perp) under the pairing <ab, b* a*> = 1."""
    field = pres.field
    opposite = pres.quiver.opposite()
    relations = []
    for (source, target), paths in pres.path_basis(2).corners.items():
        vectors = pres.relation_vectors(source, target)
        if vectors:
            perp = kernel_basis(Matrix(field, vectors, len(vectors), len(paths))).columns()
        else:
            perp = [tuple(field.one if i == k else field.zero for i in range(len(paths))) for k in range(len(paths))]
        for vector in perp:
            relations.append({
                (second + DUAL_SUFFIX, first + DUAL_SUFFIX): value
                for (first, second), value in zip(paths, vector)
                if value
            })
    return QuadraticPresentation.create(field, opposite, relations)


def double_dual_roundtrip(pres: QuadraticPresentation) -> QuadraticPresentation:
    """(A^!)^! carried back to the original quiver along a** -> a."""
    twice = quadratic_dual(quadratic_dual(pres))
    rename = {b.name: a.name for a, b in zip(pres.quiver.arrows, twice.quiver.arrows)}
    relations = [{tuple(rename[x] for x in path): value for path, value in r.terms} for r in twice.relations]
    return QuadraticPresentation.create(pres.field, pres.quiver, relations)


@dataclass(frozen=True)
class HilbertData:
    """Corner dimension grids H_n[j][i] = dim e_j A_n e_i for n = 0..bound."""

    grids: Tuple[np.ndarray, ...]
    vertex_names: Tuple[str, ...]
    graded_length: Optional[int]

    @property
    def bound(self) -> int:
        return len(self.grids) - 1

    def vertex_series(self, j: int) -> Tuple[int, ...]:
        """Coefficients of h_{e_j A}(t): row sums of the grids."""
        return tuple(int(grid[j, :].sum()) for grid in self.grids)

    def total_series(self) -> Tuple[int, ...]:
        return tuple(int(grid.sum()) for grid in self.grids)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertex_names),
            "gradedLength": self.graded_length,
            "grids": [grid.tolist() for grid in self.grids],
            "vertexSeries": {
                name: series_string(self.vertex_series(j)) for j, name in enumerate(self.vertex_names)
            },
            "totalSeries": series_string(self.total_series()),
        }


def hilbert(alg: TruncatedGradedAlgebra) -> HilbertData:
    return HilbertData(
        grids=tuple(alg.corner_grid(n) for n in range(alg.bound + 1)),
        vertex_names=alg.vertex_names,
        graded_length=alg.graded_length,
    )


def graded_length(alg: TruncatedGradedAlgebra) -> Optional[int]:
    return alg.graded_length


def series_string(coefficients: Sequence[int], variable: str = "t") -> str:
    """Render 1 + 2t + t^2 style polynomials."""
    pieces = []
    for n, c in enumerate(coefficients):
        if not c:
            continue
        if n == 0:
            pieces.append(str(c))
            continue
        power = variable if n == 1 else f"{variable}^{n}"
        pieces.append(power if c == 1 else f"{c}{power}")
    return " + ".join(pieces) if pieces else "0"


def numerical_koszul_identity(alg: TruncatedGradedAlgebra, dual: TruncatedGradedAlgebra) -> Tuple[bool, List[int]]:
    """h_A(t) * h_{A!}(-t) modulo t^{N+1} for one-vertex algebras.

    Returns whether the product is 1 and its coefficients.
    """
    if alg.num_vertices != 1 or dual.num_vertices != 1:
        raise ValueError("the numerical identity is checked for one-vertex algebras only")
    n = min(alg.bound, dual.bound)
    h_a = np.array([alg.dim(k) for k in range(n + 1)], dtype=np.int64)
    h_d = np.array([(-1) ** k * dual.dim(k) for k in range(n + 1)], dtype=np.int64)
    product = [int(c) for c in np.convolve(h_a, h_d)[: n + 1]]
    return product == [1] + [0] * n, product
