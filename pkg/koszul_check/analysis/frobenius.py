"""
Socle structure of a finite-dimensional graded algebra.

Lambda of graded length d + 1 is graded Frobenius exactly when every
indecomposable projective e_i Lambda has a simple socle sitting in degree d,
on both sides, and the socle types permute the vertices.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from koszul_check.algebra import PathAlgebraQuotient
from koszul_check.linalg import Matrix, kernel_basis
from koszul_check.modules import DimensionVector, projective_module, socle


@dataclass(frozen=True)
class FrobeniusVerdict:
    graded_length: Optional[int]
    socle_concentrated: bool
    per_projective_socle_simple: bool
    left_socle_simple: bool
    socle_permutation: Optional[Tuple[int, ...]]
    right_socles: Tuple[DimensionVector, ...]
    left_socles: Tuple[DimensionVector, ...]

    @property
    def top_degree(self) -> Optional[int]:
        return None if self.graded_length is None else self.graded_length - 1

    @property
    def passes(self) -> bool:
        return self.socle_concentrated and self.left_socle_simple and self.socle_permutation is not None

    def to_dict(self, vertex_names: Optional[Tuple[str, ...]] = None) -> Dict[str, Any]:
        permutation = None
        if self.socle_permutation is not None:
            names = vertex_names or tuple(str(v) for v in range(len(self.socle_permutation)))
            permutation = {names[i]: names[s] for i, s in enumerate(self.socle_permutation)}
        return {
            "gradedLength": self.graded_length,
            "topDegree": self.top_degree,
            "socleConcentrated": self.socle_concentrated,
            "perProjectiveSocleSimple": self.per_projective_socle_simple,
            "leftSocleSimple": self.left_socle_simple,
            "soclePermutation": permutation,
            "rightSocles": [s.to_dict() for s in self.right_socles],
            "leftSocles": [s.to_dict() for s in self.left_socles],
            "frobenius": self.passes,
        }


def left_socle(alg: PathAlgebraQuotient, u: int) -> DimensionVector:
    """{x in Lambda e_u : a x = 0 for every arrow a}, graded by degree and target vertex."""
    field = alg.field
    top = alg.top_degree
    arrows = list(range(alg.dim(1)))
    dims: Dict[int, List[int]] = {}
    for n in range(top + 1):
        dims[n] = [0] * alg.num_vertices
        for v in range(alg.num_vertices):
            positions = alg.corner_positions(n, u, v)
            if not positions:
                continue
            rows = []
            for k in arrows:
                if alg.basis[1][k].source != v:
                    continue
                image_positions = alg.corner_positions(n + 1, u, alg.basis[1][k].target)
                for out in image_positions:
                    rows.append([alg.basis_product(1, k, n, idx).get(out, field.zero) for idx in positions])
            dims[n][v] = kernel_basis(Matrix(field, rows, len(rows), len(positions))).cols
    return DimensionVector.from_mapping(dims)


def frobenius_check(alg: PathAlgebraQuotient) -> FrobeniusVerdict:
    """Socle test on both sides; no claim when the graded length lies outside the window."""
    length = alg.graded_length
    r = alg.num_vertices
    if length is None:
        return FrobeniusVerdict(None, False, False, False, None, (), ())
    d = length - 1

    right = tuple(socle(projective_module(alg, i)).dims for i in range(r))
    left = tuple(left_socle(alg, u) for u in range(r))

    concentrated = all(s.degrees() == [d] for s in right)
    simple = all(s.total() == 1 for s in right)
    left_simple = all(s.total() == 1 and s.degrees() == [d] for s in left)

    permutation = None
    if simple and concentrated:
        images = tuple(next(v for v, k in enumerate(s.as_dict()[d]) if k) for s in right)
        if sorted(images) == list(range(r)):
            permutation = images
    return FrobeniusVerdict(length, concentrated, simple, left_simple, permutation, right, left)
