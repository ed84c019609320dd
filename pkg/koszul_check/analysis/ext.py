"""
Reconstruction of Ext(S, S) as the orbital ring of F.

Degree i is Hom(F^i S, S) with S the sum of the simples, and the product is
f * g = f o F^i(g) for f of degree i. The corner e_ell O e_j of degree i is
Hom(F^i S_j, S_ell), so the corner grids are directly comparable with the
Hilbert data of the algebra whose dual was resolved.
"""

from typing import Dict, List, Tuple

from koszul_check.algebra import BasisElement, PathAlgebraQuotient, TruncatedGradedAlgebra
from koszul_check.exceptions import KoszulCheckError, WindowExhaustedError
from koszul_check.linalg import Matrix, SparseVector, solve
from koszul_check.modules import GradedModuleMap, GradedRightModule, functor_F, functor_F_on_map, maps_to_simple, simple_module
from koszul_check.utils.logger import debug


class OrbitalAlgebra(TruncatedGradedAlgebra):
    """O(F, S) in degrees 0..bound, with basis maps chosen by ``maps_to_simple``."""

    def __init__(
        self,
        dual: PathAlgebraQuotient,
        bound: int,
        towers: List[List[GradedRightModule]],
        maps: List[List[GradedModuleMap]],
        basis: List[List[BasisElement]],
    ):
        super().__init__(dual.field, dual.vertex_names, bound, basis)
        self.dual = dual
        self.towers = towers
        self.maps = maps
        self._lifted: Dict[Tuple[int, int, int], GradedModuleMap] = {}

    def lifted(self, n: int, j: int, times: int) -> GradedModuleMap:
        """F^times applied to basis map j of degree n."""
        key = (n, j, times)
        cached = self._lifted.get(key)
        if cached is None:
            cached = self.maps[n][j] if times == 0 else functor_F_on_map(self.lifted(n, j, times - 1))
            self._lifted[key] = cached
        return cached

    def _compute_basis_product(self, m: int, i: int, n: int, j: int) -> SparseVector:
        f = self.maps[m][i]
        g = self.lifted(n, j, m)
        x, y = self.basis[m][i], self.basis[n][j]
        # g: F^{m+n} S_src(y) -> F^m S_tgt(y); f: F^m S_tgt(y) -> S_tgt(x)
        source = self.towers[y.source][m + n]
        composite = f.component(0, x.target) @ g.component(0, x.target)
        positions = self.corner_positions(m + n, y.source, x.target)
        if not positions:
            return {}
        columns = [self.maps[m + n][k].component(0, x.target).row(0) for k in positions]
        coefficients = solve(
            Matrix.from_columns(self.field, columns, source.dim(0, x.target)),
            composite.transpose(),
        )
        if coefficients is None:
            raise KoszulCheckError(f"product of degree {m} and {n} maps is not a map to a simple")
        return {k: coefficients[row, 0] for row, k in enumerate(positions) if coefficients[row, 0]}


def ext_algebra(dual: PathAlgebraQuotient, max_deg: int) -> OrbitalAlgebra:
    """Build O(F, S) = sum_i Hom(F^i S, S) for i = 0..max_deg.

    Raises:
        WindowExhaustedError: Lambda's window does not support max_deg syzygy steps
    """
    r = dual.num_vertices
    towers: List[List[GradedRightModule]] = []
    for j in range(r):
        tower = [simple_module(dual, j)]
        for i in range(1, max_deg + 1):
            tower.append(functor_F(tower[-1]))
        if not tower[-1].knows(0):
            raise WindowExhaustedError(f"F^{max_deg}(S_{dual.vertex_names[j]}) is unknown in degree 0", reached=tower[-1].hi)
        towers.append(tower)

    simples = [tower[0] for tower in towers]
    maps: List[List[GradedModuleMap]] = []
    basis: List[List[BasisElement]] = []
    for i in range(max_deg + 1):
        layer_maps = []
        layer = []
        for j in range(r):
            for ell in range(r):
                for k, f in enumerate(maps_to_simple(towers[j][i], ell, simples[ell])):
                    label = f"e_{dual.vertex_names[j]}" if i == 0 else f"E{i}[{dual.vertex_names[j]}>{dual.vertex_names[ell]}]{k}"
                    layer_maps.append(f)
                    layer.append(BasisElement(i, j, ell, label))
        maps.append(layer_maps)
        basis.append(layer)
        debug(f"ext degree {i}: dimension {len(layer)}")
    return OrbitalAlgebra(dual, max_deg, towers, maps, basis)
