"""
Quivers, incidence matrices, connectivity and the preprojective construction.

Vertices are addressed by their 0-based position in input order; arrows keep
their input order too, and every basis built downstream inherits it.
"""

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from koszul_check.exceptions import QuiverError, SearchExceededError

DUAL_SUFFIX = "*"


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with named vertices and arrows."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    _arrow_index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)
    _vertex_index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.vertices:
            raise QuiverError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex names must be distinct")
        names = [a.name for a in self.arrows]
        duplicates = [name for name, count in Counter(names).items() if count > 1]
        if duplicates:
            raise QuiverError(f"duplicate arrow names: {', '.join(sorted(duplicates))}")
        r = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < r and 0 <= a.target < r):
                raise QuiverError(f"arrow {a.name} has an endpoint outside the vertex set")
        object.__setattr__(self, "_arrow_index", {a.name: k for k, a in enumerate(self.arrows)})
        object.__setattr__(self, "_vertex_index", {v: k for k, v in enumerate(self.vertices)})

    @classmethod
    def from_names(cls, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> "Quiver":
        """Build from vertex names and (arrow, source name, target name) triples."""
        index = {v: k for k, v in enumerate(vertices)}
        built = []
        for name, source, target in arrows:
            if source not in index or target not in index:
                raise QuiverError(f"arrow {name} refers to an unknown vertex")
            built.append(Arrow(name, index[source], index[target]))
        return cls(tuple(vertices), tuple(built))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self._arrow_index[name]]
        except KeyError:
            raise QuiverError(f"unknown arrow: {name}")

    def arrow_position(self, name: str) -> int:
        return self._arrow_index[name]

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index

    def vertex(self, name: str) -> int:
        try:
            return self._vertex_index[name]
        except KeyError:
            raise QuiverError(f"unknown vertex: {name}")

    def arrows_into(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrows_out_of(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def opposite(self) -> "Quiver":
        """Q^op: every arrow reversed and renamed with a trailing star."""
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name + DUAL_SUFFIX, a.target, a.source) for a in self.arrows),
        )

    def restrict(self, vertex_indices: Sequence[int]) -> "Quiver":
        """Full subquiver on the given vertices (kept in their original order)."""
        keep = sorted(vertex_indices)
        renumber = {old: new for new, old in enumerate(keep)}
        arrows = tuple(
            Arrow(a.name, renumber[a.source], renumber[a.target])
            for a in self.arrows
            if a.source in renumber and a.target in renumber
        )
        return Quiver(tuple(self.vertices[v] for v in keep), arrows)

    def to_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.num_vertices))
        for a in self.arrows:
            graph.add_edge(a.source, a.target, key=a.name)
        return graph


def disjoint_union(first: Quiver, second: Quiver, suffixes: Tuple[str, str] = ("'", "''")) -> Quiver:
    """Disjoint union with every name suffixed to keep names distinct."""
    offset = first.num_vertices
    vertices = tuple(v + suffixes[0] for v in first.vertices) + tuple(v + suffixes[1] for v in second.vertices)
    arrows = tuple(Arrow(a.name + suffixes[0], a.source, a.target) for a in first.arrows) + tuple(
        Arrow(a.name + suffixes[1], a.source + offset, a.target + offset) for a in second.arrows
    )
    return Quiver(vertices, arrows)


def incidence_matrix(q: Quiver) -> np.ndarray:
    """B with B[j][i] = number of arrows from i to j."""
    b = np.zeros((q.num_vertices, q.num_vertices), dtype=np.int64)
    for a in q.arrows:
        b[a.target, a.source] += 1
    return b


def is_connected(q: Quiver) -> bool:
    return nx.is_weakly_connected(q.to_graph())


def is_strongly_connected(q: Quiver) -> bool:
    return nx.is_strongly_connected(q.to_graph())


def connected_components(q: Quiver) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by their first vertex."""
    components = [tuple(sorted(c)) for c in nx.weakly_connected_components(q.to_graph())]
    return sorted(components)


@dataclass(frozen=True)
class DegreeProfile:
    indegree: Tuple[int, ...]
    outdegree: Tuple[int, ...]

    @property
    def min_indegree_ok(self) -> bool:
        return min(self.indegree) >= 2

    @property
    def min_outdegree_ok(self) -> bool:
        return min(self.outdegree) >= 2

    def per_vertex(self) -> List[Tuple[int, int]]:
        return list(zip(self.indegree, self.outdegree))


def degree_profile(q: Quiver) -> DegreeProfile:
    b = incidence_matrix(q)
    return DegreeProfile(
        indegree=tuple(int(x) for x in b.sum(axis=1)),
        outdegree=tuple(int(x) for x in b.sum(axis=0)),
    )


def double_quiver(g: Quiver) -> Quiver:
    """The double quiver: every arrow a: i -> j gains a reverse arrow a*: j -> i."""
    reverse = tuple(Arrow(a.name + DUAL_SUFFIX, a.target, a.source) for a in g.arrows)
    clashes = [a.name for a in reverse if g.has_arrow(a.name)]
    if clashes:
        raise QuiverError(f"reverse arrow names collide with existing arrows: {', '.join(clashes)}")
    return Quiver(g.vertices, g.arrows + reverse)


def preprojective_presentation(g: Quiver, field_spec):
    """Presentation of the preprojective algebra of ``g`` over ``field_spec``.

    One relation per vertex v:
        rho_v = sum_{src(a)=v} a* a  -  sum_{tgt(a)=v} a a*
    with paths composed right to left.
    """
    from koszul_check.algebra import QuadraticPresentation

    doubled = double_quiver(g)
    relations = []
    for v in range(g.num_vertices):
        terms: Dict[Tuple[str, str], int] = defaultdict(int)
        for a in g.arrows:
            star = a.name + DUAL_SUFFIX
            if a.source == v:
                terms[(star, a.name)] += 1
            if a.target == v:
                terms[(a.name, star)] -= 1
        terms = {path: c for path, c in terms.items() if c}
        if terms:
            relations.append(terms)
    return QuadraticPresentation.create(field_spec, doubled, relations)


def _permutation_matrix(sigma: Sequence[int]) -> np.ndarray:
    p = np.zeros((len(sigma), len(sigma)), dtype=np.int64)
    for i, j in enumerate(sigma):
        p[i, j] = 1
    return p


def check_cy2_incidence(
    b: np.ndarray,
    exhaustive_limit: int = 8,
    search_limit: int = 64,
) -> Optional[np.ndarray]:
    """A permutation matrix P with B = P @ B.T, or None if there is none.

    Row i of B must equal column sigma(i). Up to ``exhaustive_limit`` vertices
    every permutation is tried in lexicographic order; beyond that rows are
    matched against columns by equal multisets.
    """
    b = np.asarray(b, dtype=np.int64)
    r = b.shape[0]
    if r > search_limit:
        raise SearchExceededError(f"incidence screen limited to {search_limit} vertices, got {r}")

    sigma: Optional[Tuple[int, ...]] = None
    if r <= exhaustive_limit:
        for candidate in itertools.permutations(range(r)):
            if all(np.array_equal(b[i, :], b[:, candidate[i]]) for i in range(r)):
                sigma = candidate
                break
    else:
        unused: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
        for j in range(r):
            unused[tuple(b[:, j])].append(j)
        chosen = []
        for i in range(r):
            pool = unused.get(tuple(b[i, :]))
            if not pool:
                break
            chosen.append(pool.pop(0))
        else:
            sigma = tuple(chosen)

    if sigma is None:
        return None
    p = _permutation_matrix(sigma)
    if not np.array_equal(p @ b.T, b):
        return None
    return p
