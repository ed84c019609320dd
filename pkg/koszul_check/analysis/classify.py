"""
Classifiers: piecewise domain, prime and domain verdicts for kQ/(I_2).

The algebra A is a piecewise domain exactly when A is Koszul and its
quadratic dual satisfies the Koszul syzygy condition; a piecewise domain is
prime exactly when its quiver is strongly connected, and a domain when it
also has a single vertex. Every verdict is "yes", "no" (with a witness) or
"undetermined", and a "yes" is qualified by the bound it was checked to.
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from koszul_check.algebra import (
    HilbertData,
    PathAlgebraQuotient,
    QuadraticPresentation,
    build_algebra,
    hilbert,
    path_label,
    quadratic_dual,
)
from koszul_check.analysis.fastpath import FastPathReport, fast_path
from koszul_check.analysis.frobenius import FrobeniusVerdict, frobenius_check
from koszul_check.analysis.syzygy_condition import (
    SyzygyConditionVerdict,
    fast_path_verdict,
    koszul_syzygy_condition,
)
from koszul_check.exceptions import SearchExceededError
from koszul_check.linalg import FieldSpec
from koszul_check.modules import FAILS, HOLDS, UNDETERMINED, KoszulVerdict, is_koszul, simple_module
from koszul_check.oracle import OracleConfig, zero_divisor_search
from koszul_check.quiver import (
    DegreeProfile,
    check_cy2_incidence,
    connected_components,
    degree_profile,
    incidence_matrix,
    is_strongly_connected,
)
from koszul_check.utils.logger import debug, info, warning
from koszul_check.utils.worker_pool import WorkerPool

YES = "yes"
NO = "no"


@dataclass(frozen=True)
class Verdict:
    status: str
    bound: Optional[int] = None
    unconditional: bool = False
    reason: str = ""
    witness: Optional[Dict[str, Any]] = None

    @property
    def qualifier(self) -> str:
        if self.status != YES:
            return ""
        if self.unconditional:
            return "unconditional (fast path)"
        return f"checked through syzygy {self.bound}"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status,
            "unconditional": self.unconditional,
            "reason": self.reason,
        }
        if self.bound is not None:
            data["bound"] = self.bound
        if self.qualifier:
            data["qualifier"] = self.qualifier
        if self.witness is not None:
            data["witness"] = self.witness
        return data


@dataclass(frozen=True)
class CY2Screen:
    """Checkable consequences of the 2-Calabi-Yau hypotheses."""

    profile: DegreeProfile
    incidence: str
    permutation: Optional[Tuple[int, ...]]
    dual_length_three: bool
    dual_frobenius: bool
    component_count: int

    @property
    def outdegree_ok(self) -> bool:
        return self.profile.min_outdegree_ok

    @property
    def passes(self) -> bool:
        return self.outdegree_ok and self.incidence == "passes" and self.dual_length_three and self.dual_frobenius

    def to_dict(self, vertex_names: Sequence[str]) -> Dict[str, Any]:
        return {
            "indegree": dict(zip(vertex_names, self.profile.indegree)),
            "outdegree": dict(zip(vertex_names, self.profile.outdegree)),
            "outdegreeAtLeastTwo": self.outdegree_ok,
            "incidenceScreen": self.incidence,
            "incidencePermutation": (
                None if self.permutation is None
                else {vertex_names[i]: vertex_names[s] for i, s in enumerate(self.permutation)}
            ),
            "dualGradedLengthThree": self.dual_length_three,
            "dualFrobenius": self.dual_frobenius,
            "components": self.component_count,
            "passes": self.passes,
        }


@dataclass(frozen=True)
class ClassificationReport:
    field: FieldSpec
    vertex_names: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]
    relations: Tuple[str, ...]
    bound: int
    max_syzygy: int
    hilbert: HilbertData
    koszul_direct: Tuple[KoszulVerdict, ...]
    koszul_dual: Tuple[KoszulVerdict, ...]
    dual_relations: Tuple[str, ...]
    frobenius: FrobeniusVerdict
    fast_path: FastPathReport
    syzygy_condition: SyzygyConditionVerdict
    strongly_connected: bool
    piecewise_domain: Verdict
    prime: Verdict
    domain: Verdict
    oracle: Optional[Dict[str, Any]] = None
    components: Tuple["ClassificationReport", ...] = ()
    cy2: Optional[CY2Screen] = None
    semiprime: Optional[Verdict] = None
    notes: Tuple[str, ...] = ()

    @property
    def koszul_status(self) -> str:
        return _combine(self.koszul_direct + self.koszul_dual)

    @property
    def undetermined(self) -> bool:
        verdicts = [self.piecewise_domain, self.prime, self.domain]
        if self.semiprime is not None:
            verdicts.append(self.semiprime)
        return any(v.status == UNDETERMINED for v in verdicts)

    def to_dict(self) -> Dict[str, Any]:
        names = self.vertex_names
        data: Dict[str, Any] = {
            "input": {
                "field": str(self.field),
                "vertices": list(names),
                "arrows": [{"name": a, "source": s, "target": t} for a, s, t in self.arrows],
                "relations": list(self.relations),
                "maxDegree": self.bound,
                "maxSyzygy": self.max_syzygy,
            },
            "hilbert": self.hilbert.to_dict(),
            "koszul": {
                "status": self.koszul_status,
                "direct": {names[j]: v.to_dict() for j, v in enumerate(self.koszul_direct)},
                "viaDual": {names[j]: v.to_dict() for j, v in enumerate(self.koszul_dual)},
            },
            "dualPresentation": list(self.dual_relations),
            "frobenius": self.frobenius.to_dict(names),
            "fastPath": self.fast_path.to_dict(),
            "syzygyCondition": self.syzygy_condition.to_dict(names),
            "stronglyConnected": self.strongly_connected,
            "piecewiseDomain": self.piecewise_domain.to_dict(),
            "prime": self.prime.to_dict(),
            "domain": self.domain.to_dict(),
            "notes": list(self.notes),
        }
        if self.oracle is not None:
            data["oracleCrossCheck"] = self.oracle
        if self.cy2 is not None:
            data["cy2Screen"] = self.cy2.to_dict(names)
        if self.semiprime is not None:
            data["semiprime"] = self.semiprime.to_dict()
        if self.components:
            data["components"] = [c.to_dict() for c in self.components]
        return data


def _combine(verdicts: Sequence[KoszulVerdict]) -> str:
    if any(v.fails for v in verdicts):
        return FAILS
    if all(v.holds for v in verdicts):
        return HOLDS
    return UNDETERMINED


def arrow_zero_products(alg: PathAlgebraQuotient) -> List[Tuple[str, str]]:
    """Composable arrow pairs (a, b) with a*b = 0 in A, in arrow order."""
    pairs = []
    arrows = alg.quiver.arrows
    for i, a in enumerate(arrows):
        for j, b in enumerate(arrows):
            if a.source == b.target and not alg.basis_product(1, i, 1, j):
                pairs.append((a.name, b.name))
    return pairs


def annihilating_arrows(
    alg: PathAlgebraQuotient, zero_products: Sequence[Tuple[str, str]]
) -> Optional[Tuple[str, str]]:
    """Arrows (a, b) with a*A*b = 0: every path from a to b runs through a vanishing pair.

    Nodes of the search graph are arrows, with an edge c -> d when c*d is a
    nonzero product of composable arrows.
    """
    vanishing = set(zero_products)
    graph = nx.DiGraph()
    arrows = alg.quiver.arrows
    graph.add_nodes_from(a.name for a in arrows)
    graph.add_edges_from(
        (c.name, d.name) for c in arrows for d in arrows
        if c.source == d.target and (c.name, d.name) not in vanishing
    )
    for a in arrows:
        for b in arrows:
            if not any(nx.has_path(graph, s, b.name) for s in graph.successors(a.name)):
                return a.name, b.name
    return None


def missing_corner(alg: PathAlgebraQuotient) -> Optional[Tuple[str, str]]:
    """A vertex pair (i, j) with no path from i to j, so e_j A e_i = 0."""
    graph = alg.quiver.to_graph()
    for i in range(alg.num_vertices):
        for j in range(alg.num_vertices):
            if i != j and not nx.has_path(graph, i, j):
                return alg.vertex_names[i], alg.vertex_names[j]
    return None


def _piecewise_domain(
    zero_products: List[Tuple[str, str]],
    koszul_status: str,
    condition: SyzygyConditionVerdict,
    names: Sequence[str],
) -> Verdict:
    witness: Dict[str, Any] = {}
    if zero_products:
        a, b = zero_products[0]
        witness["zeroProduct"] = {"product": path_label((a, b)), "degrees": [1, 1]}
    if condition.witness is not None:
        witness["syzygyMap"] = condition.witness.to_dict(names)
    if zero_products:
        return Verdict(NO, unconditional=True, reason="a product of two arrows vanishes", witness=witness)
    if koszul_status == FAILS:
        return Verdict(UNDETERMINED, reason="A is not Koszul, so the syzygy criterion does not apply")
    if condition.fails:
        return Verdict(NO, reason="the dual fails the Koszul syzygy condition", witness=witness)
    if condition.holds and koszul_status == HOLDS:
        if condition.unconditional:
            return Verdict(YES, unconditional=True, reason="the dual satisfies the fast-path hypotheses")
        return Verdict(YES, bound=condition.bound, reason="the dual satisfies the Koszul syzygy condition")
    reason = "; ".join(condition.obstructions) or "Koszulness of A is not settled within the window"
    return Verdict(UNDETERMINED, reason=reason)


def _prime(
    pd: Verdict,
    strongly_connected: bool,
    missing: Optional[Tuple[str, str]],
    annihilating: Optional[Tuple[str, str]],
) -> Verdict:
    if not strongly_connected:
        witness = None if missing is None else {"emptyCorner": {"from": missing[0], "to": missing[1]}}
        return Verdict(NO, unconditional=True, reason="the quiver is not strongly connected", witness=witness)
    if pd.status == YES:
        return Verdict(YES, pd.bound, pd.unconditional, "strongly connected piecewise domain")
    if annihilating is not None:
        a, b = annihilating
        return Verdict(
            NO, unconditional=True,
            reason=f"every path from {a} to {b} passes through a vanishing product of two arrows",
            witness={"annihilatingArrows": {"left": a, "right": b}},
        )
    return Verdict(UNDETERMINED, reason="primeness follows only for piecewise domains")


def _domain(pd: Verdict, names: Sequence[str]) -> Verdict:
    if len(names) > 1:
        return Verdict(
            NO, unconditional=True, reason="distinct vertex idempotents multiply to zero",
            witness={"zeroProduct": {"product": f"e_{names[0]}·e_{names[1]}", "degrees": [0, 0]}},
        )
    return Verdict(pd.status, pd.bound, pd.unconditional, pd.reason, pd.witness)


def classify(
    pres: QuadraticPresentation,
    bound: int,
    max_i: int,
    budget: int = 10 ** 6,
    pool: Optional[WorkerPool] = None,
    oracle_config: Optional[OracleConfig] = None,
) -> ClassificationReport:
    """Classify A = kQ/(I_2) through its quadratic dual.

    Args:
        pres: The presentation of A
        bound: Truncation degree N for A and its dual
        max_i: Number of syzygy steps checked
        budget: Enumeration budget for Hom-spaces of dimension >= 2 over F_p
        pool: Optional worker pool for the per-simple checks
        oracle_config: When given (and over the algebra's field), the brute-force
            zero-divisor search runs as a cross-check

    Returns:
        ClassificationReport with bound-qualified verdicts
    """
    q = pres.quiver
    names = q.vertices
    alg = build_algebra(pres, bound)
    dual_pres = quadratic_dual(pres)
    dual = build_algebra(dual_pres, bound)
    info(f"classifying {len(q.arrows)} arrows on {len(names)} vertices through degree {bound}")

    koszul_direct = tuple(is_koszul(simple_module(alg, j), max_i) for j in range(q.num_vertices))
    koszul_dual = tuple(is_koszul(simple_module(dual, j), max_i) for j in range(q.num_vertices))
    koszul_status = _combine(koszul_direct + koszul_dual)
    notes = []
    if any(a.fails for a in koszul_direct) != any(b.fails for b in koszul_dual):
        notes.append("direct and dual Koszulness checks disagree")
        warning("direct and dual Koszulness checks disagree")

    frobenius = frobenius_check(dual)
    fp = fast_path(dual, max_i)
    condition = fast_path_verdict(dual, max_i, fp) or koszul_syzygy_condition(dual, max_i, budget, pool)
    strongly = is_strongly_connected(q)
    zero_products = arrow_zero_products(alg)
    debug(f"zero products among arrows: {zero_products}")

    pd = _piecewise_domain(zero_products, koszul_status, condition, names)
    prime = _prime(pd, strongly, missing_corner(alg), annihilating_arrows(alg, zero_products))
    domain = _domain(pd, names)

    oracle = None
    if oracle_config is not None and oracle_config.field == pres.field:
        search = zero_divisor_search(alg, oracle_config)
        conflict = search.witness is not None and pd.status == YES
        if zero_products and oracle_config.max_total_degree >= 2 and search.full_coverage and search.witness is None:
            conflict = True
        oracle = {"zeroDivisors": search.to_dict(alg), "agrees": not conflict}
        if conflict:
            notes.append("oracle disagrees with the piecewise-domain verdict")
            warning("oracle disagrees with the piecewise-domain verdict")

    return ClassificationReport(
        field=pres.field,
        vertex_names=names,
        arrows=tuple((a.name, names[a.source], names[a.target]) for a in q.arrows),
        relations=tuple(pres.relation_strings()),
        bound=bound,
        max_syzygy=max_i,
        hilbert=hilbert(alg),
        koszul_direct=koszul_direct,
        koszul_dual=koszul_dual,
        dual_relations=tuple(dual_pres.relation_strings()),
        frobenius=frobenius,
        fast_path=fp,
        syzygy_condition=condition,
        strongly_connected=strongly,
        piecewise_domain=pd,
        prime=prime,
        domain=domain,
        oracle=oracle,
        notes=tuple(notes),
    )


def _semiprime(components: Sequence[ClassificationReport]) -> Verdict:
    if all(c.prime.status == YES for c in components):
        unconditional = all(c.prime.unconditional for c in components)
        bounds = [c.prime.bound for c in components if c.prime.bound is not None]
        return Verdict(
            YES, max(bounds) if bounds and not unconditional else None, unconditional,
            f"product of {len(components)} prime piecewise domain(s)",
        )
    if any(c.piecewise_domain.status == NO for c in components):
        return Verdict(NO, reason="a component is not a piecewise domain")
    return Verdict(UNDETERMINED, reason="some component is not known to be a prime piecewise domain")


def cy2_classify(
    pres: QuadraticPresentation,
    bound: int,
    max_i: int,
    budget: int = 10 ** 6,
    pool: Optional[WorkerPool] = None,
    exhaustive_limit: int = 8,
    search_limit: int = 64,
    oracle_config: Optional[OracleConfig] = None,
) -> ClassificationReport:
    """classify, plus the component split and the screens of the 2-Calabi-Yau structure theorem."""
    q = pres.quiver
    components = connected_components(q)
    profile = degree_profile(q)
    try:
        permutation = check_cy2_incidence(incidence_matrix(q), exhaustive_limit, search_limit)
        incidence = "passes" if permutation is not None else "fails"
        sigma = None if permutation is None else tuple(int(row.argmax()) for row in permutation)
    except SearchExceededError as exc:
        incidence, sigma = "skipped", None
        warning(f"incidence screen skipped: {exc}")

    whole = classify(pres, bound, max_i, budget, pool, oracle_config)
    if len(components) > 1:
        def classify_component(vertices: Tuple[int, ...]) -> ClassificationReport:
            return classify(pres.restrict(vertices), bound, max_i, budget, None, oracle_config)

        if pool is not None:
            parts = tuple(pool.map(classify_component, components))
        else:
            parts = tuple(classify_component(c) for c in components)
    else:
        parts = (whole,)

    screen = CY2Screen(
        profile=profile,
        incidence=incidence,
        permutation=sigma,
        dual_length_three=whole.frobenius.graded_length == 3,
        dual_frobenius=whole.frobenius.passes,
        component_count=len(components),
    )
    notes = list(whole.notes)
    if not screen.outdegree_ok:
        notes.append("a vertex has outdegree below 2; verdicts come from the general criterion only")
    elif screen.passes and whole.piecewise_domain.status == YES:
        notes.append("consistent with the structure theorem: semiprime piecewise domain, prime iff connected")
    info(f"cy2 screen: incidence {incidence}, {len(components)} component(s)")

    return replace(
        whole,
        components=parts if len(components) > 1 else (),
        cy2=screen,
        semiprime=_semiprime(parts),
        notes=tuple(notes),
    )
