"""
Core functionality for Koszul Check: one method per command.
"""

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from koszul_check import __version__
from koszul_check.algebra import (
    PathAlgebraQuotient,
    build_algebra,
    hilbert,
    numerical_koszul_identity,
    quadratic_dual,
)
from koszul_check.analysis import classify, cy2_classify, ext_algebra, koszul_syzygy_condition
from koszul_check.exceptions import WindowExhaustedError
from koszul_check.modules import FAILS, HOLDS, UNDETERMINED, is_koszul, simple_module
from koszul_check.oracle import (
    NO_WITNESS,
    PARTIAL,
    WITNESS,
    OracleConfig,
    compare_syzygy_tables,
    engine_syzygy_table,
    koszul_oracle,
    primeness_oracle,
    zero_divisor_search,
)
from koszul_check.parsers import InputDocument
from koszul_check.quiver import preprojective_presentation
from koszul_check.utils.config import Settings
from koszul_check.utils.logger import debug, info
from koszul_check.utils.worker_pool import WorkerPool

SCHEMA_VERSION = 1

DEFINITIVE = "definitive"

ORACLE_CHECKS = ("zero-divisors", "primeness", "koszul", "all")

EXIT_CODES = {
    DEFINITIVE: 0,
    NO_WITNESS: 0,
    UNDETERMINED: 2,
    PARTIAL: 2,
    WITNESS: 3,
}


@dataclass
class ReportDocument:
    """What a command hands to the reporters."""

    command: str
    input_hash: str
    settings: Dict[str, Any]
    result: Dict[str, Any]
    status: str = DEFINITIVE
    execution_time: Optional[float] = field(default=None, compare=False)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        """Everything but the timing, so equal runs serialize identically."""
        return {
            "schemaVersion": SCHEMA_VERSION,
            "generator": f"koszul-check {__version__}",
            "command": self.command,
            "inputHash": self.input_hash,
            "settings": self.settings,
            "status": self.status,
            "result": self.result,
        }


class KoszulChecker:
    """Runs the commands on parsed input documents."""

    def __init__(self, settings: Optional[Settings] = None):
        """Initialize the checker.

        Args:
            settings: Bounds, budgets and fields, already merged from every source
        """
        self.settings = settings or Settings()

    def _document(self, doc: InputDocument) -> InputDocument:
        if self.settings.field is not None:
            return doc.with_field(self.settings.field)
        return doc

    def _oracle_config(self) -> OracleConfig:
        return OracleConfig(
            field=self.settings.oracle_field,
            max_total_degree=self.settings.oracle_degree,
            budget=self.settings.budget,
        )

    def _report(self, command: str, doc: InputDocument, result: Dict[str, Any], status: str, started: float) -> ReportDocument:
        settings = self.settings.to_dict()
        settings["field"] = doc.field.label
        elapsed = time.time() - started
        info(f"{command} finished in {elapsed:.2f} seconds ({status})")
        return ReportDocument(command, doc.digest(), settings, result, status, elapsed)

    def dual(self, doc: InputDocument) -> ReportDocument:
        """Compute the quadratic dual A^! as a new input document.

        Args:
            doc: The parsed input

        Returns:
            ReportDocument whose result holds the dual presentation and its relations
        """
        started = time.time()
        doc = self._document(doc)
        dual_pres = quadratic_dual(doc.presentation())
        dual_doc = InputDocument.from_presentation(dual_pres)
        result = {
            "presentation": dual_doc.to_dict(),
            "relations": dual_pres.relation_strings(),
        }
        return self._report("dual", doc, result, DEFINITIVE, started)

    def classify(self, doc: InputDocument) -> ReportDocument:
        """Decide piecewise domain, prime and domain through the quadratic dual.

        Args:
            doc: The parsed input

        Returns:
            ReportDocument, undetermined when any verdict is
        """
        started = time.time()
        doc = self._document(doc)
        s = self.settings
        with WorkerPool(s.max_workers) as pool:
            report = classify(doc.presentation(), s.max_degree, s.max_syzygy, s.budget, pool, self._oracle_config())
        status = UNDETERMINED if report.undetermined else DEFINITIVE
        return self._report("classify", doc, report.to_dict(), status, started)

    def cy2(self, doc: InputDocument) -> ReportDocument:
        """classify, plus the 2-Calabi-Yau screen and one report per connected component.

        Args:
            doc: The parsed input

        Returns:
            ReportDocument, undetermined when any verdict (semiprime included) is
        """
        started = time.time()
        doc = self._document(doc)
        s = self.settings
        with WorkerPool(s.max_workers) as pool:
            report = cy2_classify(
                doc.presentation(), s.max_degree, s.max_syzygy, s.budget, pool,
                s.exhaustive_permutation_limit, s.permutation_search_limit, self._oracle_config(),
            )
        status = UNDETERMINED if report.undetermined else DEFINITIVE
        return self._report("cy2", doc, report.to_dict(), status, started)

    def preprojective(self, doc: InputDocument) -> ReportDocument:
        """The preprojective algebra of the input quiver, read as a graph.

        Args:
            doc: The parsed input; its relations are ignored

        Returns:
            ReportDocument whose result is an input document for the preprojective algebra
        """
        started = time.time()
        doc = self._document(doc)
        pres = preprojective_presentation(doc.quiver(), doc.field)
        result = {
            "presentation": InputDocument.from_presentation(pres).to_dict(),
            "relations": pres.relation_strings(),
        }
        return self._report("preprojective", doc, result, DEFINITIVE, started)

    def hilbert(self, doc: InputDocument, dual: bool = False, structure: bool = False) -> ReportDocument:
        """Hilbert data of A, or of A^! with ``dual``.

        Args:
            doc: The parsed input
            dual: Report the quadratic dual instead of A
            structure: Include bases and structure constants

        Returns:
            ReportDocument with per-corner dimensions, and the numerical identity
            for one-vertex algebras
        """
        started = time.time()
        doc = self._document(doc)
        pres = doc.presentation()
        alg = build_algebra(quadratic_dual(pres) if dual else pres, self.settings.max_degree)
        result: Dict[str, Any] = {"algebra": "dual" if dual else "direct", "hilbert": hilbert(alg).to_dict()}
        if alg.num_vertices == 1:
            other = build_algebra(pres if dual else quadratic_dual(pres), self.settings.max_degree)
            holds, coefficients = numerical_koszul_identity(alg, other)
            result["numericalIdentity"] = {"holds": holds, "coefficients": coefficients}
        if structure:
            result["structure"] = alg.to_dict(include_products=True)
        return self._report("hilbert", doc, result, DEFINITIVE, started)

    def ext(self, doc: InputDocument) -> ReportDocument:
        """Corner grids of A next to those of Ext(S, S) over the dual.

        Args:
            doc: The parsed input

        Returns:
            ReportDocument with one row per degree up to min(max_syzygy, max_degree)
        """
        started = time.time()
        doc = self._document(doc)
        s = self.settings
        pres = doc.presentation()
        alg = build_algebra(pres, s.max_degree)
        dual = build_algebra(quadratic_dual(pres), s.max_degree)
        depth = min(s.max_syzygy, s.max_degree)
        orbital = ext_algebra(dual, depth)
        rows = []
        for n in range(depth + 1):
            direct = alg.corner_grid(n)
            reconstructed = orbital.corner_grid(n)
            rows.append({
                "degree": n,
                "direct": direct.tolist(),
                "ext": reconstructed.tolist(),
                "equal": bool((direct == reconstructed).all()),
            })
        result = {"depth": depth, "grids": rows, "match": all(r["equal"] for r in rows)}
        return self._report("ext", doc, result, DEFINITIVE, started)

    def koszul(self, doc: InputDocument) -> ReportDocument:
        """Koszulness of every simple module of A and of A^!.

        Args:
            doc: The parsed input

        Returns:
            ReportDocument with the per-simple verdicts and their combined status
        """
        started = time.time()
        doc = self._document(doc)
        s = self.settings
        pres = doc.presentation()
        alg = build_algebra(pres, s.max_degree)
        dual = build_algebra(quadratic_dual(pres), s.max_degree)
        names = alg.vertex_names
        direct = [is_koszul(simple_module(alg, j), s.max_syzygy) for j in range(alg.num_vertices)]
        via_dual = [is_koszul(simple_module(dual, j), s.max_syzygy) for j in range(dual.num_vertices)]
        verdicts = direct + via_dual
        if any(v.fails for v in verdicts):
            overall = FAILS
        elif all(v.holds for v in verdicts):
            overall = HOLDS
        else:
            overall = UNDETERMINED
        result: Dict[str, Any] = {
            "status": overall,
            "direct": {names[j]: v.to_dict() for j, v in enumerate(direct)},
            "viaDual": {names[j]: v.to_dict() for j, v in enumerate(via_dual)},
        }
        if alg.num_vertices == 1:
            holds, coefficients = numerical_koszul_identity(alg, dual)
            result["numericalIdentity"] = {"holds": holds, "coefficients": coefficients}
        status = UNDETERMINED if overall == UNDETERMINED else DEFINITIVE
        return self._report("koszul", doc, result, status, started)

    def syzygy_condition(self, doc: InputDocument, direct: bool = False) -> ReportDocument:
        """The syzygy condition on A^!, or on the input itself with ``direct``.

        Args:
            doc: The parsed input
            direct: Check A itself instead of its dual

        Returns:
            ReportDocument, undetermined when the condition could not be settled
        """
        started = time.time()
        doc = self._document(doc)
        s = self.settings
        pres = doc.presentation()
        target = build_algebra(pres if direct else quadratic_dual(pres), s.max_degree)
        with WorkerPool(s.max_workers) as pool:
            verdict = koszul_syzygy_condition(target, s.max_syzygy, s.budget, pool)
        result = {"algebra": "direct" if direct else "dual", "syzygyCondition": verdict.to_dict(target.vertex_names)}
        status = UNDETERMINED if verdict.status == UNDETERMINED else DEFINITIVE
        return self._report("syzygy-condition", doc, result, status, started)

    def oracle(self, doc: InputDocument, check: str = "all", direct: bool = False) -> ReportDocument:
        """Brute-force checks over the oracle field.

        The status is ``witness`` when a zero divisor was found, ``partial``
        when the budget cut the search short and ``no-witness`` otherwise.

        Args:
            doc: The parsed input; its field is replaced by the oracle field
            check: One of "zero-divisors", "primeness", "koszul" or "all"
            direct: Resolve the simples of A instead of those of A^!

        Returns:
            ReportDocument with one entry per oracle that ran

        Raises:
            ValueError: If ``check`` is unknown
        """
        if check not in ORACLE_CHECKS:
            raise ValueError(f"unknown oracle check {check!r}")
        started = time.time()
        cfg = self._oracle_config()
        doc = doc.with_field(cfg.field)
        s = self.settings
        pres = doc.presentation()
        alg = build_algebra(pres, s.max_degree)
        result: Dict[str, Any] = {"field": str(cfg.field)}
        status = NO_WITNESS

        if check in ("zero-divisors", "all"):
            search = zero_divisor_search(alg, cfg)
            result["zeroDivisors"] = search.to_dict(alg)
            status = search.outcome
        if check in ("primeness", "all"):
            result["primeness"] = primeness_oracle(alg, cfg).to_dict()
        if check in ("koszul", "all"):
            resolved = alg if direct else build_algebra(quadratic_dual(pres), s.max_degree)
            result["koszul"] = self._koszul_oracle(resolved)
        return self._report("oracle", doc, result, status, started)

    def _koszul_oracle(self, alg: PathAlgebraQuotient) -> List[Dict[str, Any]]:
        tables = []
        for j in range(alg.num_vertices):
            try:
                report = koszul_oracle(alg, j, self.settings.max_syzygy)
            except WindowExhaustedError as exc:
                tables.append({"simple": alg.vertex_names[j], "windowExhausted": str(exc), "reached": exc.reached})
                continue
            entry = report.to_dict()
            entry["simple"] = alg.vertex_names[j]
            # windows of truncated algebras differ between the two code paths
            entry["agreesWithEngine"] = (
                compare_syzygy_tables(report, engine_syzygy_table(alg, j, self.settings.max_syzygy))
                if alg.complete else None
            )
            debug(f"koszul oracle S_{alg.vertex_names[j]}: agrees={entry['agreesWithEngine']}")
            tables.append(entry)
        return tables
