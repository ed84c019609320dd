"""
Text reporter: verdict tables and dimension grids for a terminal.
"""

from typing import Any, Dict, List

from koszul_check.reporters.base import BaseReporter


class TextReporter(BaseReporter):
    """Reporter for plain text output."""

    VERDICT_MARKS = {
        "yes": "[+]",
        "holds": "[+]",
        "no-witness": "[+]",
        "no": "[x]",
        "fails": "[x]",
        "witness": "[x]",
        "undetermined": "[?]",
        "partial": "[?]",
    }

    def generate_report(self, report) -> str:
        lines = [
            "Koszul Check Report",
            "===================",
            f"Command: {report.command}",
            f"Field: {report.settings.get('field')}",
            f"Input SHA-256: {report.input_hash}",
            f"Bounds: max degree {report.settings.get('maxDegree')}, max syzygy {report.settings.get('maxSyzygy')}",
        ]
        if report.execution_time is not None:
            lines.append(f"Execution Time: {report.execution_time:.2f} seconds")
        lines.append("")

        render = getattr(self, "_render_" + report.command.replace("-", "_"), None)
        lines.extend(render(report.result) if render else self._render_generic(report.result))
        return "\n".join(lines)

    def _mark(self, status: str) -> str:
        return f"{self.VERDICT_MARKS.get(status, '[ ]')} {status.upper()}"

    def _verdict_line(self, label: str, verdict: Dict[str, Any]) -> List[str]:
        line = f"{label:<20} {self._mark(verdict['status'])}"
        if verdict.get("qualifier"):
            line += f"  ({verdict['qualifier']})"
        lines = [line]
        if verdict.get("reason"):
            lines.append(f"    {verdict['reason']}")
        witness = verdict.get("witness") or {}
        if "zeroProduct" in witness:
            lines.append(f"    witness: {witness['zeroProduct']['product']} = 0")
        if "emptyCorner" in witness:
            corner = witness["emptyCorner"]
            lines.append(f"    witness: no path from {corner['from']} to {corner['to']}")
        if "annihilatingArrows" in witness:
            pair = witness["annihilatingArrows"]
            lines.append(f"    witness: {pair['left']}·A·{pair['right']} = 0")
        if "syzygyMap" in witness:
            lines.extend("    " + s for s in self._map_lines(witness["syzygyMap"]))
        return lines

    def _map_lines(self, check: Dict[str, Any]) -> List[str]:
        lines = [
            f"map F^{check['step']}(S_{check['simple']}) -> S_{check['target']} "
            f"with functional ({', '.join(check['functional'])})",
            f"  kernel dims: {self._dims(check['kernelDims'])}; kernel Koszul: {check['kernelVerdict']['status']}",
        ]
        if check.get("firstNonSurjective") is not None:
            lines.append(f"  F^{check['firstNonSurjective']} of the map is not surjective")
        return lines

    @staticmethod
    def _dims(dims: Dict[str, List[int]]) -> str:
        return ", ".join(f"deg {n}: {v}" for n, v in dims.items()) or "0"

    @staticmethod
    def _grid(grid: List[List[int]]) -> List[str]:
        return ["  " + " ".join(f"{x:>3}" for x in row) for row in grid]

    def _render_classify(self, result: Dict[str, Any]) -> List[str]:
        lines = ["Verdicts:", "---------"]
        lines.extend(self._verdict_line("piecewise domain", result["piecewiseDomain"]))
        lines.extend(self._verdict_line("prime", result["prime"]))
        lines.extend(self._verdict_line("domain", result["domain"]))
        if "semiprime" in result:
            lines.extend(self._verdict_line("semiprime", result["semiprime"]))
        lines.append("")

        condition = result["syzygyCondition"]
        lines.append(f"Koszul (A and A!): {self._mark(result['koszul']['status'])}")
        lines.append(f"Syzygy condition on A!: {self._mark(condition['status'])} via {condition['method']}")
        for obstruction in condition["obstructions"]:
            lines.append(f"    {obstruction}")
        fast = result["fastPath"]
        lines.append("Fast path: " + ("applies" if fast["applies"] else "; ".join(fast["failedHypotheses"])))
        frobenius = result["frobenius"]
        lines.append(
            f"A! graded length: {frobenius['gradedLength']}; "
            f"Frobenius: {'yes' if frobenius['frobenius'] else 'no'}"
        )
        lines.append(f"Strongly connected: {'yes' if result['stronglyConnected'] else 'no'}")
        lines.append("")

        lines.append("Hilbert series of A (per vertex):")
        for name, series in result["hilbert"]["vertexSeries"].items():
            lines.append(f"  e_{name}A: {series}")
        lines.append("Relations of A!:")
        lines.extend(f"  {r}" for r in result["dualPresentation"])

        if "cy2Screen" in result:
            screen = result["cy2Screen"]
            lines.append("")
            lines.append(f"CY-2 screen: {'passes' if screen['passes'] else 'does not pass'}")
            lines.append(f"  incidence condition: {screen['incidenceScreen']}")
            lines.append(f"  components: {screen['components']}")
        for k, component in enumerate(result.get("components", [])):
            vertices = ", ".join(component["input"]["vertices"])
            lines.append(f"  component {k + 1} ({vertices}): prime {component['prime']['status']}")
        if "oracleCrossCheck" in result:
            oracle = result["oracleCrossCheck"]
            lines.append("")
            lines.append(f"Oracle over {oracle['zeroDivisors']['field']}: {oracle['zeroDivisors']['outcome']}"
                         f" ({'agrees' if oracle['agrees'] else 'DISAGREES'})")
        if result["notes"]:
            lines.append("")
            lines.append("Notes:")
            lines.extend(f"  - {note}" for note in result["notes"])
        return lines

    _render_cy2 = _render_classify

    def _render_dual(self, result: Dict[str, Any]) -> List[str]:
        quiver = result["presentation"]["quiver"]
        lines = ["Arrows:"]
        lines.extend(f"  {a['name']}: {a['src']} -> {a['tgt']}" for a in quiver["arrows"])
        lines.append("Relations:")
        lines.extend(f"  {r}" for r in result["relations"])
        if not result["relations"]:
            lines.append("  (none)")
        return lines

    _render_preprojective = _render_dual

    def _render_hilbert(self, result: Dict[str, Any]) -> List[str]:
        data = result["hilbert"]
        lines = [f"Algebra: {result['algebra']}", f"Graded length: {data['gradedLength']}", "Series per vertex:"]
        for name, series in data["vertexSeries"].items():
            lines.append(f"  {name}: {series}")
        lines.append(f"Total: {data['totalSeries']}")
        for n, grid in enumerate(data["grids"]):
            lines.append(f"Degree {n}:")
            lines.extend(self._grid(grid))
        if "numericalIdentity" in result:
            identity = result["numericalIdentity"]
            lines.append(f"h_A(t) h_A!(-t) = 1: {'yes' if identity['holds'] else 'no'} {identity['coefficients']}")
        return lines

    def _render_ext(self, result: Dict[str, Any]) -> List[str]:
        lines = [f"Corner grids of A and of Ext(S, S) over A! through degree {result['depth']}:"]
        for row in result["grids"]:
            lines.append(f"Degree {row['degree']}: {'equal' if row['equal'] else 'DIFFERENT'}")
            for left, right in zip(self._grid(row["direct"]), self._grid(row["ext"])):
                lines.append(f"{left}   |{right}")
        lines.append(f"Match: {'yes' if result['match'] else 'no'}")
        return lines

    def _render_koszul(self, result: Dict[str, Any]) -> List[str]:
        lines = [f"Koszul: {self._mark(result['status'])}"]
        for label, key in (("A", "direct"), ("A!", "viaDual")):
            for name, verdict in result[key].items():
                line = f"  S_{name} over {label}: {verdict['status']} (checked to {verdict['checkedUpTo']})"
                if verdict["unconditional"]:
                    line += ", periodic"
                lines.append(line)
        if "numericalIdentity" in result:
            lines.append(f"h_A(t) h_A!(-t) = 1: {'yes' if result['numericalIdentity']['holds'] else 'no'}")
        return lines

    def _render_syzygy_condition(self, result: Dict[str, Any]) -> List[str]:
        condition = result["syzygyCondition"]
        lines = [
            f"Syzygy condition on {'the input' if result['algebra'] == 'direct' else 'A!'}: "
            f"{self._mark(condition['status'])}",
            f"Method: {condition['method']}; maps checked: {condition['mapsChecked']}",
            f"Detector agreements: {condition['detectorAgreements']}, "
            f"disagreements: {len(condition['detectorDisagreements'])}",
        ]
        if condition["witness"] is not None:
            lines.extend(self._map_lines(condition["witness"]))
        lines.extend(f"  {o}" for o in condition["obstructions"])
        return lines

    def _render_oracle(self, result: Dict[str, Any]) -> List[str]:
        lines = [f"Oracle field: {result['field']}"]
        if "zeroDivisors" in result:
            search = result["zeroDivisors"]
            lines.append(f"Zero divisors: {search['outcome']} ({search['pairsChecked']} pairs,"
                         f" total degree <= {search['maxTotalDegree']})")
            witness = search["witness"]
            if witness is not None:
                lines.append(f"  x = {witness['x']}, y = {witness['y']}, degrees {witness['degrees']}")
        if "primeness" in result:
            primeness = result["primeness"]
            lines.append(f"Prime by corners: {'yes' if primeness['primeByCorners'] else 'no'}")
            for pair, n in primeness["firstHits"].items():
                lines.append(f"  {pair}: {'none within window' if n is None else f'degree {n}'}")
        for entry in result.get("koszul", []):
            if "windowExhausted" in entry:
                lines.append(f"S_{entry['simple']}: {entry['windowExhausted']}")
                continue
            degrees = "; ".join(f"{s['step']}:{s['generationDegrees']}" for s in entry["steps"])
            lines.append(f"S_{entry['simple']}: generated in step degree {'yes' if entry['koszulWithin'] else 'no'} [{degrees}]")
        return lines

    def _render_generic(self, result: Dict[str, Any]) -> List[str]:
        return [f"{key}: {value}" for key, value in sorted(result.items())]
