"""
Input documents and the base parser class.
"""

import hashlib
import json
import os
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from koszul_check.algebra import QuadraticPresentation
from koszul_check.exceptions import InputParseError, KoszulCheckError
from koszul_check.linalg import FieldSpec
from koszul_check.quiver import Quiver

ArrowSpec = Tuple[str, str, str]  # (name, source, target)
Term = Tuple[str, Tuple[str, ...]]  # (coefficient, path right to left)

OPTION_KEYS = ("maxDegree", "maxSyzygy", "oracleField", "oracleDegree", "budget")


@dataclass(frozen=True)
class InputDocument:
    """A quiver, its relations and run options as read from an input file.

    Coefficients stay strings so that "2/5" survives a round trip exactly.
    For ``preprojective`` the quiver is the underlying graph and there are
    no relations.
    """

    field: FieldSpec
    vertices: Tuple[str, ...]
    arrows: Tuple[ArrowSpec, ...]
    relations: Tuple[Tuple[Term, ...], ...] = ()
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], source: Optional[str] = None) -> "InputDocument":
        """Validate raw parsed data.

        Raises:
            InputParseError: with the offending field path as location
        """
        prefix = f"{source}:" if source else ""
        if not isinstance(data, Mapping):
            raise InputParseError("the document must be a table/object", location=source)

        field_spec = _parse_field(data.get("field", "q"), f"{prefix}field")

        quiver = data.get("quiver")
        if not isinstance(quiver, Mapping):
            raise InputParseError("missing quiver table", location=f"{prefix}quiver")
        vertices = quiver.get("vertices")
        if not isinstance(vertices, list) or not all(isinstance(v, (str, int)) for v in vertices):
            raise InputParseError("vertices must be a list of names", location=f"{prefix}quiver.vertices")
        vertices = tuple(str(v) for v in vertices)

        arrows: List[ArrowSpec] = []
        for k, arrow in enumerate(quiver.get("arrows", [])):
            location = f"{prefix}quiver.arrows[{k}]"
            if not isinstance(arrow, Mapping) or not {"name", "src", "tgt"} <= set(arrow):
                raise InputParseError("an arrow needs name, src and tgt", location=location)
            arrows.append((str(arrow["name"]), str(arrow["src"]), str(arrow["tgt"])))

        relations = []
        for k, relation in enumerate(data.get("relations", [])):
            if not isinstance(relation, list):
                raise InputParseError("a relation is a list of terms", location=f"{prefix}relations[{k}]")
            terms = []
            for t, term in enumerate(relation):
                location = f"{prefix}relations[{k}][{t}]"
                if not isinstance(term, Mapping) or "path" not in term:
                    raise InputParseError("a term needs a path", location=location)
                coeff = term.get("coeff", "1")
                if isinstance(coeff, bool) or not isinstance(coeff, (str, int)):
                    raise InputParseError(f"coefficients are integers or strings, got {coeff!r}", location=f"{location}.coeff")
                coeff = str(coeff).strip()
                try:
                    field_spec.element(coeff)
                except (ValueError, KoszulCheckError) as exc:
                    raise InputParseError(str(exc), location=f"{location}.coeff")
                path = term["path"]
                if not isinstance(path, list) or not all(isinstance(a, str) for a in path):
                    raise InputParseError("a path is a list of arrow names", location=f"{location}.path")
                terms.append((coeff, tuple(path)))
            relations.append(tuple(terms))

        options = data.get("options", {})
        if not isinstance(options, Mapping):
            raise InputParseError("options must be a table/object", location=f"{prefix}options")
        unknown = sorted(set(options) - set(OPTION_KEYS))
        if unknown:
            raise InputParseError(f"unknown options: {', '.join(unknown)}", location=f"{prefix}options")

        document = cls(field_spec, vertices, tuple(arrows), tuple(relations), dict(options))
        try:
            document.presentation()
        except KoszulCheckError as exc:
            raise InputParseError(str(exc), location=source)
        return document

    @classmethod
    def from_presentation(cls, pres: QuadraticPresentation, options: Optional[Mapping[str, Any]] = None) -> "InputDocument":
        q = pres.quiver
        arrows = tuple((a.name, q.vertices[a.source], q.vertices[a.target]) for a in q.arrows)
        relations = tuple(
            tuple((pres.field.format(coeff), tuple(path)) for path, coeff in relation.terms)
            for relation in pres.relations
        )
        return cls(pres.field, q.vertices, arrows, relations, dict(options or {}))

    def with_field(self, field_spec: FieldSpec) -> "InputDocument":
        """The same document read over another field (coefficients re-validated)."""
        if field_spec == self.field:
            return self
        data = self.to_dict()
        data["field"] = field_spec.label
        return InputDocument.from_dict(data, source=f"field {field_spec}")

    def to_dict(self) -> Dict[str, Any]:
        """Canonical serialization; ``from_dict(to_dict())`` gives back an equal document."""
        return {
            "field": self.field.label,
            "quiver": {
                "vertices": list(self.vertices),
                "arrows": [{"name": n, "src": s, "tgt": t} for n, s, t in self.arrows],
            },
            "relations": [
                [{"coeff": c, "path": list(p)} for c, p in relation] for relation in self.relations
            ],
            "options": dict(sorted(self.options.items())),
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        """SHA-256 of the canonical serialization."""
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def quiver(self) -> Quiver:
        return Quiver.from_names(self.vertices, self.arrows)

    def presentation(self) -> QuadraticPresentation:
        relations = [[(coeff, path) for coeff, path in relation] for relation in self.relations]
        return QuadraticPresentation.create(self.field, self.quiver(), relations)


def _parse_field(value: Any, location: str) -> FieldSpec:
    if isinstance(value, Mapping):
        kind = value.get("kind")
        if kind in ("q", "rational"):
            return FieldSpec.rational()
        if kind in ("p", "prime"):
            try:
                return FieldSpec.prime(int(value.get("p")))
            except (TypeError, ValueError) as exc:
                raise InputParseError(str(exc), location=location)
        raise InputParseError(f"unknown field kind {kind!r}", location=location)
    try:
        return FieldSpec.parse(str(value))
    except ValueError as exc:
        raise InputParseError(str(exc), location=location)


class BaseParser(ABC):
    """Base class for input parsers."""

    def __init__(self, input_path: str):
        """Initialize the parser.

        Args:
            input_path: Path to the input document
        """
        self.input_path = input_path

    @abstractmethod
    def load(self, text: str) -> Dict[str, Any]:
        """Decode the raw file contents.

        Raises:
            InputParseError: on a syntax error, with line information when available
        """

    def parse(self) -> InputDocument:
        """Read and validate the input file.

        Returns:
            The parsed InputDocument
        """
        if not os.path.exists(self.input_path):
            raise InputParseError("input file does not exist", location=self.input_path)
        with open(self.input_path, "r", encoding="utf-8") as f:
            text = f.read()
        return InputDocument.from_dict(self.load(text), source=self.input_path)
