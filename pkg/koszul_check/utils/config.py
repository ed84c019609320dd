"""
Settings for Koszul Check, with optional overrides from a TOML file.
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

import toml

from koszul_check.exceptions import InputParseError
from koszul_check.linalg import FieldSpec

CONFIG_TABLE = "koszul-check"


@dataclass(frozen=True)
class Settings:
    """Bounds and budgets for one run."""

    max_degree: int = 8
    max_syzygy: int = 6
    field: Optional[FieldSpec] = None
    oracle_field: FieldSpec = FieldSpec.prime(2)
    oracle_degree: int = 4
    budget: int = 10 ** 6
    exhaustive_permutation_limit: int = 8
    permutation_search_limit: int = 64
    max_workers: Optional[int] = None

    def merged(self, overrides: Dict[str, Any]) -> "Settings":
        """A copy with every non-None override applied (keys in snake or camel case)."""
        known = {f.name for f in fields(self)}
        changes = {}
        for key, value in overrides.items():
            name = _snake(key)
            if value is None:
                continue
            if name not in known:
                raise InputParseError(f"unknown setting {key!r}")
            changes[name] = _coerce(name, value)
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "maxDegree": self.max_degree,
            "maxSyzygy": self.max_syzygy,
            "field": None if self.field is None else self.field.label,
            "oracleField": self.oracle_field.label,
            "oracleDegree": self.oracle_degree,
            "budget": self.budget,
        }


def _snake(key: str) -> str:
    out = []
    for ch in key.replace("-", "_"):
        if ch.isupper():
            out.append("_")
            out.append(ch.lower())
        else:
            out.append(ch)
    return "".join(out)


def _coerce(name: str, value: Any) -> Any:
    if name in ("field", "oracle_field"):
        if isinstance(value, FieldSpec):
            return value
        try:
            return FieldSpec.parse(str(value))
        except ValueError as exc:
            raise InputParseError(str(exc), location=name)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputParseError(f"expected an integer, got {value!r}", location=name)
    if value < 0:
        raise InputParseError(f"must be nonnegative, got {value}", location=name)
    return value


def load_settings(config_path: Optional[str] = None, base: Optional[Settings] = None) -> Settings:
    """Load settings from a TOML file.

    Reads a ``[koszul-check]`` table, or ``[tool.koszul-check]`` when the
    file is a pyproject.toml. A missing path yields the defaults.

    Args:
        config_path: Path to the TOML file (optional)
        base: Settings to start from (defaults when omitted)

    Returns:
        Settings with the file's values applied
    """
    settings = base or Settings()
    if not config_path:
        return settings
    if not os.path.exists(config_path):
        raise InputParseError("config file does not exist", location=config_path)
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = toml.load(f)
    except toml.TomlDecodeError as exc:
        raise InputParseError(str(exc), location=config_path)
    table = data.get(CONFIG_TABLE)
    if table is None:
        table = data.get("tool", {}).get(CONFIG_TABLE, {})
    return settings.merged(table)
