"""
Parser for TOML input documents.

Relations are arrays of inline tables:

    relations = [
        [{coeff = "1", path = ["x", "y"]}, {coeff = "-1", path = ["y", "x"]}],
    ]
"""

from typing import Any, Dict

import toml

from koszul_check.exceptions import InputParseError
from koszul_check.parsers.base import BaseParser


class TomlParser(BaseParser):
    """Parser for .toml input files."""

    def load(self, text: str) -> Dict[str, Any]:
        try:
            return toml.loads(text)
        except toml.TomlDecodeError as exc:
            raise InputParseError(exc.msg, location=f"{self.input_path}:{exc.lineno}:{exc.colno}")
