"""
Parser for JSON input documents.
"""

import json
from typing import Any, Dict

from koszul_check.exceptions import InputParseError
from koszul_check.parsers.base import BaseParser


class JsonParser(BaseParser):
    """Parser for .json input files."""

    def load(self, text: str) -> Dict[str, Any]:
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputParseError(exc.msg, location=f"{self.input_path}:{exc.lineno}:{exc.colno}")
