"""
Parsers for input documents.
"""

import os
from typing import Optional

from koszul_check.exceptions import InputParseError
from koszul_check.parsers.base import BaseParser, InputDocument
from koszul_check.parsers.json_input import JsonParser
from koszul_check.parsers.toml_input import TomlParser

PARSERS = {
    ".json": JsonParser,
    ".toml": TomlParser,
}


def get_parser_for_file(input_path: str) -> Optional[BaseParser]:
    """Get the parser matching a file's extension.

    Args:
        input_path: Path to the input document

    Returns:
        Parser instance or None if the extension is not recognized
    """
    _, extension = os.path.splitext(input_path)
    parser_class = PARSERS.get(extension.lower())
    return parser_class(input_path) if parser_class else None


def parse_input(input_path: str) -> InputDocument:
    parser = get_parser_for_file(input_path)
    if parser is None:
        raise InputParseError("unsupported input format (expected .json or .toml)", location=input_path)
    return parser.parse()


__all__ = ["BaseParser", "InputDocument", "JsonParser", "TomlParser", "get_parser_for_file", "parse_input"]
