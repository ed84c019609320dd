"""
Report renderers, keyed by the value of ``--format``.
"""

from typing import Dict, Type

from koszul_check.reporters.base import BaseReporter
from koszul_check.reporters.json_reporter import JsonReporter
from koszul_check.reporters.text import TextReporter

REPORTERS: Dict[str, Type[BaseReporter]] = {
    "text": TextReporter,
    "json": JsonReporter,
}


def get_reporter(format_name: str) -> BaseReporter:
    """Reporter for ``format_name``; unknown names fall back to text."""
    return REPORTERS.get(format_name.lower(), TextReporter)()
