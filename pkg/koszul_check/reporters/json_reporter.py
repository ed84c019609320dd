"""
JSON reporter: machine-readable, stable key order, no timestamps.
"""

import json

from koszul_check.reporters.base import BaseReporter


class JsonReporter(BaseReporter):
    """Reporter for JSON output."""

    def generate_report(self, report) -> str:
        return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)
