"""
Base reporter class for rendering reports.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from koszul_check.core import ReportDocument


class BaseReporter(ABC):
    """Base class for report renderers."""

    @abstractmethod
    def generate_report(self, report: "ReportDocument") -> str:
        """Render a report.

        Args:
            report: The command's report document

        Returns:
            Report as string
        """
