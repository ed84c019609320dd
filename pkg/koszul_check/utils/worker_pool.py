"""
Worker pool for independent checks (per simple module, per component).
"""

import concurrent.futures
import os
from typing import Any, Callable, List, Optional, Sequence, TypeVar

from koszul_check.utils.logger import debug

T = TypeVar('T')


class WorkerPool:
    """Thread pool whose results come back in submission order."""

    def __init__(self, max_workers: Optional[int] = None):
        """Initialize the worker pool.

        Args:
            max_workers: Maximum number of worker threads. Defaults to CPU count * 2.
        """
        if max_workers is None:
            max_workers = os.cpu_count() * 2 if os.cpu_count() else 4

        self.max_workers = max(1, max_workers)
        self._executor = concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers)

    def map(self, func: Callable[[Any], T], items: Sequence[Any]) -> List[T]:
        """Run ``func`` on every item and return the results in item order.

        The first exception raised by a task propagates once every task
        has finished.
        """
        futures = {self._executor.submit(func, item): index for index, item in enumerate(items)}
        results: List[Any] = [None] * len(items)
        failure: Optional[BaseException] = None
        for future in concurrent.futures.as_completed(futures):
            index = futures[future]
            try:
                results[index] = future.result()
                debug(f"task {index + 1}/{len(items)} finished")
            except Exception as exc:
                failure = failure or exc
        if failure is not None:
            raise failure
        return results

    def shutdown(self):
        """Shutdown the executor."""
        self._executor.shutdown(wait=True)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()
