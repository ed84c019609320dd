import time

import pytest

from koszul_check.utils.worker_pool import WorkerPool


def slow_square(n):
    time.sleep(0.01 * (5 - n))
    return n * n


def test_results_keep_submission_order():
    with WorkerPool(max_workers=4) as pool:
        assert pool.map(slow_square, range(5)) == [0, 1, 4, 9, 16]


def test_failure_propagates_after_all_tasks():
    seen = []

    def task(n):
        seen.append(n)
        if n == 1:
            raise ValueError("boom")
        return n

    with WorkerPool(max_workers=2) as pool:
        with pytest.raises(ValueError, match="boom"):
            pool.map(task, [0, 1, 2, 3])
    assert sorted(seen) == [0, 1, 2, 3]


def test_worker_count_is_at_least_one():
    with WorkerPool(max_workers=0) as pool:
        assert pool.max_workers == 1
        assert pool.map(str, []) == []
