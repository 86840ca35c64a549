"""Performance test fixtures and benchmark utilities."""
import logging
import time

import pytest

logger = logging.getLogger("fdea.benchmark")


@pytest.fixture
def benchmark_timer(request):
    """Wall-clock timer context manager; logs the elapsed time under the test's name."""
    class Timer:
        def __init__(self):
            self.elapsed = 0.0

        def __enter__(self):
            self._start = time.perf_counter()
            return self

        def __exit__(self, *args):
            self.elapsed = time.perf_counter() - self._start
            logger.info("%s took %.3f s", request.node.name, self.elapsed)
    return Timer
