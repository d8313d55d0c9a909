import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sympow import AmbientRing  # noqa: E402

_RESULTS = []


@pytest.fixture
def xyz():
    return AmbientRing(("x", "y", "z"))


@pytest.fixture
def triangle(xyz):
    return xyz.ideal([(1, 1, 0), (1, 0, 1), (0, 1, 1)])


@pytest.fixture
def criterion():
    """Record one acceptance criterion with its wall time and verdict."""

    @contextmanager
    def run(label, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert limit is None or elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            _RESULTS.append((label, ok, elapsed, limit))

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, limit in _RESULTS:
        bound = f" (limit {limit}s)" if limit else ""
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {label}: {elapsed:.2f}s{bound}")
