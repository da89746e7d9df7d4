"""Shared test helpers: acceptance-criterion bookkeeping.

Each acceptance test wraps its body in `acceptance(...)`, which times the
run and records PASS/FAIL; a terminal-summary hook prints one line per
criterion at the end of the session.
"""

import time
from contextlib import contextmanager

ACCEPTANCE_RESULTS = []


@contextmanager
def acceptance(name: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_RESULTS.append((name, False, elapsed, budget_seconds))
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed <= budget_seconds
    ACCEPTANCE_RESULTS.append((name, ok, elapsed, budget_seconds))
    assert ok, f"{name}: exceeded runtime budget ({elapsed:.1f}s > {budget_seconds}s)"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, ok, elapsed, budget in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"{status}  {name}  ({elapsed:.2f}s, budget {budget:.0f}s)"
        )
