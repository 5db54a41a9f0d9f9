import os
import re
import time

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "exact"))

_CRITERIA: dict[int, tuple[str, str]] = {}
_START = [0.0]
TIME_LIMIT = 600.0  # whole run, seconds (criterion 12)
_NAME = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_sessionstart(session):
    _START[0] = time.perf_counter()


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        n = int(m.group(1))
        prev = _CRITERIA.get(n, (None, "passed"))[1]
        status = "failed" if report.outcome == "failed" or prev == "failed" else report.outcome
        _CRITERIA[n] = (m.group(2).replace("_", " "), status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    elapsed = time.perf_counter() - _START[0]
    if 12 in _CRITERIA and elapsed >= TIME_LIMIT:
        _CRITERIA[12] = (_CRITERIA[12][0], "failed")
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status = _CRITERIA[n]
        mark = "PASS" if status == "passed" else "FAIL" if status == "failed" else status.upper()
        terminalreporter.write_line(f"criterion {n:2d}: {mark}  {title}")
    terminalreporter.write_line(f"run time {elapsed:.1f} s (limit {TIME_LIMIT:.0f} s)")
