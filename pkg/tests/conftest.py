import os
import re
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = None
    for mark in getattr(report, "keywords", {}):
        if mark.startswith("criterion_"):
            crit = mark
    if crit is None and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if name.startswith("test_criterion_"):
            crit = name[len("test_"):]
    if crit is None:
        return
    _acceptance.setdefault(crit, []).append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    by_number = {}
    for crit, results in _acceptance.items():
        num = int(re.match(r"criterion_(\d+)", crit).group(1))
        by_number.setdefault(num, []).extend(results)
    for num in sorted(by_number):
        results = by_number[num]
        ok = all(p for _, p in results)
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
        if len(results) > 1:
            for name, p in results:
                tr.write_line(f"    {'pass' if p else 'FAIL'}  {name}")
