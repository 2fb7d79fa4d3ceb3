import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cayleytrees.enumeration import enumerate_trees  # noqa: E402
from cayleytrees.experiments import UNIQUE8_TREE, GAP6_TREE, NONUNIQUE_TREE  # noqa: E402


@pytest.fixture
def unique8():
    return UNIQUE8_TREE


@pytest.fixture
def nonunique9():
    return NONUNIQUE_TREE


@pytest.fixture
def gap6():
    return GAP6_TREE


def catalog(n):
    return list(enumerate_trees(n))


def small_trees(max_n):
    """Every tree (up to isomorphism) on 1..max_n vertices."""
    return [t for n in range(1, max_n + 1) for t in enumerate_trees(n)]


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_", 1)[1]
    number, _, rest = name.partition("_")
    label = rest.split("[")[0].replace("_", " ")
    ok = _criteria.get(number, (True, label))[0] and report.passed
    _criteria[number] = (ok, label)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=int):
        ok, label = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
