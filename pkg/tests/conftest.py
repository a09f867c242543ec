from pathlib import Path

import pytest

from zeroforcing.graph6 import iter_lines, parse_line

DATA = Path(__file__).parent / "data"


def load_corpus(name):
    with open(DATA / name) as fh:
        return [parse_line(line) for line in iter_lines(fh)]


@pytest.fixture(scope="session")
def corpus():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_corpus(name)
        return cache[name]

    return get


# -- acceptance report ------------------------------------------------------

_CRITERIA = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        _CRITERIA[crit] = report.passed and _CRITERIA.get(crit, True)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if _CRITERIA[crit] else 'FAIL'}")
