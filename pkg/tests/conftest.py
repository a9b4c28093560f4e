from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import strategies as st

from kecore import fixtures
from kecore.generator import gen_ke, random_spec
from kecore.graph import Graph

CORPUS_SEEDS = range(1, 1001)


@lru_cache(maxsize=None)
def corpus() -> tuple:
    """(spec, graph) for the seeded mixed-flavour corpus, n <= 14."""
    out = []
    for seed in CORPUS_SEEDS:
        spec = random_spec(seed, max_n=14)
        out.append((spec, gen_ke(spec)))
    return tuple(out)


def fx(name: str) -> Graph:
    return fixtures.load(name)


def ids(name: str, *labels: str) -> set[int]:
    table = fixtures.labels(name)
    return {table[label] for label in labels}


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus()


# one PASS/FAIL line per acceptance criterion, printed after the run
_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        if number in _criteria and _criteria[number][0] == "FAIL":
            status = "FAIL"
        _criteria[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
