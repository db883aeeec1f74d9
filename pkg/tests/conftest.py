import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def brick_edges():
    return (240, 44, 117)


@pytest.fixture
def body_edges():
    return (104, 672, 153)


# -- acceptance summary: one PASS/FAIL line per criterion ---------------------
_criteria: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = _CRITERION_OF.get(report.nodeid)
    if n is not None:
        _criteria.setdefault(n, []).append(report.passed)


_CRITERION_OF: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERION_OF[item.nodeid] = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        res = _criteria[n]
        status = "PASS" if all(res) else "FAIL"
        tr.write_line(f"criterion {n:2d}: {status} ({sum(res)}/{len(res)} checks)")
