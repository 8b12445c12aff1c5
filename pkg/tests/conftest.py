import pytest

from spancom import build_graph

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")


@pytest.fixture
def record_criterion():
    def record(key, ok, detail=""):
        ACCEPTANCE_RESULTS[key] = (ok, detail)

    return record


@pytest.fixture
def c4():
    return build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
