import pytest

from fbct.field import get_field

_CRITERIA_KEY = pytest.StashKey[list]()


@pytest.fixture
def field():
    return get_field


def pytest_configure(config):
    config.stash[_CRITERIA_KEY] = []


class CriterionLog:
    def __init__(self, sink):
        self._sink = sink

    def check(self, number, label, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        self._sink.append(line)
        print(line)
        assert ok, line


@pytest.fixture
def criterion(request):
    return CriterionLog(request.config.stash[_CRITERIA_KEY])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_CRITERIA_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
