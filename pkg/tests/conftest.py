import pathlib

import pytest

from postpcp import NormalSystem

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def t1():
    """w = aa with the single rule aX -> Xb."""
    return NormalSystem("aa", (("a", "b"),))


@pytest.fixture
def fixtures():
    return FIXTURES


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    return request.config.acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(config.acceptance_lines):
            terminalreporter.write_line(line)
