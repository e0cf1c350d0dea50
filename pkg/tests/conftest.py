import pytest

from corpus import complete, cycle, path, star


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def star4():
    return star(4)


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
