import pytest

from projperm import field_new, parse_field

SMALL_Q = [3, 4, 5, 7, 8, 9]


@pytest.fixture(scope="session")
def fields():
    return {q: parse_field(f"q={q}") for q in SMALL_Q + [11, 13, 16, 25, 27, 32, 49, 64]}


@pytest.fixture(scope="session")
def F3():
    return field_new(3)


@pytest.fixture(scope="session")
def F5():
    return field_new(5)


@pytest.fixture(scope="session")
def F7():
    return field_new(7)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
