import pytest

from arrholonomy import corpus


@pytest.fixture(scope="session")
def braid3():
    return corpus.braid(3)


@pytest.fixture(scope="session")
def braid4():
    return corpus.braid(4)


@pytest.fixture(scope="session")
def boolean3():
    return corpus.boolean(3)


@pytest.fixture(scope="session")
def generic4():
    return corpus.generic4()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
