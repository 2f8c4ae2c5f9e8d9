import pytest

from matroid_functors import Matroid, uniform
from matroid_functors.corpus import load_fixture, standard_corpus


@pytest.fixture(scope="session")
def graphic6():
    return Matroid.from_family(load_fixture("graphic6.txt"))


@pytest.fixture(scope="session")
def binary7():
    return Matroid.from_family(load_fixture("binary7.txt"))


@pytest.fixture(scope="session")
def graph_g():
    return load_fixture("graph_g.txt")


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture
def u23():
    return uniform(2, 3)


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
