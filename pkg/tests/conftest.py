import pytest

from actlab.acts import validate_act
from actlab.fileio import catalog_monoid, load_catalog


@pytest.fixture(scope="session")
def rz3():
    return catalog_monoid("rz3")


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def small_catalog():
    return load_catalog(max_size=3)


@pytest.fixture(scope="session")
def pqx(rz3):
    # p, q fixed; a·x = p, b·x = q
    return validate_act(rz3, [[0, 1, 2], [0, 1, 0], [0, 1, 1]])


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: the headline acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=int):
        terminalreporter.write_line(RESULTS[key])
