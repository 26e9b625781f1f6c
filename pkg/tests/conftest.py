import functools

import pytest

from braidmorita import catalog
from braidmorita.classify import group_algebra
from braidmorita.groups import builtin_group


@functools.lru_cache(maxsize=None)
def entry(name):
    return catalog.load(name)


@pytest.fixture(scope="session")
def h4_0():
    return entry("H4_l0")


@pytest.fixture(scope="session")
def h4_1():
    return entry("H4_l1")


@pytest.fixture(scope="session")
def s3():
    return entry("S3_e")


@pytest.fixture(scope="session")
def kc2():
    return entry("C2_g")


@pytest.fixture(scope="session")
def all_entries():
    return [entry(n) for n in catalog.entry_names()]


@pytest.fixture(scope="session")
def double_c2():
    return catalog.double_c2()


def group_h(name):
    G = builtin_group(name)
    return G, group_algebra(G)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.report():
            terminalreporter.write_line(line)
