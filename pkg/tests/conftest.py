import pathlib

import pytest

from wfmig import fixtures

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture
def fixture_path():
    def lookup(name):
        return str(FIXTURES / ("%s.json" % name))
    return lookup


@pytest.fixture
def sequence_net():
    return fixtures.sequence_net()


@pytest.fixture
def fig4_net():
    return fixtures.fig4_net()


@pytest.fixture
def fig6_net():
    return fixtures.fig6_net()
