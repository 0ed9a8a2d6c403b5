import pytest

from apwen.patterns import parse_pattern


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='Run tests marked slow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def f3():
    return parse_pattern('F3')


@pytest.fixture
def f5():
    return parse_pattern('F5')
