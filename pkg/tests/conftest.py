import logging

import pytest

from app.domain.services.digraph_ops import make_digraph
from app.infrastructure.dependencies import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def triangle():
    return make_digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def two_cycle():
    return make_digraph(2, [(0, 1), (1, 0)])


@pytest.fixture(autouse=True)
def quiet_root_logger():
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.WARNING)
