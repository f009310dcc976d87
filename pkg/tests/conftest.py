import pytest

from yoke.core import GraphParams


@pytest.fixture
def y33() -> GraphParams:
    return GraphParams(3, 3)
