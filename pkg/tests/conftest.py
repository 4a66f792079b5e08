from pathlib import Path

import pytest

from core import FenceDiagram

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def hopf() -> FenceDiagram:
    return FenceDiagram.of(2, (1, 2), (1, 2))


@pytest.fixture
def triangle() -> FenceDiagram:
    """lk = 2, one negative crossing, nothing deflates."""
    return FenceDiagram.of(3, (1, 2), (1, 3), (2, 3))


@pytest.fixture
def staircase() -> FenceDiagram:
    """lk = 1, deflates at line 1 to the Hopf annulus."""
    return FenceDiagram.of(3, (1, 3), (1, 2), (2, 3))


@pytest.fixture
def a3_rot0() -> FenceDiagram:
    return FenceDiagram.of(6, (1, 3), (5, 6), (3, 5), (2, 4), (1, 2), (4, 6))


@pytest.fixture
def a3_rot2() -> FenceDiagram:
    return FenceDiagram.of(5, (1, 5), (2, 3), (1, 2), (4, 5), (3, 4))
