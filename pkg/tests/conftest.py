import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zsets import PcSet


@pytest.fixture
def S():
    """Shorthand set builder: ``S(8, 0, 3, 4, 5)``."""

    def make(n, *elements):
        return PcSet.of(elements, n)

    return make
