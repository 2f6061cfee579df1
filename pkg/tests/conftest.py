import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from demo_data import demo_arrangement


@pytest.fixture(scope="session")
def demo():
    return demo_arrangement()
