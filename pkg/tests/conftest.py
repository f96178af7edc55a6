import random

import pytest


@pytest.fixture
def rng() -> random.Random:
    """Fresh deterministic generator per test; reseed locally for sub-streams."""
    return random.Random(0x5E1DE1)
