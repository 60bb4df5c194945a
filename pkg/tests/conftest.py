import random

import pytest

from percept_cane.perception import BoundingBox


@pytest.fixture
def rng():
    return random.Random(1234)


def random_box(rng: random.Random, min_side: float = 0.1, max_side: float = 0.6) -> BoundingBox:
    """Box sized so a 512-grid estimate of any IoU stays within 0.01."""
    w = rng.uniform(min_side, max_side)
    h = rng.uniform(min_side, max_side)
    x0 = rng.uniform(0.0, 1.0 - w)
    y0 = rng.uniform(0.0, 1.0 - h)
    return BoundingBox(x0, y0, x0 + w, y0 + h)
