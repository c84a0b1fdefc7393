import math

import numpy as np
import pytest

from orbitconics import Point, Triangle


def angle_dist_mod_pi(x: float, y: float) -> float:
    """Distance between two axis directions, period pi."""
    d = (x - y) % math.pi
    return min(d, math.pi - d)


def random_triangle(rng: np.random.Generator, span: float = 2.0) -> Triangle:
    """Uniform random triangle, rejecting thin ones."""
    while True:
        coords = rng.uniform(-span, span, size=(3, 2))
        p = [Point(*c) for c in coords]
        area = 0.5 * abs((p[1] - p[0]).cross(p[2] - p[0]))
        longest = max(p[0].dist(p[1]), p[1].dist(p[2]), p[2].dist(p[0]))
        if area > 0.05 * longest * longest:
            return Triangle(*p)


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)
