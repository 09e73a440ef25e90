import math

import numpy as np
import pytest

from prodgeo import GeodesicParams, Geometry, geodesic_point

BOTH = pytest.mark.parametrize("kind", [Geometry.S2R, Geometry.H2R], ids=["s2r", "h2r"])


def random_params(kind, rng, tau_max=3.0, tau_min=1e-3):
    """Draw geodesic parameters inside the invertible / well-conditioned box."""
    while True:
        u = rng.uniform(-math.pi, math.pi)
        v = rng.uniform(-math.pi / 2, math.pi / 2)
        tau = rng.uniform(tau_min, tau_max)
        w = tau * math.cos(v)
        if kind is Geometry.S2R and w >= math.pi - 1e-3:
            continue
        if kind is Geometry.H2R and w > 7.5:
            continue
        return GeodesicParams(u, v, tau)


def random_point(kind, rng, tau_max=3.0):
    return geodesic_point(kind, random_params(kind, rng, tau_max))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
