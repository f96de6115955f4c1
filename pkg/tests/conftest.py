import itertools
import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from puremono.poly.integer import IntPoly

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def int_polys(max_degree=8, lo=-20, hi=20, monic=False, min_degree=0):
    def build(cs):
        if monic:
            cs = list(cs) + [1]
        return IntPoly(cs)

    n_lo = min_degree if monic else min_degree + 1
    return st.lists(st.integers(lo, hi), min_size=n_lo, max_size=max_degree + (0 if monic else 1)).map(build)


def monic_polys_over(p, degree):
    """Every monic coefficient list of the given degree over F_p, low degree first."""
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


@pytest.fixture
def sympy_x():
    sympy = pytest.importorskip("sympy")
    return sympy.symbols("x")
