import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def dpolys(draw, max_degree=4):
    from curve_census.algebra import DPoly

    return DPoly(draw(st.lists(rationals, max_size=max_degree + 1)))


@pytest.fixture
def engine():
    from curve_census.counts import CountEngine

    return CountEngine()


@pytest.fixture
def F():
    return Fraction
