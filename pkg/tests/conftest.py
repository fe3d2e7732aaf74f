import math

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from scissorlift import ActuatorPlacement, ArmSlope, LiftSpec

settings.register_profile("default", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("default")

NEG, POS = ArmSlope.NEGATIVE, ArmSlope.POSITIVE

thetas = st.floats(min_value=0.02, max_value=math.pi / 2 - 0.02)


@st.composite
def lifts_and_placements(draw, max_stages=5):
    n = draw(st.integers(1, max_stages))
    lift = LiftSpec(
        n,
        draw(st.floats(0.1, 5.0)),
        draw(st.floats(0.0, 1000.0)),
        draw(st.floats(0.0, 5000.0)),
    )
    p = ActuatorPlacement(
        draw(st.floats(0.0, 1.0)),
        draw(st.floats(-2.0, 3.0)),
        draw(st.integers(0, n - 1)),
        draw(st.sampled_from([NEG, POS])),
    )
    return lift, p


@pytest.fixture
def screw_jack():
    return ActuatorPlacement(0.0, 2.0, 0, NEG)


@pytest.fixture
def vertical():
    return ActuatorPlacement(0.0, 0.0, 1, POS)
