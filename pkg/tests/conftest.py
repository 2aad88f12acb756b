import random

import pytest
from hypothesis import strategies as st


@st.composite
def partitions(draw, max_rank=25):
    """Random partition as a tuple, by repeatedly drawing a next part <= cap."""
    n = draw(st.integers(min_value=0, max_value=max_rank))
    parts = []
    remaining = n
    cap = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return tuple(parts)


@st.composite
def beta_sets(draw, max_value=40, max_size=12):
    """Random strictly increasing tuple of nonnegative ints."""
    values = draw(st.sets(st.integers(0, max_value), min_size=1, max_size=max_size))
    return tuple(sorted(values))


@pytest.fixture
def rng():
    return random.Random(0x5EED)
