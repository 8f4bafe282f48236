from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from ordcircles.kernel import AffinePoint

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(span: int = 30, max_den: int = 8):
    return st.builds(Fraction, st.integers(-span, span), st.integers(1, max_den))


def affine_points(span: int = 30, max_den: int = 8):
    return st.builds(AffinePoint, rationals(span, max_den), rationals(span, max_den))


def distinct_points(k: int, span: int = 30, max_den: int = 8):
    return st.lists(affine_points(span, max_den), min_size=k, max_size=k, unique=True)


@pytest.fixture
def unit_square():
    return [AffinePoint(Fraction(x), Fraction(y)) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))]
