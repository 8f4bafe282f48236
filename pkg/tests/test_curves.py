import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from conftest import affine_points, rationals
from ordcircles.curves import (
    X,
    Y,
    Z,
    DegenerateConicError,
    DegeneratePolarError,
    HomPolyCurve,
    PolyCurve,
    ZeroPolynomialError,
    count_tangent_lines,
    curve_membership,
    dehomogenize,
    homogenize,
    polar_curve,
    tangent_count_upper,
    tangent_lines_to_conic,
)
from ordcircles.kernel import GeometryError, Line, ProjPoint, point
from ordcircles.verify import tangent_conic

UNIT = PolyCurve.parse("x**2 + y**2 - 1")


class TestPolynomials:
    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            PolyCurve.parse("x - x")

    def test_scaling_is_canonical(self):
        assert PolyCurve.parse("2*x**2 + 2*y**2 - 2").primitive() == UNIT

    def test_membership(self):
        assert curve_membership(UNIT, point(0, 1))
        assert not curve_membership(UNIT, point(1, 1))
        assert curve_membership(PolyCurve.parse("x - (x**2 + y**2)"), point("1/2", "1/2"))

    def test_square_free(self):
        C = PolyCurve.parse("(x - 1)**2 * (x**2 + y**2 - 1)")
        assert C.square_free().degree == 3

    @given(rationals(), rationals(), affine_points())
    def test_translate(self, dx, dy, p):
        C = PolyCurve.parse("x**3 - 2*x*y + y**2 - 5")
        assert C.translate(dx, dy).evaluate(p.x, p.y) == C.evaluate(p.x + dx, p.y + dy)


class TestHomogenize:
    def test_circle(self):
        assert homogenize(UNIT) == HomPolyCurve.parse("x**2 + y**2 - z**2")

    def test_parabola(self):
        assert homogenize(PolyCurve.parse("y - x**2")) == HomPolyCurve.parse("y*z - x**2")

    def test_round_trip(self):
        assert dehomogenize(HomPolyCurve.parse("x**2 + y**2 - z**2"), "z") == UNIT

    def test_non_homogeneous_rejected(self):
        with pytest.raises(GeometryError):
            HomPolyCurve.parse("x**2 + z")

    @given(affine_points(), st.integers(1, 5))
    def test_scaling_consistency(self, p, lam):
        H = homogenize(PolyCurve.parse("x**3 + x*y - 2*y + 7"))
        base = H.evaluate((p.x, p.y, 1))
        assert H.evaluate((lam * p.x, lam * p.y, lam)) == lam**3 * base


class TestPolar:
    def test_unit_circle_external(self):
        D = polar_curve(HomPolyCurve.parse("x**2 + y**2 - z**2"), ProjPoint.of(2, 0, 1))
        assert D == HomPolyCurve.parse("4*x - 2*z")
        assert str(D) == "4*x - 2*z"

    def test_origin_gives_line_at_infinity(self):
        D = polar_curve(HomPolyCurve.parse("x**2 + y**2 - z**2"), (0, 0, 1))
        assert D == HomPolyCurve.parse("-2*z")

    def test_cubic(self):
        assert polar_curve(HomPolyCurve.parse("x*y*z"), (1, 0, 0)) == HomPolyCurve.parse("y*z")

    def test_vanishing(self):
        with pytest.raises(DegeneratePolarError):
            polar_curve(HomPolyCurve.parse("y**3"), (1, 0, 0))

    @given(st.lists(st.integers(-5, 5), min_size=3, max_size=3).filter(any))
    def test_matches_sympy_derivatives(self, p):
        F = X**3 + 2 * X * Y * Z - Y**2 * Z + Z**3
        D = polar_curve(HomPolyCurve.from_sympy(F), p)
        expected = sympy.expand(p[0] * F.diff(X) + p[1] * F.diff(Y) + p[2] * F.diff(Z))
        assume(expected != 0)
        assert D == HomPolyCurve.from_sympy(expected)
        assert D.degree == 2

    @given(st.lists(st.integers(-5, 5), min_size=3, max_size=3).filter(any))
    def test_euler_identity(self, p):
        # D_p(F)(p) = d * F(p) for homogeneous F of degree d
        H = HomPolyCurve.parse("x**3 + 2*x*y*z - y**2*z + z**3")
        try:
            D = polar_curve(H, p)
        except DegeneratePolarError:
            return
        assert D.evaluate(p) == 3 * H.evaluate(p)


class TestTangents:
    def test_external(self):
        T = tangent_lines_to_conic(UNIT, point(2, 0))
        assert T.count == 2 and T.polar == Line.from_coefficients(2, 0, 1)
        assert not T.exact  # touching points (1/2, +-sqrt(3)/2) are irrational

    def test_on_circle(self):
        T = tangent_lines_to_conic(UNIT, point(1, 0))
        assert T.count == 1 and T.lines == (Line.from_coefficients(1, 0, 1),)

    def test_interior(self):
        assert tangent_lines_to_conic(UNIT, point(0, 0)).count == 0

    def test_rational_touch_points(self):
        C = PolyCurve.parse("x**2 + y**2 - 25")
        T = tangent_lines_to_conic(C, point(7, 1))
        assert T.count == 2 and T.exact
        assert set(T.points) == {ProjPoint.of(3, 4, 1), ProjPoint.of(4, -3, 1)}

    def test_degenerate(self):
        with pytest.raises(DegenerateConicError):
            tangent_lines_to_conic(PolyCurve.parse("x*y"), point(1, 1))

    @pytest.mark.parametrize("seed", range(15))
    def test_touch_points_on_curve_and_polar(self, seed):
        C, p, touch, T = tangent_conic(random.Random(seed))
        assert T.count == 2 and T.exact and set(T.points) == touch
        D = polar_curve(homogenize(C), ProjPoint.from_affine(p))
        H = homogenize(C)
        for Q in T.points:
            assert H.evaluate(Q) == 0 and D.evaluate(Q) == 0

    @given(affine_points())
    def test_count_agrees_with_general_counter(self, p):
        C = PolyCurve.parse("x**2 + 2*y**2 - 3")
        assume(not C.contains(p))
        assert tangent_lines_to_conic(C, p).count == count_tangent_lines(C, p)


class TestTangentBound:
    def test_conic(self):
        assert tangent_count_upper(UNIT) == 2

    def test_cubic(self):
        assert tangent_count_upper(PolyCurve.parse("y**2 - x**3 - x - 1")) == 6

    def test_three_lines(self):
        assert tangent_count_upper(PolyCurve.parse("x*y*(x + y - 1)")) == 3

    def test_line_rejected(self):
        with pytest.raises(GeometryError):
            tangent_count_upper(PolyCurve.parse("x + y"))

    @given(affine_points(span=6, max_den=3))
    def test_cubic_counts_within_bound(self, p):
        C = PolyCurve.parse("y**2 - x**3 + x")
        assume(not C.contains(p))
        assert count_tangent_lines(C, p) <= 6

    def test_exterior_point_of_circle_attains_two(self):
        assert count_tangent_lines(UNIT, point(3, 0)) == 2
        assert count_tangent_lines(UNIT, point(Fraction(1, 2), 0)) == 0
