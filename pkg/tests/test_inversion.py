import random

import pytest
import sympy
from hypothesis import assume, given

from conftest import affine_points, distinct_points
from ordcircles.curves import PolyCurve, X, Y
from ordcircles.inversion import (
    CenterError,
    InversionMap,
    center_on_image,
    invert_curve,
    invert_generalized_circle,
    invert_point,
    invert_point_set,
    passes_through_center,
)
from ordcircles.kernel import GeneralizedCircle, Line, PointSet, circle_through, cocircular, point
from ordcircles.verify import CARRIER_CASES, CARRIER_IMAGE, carrier_case, random_carrier, random_curve_through

O = InversionMap.at(0, 0)


class TestPoints:
    def test_spec_values(self):
        assert invert_point(O, point(2, 0)) == point("1/2", 0)
        assert invert_point(O, point(0, 1)) == point(0, 1)
        assert invert_point(O, point(3, 4)) == point("3/25", "4/25")

    def test_center_undefined(self):
        with pytest.raises(CenterError):
            invert_point(O, point(0, 0))

    def test_point_sets(self):
        P = PointSet.of([point(2, 0), point(0, 2)])
        image = invert_point_set(O, P)
        assert set(image.affine) == {point("1/2", 0), point(0, "1/2")}
        assert invert_point_set(O, image) == P
        assert invert_point_set(InversionMap.at(1, 1), PointSet.of([point(2, 1)])).affine == (point(2, 1),)

    def test_center_in_set(self):
        with pytest.raises(CenterError):
            invert_point_set(O, PointSet.of([point(0, 0), point(1, 1)]))

    @given(affine_points(), affine_points())
    def test_involution(self, c, q):
        assume(c != q)
        I = InversionMap(c)
        assert I(I(q)) == q

    @given(affine_points(), affine_points())
    def test_distance_product(self, c, q):
        assume(c != q)
        r = InversionMap(c)(q)
        d1 = (q.x - c.x) ** 2 + (q.y - c.y) ** 2
        d2 = (r.x - c.x) ** 2 + (r.y - c.y) ** 2
        assert d1 * d2 == 1

    @given(affine_points(), distinct_points(4))
    def test_cocircularity_preserved(self, c, pts):
        assume(c not in pts)
        I = InversionMap(c)
        # generalized circles avoiding c map to generalized circles avoiding c
        assume(not circle_through(*pts[:3]).contains(c))
        assert (cocircular(*pts) == 0) == (cocircular(*map(I, pts)) == 0)


class TestGeneralizedCircles:
    def test_line_to_circle(self):
        image = invert_generalized_circle(O, GeneralizedCircle.from_line(Line.from_coefficients(1, 0, 1)))
        assert image == GeneralizedCircle.from_coefficients(1, -1, 0, 0)

    def test_unit_circle_fixed(self):
        G = GeneralizedCircle(1, 0, 0, -1)
        assert invert_generalized_circle(O, G) == G

    def test_line_through_center_fixed(self):
        G = GeneralizedCircle.from_line(Line.from_coefficients(0, 1, 0))
        assert invert_generalized_circle(O, G) == G
        assert passes_through_center(O, G)

    @pytest.mark.parametrize("case", CARRIER_CASES)
    def test_four_case_table(self, case):
        rng = random.Random(case)
        for _ in range(10):
            c = point(rng.randint(-9, 9), rng.randint(-9, 9))
            G, anchor = random_carrier(case, c, rng)
            I = InversionMap(c)
            image = invert_generalized_circle(I, G)
            assert carrier_case(image, c) == CARRIER_IMAGE[case]
            assert invert_generalized_circle(I, image) == G

    @given(affine_points(), distinct_points(3))
    def test_image_contains_images(self, c, pts):
        assume(c not in pts)
        I = InversionMap(c)
        image = invert_generalized_circle(I, circle_through(*pts))
        assert all(image.contains(I(p)) for p in pts)


class TestCurves:
    def test_line(self):
        out = invert_curve(O, PolyCurve.parse("x - 1"))
        assert out.curve == PolyCurve.parse("x**2 + y**2 - x") and out.k == 1

    def test_unit_circle(self):
        assert invert_curve(O, PolyCurve.parse("x**2 + y**2 - 1")).curve == PolyCurve.parse("x**2 + y**2 - 1")

    def test_ellipse_becomes_quartic(self):
        out = invert_curve(O, PolyCurve.parse("x**2 + 2*y**2 - 1"))
        # substitution oracle: x^2 + 2y^2 - (x^2 + y^2)^2
        assert out.curve.primitive() == PolyCurve.from_sympy(-(X**2 + 2 * Y**2 - (X**2 + Y**2) ** 2)).primitive()
        assert out.curve.degree == 4

    @pytest.mark.parametrize("seed", range(8))
    def test_random_curves(self, seed):
        rng = random.Random(seed)
        d = rng.randint(1, 5)
        C, pts = random_curve_through(d, rng)
        c = point(rng.randint(-5, 5), rng.randint(-5, 5))
        while C.contains(c):
            c = point(rng.randint(-5, 5), rng.randint(-5, 5))
        I = InversionMap(c)
        image = invert_curve(I, C).curve
        assert image.degree <= 2 * C.degree
        for p in pts:
            if p != c:
                assert image.contains(I(p))

    def test_center_on_image(self):
        assert not center_on_image(O, PolyCurve.parse("x**2 + 2*y**2 - 1"))
        assert center_on_image(O, PolyCurve.parse("x*y - 1"))
        assert center_on_image(O, PolyCurve.parse("y - x**2 - 1"))

    def test_center_on_conic_rejected(self):
        with pytest.raises(CenterError):
            center_on_image(O, PolyCurve.parse("x**2 + y**2 - x"))

    def test_image_polynomial_oracle(self):
        # independent substitution through sympy.together
        f = X**3 - 2 * X * Y + 3
        q = X**2 + Y**2
        num = sympy.numer(sympy.together(f.subs({X: X / q, Y: Y / q}, simultaneous=True)))
        out = invert_curve(O, PolyCurve.from_sympy(f)).curve
        assert out.primitive() == PolyCurve.from_sympy(sympy.expand(num)).primitive()
