import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from conftest import affine_points, distinct_points, rationals
from ordcircles.kernel import (
    LINE_AT_INFINITY,
    AffinePoint,
    DuplicatePointError,
    GeneralizedCircle,
    GeometryError,
    Line,
    PointSet,
    ProjPoint,
    ProjTransform,
    apply_transform,
    as_fraction,
    circle_through,
    cocircular,
    integer_coordinates,
    lifted_det,
    line_through,
    orient,
    point,
)


def perm_sign(perm):
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


class TestScalars:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_fraction(0.5)

    def test_strings_parse(self):
        assert as_fraction("3/6") == Fraction(1, 2)


class TestOrient:
    def test_collinear(self):
        assert orient(point(0, 0), point(1, 0), point(2, 0)) == 0

    def test_ccw(self):
        assert orient(point(0, 0), point(1, 0), point(0, 1)) == 1

    def test_cw(self):
        assert orient(point(0, 0), point(0, 1), point(1, 0)) == -1

    @given(distinct_points(3))
    def test_permutation_sign(self, pts):
        base = orient(*pts)
        for perm in itertools.permutations(range(3)):
            assert orient(*(pts[i] for i in perm)) == perm_sign(perm) * base


class TestCocircular:
    def test_unit_circle(self):
        assert cocircular(point(0, 1), point(1, 0), point(0, -1), point(-1, 0)) == 0

    def test_collinear_quadruple(self):
        assert cocircular(*(point(i, i) for i in range(4))) == 0

    def test_square(self, unit_square):
        assert cocircular(*unit_square) == 0

    def test_generic_value(self):
        # hand expansion of the 4x4 determinant
        assert lifted_det(point(0, 0), point(1, 0), point(0, 1), point(2, 2)) == -4
        assert cocircular(point(0, 0), point(1, 0), point(0, 1), point(2, 2)) == -1

    @given(distinct_points(4))
    def test_matches_sympy_determinant(self, pts):
        M = sympy.Matrix([[p.x**2 + p.y**2, p.x, p.y, 1] for p in pts])
        assert sympy.Rational(lifted_det(*pts)) == M.det()

    @given(distinct_points(4))
    def test_permutation_sign(self, pts):
        base = cocircular(*pts)
        for perm in itertools.permutations(range(4)):
            assert cocircular(*(pts[i] for i in perm)) == perm_sign(perm) * base


class TestCircleThrough:
    def test_unit_circle(self):
        assert circle_through(point(1, 0), point(0, 1), point(-1, 0)) == GeneralizedCircle(1, 0, 0, -1)

    def test_collinear_gives_line(self):
        G = circle_through(point(0, 0), point(1, 0), point(2, 0))
        assert G.is_line and G.as_line() == Line.from_coefficients(0, 1, 0)

    def test_hand_solved(self):
        assert circle_through(point(0, 0), point(1, 0), point(0, 1)) == GeneralizedCircle(1, -1, -1, 0)

    def test_duplicates(self):
        with pytest.raises(DuplicatePointError):
            circle_through(point(0, 0), point(0, 0), point(1, 1))

    @given(distinct_points(3))
    def test_contains_inputs_and_symmetric(self, pts):
        G = circle_through(*pts)
        assert all(G.contains(p) for p in pts)
        for perm in itertools.permutations(pts):
            assert circle_through(*perm) == G

    @given(distinct_points(4))
    def test_cocircular_iff_on_circle(self, pts):
        p, q, r, s = pts
        assume(orient(p, q, r) != 0)
        assert (cocircular(p, q, r, s) == 0) == circle_through(p, q, r).contains(s)

    @given(st.lists(rationals(), min_size=5, max_size=5, unique=True), rationals(), rationals(), rationals(1, 1).filter(bool))
    def test_canonical_key_on_parametrized_circle(self, ts, cx, cy, r):
        # ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)) are rational points of the unit circle
        pts = [AffinePoint(cx + r * (1 - t * t) / (1 + t * t), cy + r * 2 * t / (1 + t * t)) for t in ts]
        r = abs(r)
        keys = {circle_through(*trip) for trip in itertools.combinations(pts, 3)}
        assert len(keys) == 1
        (G,) = keys
        assert G.center == AffinePoint(cx, cy) and G.radius_squared == r * r

    def test_nonreal_circle_rejected(self):
        with pytest.raises(GeometryError):
            GeneralizedCircle.from_coefficients(1, 0, 0, 1)


class TestLines:
    def test_diagonal(self):
        assert line_through(point(0, 0), point(1, 1)) == Line.from_coefficients(1, -1, 0)

    def test_direction_at_infinity(self):
        assert line_through(point(0, 0), ProjPoint.of(1, 0, 0)) == Line.from_coefficients(0, 1, 0)

    def test_two_infinity_points(self):
        assert line_through(ProjPoint.of(1, 0, 0), ProjPoint.of(1, 1, 0)) == LINE_AT_INFINITY

    def test_duplicate(self):
        with pytest.raises(DuplicatePointError):
            line_through(point(1, 2), ProjPoint.of(2, 4, 2))

    @given(distinct_points(2), rationals())
    def test_points_on_line(self, pts, t):
        p, q = pts
        L = line_through(p, q)
        r = AffinePoint(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))
        assert L.contains(p) and L.contains(q) and L.contains(r)
        assert L == line_through(q, p)
        if r != p:
            assert line_through(p, r) == L


class TestProjective:
    def test_canonical_form(self):
        assert ProjPoint.of(2, 4, 2) == ProjPoint.of(1, 2, 1)
        assert ProjPoint.of(3, -6, 0) == ProjPoint.of(-1, 2, 0)

    def test_singular_rejected(self):
        with pytest.raises(GeometryError):
            ProjTransform(((1, 0, 0), (2, 0, 0), (0, 0, 1)))

    def test_identity(self):
        P = PointSet.of([point(1, 2), point(3, 5), ProjPoint.of(1, 1, 0)])
        assert apply_transform(ProjTransform.identity(), P) == P

    def test_swap_axes(self):
        T = ProjTransform(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
        assert apply_transform(T, PointSet.of([point(1, 2)])).affine == (point(2, 1),)

    def test_infinity_becomes_affine(self):
        # sends the line z = 0 to the line x = 0
        T = ProjTransform(((0, 0, 1), (0, 1, 0), (1, 0, 0)))
        image = apply_transform(T, PointSet.of([ProjPoint.of(1, 0, 0)]))
        assert image.affine == (point(0, 0),) and not image.infinity

    @given(distinct_points(3), st.lists(st.integers(-4, 4), min_size=9, max_size=9))
    def test_collinearity_preserved(self, pts, entries):
        M = sympy.Matrix(3, 3, entries)
        assume(M.det() != 0)
        T = ProjTransform(tuple(tuple(entries[3 * i : 3 * i + 3]) for i in range(3)))
        p, q = pts[:2]
        r = AffinePoint(2 * q.x - p.x, 2 * q.y - p.y)
        images = [T(x) for x in (p, q, r)]
        det = sympy.Matrix([list(v) for v in images]).det()
        assert det == 0


class TestPointSet:
    def test_duplicates_rejected(self):
        with pytest.raises(DuplicatePointError):
            PointSet((point(1, 1), point(1, 1)))

    def test_infinity_needs_z_zero(self):
        with pytest.raises(GeometryError):
            PointSet((), (ProjPoint.of(1, 1, 1),))

    @given(st.lists(affine_points(), min_size=1, max_size=8, unique=True))
    def test_integer_scaling_preserves_orientation(self, pts):
        ints = integer_coordinates(pts)
        assert all(isinstance(v, int) for p in ints for v in p)
        for a, b, c in itertools.combinations(range(len(pts)), 3):
            ia, ib, ic = (AffinePoint(Fraction(x), Fraction(y)) for x, y in (ints[a], ints[b], ints[c]))
            assert orient(ia, ib, ic) == orient(pts[a], pts[b], pts[c])
