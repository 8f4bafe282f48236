"""Inversion in the unit circle around a point, applied to points, lines/circles and curves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import sympy

from .curves import PolyCurve, X, Y
from .kernel import AffinePoint, GeneralizedCircle, GeometryError, PointSet, Rational, point


class CenterError(GeometryError):
    """The inversion center was passed where it is not allowed."""


@dataclass(frozen=True)
class InversionMap:
    """Inversion with the given center; the radius is fixed to 1."""

    center: AffinePoint

    @classmethod
    def at(cls, x: Rational, y: Rational) -> "InversionMap":
        return cls(point(x, y))

    def __call__(self, q: AffinePoint) -> AffinePoint:
        return invert_point(self, q)


def invert_point(I: InversionMap, q: AffinePoint) -> AffinePoint:
    cx, cy = I.center
    dx, dy = q.x - cx, q.y - cy
    s = dx * dx + dy * dy
    if s == 0:
        raise CenterError(f"inversion is undefined at its center {I.center}")
    return AffinePoint(dx / s + cx, dy / s + cy)


def invert_point_set(I: InversionMap, P: PointSet) -> PointSet:
    if P.infinity:
        raise GeometryError("inversion of points at infinity has no convention here")
    if I.center in P.affine:
        raise CenterError(f"remove the center {I.center} before inverting")
    return PointSet(tuple(invert_point(I, q) for q in P.affine))


def _translate_gc(a, d, e, f, tx, ty):
    """Coefficients of G(x + tx, y + ty)."""
    return (
        a,
        2 * a * tx + d,
        2 * a * ty + e,
        a * (tx * tx + ty * ty) + d * tx + e * ty + f,
    )


def invert_generalized_circle(I: InversionMap, G: GeneralizedCircle) -> GeneralizedCircle:
    """Image of a line or circle (minus the center) under the inversion.

    With the center at the origin, a(x^2+y^2) + dx + ey + f = 0 maps to
    f(x^2+y^2) + dx + ey + a = 0, which realizes all four line/circle cases.
    """
    cx, cy = I.center
    a, d, e, f = _translate_gc(*(Fraction(v) for v in G), cx, cy)
    return GeneralizedCircle.from_coefficients(*_translate_gc(f, d, e, a, -cx, -cy))


def passes_through_center(I: InversionMap, G: GeneralizedCircle) -> bool:
    return G.contains(I.center)


class CurveInversion(NamedTuple):
    curve: PolyCurve
    k: int  # power of (x^2 + y^2) that clears the denominators


def invert_curve(I: InversionMap, C: PolyCurve) -> CurveInversion:
    """Defining polynomial of the image curve, of degree at most 2 * deg(C).

    The center is moved to the origin, x and y are replaced by x/(x^2+y^2) and
    y/(x^2+y^2), and the smallest power of (x^2+y^2) that clears the
    denominators is used.
    """
    cx, cy = I.center
    h = C.translate(cx, cy)
    d = h.degree
    q = X**2 + Y**2
    g = sum(
        sympy.Rational(c.numerator, c.denominator) * X**i * Y**j * q ** (d - i - j) for (i, j), c in h.coeffs.items()
    )
    gp = sympy.Poly(sympy.expand(g), X, Y, domain="QQ")
    qp = sympy.Poly(q, X, Y, domain="QQ")
    k = d
    while k > 0:
        quo, rem = sympy.div(gp, qp)
        if not rem.is_zero:
            break
        gp, k = quo, k - 1
    image = PolyCurve.from_sympy(gp.as_expr()).translate(-cx, -cy).primitive()
    return CurveInversion(image, k)


def conic_top_discriminant(C: PolyCurve) -> Fraction:
    """B^2 - 4AC of the quadratic part: < 0 ellipse, = 0 parabola, > 0 hyperbola."""
    if C.degree != 2:
        raise GeometryError(f"expected a conic, got degree {C.degree}")
    A = C.coeffs.get((2, 0), Fraction(0))
    B = C.coeffs.get((1, 1), Fraction(0))
    Cc = C.coeffs.get((0, 2), Fraction(0))
    return B * B - 4 * A * Cc


def center_on_image(I: InversionMap, C: PolyCurve) -> bool:
    """Whether the center lies on the closure of the image of a conic.

    Only parabolas and hyperbolas reach infinity, so only their images come
    back to the center.  (The image polynomial itself always vanishes at the
    center, where an ellipse's image has an isolated point.)
    """
    if C.degree != 2:
        raise GeometryError(f"center_on_image is defined for conics, got degree {C.degree}")
    if C.contains(I.center):
        raise CenterError("the conic passes through the center")
    return conic_top_discriminant(C) >= 0
