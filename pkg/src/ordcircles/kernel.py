"""Exact rational points, lines, circles and the incidence predicates.

Every coordinate is a :class:`fractions.Fraction`; no predicate ever touches a
float.  Lines and circles are stored as primitive integer coefficient vectors
with a fixed sign convention, so two objects describe the same locus exactly
when their representations are equal (and hash equal).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Union[int, Fraction, str]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DuplicatePointError(GeometryError):
    pass


class InfinityPointError(GeometryError):
    """A circle operation received a point at infinity."""


def as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def fmt_fraction(value: Fraction) -> str:
    return str(value)


def sign(value) -> int:
    return (value > 0) - (value < 0)


def primitive(values: Sequence[Rational]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (not sign-normalized)."""
    fracs = [as_fraction(v) for v in values]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    if g == 0:
        raise GeometryError("zero coefficient vector")
    return tuple(i // g for i in ints)


def _first_nonzero_positive(ints: tuple[int, ...]) -> tuple[int, ...]:
    for v in ints:
        if v:
            return ints if v > 0 else tuple(-i for i in ints)
    return ints


class AffinePoint(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def point(x: Rational, y: Rational) -> AffinePoint:
    return AffinePoint(as_fraction(x), as_fraction(y))


class ProjPoint(NamedTuple):
    """Point [x:y:z] of the projective plane, scaled so the last nonzero entry is 1."""

    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x: Rational, y: Rational, z: Rational) -> "ProjPoint":
        coords = [as_fraction(x), as_fraction(y), as_fraction(z)]
        for c in reversed(coords):
            if c:
                return cls(*(v / c for v in coords))
        raise GeometryError("[0:0:0] is not a projective point")

    @classmethod
    def from_affine(cls, p: AffinePoint) -> "ProjPoint":
        return cls(p.x, p.y, Fraction(1))

    @property
    def at_infinity(self) -> bool:
        return self.z == 0

    def affine(self) -> AffinePoint:
        if self.z == 0:
            raise InfinityPointError(f"{self} is a point at infinity")
        return AffinePoint(self.x, self.y)


ORIGIN = ProjPoint(Fraction(0), Fraction(0), Fraction(1))


class Line(NamedTuple):
    """The line a*x + b*y = c*z with coprime integers, first nonzero of (a, b) positive.

    ``LINE_AT_INFINITY`` is the single exception with a = b = 0.
    """

    a: int
    b: int
    c: int

    @classmethod
    def from_coefficients(cls, a: Rational, b: Rational, c: Rational) -> "Line":
        ints = primitive([a, b, c])
        if ints[0] == 0 and ints[1] == 0:
            return LINE_AT_INFINITY
        return cls(*_first_nonzero_positive(ints))

    @property
    def at_infinity(self) -> bool:
        return self.a == 0 and self.b == 0

    def evaluate(self, p: AffinePoint | ProjPoint) -> Fraction:
        if isinstance(p, ProjPoint):
            return self.a * p.x + self.b * p.y - self.c * p.z
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: AffinePoint | ProjPoint) -> bool:
        return self.evaluate(p) == 0

    def __str__(self) -> str:
        if self.at_infinity:
            return "line at infinity"
        return f"{self.a}x + {self.b}y = {self.c}"


LINE_AT_INFINITY = Line(0, 0, 1)


class GeneralizedCircle(NamedTuple):
    """a*(x^2 + y^2) + d*x + e*y + f = 0 with coprime integers.

    a > 0 for circles; a == 0 for lines, whose (d, e) then follows the
    :class:`Line` sign rule.
    """

    a: int
    d: int
    e: int
    f: int

    @classmethod
    def from_coefficients(cls, a: Rational, d: Rational, e: Rational, f: Rational) -> "GeneralizedCircle":
        ints = primitive([a, d, e, f])
        if ints[0] == 0 and ints[1] == 0 and ints[2] == 0:
            raise GeometryError("constant equation does not define a line or circle")
        gc = cls(*_first_nonzero_positive(ints))
        if gc.a and gc.d * gc.d + gc.e * gc.e - 4 * gc.a * gc.f <= 0:
            raise GeometryError(f"{gc} has no real points (non-positive squared radius)")
        return gc

    @classmethod
    def from_line(cls, line: Line) -> "GeneralizedCircle":
        if line.at_infinity:
            raise InfinityPointError("the line at infinity is not an affine locus")
        return cls(0, line.a, line.b, -line.c)

    @property
    def is_line(self) -> bool:
        return self.a == 0

    @property
    def is_circle(self) -> bool:
        return self.a != 0

    def as_line(self) -> Line:
        if not self.is_line:
            raise GeometryError(f"{self} is a circle")
        return Line(self.d, self.e, -self.f)

    @property
    def center(self) -> AffinePoint:
        return point(Fraction(-self.d, 2 * self.a), Fraction(-self.e, 2 * self.a))

    @property
    def radius_squared(self) -> Fraction:
        return Fraction(self.d * self.d + self.e * self.e - 4 * self.a * self.f, 4 * self.a * self.a)

    def evaluate(self, p: AffinePoint) -> Fraction:
        return self.a * (p.x * p.x + p.y * p.y) + self.d * p.x + self.e * p.y + self.f

    def contains(self, p: AffinePoint) -> bool:
        return self.evaluate(p) == 0

    def __str__(self) -> str:
        kind = "LINE" if self.is_line else "CIRCLE"
        return f"{kind}[{self.a}(x^2+y^2) + {self.d}x + {self.e}y + {self.f} = 0]"


def orient(p: AffinePoint, q: AffinePoint, r: AffinePoint) -> int:
    """Sign of the orientation determinant; 0 iff the points are collinear."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def _det3(m: Sequence[Sequence]) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def lifted_det(p: AffinePoint, q: AffinePoint, r: AffinePoint, s: AffinePoint) -> Fraction:
    """det of the rows (x^2+y^2, x, y, 1) for p, q, r, s."""
    rows = []
    for t in (q, r, s):
        dx, dy = t.x - p.x, t.y - p.y
        rows.append((dx * dx + dy * dy, dx, dy))
    # translating to p is a column operation; expanding along p's row (0,0,0,1)
    return -_det3(rows)


def cocircular(p: AffinePoint, q: AffinePoint, r: AffinePoint, s: AffinePoint) -> int:
    """0 iff the four points lie on one circle or one line."""
    return sign(lifted_det(p, q, r, s))


def _check_distinct(points: Sequence) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePointError(f"points must be pairwise distinct: {[str(p) for p in points]}")


def circle_through(p: AffinePoint, q: AffinePoint, r: AffinePoint) -> GeneralizedCircle:
    """Circle through three points, or the line through them if they are collinear."""
    _check_distinct((p, q, r))
    pts = (p, q, r)
    w = [t.x * t.x + t.y * t.y for t in pts]
    a = _det3([(t.x, t.y, 1) for t in pts])
    d = -_det3([(w[i], pts[i].y, 1) for i in range(3)])
    e = _det3([(w[i], pts[i].x, 1) for i in range(3)])
    f = -_det3([(w[i], pts[i].x, pts[i].y) for i in range(3)])
    return GeneralizedCircle.from_coefficients(a, d, e, f)


def line_through(p: AffinePoint | ProjPoint, q: AffinePoint | ProjPoint) -> Line:
    """Canonical line through two distinct points (affine or projective)."""
    P = p if isinstance(p, ProjPoint) else ProjPoint.from_affine(p)
    Q = q if isinstance(q, ProjPoint) else ProjPoint.from_affine(q)
    if P == Q:
        raise DuplicatePointError(f"line through {p} and itself is undefined")
    # cross product gives (l0, l1, l2) with l0 x + l1 y + l2 z = 0
    l0 = P.y * Q.z - P.z * Q.y
    l1 = P.z * Q.x - P.x * Q.z
    l2 = P.x * Q.y - P.y * Q.x
    return Line.from_coefficients(l0, l1, -l2)


@dataclass(frozen=True)
class ProjTransform:
    """Nonsingular 3x3 rational matrix acting on column vectors [x, y, z]."""

    matrix: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        m = tuple(tuple(as_fraction(v) for v in row) for row in self.matrix)
        if len(m) != 3 or any(len(row) != 3 for row in m):
            raise GeometryError("projective transforms are 3x3")
        object.__setattr__(self, "matrix", m)
        if _det3(m) == 0:
            raise GeometryError("singular matrix is not a projective transformation")

    @classmethod
    def identity(cls) -> "ProjTransform":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __call__(self, p: AffinePoint | ProjPoint) -> ProjPoint:
        P = p if isinstance(p, ProjPoint) else ProjPoint.from_affine(p)
        v = (P.x, P.y, P.z)
        return ProjPoint.of(*(sum(row[i] * v[i] for i in range(3)) for row in self.matrix))


@dataclass(frozen=True)
class PointSet:
    """Finite set of affine points plus (optionally) points on the line at infinity."""

    affine: tuple[AffinePoint, ...]
    infinity: tuple[ProjPoint, ...] = ()

    def __post_init__(self):
        aff = tuple(p if isinstance(p, AffinePoint) else point(*p) for p in self.affine)
        inf = tuple(p if isinstance(p, ProjPoint) else ProjPoint.of(*p) for p in self.infinity)
        if any(not p.at_infinity for p in inf):
            raise GeometryError("infinity members must have z = 0")
        if len(set(aff)) != len(aff) or len(set(inf)) != len(inf):
            raise DuplicatePointError("point set contains duplicates")
        object.__setattr__(self, "affine", aff)
        object.__setattr__(self, "infinity", inf)

    @classmethod
    def of(cls, points: Iterable) -> "PointSet":
        """Build from a mix of affine and projective points."""
        aff, inf = [], []
        for p in points:
            if isinstance(p, ProjPoint):
                if p.at_infinity:
                    inf.append(p)
                else:
                    aff.append(p.affine())
            else:
                aff.append(p if isinstance(p, AffinePoint) else point(*p))
        return cls(tuple(aff), tuple(inf))

    @property
    def n(self) -> int:
        return len(self.affine) + len(self.infinity)

    @property
    def all_affine(self) -> bool:
        return not self.infinity

    def members(self) -> list[AffinePoint | ProjPoint]:
        return [*self.affine, *self.infinity]

    def require_affine(self) -> None:
        if self.infinity:
            raise InfinityPointError("circle operations need an all-affine point set")

    def canonical(self) -> "PointSet":
        return PointSet(tuple(sorted(self.affine)), tuple(sorted(self.infinity)))

    def __contains__(self, p) -> bool:
        if isinstance(p, ProjPoint):
            return p in self.infinity if p.at_infinity else p.affine() in self.affine
        return p in self.affine

    def __len__(self) -> int:
        return self.n


def apply_transform(T: ProjTransform, P: PointSet) -> PointSet:
    """Image of a point set; members may move between the affine part and infinity."""
    return PointSet.of(T(p) for p in P.members())


def integer_coordinates(points: Sequence[AffinePoint]) -> list[tuple[int, int]]:
    """Scale by the common denominator; a homothety keeps every incidence."""
    den = math.lcm(*(c.denominator for p in points for c in p)) if points else 1
    return [(int(p.x * den), int(p.y * den)) for p in points]
