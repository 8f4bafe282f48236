"""Numeric realizations of symmetric configurations with certified signs.

Coordinates are mpmath intervals.  Sign tests first try a float evaluation
with a conservative error bound, then interval evaluation at increasing
precision.  A determinant whose interval still contains zero at the top
precision is reported as undecided; the brute-force oracle counters below
treat that as an exact zero (the configurations are cyclotomic, and their
nonzero incidence determinants are nowhere near 2**-1000 at these sizes).
"""

from __future__ import annotations

import itertools
import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Sequence

from mpmath import iv

from .configs import (
    ConfigError,
    DEFAULT_RADIUS_RATIO,
    SymmetricConfig,
    SymPoint,
    make_even_construction,
    make_odd_construction,
    member,
)
from .kernel import GeometryError, ProjTransform, Rational

PRECISION_LADDER = (64, 256, 1024)
_EPS = 2.0**-52

# z' = x/3 + y/5 + z vanishes on no point of X_2m: the unit circle stays on
# one side, and tan(theta) = 3/5 is never attained at a rational multiple of pi.
DEFAULT_FINITIZER = ProjTransform(((1, 0, 0), (0, 1, 0), (Fraction(1, 3), Fraction(1, 5), 1)))


class UndecidedIncidenceError(GeometryError):
    pass


@contextmanager
def interval_precision(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def _ivq(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def _width(x) -> float:
    return float(x.delta)


class EmbeddedConfig:
    """Interval coordinates for the points of a :class:`SymmetricConfig`.

    The realization is a pipeline: exact angles and radii, then an optional
    projective transform (required when points at infinity are present),
    then zero or more unit-circle inversions whose centers are themselves
    symbolic points pushed through the earlier stages.
    """

    def __init__(
        self,
        source: SymmetricConfig,
        labels: Sequence[SymPoint] | None = None,
        precision: int = 256,
        transform: ProjTransform | None = None,
        inversions: Sequence[SymPoint] = (),
    ):
        if precision < 64:
            raise ValueError("precision must be at least 64 bits")
        self.source = source
        self.labels = tuple(source.points if labels is None else labels)
        self.precision = precision
        self.transform = transform
        self.inversions = tuple(inversions)
        self.radii = source.radii
        self._cache: dict = {}
        self._floats: dict = {}
        if any(p.at_infinity for p in self.labels) and transform is None:
            raise GeometryError("points at infinity can only be embedded through a finitizing transform")
        for c in self.inversions:
            if c in self.labels:
                raise GeometryError(f"inversion center {c} is a point of the configuration")

    @property
    def n(self) -> int:
        return len(self.labels)

    def with_labels(self, labels: Sequence[SymPoint]) -> "EmbeddedConfig":
        E = EmbeddedConfig(self.source, labels, self.precision, self.transform, self.inversions)
        E._cache, E._floats = self._cache, self._floats
        return E

    def inverted_at(self, center: SymPoint) -> "EmbeddedConfig":
        """The image of the other points under inversion at ``center``."""
        labels = [p for p in self.labels if p != center]
        return EmbeddedConfig(self.source, labels, self.precision, self.transform, self.inversions + (center,))

    # coordinates -----------------------------------------------------

    def _base(self, p: SymPoint):
        m = self.source.m
        if p.is_origin:
            return iv.mpf(0), iv.mpf(0), iv.mpf(1)
        if p.at_infinity:
            phi = iv.pi * p.half / (2 * m)
            return -iv.sin(phi), iv.cos(phi), iv.mpf(0)
        theta = iv.pi * p.half / m
        r = _ivq(self.source.radius(p.orbit))
        return r * iv.cos(theta), r * iv.sin(theta), iv.mpf(1)

    def _stage(self, p: SymPoint, depth: int, bits: int):
        key = (p, depth, bits, self.transform, self.inversions[:depth])
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        with interval_precision(bits):
            if depth == 0:
                x, y, z = self._base(p)
                if self.transform is not None:
                    M = self.transform.matrix
                    x, y, z = (_ivq(M[i][0]) * x + _ivq(M[i][1]) * y + _ivq(M[i][2]) * z for i in range(3))
                if 0 in z:
                    raise GeometryError(f"{p} is not finite in this realization")
                out = (x / z, y / z)
            else:
                x, y = self._stage(p, depth - 1, bits)
                cx, cy = self._stage(self.inversions[depth - 1], depth - 1, bits)
                dx, dy = x - cx, y - cy
                s = dx * dx + dy * dy
                if 0 in s:
                    raise GeometryError(f"{p} cannot be separated from the inversion center at {bits} bits")
                out = (dx / s + cx, dy / s + cy)
        self._cache[key] = out
        return out

    def coords(self, p: SymPoint, bits: int | None = None):
        return self._stage(p, len(self.inversions), bits or self.precision)

    @property
    def points(self) -> list:
        return [self.coords(p) for p in self.labels]

    def max_width(self, bits: int | None = None) -> float:
        return max(max(_width(c[0]), _width(c[1])) for c in (self.coords(p, bits) for p in self.labels))

    def float_coords(self, p: SymPoint) -> tuple[float, float, float]:
        """Midpoint floats plus an absolute error bound for both coordinates."""
        key = (p, self.transform, self.inversions)
        hit = self._floats.get(key)
        if hit is None:
            x, y = self.coords(p, 64)
            err = max(_width(x), _width(y)) + 2.0**-60
            fx, fy = float(x.mid), float(y.mid)
            hit = (fx, fy, err + (abs(fx) + abs(fy)) * _EPS)
            self._floats[key] = hit
        return hit

    # certified signs -------------------------------------------------

    def orient_sign(self, a: SymPoint, b: SymPoint, c: SymPoint) -> int | None:
        (ax, ay, ea), (bx, by, eb), (cx, cy, ec) = (self.float_coords(p) for p in (a, b, c))
        det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        M = max(abs(ax), abs(ay), abs(bx), abs(by), abs(cx), abs(cy), 1.0)
        E = max(ea, eb, ec)
        if abs(det) > 32 * M * E + 64 * _EPS * M * M:
            return 1 if det > 0 else -1
        for bits in PRECISION_LADDER:
            with interval_precision(bits):
                (ax, ay), (bx, by), (cx, cy) = (self.coords(p, bits) for p in (a, b, c))
                d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
                if 0 not in d:
                    return 1 if d.a > 0 else -1
        return None

    def incircle_sign(self, a: SymPoint, b: SymPoint, c: SymPoint, d: SymPoint) -> int | None:
        fl = [self.float_coords(p) for p in (a, b, c, d)]
        det = _lifted_det([(x, y) for x, y, _ in fl])
        M = max(max(abs(x), abs(y)) for x, y, _ in fl) + 1.0
        E = max(e for _, _, e in fl)
        if abs(det) > 4096 * M**3 * E + 4096 * _EPS * M**4:
            return 1 if det > 0 else -1
        for bits in PRECISION_LADDER:
            with interval_precision(bits):
                d_iv = _lifted_det([self.coords(p, bits) for p in (a, b, c, d)])
                if 0 not in d_iv:
                    return 1 if d_iv.a > 0 else -1
        return None

    def collinear(self, a, b, c) -> bool:
        """Oracle decision: undecided at the top precision counts as collinear."""
        return self.orient_sign(a, b, c) in (0, None)

    def cocircular(self, a, b, c, d) -> bool:
        return self.incircle_sign(a, b, c, d) in (0, None)


def _lifted_det(pts):
    (px, py), rest = pts[0], pts[1:]
    rows = []
    for x, y in rest:
        dx, dy = x - px, y - py
        rows.append((dx * dx + dy * dy, dx, dy))
    m = rows
    return -(
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def embed(C: SymmetricConfig, precision: int = 256, transform: ProjTransform | None = None) -> EmbeddedConfig:
    if transform is None and C.has_infinity and any(p.at_infinity for p in C.points):
        transform = DEFAULT_FINITIZER
    return EmbeddedConfig(C, precision=precision, transform=transform)


def make_linecircle_construction(
    n: int,
    radius_ratio: Rational = DEFAULT_RADIUS_RATIO,
    inversion_center_index: int = 1,
    removed: SymPoint | tuple = (1, 0),
    precision: int = 256,
) -> EmbeddedConfig:
    """Invert the even (n even) or odd (n odd) construction at a point of the unit orbit.

    ``inversion_center_index`` is the center's angle in half-steps on orbit 1;
    odd values lie strictly between members.
    """
    pre = make_even_construction(n, radius_ratio) if n % 2 == 0 else make_odd_construction(n, radius_ratio, removed)
    center = pre.normalize(SymPoint(1, inversion_center_index))
    if center in pre:
        raise ConfigError(f"inversion center {center} coincides with a member")
    return EmbeddedConfig(pre, precision=precision, inversions=(center,))


def linecircle_descriptor(E: EmbeddedConfig) -> dict:
    d = E.source.descriptor()
    d["family"] = "linecircle"
    d["n"] = E.n
    d["inversion_center_index"] = E.inversions[0].half
    return d


# brute-force oracle counts on an embedding ---------------------------------


def embedded_lines(E: EmbeddedConfig, labels: Sequence[SymPoint] | None = None) -> list[frozenset]:
    """Every line spanned by the points, as the set of points on it."""
    pts = list(E.labels if labels is None else labels)
    seen: set = set()
    lines = []
    for a, b in itertools.combinations(pts, 2):
        if frozenset((a, b)) in seen:
            continue
        on = {a, b} | {c for c in pts if c not in (a, b) and E.collinear(a, b, c)}
        for pair in itertools.combinations(on, 2):
            seen.add(frozenset(pair))
        lines.append(frozenset(on))
    return lines


def embedded_ordinary_lines(E: EmbeddedConfig) -> int:
    return sum(1 for line in embedded_lines(E) if len(line) == 2)


def embedded_circles(E: EmbeddedConfig) -> list[frozenset]:
    """Every circle (not line) through three of the points, as the set of points on it."""
    pts = list(E.labels)
    done: set = set()
    circles = []
    for a, b, c in itertools.combinations(pts, 3):
        if frozenset((a, b, c)) in done or E.collinear(a, b, c):
            continue
        on = {a, b, c} | {d for d in pts if d not in (a, b, c) and E.cocircular(a, b, c, d)}
        for t in itertools.combinations(on, 3):
            done.add(frozenset(t))
        circles.append(frozenset(on))
    return circles


def embedded_ordinary_circles(E: EmbeddedConfig) -> tuple[int, dict]:
    """Ordinary circle count and per-point counts, by triple scan."""
    per_point = {p: 0 for p in E.labels}
    total = 0
    for circ in embedded_circles(E):
        if len(circ) == 3:
            total += 1
            for p in circ:
                per_point[p] += 1
    return total, per_point


def embedded_ordinary_circles_by_inversion(E: EmbeddedConfig) -> tuple[int, dict]:
    """Invert at each point and count ordinary lines of the image that avoid the center."""
    per_point = {}
    for p in E.labels:
        F = E.inverted_at(p)
        count = 0
        for line in embedded_lines(F):
            if len(line) == 2:
                a, b = tuple(line)
                # lines through the center are fixed by the inversion
                if not E.collinear(p, a, b):
                    count += 1
        per_point[p] = count
    total3 = sum(per_point.values())
    if total3 % 3:
        raise ArithmeticError(f"sum of per-point ordinary circle counts {total3} is not divisible by 3")
    return total3 // 3, per_point
