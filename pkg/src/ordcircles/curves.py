"""Plane algebraic curves with rational coefficients, polar curves and tangent lines.

Polynomials are dictionaries from exponent tuples to :class:`Fraction`.  The
arithmetic needed here (evaluation, substitution, derivatives) is done
directly; factorization and root counting are delegated to sympy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import sympy

from .kernel import (
    AffinePoint,
    GeometryError,
    Line,
    ProjPoint,
    Rational,
    as_fraction,
    line_through,
)

X, Y, Z = sympy.symbols("x y z")


class ZeroPolynomialError(GeometryError):
    pass


class DegenerateConicError(GeometryError):
    pass


class DegeneratePolarError(GeometryError):
    """The polar polynomial vanishes identically."""


def _clean(coeffs: Mapping) -> dict:
    out = {}
    for mono, c in coeffs.items():
        c = as_fraction(c)
        if c:
            out[tuple(mono)] = out.get(tuple(mono), Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def _primitive_scale(coeffs: dict) -> dict:
    den = math.lcm(*(c.denominator for c in coeffs.values()))
    ints = {m: int(c * den) for m, c in coeffs.items()}
    g = math.gcd(*ints.values())
    lead = ints[max(ints, key=lambda m: (sum(m), m))]
    s = g if lead > 0 else -g
    return {m: Fraction(v // s) for m, v in ints.items()}


@dataclass(frozen=True, eq=False)
class PolyCurve:
    """Affine curve f(x, y) = 0; ``coeffs[(i, j)]`` is the coefficient of x^i y^j."""

    coeffs: Mapping[tuple[int, int], Fraction]

    def __post_init__(self):
        c = _clean(self.coeffs)
        if not c:
            raise ZeroPolynomialError("the zero polynomial defines no curve")
        object.__setattr__(self, "coeffs", c)

    def __eq__(self, other):
        return isinstance(other, PolyCurve) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @classmethod
    def parse(cls, text: str) -> "PolyCurve":
        return cls.from_sympy(sympy.sympify(text, locals={"x": X, "y": Y}))

    @classmethod
    def from_sympy(cls, expr) -> "PolyCurve":
        poly = sympy.Poly(sympy.expand(expr), X, Y, domain="QQ")
        return cls({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})

    def to_sympy(self):
        return sum(sympy.Rational(c.numerator, c.denominator) * X**i * Y**j for (i, j), c in self.coeffs.items())

    def to_poly(self) -> sympy.Poly:
        return sympy.Poly(self.to_sympy(), X, Y, domain="QQ")

    @property
    def degree(self) -> int:
        return max(i + j for i, j in self.coeffs)

    def evaluate(self, x: Rational, y: Rational) -> Fraction:
        x, y = as_fraction(x), as_fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self.coeffs.items()), Fraction(0))

    def contains(self, p: AffinePoint) -> bool:
        return self.evaluate(p.x, p.y) == 0

    def translate(self, dx: Rational, dy: Rational) -> "PolyCurve":
        """The polynomial f(x + dx, y + dy)."""
        dx, dy = as_fraction(dx), as_fraction(dy)
        out: dict = {}
        for (i, j), c in self.coeffs.items():
            for a in range(i + 1):
                ca = math.comb(i, a) * dx ** (i - a)
                for b in range(j + 1):
                    key = (a, b)
                    out[key] = out.get(key, Fraction(0)) + c * ca * math.comb(j, b) * dy ** (j - b)
        return PolyCurve(out)

    def form(self, degree: int) -> dict:
        return {m: c for m, c in self.coeffs.items() if sum(m) == degree}

    def primitive(self) -> "PolyCurve":
        """Coprime integer coefficients, leading monomial (graded, then lex) positive."""
        return PolyCurve(_primitive_scale(self.coeffs))

    def square_free(self) -> "PolyCurve":
        return PolyCurve.from_sympy(sympy.sqf_part(self.to_poly()).as_expr()).primitive()

    def factors(self) -> list[tuple["PolyCurve", int]]:
        """Irreducible factors over the rationals, with multiplicity."""
        _, facs = sympy.factor_list(self.to_sympy(), X, Y)
        return [(PolyCurve.from_sympy(f).primitive(), k) for f, k in facs if sympy.Poly(f, X, Y).total_degree() > 0]

    def __str__(self) -> str:
        return str(self.to_sympy())


@dataclass(frozen=True, eq=False)
class HomPolyCurve:
    """Homogeneous F(x, y, z); ``coeffs[(i, j, k)]`` is the coefficient of x^i y^j z^k."""

    coeffs: Mapping[tuple[int, int, int], Fraction]

    def __post_init__(self):
        c = _clean(self.coeffs)
        if not c:
            raise ZeroPolynomialError("the zero polynomial defines no curve")
        if len({sum(m) for m in c}) != 1:
            raise GeometryError("polynomial is not homogeneous")
        object.__setattr__(self, "coeffs", c)

    def __eq__(self, other):
        return isinstance(other, HomPolyCurve) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @classmethod
    def parse(cls, text: str) -> "HomPolyCurve":
        return cls.from_sympy(sympy.sympify(text, locals={"x": X, "y": Y, "z": Z}))

    @classmethod
    def from_sympy(cls, expr) -> "HomPolyCurve":
        poly = sympy.Poly(sympy.expand(expr), X, Y, Z, domain="QQ")
        return cls({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})

    def to_sympy(self):
        return sum(
            sympy.Rational(c.numerator, c.denominator) * X**i * Y**j * Z**k for (i, j, k), c in self.coeffs.items()
        )

    @property
    def degree(self) -> int:
        return sum(next(iter(self.coeffs)))

    def evaluate(self, p: ProjPoint | Iterable[Rational]) -> Fraction:
        x, y, z = (as_fraction(v) for v in p)
        return sum((c * x**i * y**j * z**k for (i, j, k), c in self.coeffs.items()), Fraction(0))

    def partial(self, var: int) -> dict:
        out: dict = {}
        for mono, c in self.coeffs.items():
            if mono[var]:
                m = list(mono)
                m[var] -= 1
                out[tuple(m)] = out.get(tuple(m), Fraction(0)) + c * mono[var]
        return out

    def __str__(self) -> str:
        return str(self.to_sympy())


def homogenize(C: PolyCurve) -> HomPolyCurve:
    d = C.degree
    return HomPolyCurve({(i, j, d - i - j): c for (i, j), c in C.coeffs.items()})


def dehomogenize(H: HomPolyCurve, chart: str = "z") -> PolyCurve:
    """Restrict to the affine chart where ``chart`` equals 1; the other two variables become x, y."""
    drop = "xyz".index(chart)
    keep = [i for i in range(3) if i != drop]
    out: dict = {}
    for mono, c in H.coeffs.items():
        key = (mono[keep[0]], mono[keep[1]])
        out[key] = out.get(key, Fraction(0)) + c
    return PolyCurve(out)


def polar_curve(H: HomPolyCurve, p: ProjPoint | Iterable[Rational]) -> HomPolyCurve:
    """p1*dF/dx + p2*dF/dy + p3*dF/dz, of degree deg(F) - 1."""
    if H.degree < 2:
        raise GeometryError("polar curves are defined here for degree >= 2")
    weights = [as_fraction(v) for v in p]
    out: dict = {}
    for var, w in enumerate(weights):
        if w:
            for mono, c in H.partial(var).items():
                out[mono] = out.get(mono, Fraction(0)) + w * c
    try:
        return HomPolyCurve(out)
    except ZeroPolynomialError:
        raise DegeneratePolarError(f"D_p(F) vanishes identically for p = {tuple(weights)}") from None


def curve_membership(C: PolyCurve, p: AffinePoint) -> bool:
    return C.contains(p)


def conic_matrix(C: PolyCurve) -> list[list[Fraction]]:
    """Symmetric 3x3 matrix M with F(v) = v^T M v for the homogenized conic."""
    if C.degree != 2:
        raise GeometryError(f"expected a conic, got degree {C.degree}")
    g = lambda i, j: C.coeffs.get((i, j), Fraction(0))  # noqa: E731
    return [
        [g(2, 0), g(1, 1) / 2, g(1, 0) / 2],
        [g(1, 1) / 2, g(0, 2), g(0, 1) / 2],
        [g(1, 0) / 2, g(0, 1) / 2, g(0, 0)],
    ]


def _bilinear(M, u, v) -> Fraction:
    return sum(u[i] * M[i][j] * v[j] for i in range(3) for j in range(3))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class TangentLines:
    """Real tangent lines from a point to a conic.

    ``count`` is always certified.  ``lines`` and ``points`` are filled only
    when the tangency points are rational (``exact``).
    """

    count: int
    polar: Line
    lines: tuple[Line, ...] = ()
    points: tuple[ProjPoint, ...] = ()
    exact: bool = True


def tangent_lines_to_conic(C: PolyCurve, p: AffinePoint) -> TangentLines:
    M = conic_matrix(C)
    det = (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )
    if det == 0:
        raise DegenerateConicError(f"{C} is a reducible conic")
    P = (p.x, p.y, Fraction(1))
    # polar line D_p(F) = 2 (M P) . v
    ell = tuple(2 * sum(M[i][j] * P[j] for j in range(3)) for i in range(3))
    polar = Line.from_coefficients(ell[0], ell[1], -ell[2])

    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    cands = [c for c in (_cross(ell, e) for e in basis) if any(c)]
    A1 = cands[0]
    A2 = next(c for c in cands[1:] if any(_cross(A1, c)))
    alpha, gamma = _bilinear(M, A1, A1), _bilinear(M, A2, A2)
    beta = 2 * _bilinear(M, A1, A2)
    disc = beta * beta - 4 * alpha * gamma
    count = 2 if disc > 0 else (1 if disc == 0 else 0)
    if count == 0:
        return TangentLines(0, polar)

    root = _rational_sqrt(disc)
    if root is None:
        return TangentLines(count, polar, exact=False)
    params = []  # [s:t] with alpha s^2 + beta s t + gamma t^2 = 0
    if alpha == 0:
        params.append((Fraction(1), Fraction(0)))
        if beta:
            params.append((-gamma, beta))
    else:
        for r in {root, -root}:
            params.append(((-beta + r) / (2 * alpha), Fraction(1)))
    points, lines = [], []
    for s, t in params:
        Q = ProjPoint.of(*(s * A1[i] + t * A2[i] for i in range(3)))
        points.append(Q)
        lines.append(polar if Q == ProjPoint.from_affine(p) else line_through(p, Q))
    return TangentLines(count, polar, tuple(lines), tuple(points))


def tangent_count_upper(C: PolyCurve, p: AffinePoint | None = None) -> int:
    """Bound on lines through any point that are tangent to C or contained in it.

    Rational linear factors are stripped first; an undetected irrational linear
    factor only makes the bound weaker, never wrong.
    """
    sqf = C.square_free()
    d = sqf.degree
    if d < 2:
        raise GeometryError("tangent bound needs degree >= 2")
    n_lines = sum(1 for f, _ in sqf.factors() if f.degree == 1)
    e = d - n_lines
    return e * (e - 1) + (d - e)


def count_tangent_lines(C: PolyCurve, p: AffinePoint) -> int:
    """Exact number of real lines through p tangent to C (projectively) or contained in C.

    A line through p in direction (u, v) is special when the restriction of
    the square-free curve to it has a repeated root; the directions are the
    real projective roots of the discriminant form D(u, v).
    """
    f = C.square_free().translate(p.x, p.y).to_sympy()
    u, v, lam = sympy.symbols("u v lam")
    restricted = sympy.Poly(sympy.expand(f.subs({X: lam * u, Y: lam * v}, simultaneous=True)), lam)
    d = C.square_free().degree
    coeffs = [restricted.coeff_monomial(lam**k) for k in range(d, -1, -1)]
    generic = sympy.Poly(sum(sympy.Symbol(f"c{k}") * lam ** (d - k) for k in range(d + 1)), lam)
    disc_generic = sympy.discriminant(generic)
    D = sympy.expand(disc_generic.subs({sympy.Symbol(f"c{k}"): coeffs[k] for k in range(d + 1)}, simultaneous=True))
    if D == 0:
        raise GeometryError("every line through p is special; p lies on a component")
    Dpoly = sympy.Poly(D, u, v)
    total = Dpoly.total_degree()
    s = sympy.Symbol("s")
    dehom = sympy.Poly(D.subs({u: s, v: 1}), s)
    count = 0
    if dehom.degree() > 0:
        count += len(sympy.Poly(sympy.sqf_part(dehom.as_expr()), s).real_roots())
    if dehom.degree() < total:
        count += 1  # the vertical direction (u, v) = (1, 0)
    return count
