"""Ordinary lines, non-q ordinary lines and ordinary circles.

Three routes lead to the same numbers:

* exact rational point sets, counted by per-pair brute force or by inverting
  at every point and counting ordinary lines of the image;
* embedded (interval) realizations of symmetric configurations, counted by
  the same two strategies on certified signs;
* symmetric configurations, counted from index arithmetic with an interval
  fallback for incidences the symmetry does not decide.
"""

from __future__ import annotations

import enum
import itertools
import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .configs import (
    ConfigError,
    Incidence,
    SymmetricConfig,
    SymPoint,
    make_boroczky,
    member,
    modify_config,
    sym_collinear,
    sym_cocircular,
)
from .embedding import (
    EmbeddedConfig,
    UndecidedIncidenceError,
    embed,
    embedded_circles,
    embedded_lines,
    embedded_ordinary_circles,
    embedded_ordinary_circles_by_inversion,
)
from .fastcount import brute_circle_tally, inversion_circle_tally, line_tally
from .inversion import InversionMap, invert_point_set
from .kernel import (
    AffinePoint,
    GeneralizedCircle,
    GeometryError,
    Line,
    PointSet,
    ProjPoint,
    cocircular,
    integer_coordinates,
    line_through,
    orient,
    primitive,
)


class Algorithm(enum.Enum):
    BRUTE = "brute"
    INVERSION = "inversion"
    SYMMETRIC = "symmetric"


class DivisibilityError(ArithmeticError):
    """Per-point ordinary circle counts did not sum to a multiple of 3."""


class PointInSetError(GeometryError):
    """The distinguished point q belongs to the set."""


@dataclass(frozen=True)
class IncidenceCensus:
    """Multiplicity of every spanned line (>= 2 points) and circle (>= 3 points)."""

    lines: Mapping[Line, int] = field(default_factory=dict)
    circles: Mapping[GeneralizedCircle, int] = field(default_factory=dict)

    def lines_with(self, k: int) -> int:
        return sum(1 for c in self.lines.values() if c == k)

    def circles_with(self, k: int) -> int:
        return sum(1 for c in self.circles.values() if c == k)


@dataclass
class CountReport:
    """Counts for one point set.  ``per_point`` maps each point to oc_p."""

    n: int
    algorithm: Algorithm
    ordinary_lines: int | None = None
    ordinary_circles: int | None = None
    per_point: dict = field(default_factory=dict)
    three_point_lines: int | None = None
    ol_q: int | None = None
    q: Any = None
    degenerate: bool = False
    elapsed: float = 0.0

    def __post_init__(self):
        if self.ordinary_circles is not None and self.per_point:
            total = sum(self.per_point.values())
            if total != 3 * self.ordinary_circles:
                raise DivisibilityError(
                    f"3 * {self.ordinary_circles} ordinary circles != {total} summed over points"
                )

    def body(self) -> dict:
        """JSON-ready report without timing, with points in a stable order."""
        per_point = sorted((str(p), c) for p, c in self.per_point.items())
        return {
            "n": self.n,
            "algorithm": self.algorithm.value,
            "ordinary_lines": self.ordinary_lines,
            "ordinary_circles": self.ordinary_circles,
            "three_point_lines": self.three_point_lines,
            "ol_q": self.ol_q,
            "q": None if self.q is None else str(self.q),
            "degenerate": self.degenerate,
            "per_point": dict(per_point),
        }

    def to_json(self) -> dict:
        return {**self.body(), "elapsed": round(self.elapsed, 6)}


# exact rational point sets -------------------------------------------------


def _line_members(P: PointSet) -> dict[Line, set[int]]:
    pts = P.members()
    if len(pts) < 2:
        raise GeometryError("a line census needs at least two points")
    on: dict[Line, set[int]] = defaultdict(set)
    for i, j in itertools.combinations(range(len(pts)), 2):
        key = line_through(pts[i], pts[j])
        on[key].update((i, j))
    return on


def line_census(P: PointSet) -> IncidenceCensus:
    """Every line spanned by P, including the line at infinity, with its multiplicity."""
    return IncidenceCensus(lines={line: len(idx) for line, idx in _line_members(P).items()})


def ordinary_lines(P: PointSet) -> int:
    return line_census(P).lines_with(2)


def _as_proj(q) -> ProjPoint:
    if isinstance(q, ProjPoint):
        return q
    return ProjPoint.from_affine(q if isinstance(q, AffinePoint) else AffinePoint(*map(Fraction, q)))


def non_q_ordinary_lines(P: PointSet, q) -> int:
    """Ordinary lines of P that miss the point q (affine or at infinity)."""
    Q = _as_proj(q)
    if Q in P:
        raise PointInSetError(f"{q} belongs to the point set")
    return sum(1 for line, c in line_census(P).lines.items() if c == 2 and not line.contains(Q))


def _scaled_circle(pts: Sequence[tuple[int, int]], i: int, j: int, k: int) -> tuple[int, int, int, int] | None:
    """Primitive (a, d, e, f) of the circle through three integer points, None if collinear."""
    (x1, y1), (x2, y2), (x3, y3) = pts[i], pts[j], pts[k]
    a = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
    if a == 0:
        return None
    w1, w2, w3 = x1 * x1 + y1 * y1, x2 * x2 + y2 * y2, x3 * x3 + y3 * y3
    d = -(w1 * (y2 - y3) + w2 * (y3 - y1) + w3 * (y1 - y2))
    e = w1 * (x2 - x3) + w2 * (x3 - x1) + w3 * (x1 - x2)
    f = -(w1 * (x2 * y3 - x3 * y2) + w2 * (x3 * y1 - x1 * y3) + w3 * (x1 * y2 - x2 * y1))
    key = primitive((a, d, e, f))
    return key if key[0] > 0 else tuple(-v for v in key)


def _circle_members(P: PointSet) -> dict[tuple, set[int]]:
    P.require_affine()
    if P.n < 3:
        raise GeometryError("a circle census needs at least three points")
    pts = integer_coordinates(P.affine)
    on: dict[tuple, set[int]] = defaultdict(set)
    for i, j in itertools.combinations(range(len(pts)), 2):
        for k in range(j + 1, len(pts)):
            key = _scaled_circle(pts, i, j, k)
            if key is not None:
                on[key].update((i, j, k))
    return on


def circle_census(P: PointSet) -> IncidenceCensus:
    """Every circle through a non-collinear triple of P, with its multiplicity."""
    den = math.lcm(*(c.denominator for p in P.affine for c in p)) if P.affine else 1
    circles = {}
    for (a, d, e, f), idx in _circle_members(P).items():
        # undo the homothety by den: X = den * x
        circles[GeneralizedCircle.from_coefficients(a * den * den, d * den, e * den, f)] = len(idx)
    return IncidenceCensus(circles=circles)


def ordinary_circles_through(P: PointSet, p: AffinePoint) -> int:
    """oc_p by direct enumeration of the circles through p."""
    i = P.affine.index(p)
    return sum(1 for idx in _circle_members(P).values() if len(idx) == 3 and i in idx)


def inverted_ordinary_lines(P: PointSet, p: AffinePoint) -> int:
    """ol_p(I_p(P - p)), exactly: ordinary lines of the inverted set that miss p."""
    rest = PointSet(tuple(q for q in P.affine if q != p))
    image = invert_point_set(InversionMap(p), rest)
    return non_q_ordinary_lines(image, p)


def is_degenerate(P: PointSet) -> bool:
    """All points on one line or on one circle."""
    pts = P.affine
    if P.infinity or len(pts) < 4:
        return len(pts) >= 3 and not P.infinity and all(orient(pts[0], pts[1], r) == 0 for r in pts[2:])
    a, b = pts[0], pts[1]
    if all(orient(a, b, r) == 0 for r in pts[2:]):
        return True
    c = next(r for r in pts[2:] if orient(a, b, r) != 0)
    return all(cocircular(a, b, c, r) == 0 for r in pts if r not in (a, b, c))


def _line_stats(P: PointSet) -> tuple[int, int]:
    sizes = list(line_tally(integer_coordinates(P.affine)).values())
    return sizes.count(2), sizes.count(3)


def _oc_from_tally(per_point: dict, algorithm: Algorithm) -> int:
    total3 = sum(per_point.values())
    if total3 % 3:
        raise DivisibilityError(f"{algorithm.value}: per-point counts sum to {total3}, not a multiple of 3")
    return total3 // 3


def ordinary_circles_brute(P: PointSet | EmbeddedConfig) -> CountReport:
    """Ordinary circles by per-pair aggregation of third points."""
    t0 = time.perf_counter()
    if isinstance(P, EmbeddedConfig):
        oc, per_point = embedded_ordinary_circles(P)
        ol, tp = _embedded_line_stats(P)
        return CountReport(P.n, Algorithm.BRUTE, ol, oc, per_point, tp, elapsed=time.perf_counter() - t0)
    P.require_affine()
    if P.n < 3:
        raise GeometryError("ordinary circles need at least three points")
    pts = integer_coordinates(P.affine)
    total3, tally = brute_circle_tally(pts)
    per_point = {}
    for p, t in zip(P.affine, tally):
        if t % 3:
            raise DivisibilityError(f"brute tally {t} at {p} is not a multiple of 3")
        per_point[p] = t // 3
    oc = _oc_from_tally(per_point, Algorithm.BRUTE)
    if 3 * oc != total3:
        raise DivisibilityError("pair scan total disagrees with the per-point tallies")
    ol, tp = _line_stats(P)
    return CountReport(
        P.n, Algorithm.BRUTE, ol, oc, per_point, tp, degenerate=is_degenerate(P), elapsed=time.perf_counter() - t0
    )


def ordinary_circles_by_inversion(P: PointSet | EmbeddedConfig) -> CountReport:
    """Ordinary circles as (sum over p of ol_p(I_p(P - p))) / 3."""
    t0 = time.perf_counter()
    if isinstance(P, EmbeddedConfig):
        oc, per_point = embedded_ordinary_circles_by_inversion(P)
        ol, tp = _embedded_line_stats(P)
        return CountReport(P.n, Algorithm.INVERSION, ol, oc, per_point, tp, elapsed=time.perf_counter() - t0)
    P.require_affine()
    if P.n < 3:
        raise GeometryError("ordinary circles need at least three points")
    per_point = dict(zip(P.affine, inversion_circle_tally(integer_coordinates(P.affine))))
    oc = _oc_from_tally(per_point, Algorithm.INVERSION)
    ol, tp = _line_stats(P)
    return CountReport(
        P.n, Algorithm.INVERSION, ol, oc, per_point, tp, degenerate=is_degenerate(P), elapsed=time.perf_counter() - t0
    )


def ordinary_circles(P: PointSet | EmbeddedConfig, algorithm: Algorithm | str = Algorithm.INVERSION) -> CountReport:
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.BRUTE:
        return ordinary_circles_brute(P)
    if algorithm is Algorithm.INVERSION:
        return ordinary_circles_by_inversion(P)
    raise ValueError("the symmetric algorithm takes a SymmetricConfig; use count_symmetric")


def _embedded_line_stats(E: EmbeddedConfig) -> tuple[int, int]:
    sizes = [len(line) for line in embedded_lines(E)]
    return sizes.count(2), sizes.count(3)


# symmetric configurations -----------------------------------------------


class SymmetricOracle:
    """Collinearity and cocircularity on a SymmetricConfig.

    Index arithmetic decides what the symmetry forces; the remaining cases go
    to the interval realization, and an uncertified sign raises.
    """

    def __init__(self, C: SymmetricConfig, precision: int = 256):
        self.C = C
        self.precision = precision
        self._embedded: EmbeddedConfig | None = None

    @property
    def embedded(self) -> EmbeddedConfig:
        if self._embedded is None:
            self._embedded = embed(self.C, self.precision)
        return self._embedded

    def collinear(self, a: SymPoint, b: SymPoint, c: SymPoint) -> bool:
        verdict = sym_collinear(self.C, a, b, c)
        if verdict is not Incidence.RADIUS_DEPENDENT:
            return verdict is Incidence.TRUE
        s = self.embedded.orient_sign(a, b, c)
        if s is None:
            raise UndecidedIncidenceError(f"collinearity of {a}, {b}, {c} is not certified")
        return s == 0

    def cocircular(self, a: SymPoint, b: SymPoint, c: SymPoint, d: SymPoint) -> bool:
        return sym_cocircular(self.C, a, b, c, d) is Incidence.TRUE

    def lines(self, labels: Sequence[SymPoint] | None = None) -> list[frozenset]:
        pts = list(self.C.points if labels is None else labels)
        seen: set = set()
        out = []
        for a, b in itertools.combinations(pts, 2):
            if frozenset((a, b)) in seen:
                continue
            on = {a, b} | {c for c in pts if c != a and c != b and self.collinear(a, b, c)}
            seen.update(frozenset(pair) for pair in itertools.combinations(on, 2))
            out.append(frozenset(on))
        return out

    def on_line(self, q: SymPoint, line: frozenset) -> bool:
        a, b = sorted(line, key=str)[:2]
        return q in line or self.collinear(q, a, b)


def _symmetric_circles(oracle: SymmetricOracle) -> tuple[int, dict]:
    """Triples with no fourth cocircular member (a collinear triple counts too)."""
    pts = list(oracle.C.points)
    per_point = {p: 0 for p in pts}
    total = 0
    for t in itertools.combinations(pts, 3):
        if any(oracle.cocircular(*t, d) for d in pts if d not in t):
            continue
        total += 1
        for p in t:
            per_point[p] += 1
    return total, per_point


def count_symmetric(C: SymmetricConfig, precision: int = 256, q: SymPoint | None = None) -> CountReport:
    """Counts on a symmetric configuration from index arithmetic.

    Ordinary circles are only counted when every point lies on a circle
    orbit; the triple scan overcounts by the exactly-3-point lines, which are
    taken from the certified line census and subtracted.
    """
    t0 = time.perf_counter()
    oracle = SymmetricOracle(C, precision)
    lines = oracle.lines()
    ordinary = [line for line in lines if len(line) == 2]
    three = [line for line in lines if len(line) == 3]
    oc, per_point = None, {}
    if all(p.on_circle for p in C.points):
        oc, per_point = _symmetric_circles(oracle)
        oc -= len(three)
        for line in three:
            for p in line:
                per_point[p] -= 1
    ol_q = None
    if q is not None:
        q = C.normalize(q)
        if q in C:
            raise PointInSetError(f"{q} belongs to the configuration")
        ol_q = sum(1 for line in ordinary if not oracle.on_line(q, line))
    return CountReport(
        C.size,
        Algorithm.SYMMETRIC,
        len(ordinary),
        oc,
        per_point,
        len(three),
        ol_q=ol_q,
        q=q,
        elapsed=time.perf_counter() - t0,
    )


def ordinary_lines_symmetric(C: SymmetricConfig) -> int:
    return sum(1 for line in SymmetricOracle(C).lines() if len(line) == 2)


def non_q_ordinary_lines_symmetric(C: SymmetricConfig, q: SymPoint) -> int:
    return count_symmetric(C, q=q).ol_q


# line-circle variant ------------------------------------------------------


@dataclass(frozen=True)
class LineCircleCheck:
    """Ordinary circles of an inverted construction against its pre-image."""

    image_circles: int
    preimage_circles: int
    preimage_circles_through_center: int
    three_point_lines_off_center: int

    @property
    def predicted(self) -> int:
        return self.preimage_circles - self.preimage_circles_through_center + self.three_point_lines_off_center

    @property
    def holds(self) -> bool:
        return self.image_circles == self.predicted


def linecircle_check(E: EmbeddedConfig) -> LineCircleCheck:
    """Count the image of a line-circle construction and explain it from the pre-image.

    Circles and lines missing the center map to circles, so the image has
    one ordinary circle per pre-image ordinary circle or 3-point line that
    avoids the center.
    """
    if len(E.inversions) != 1:
        raise ConfigError("expected a single inversion")
    (center,) = E.inversions
    pre = EmbeddedConfig(E.source, E.labels, E.precision, E.transform)
    oc_img, _ = embedded_ordinary_circles(E)
    circles = [c for c in embedded_circles(pre) if len(c) == 3]
    through = sum(1 for c in circles if pre.cocircular(*sorted(c, key=str), center))
    three = [line for line in embedded_lines(pre) if len(line) == 3]
    off = sum(1 for line in three if not pre.collinear(center, *sorted(line, key=str)[:2]))
    return LineCircleCheck(oc_img, len(circles), through, off)



# non-q ordinary line checks per type ------------------------------------

THEOREM_TYPES = ("a", "b", "c", "d", "e", "f")

# main term as a fraction of n, per type
MAIN_TERM = {
    "a": Fraction(1, 2),
    "b": Fraction(3, 4),
    "c": Fraction(3, 4),
    "d": Fraction(1, 2),
    "e": Fraction(3, 4),
    "f": Fraction(3, 4),
}


@dataclass(frozen=True)
class OlqCheck:
    ctype: str
    m: int
    n: int
    q: SymPoint
    ol_q: int
    main_term: Fraction

    @property
    def deviation(self) -> Fraction:
        return self.ol_q - self.main_term

    def to_json(self) -> dict:
        return {
            "type": self.ctype,
            "m": self.m,
            "n": self.n,
            "q": str(self.q),
            "ol_q": self.ol_q,
            "main_term": str(self.main_term),
            "deviation": str(self.deviation),
        }


def theorem_instance(ctype: str, m: int, q: SymPoint | None = None) -> tuple[SymmetricConfig, SymPoint]:
    """The representative set of each type, built from X_2m, and its default q.

    (a) X_2m minus q; (b) X_2m minus a point at infinity, q a half-step point
    of the circle; (c) X_2m plus the origin; (d) X_2m; (e) X_2m minus a point
    at infinity and minus q; (f) X_2m plus the origin minus q.  Where q is not
    a removed member it defaults to the half-step point at angle pi/m.
    """
    X = make_boroczky(m)
    removed_q = member(1, 0)
    off = SymPoint(1, 1)
    far = member("inf", m // 2)
    if ctype == "a":
        C, q0 = modify_config(X, [("remove", removed_q)]), removed_q
    elif ctype == "b":
        C, q0 = modify_config(X, [("remove", far)]), off
    elif ctype == "c":
        C, q0 = modify_config(X, [("add_origin",)]), off
    elif ctype == "d":
        C, q0 = X, off
    elif ctype == "e":
        C, q0 = modify_config(X, [("remove", far), ("remove", removed_q)]), removed_q
    elif ctype == "f":
        C, q0 = modify_config(X, [("add_origin",), ("remove", removed_q)]), removed_q
    else:
        raise ValueError(f"unknown type {ctype!r}; expected one of {THEOREM_TYPES}")
    return C, (q0 if q is None else q)


def theorem_check_ol(ctype: str, m: int, q: SymPoint | None = None) -> OlqCheck:
    C, q = theorem_instance(ctype, m, q)
    report = count_symmetric(C, q=q)
    return OlqCheck(ctype, m, C.size, q, report.ol_q, MAIN_TERM[ctype] * C.size)


__all__ = [
    "Algorithm",
    "CountReport",
    "DivisibilityError",
    "IncidenceCensus",
    "LineCircleCheck",
    "OlqCheck",
    "PointInSetError",
    "SymmetricOracle",
    "THEOREM_TYPES",
    "circle_census",
    "count_symmetric",
    "inverted_ordinary_lines",
    "is_degenerate",
    "line_census",
    "linecircle_check",
    "non_q_ordinary_lines",
    "non_q_ordinary_lines_symmetric",
    "ordinary_circles",
    "ordinary_circles_brute",
    "ordinary_circles_by_inversion",
    "ordinary_circles_through",
    "ordinary_lines",
    "ordinary_lines_symmetric",
    "theorem_check_ol",
    "theorem_instance",
]
