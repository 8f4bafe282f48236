"""Verification suites: every published count plus seeded property checks.

Each check yields one record {check, expected, actual, pass}.  The suites are
used by ``ordcircles verify`` and by the acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

import sympy

from . import golden
from .configs import ORIGIN, make_boroczky, make_even_construction, make_odd_construction
from .counting import (
    THEOREM_TYPES,
    count_symmetric,
    linecircle_check,
    ordinary_circles_brute,
    ordinary_circles_by_inversion,
    theorem_check_ol,
)
from .curves import (
    HomPolyCurve,
    PolyCurve,
    X,
    Y,
    count_tangent_lines,
    homogenize,
    polar_curve,
    tangent_count_upper,
    tangent_lines_to_conic,
)
from .embedding import embed, make_linecircle_construction
from .inversion import InversionMap, invert_curve, invert_generalized_circle, invert_point
from .io import exact_point_set
from .kernel import (
    AffinePoint,
    GeneralizedCircle,
    GeometryError,
    ProjPoint,
    circle_through,
    line_through,
    orient,
    point,
)
from .sampling import random_rational_points


@dataclass(frozen=True)
class Check:
    check: str
    expected: Any
    actual: Any
    passed: bool

    def to_json(self) -> dict:
        return {"check": self.check, "expected": self.expected, "actual": self.actual, "pass": self.passed}


def _eq(name: str, expected, actual) -> Check:
    return Check(name, expected, actual, expected == actual)


# constructions -------------------------------------------------------------


def even_checks() -> Iterator[Check]:
    for n in golden.EVEN_SIZES:
        claimed = golden.even_closed_form(n)
        sym = count_symmetric(make_even_construction(n))
        emb = ordinary_circles_brute(embed(make_even_construction(n)))
        yield _eq(f"even_n{n}_oc", claimed, sym.ordinary_circles)
        yield _eq(f"even_n{n}_oc_embedded", claimed, emb.ordinary_circles)
        yield _eq(f"even_n{n}_oc_oracle", golden.EVEN_ORACLE[n], sym.ordinary_circles)
        yield _eq(f"even_n{n}_three_point_lines", 0, sym.three_point_lines)


def odd_checks() -> Iterator[Check]:
    lo, hi = golden.ODD_RATIO_WINDOW
    for n in golden.ODD_SIZES:
        for orbit in (1, 2):
            C = make_odd_construction(n, removed=(orbit, 0))
            r = count_symmetric(C)
            yield _eq(f"odd_n{n}_remove{orbit}_oc", golden.ODD_ORACLE[n], r.ordinary_circles)
            yield _eq(f"odd_n{n}_remove{orbit}_three_point_lines", golden.ODD_THREE_POINT_LINES[n], r.three_point_lines)
        ratio = golden.ODD_ORACLE[n] / n**2
        yield Check(f"odd_n{n}_ratio", f"[{lo}, {hi}]", round(ratio, 4), lo <= ratio <= hi)


def boroczky_checks() -> Iterator[Check]:
    for m in golden.BOROCZKY_MS:
        X2m = make_boroczky(m)
        r = count_symmetric(X2m, q=ORIGIN if m <= 12 else None)
        yield _eq(f"boroczky_m{m}_ol", m, r.ordinary_lines)
        if m <= 12:
            yield _eq(f"boroczky_m{m}_olq_origin", m, r.ol_q)


def linecircle_checks(sizes=(8, 9, 10, 11, 12, 13, 14, 15)) -> Iterator[Check]:
    for n in sizes:
        r = linecircle_check(make_linecircle_construction(n))
        yield _eq(f"linecircle_n{n}_oc", r.predicted, r.image_circles)
        if n % 2 == 0:
            yield _eq(f"linecircle_n{n}_preimage_three_point_lines", 0, r.three_point_lines_off_center)


def exact_construction_checks() -> Iterator[Check]:
    """The rational member of each family (m = 4) through both exact counters."""
    for name, C in (("even_n8", make_even_construction(8)), ("odd_n7", make_odd_construction(7))):
        P = exact_point_set(C)
        a, b = ordinary_circles_brute(P), ordinary_circles_by_inversion(P)
        yield _eq(f"{name}_exact_brute_vs_inversion", a.ordinary_circles, b.ordinary_circles)
        yield _eq(f"{name}_exact_vs_symmetric", count_symmetric(C).ordinary_circles, a.ordinary_circles)


def constructions_suite() -> Iterator[Check]:
    yield from even_checks()
    yield from odd_checks()
    yield from boroczky_checks()
    yield from linecircle_checks()
    yield from exact_construction_checks()


# inversion -----------------------------------------------------------------


def _rand_q(rng: random.Random, span: int = 20, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def _rand_point(rng: random.Random) -> AffinePoint:
    return AffinePoint(_rand_q(rng), _rand_q(rng))


def points_on(G: GeneralizedCircle, anchor: AffinePoint, count: int, rng: random.Random) -> list[AffinePoint]:
    """Rational points of a line or circle through the rational point ``anchor``."""
    out: list[AffinePoint] = []
    while len(out) < count:
        t = _rand_q(rng)
        if G.is_line:
            # direction (e, -d) runs along d*x + e*y + f = 0
            q = AffinePoint(anchor.x + t * G.e, anchor.y - t * G.d)
        else:
            a, d, e = G.a, G.d, G.e
            s = -(2 * a * (anchor.x + t * anchor.y) + d + e * t) / (a * (1 + t * t))
            q = AffinePoint(anchor.x + s, anchor.y + s * t)
        if q != anchor and q not in out:
            out.append(q)
    return out


def involution_check(count: int = 1000, seed: int = 2024) -> Check:
    rng = random.Random(seed)
    pts = random_rational_points(count, seed)
    bad = 0
    for q in pts:
        I = InversionMap(_rand_point(rng))
        if q == I.center:
            continue
        bad += invert_point(I, invert_point(I, q)) != q
    return _eq(f"inversion_involution_{count}_points", 0, bad)


CARRIER_CASES = (
    "line_through_center",
    "line_avoiding_center",
    "circle_through_center",
    "circle_avoiding_center",
)


def carrier_case(G: GeneralizedCircle, c: AffinePoint) -> str:
    kind = "line" if G.is_line else "circle"
    where = "through_center" if G.contains(c) else "avoiding_center"
    return f"{kind}_{where}"


# how each case maps under inversion
CARRIER_IMAGE = {
    "line_through_center": "line_through_center",
    "line_avoiding_center": "circle_through_center",
    "circle_through_center": "line_avoiding_center",
    "circle_avoiding_center": "circle_avoiding_center",
}


def random_carrier(case: str, c: AffinePoint, rng: random.Random) -> tuple[GeneralizedCircle, AffinePoint]:
    """A carrier of the requested case and a rational point on it (other than c)."""
    while True:
        p, q, r = (_rand_point(rng) for _ in range(3))
        if len({p, q, r, c}) < 4:
            continue
        if case == "line_through_center":
            return GeneralizedCircle.from_line(line_through(c, p)), p
        if case == "line_avoiding_center" and orient(p, q, c):
            return GeneralizedCircle.from_line(line_through(p, q)), p
        if case == "circle_through_center" and orient(c, p, q):
            return circle_through(c, p, q), p
        if case == "circle_avoiding_center" and orient(p, q, r):
            G = circle_through(p, q, r)
            if not G.contains(c):
                return G, p


def carrier_table_check(count: int = 100, seed: int = 7) -> Iterator[Check]:
    rng = random.Random(seed)
    for case in CARRIER_CASES:
        wrong = 0
        for _ in range(count // len(CARRIER_CASES)):
            c = _rand_point(rng)
            G, anchor = random_carrier(case, c, rng)
            I = InversionMap(c)
            H = invert_generalized_circle(I, G)
            pts = [q for q in points_on(G, anchor, 5, rng) if q != c]
            ok = carrier_case(G, c) == case and carrier_case(H, c) == CARRIER_IMAGE[case]
            ok = ok and all(H.contains(invert_point(I, q)) for q in pts)
            ok = ok and invert_generalized_circle(I, H) == G
            wrong += not ok
        yield _eq(f"inversion_carriers_{case}", 0, wrong)


def random_curve_through(d: int, rng: random.Random) -> tuple[PolyCurve, list[AffinePoint]]:
    """A random degree-d curve through up to three random rational points."""
    while True:
        coeffs = {(i, j): Fraction(rng.randint(-5, 5)) for i in range(d + 1) for j in range(d + 1 - i)}
        coeffs[(d, 0)] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        pts = [_rand_point(rng) for _ in range(1 if d == 1 else 3)]
        g = PolyCurve(coeffs)
        if d == 1:
            coeffs[(0, 0)] -= g.evaluate(*pts[0])
            return PolyCurve(coeffs), pts
        # adjust the constant and linear terms so the curve passes through pts
        A = [[Fraction(1), p.x, p.y] for p in pts]
        b = [-g.evaluate(p.x, p.y) for p in pts]
        sol = _solve3(A, b)
        if sol is None:
            continue
        for key, v in zip(((0, 0), (1, 0), (0, 1)), sol):
            coeffs[key] += v
        C = PolyCurve(coeffs)
        if C.degree == d:
            return C, pts


def _solve3(A, b):
    M = sympy.Matrix(A)
    if M.det() == 0:
        return None
    sol = M.LUsolve(sympy.Matrix(b))
    return [Fraction(int(v.p), int(v.q)) for v in sol]


def curve_inversion_check(trials: int = 30, seed: int = 11) -> Iterator[Check]:
    rng = random.Random(seed)
    deg_bad = on_bad = 0
    for t in range(trials):
        d = 1 + t % 5
        C, pts = random_curve_through(d, rng)
        c = _rand_point(rng)
        if c in pts:
            continue
        I = InversionMap(c)
        image = invert_curve(I, C)
        deg_bad += image.curve.degree > 2 * d
        on_bad += sum(not image.curve.contains(invert_point(I, p)) for p in pts)
    yield _eq("invert_curve_degree_at_most_2d", 0, deg_bad)
    yield _eq("invert_curve_on_curve_points", 0, on_bad)


def inversion_suite() -> Iterator[Check]:
    yield involution_check()
    yield from carrier_table_check()
    yield from curve_inversion_check()
    yield _eq("invert_origin_2_0", "(1/2, 0)", str(invert_point(InversionMap.at(0, 0), point(2, 0))))


# curves ---------------------------------------------------------------------


def tangent_conic(rng: random.Random):
    """A conic tangent to p-t1 at t1 and to p-t2 at t2, for random rational p, t1, t2."""
    while True:
        p, t1, t2 = (_rand_point(rng) for _ in range(3))
        if orient(p, t1, t2) == 0:
            continue
        L1, L2, M = line_through(p, t1), line_through(p, t2), line_through(t1, t2)
        mu = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
        lin = lambda L: L.a * X + L.b * Y - L.c  # noqa: E731
        C = PolyCurve.from_sympy(lin(L1) * lin(L2) + mu * lin(M) ** 2)
        try:
            tl = tangent_lines_to_conic(C, p)
        except GeometryError:
            continue
        return C, p, {ProjPoint.from_affine(t1), ProjPoint.from_affine(t2)}, tl


def curves_suite(trials: int = 20, seed: int = 5) -> Iterator[Check]:
    unit = PolyCurve.parse("x**2 + y**2 - 1")
    for name, p, want in (("external", (2, 0), 2), ("incident", (1, 0), 1), ("interior", (0, 0), 0)):
        yield _eq(f"tangents_unit_circle_{name}", want, tangent_lines_to_conic(unit, point(*p)).count)
    polar = polar_curve(HomPolyCurve.parse("x**2 + y**2 - z**2"), (2, 0, 1))
    yield _eq("polar_unit_circle_at_2_0_1", "4*x - 2*z", str(polar))
    rng = random.Random(seed)
    off_polar = 0
    for _ in range(trials):
        C, p, touch, tl = tangent_conic(rng)
        H = homogenize(C)
        D = polar_curve(H, (p.x, p.y, 1))
        ok = tl.count == 2 and tl.exact and set(tl.points) == touch
        ok = ok and all(H.evaluate(t) == 0 and D.evaluate(t) == 0 for t in tl.points)
        off_polar += not ok
    yield _eq("tangency_points_on_curve_and_polar", 0, off_polar)
    over = 0
    for t in range(trials):
        d = 2 + t % 2
        C, _ = random_curve_through(d, rng)
        p = _rand_point(rng)
        if C.contains(p):
            continue
        bound = d * (d - 1)
        over += count_tangent_lines(C, p) > bound or tangent_count_upper(C) > bound
    yield _eq("tangent_bound_conic_2_cubic_6", 0, over)


# non-q ordinary line type table -------------------------------------------


def theorem34_suite() -> Iterator[Check]:
    for ctype in THEOREM_TYPES:
        for m in golden.THEOREM_MS:
            r = theorem_check_ol(ctype, m)
            yield _eq(f"olq_type_{ctype}_m{m}_oracle", golden.THEOREM_OLQ[ctype][m], r.ol_q)
            dev = r.deviation
            yield Check(
                f"olq_type_{ctype}_m{m}_deviation",
                f"|ol_q - {r.main_term}| <= {golden.THEOREM_DEVIATION_LIMIT}",
                str(dev),
                abs(dev) <= golden.THEOREM_DEVIATION_LIMIT,
            )


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "constructions": constructions_suite,
    "inversion": inversion_suite,
    "curves": curves_suite,
    "theorem34": theorem34_suite,
}


def run_suite(name: str) -> Iterator[Check]:
    if name == "all":
        for suite in SUITES.values():
            yield from suite()
        return
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    yield from SUITES[name]()
