"""Symmetric point configurations: aligned concentric polygons and Böröczky sets.

Points are described combinatorially.  A circle point carries an angle index
``half`` in half-steps, i.e. it sits at angle pi*half/m on its orbit (orbit
members have even ``half`` = 2j, so member j is at 2*pi*j/m).  A point at
infinity with index ``half`` is the direction of angle pi*half/(2m) + pi/2, so
infinity member j is [-sin(pi j/m) : cos(pi j/m) : 0].  With these conventions
every incidence forced by the rotational and reflective symmetry reduces to a
congruence on integers.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .kernel import GeometryError, Rational, as_fraction

INF = 0
ORIGIN_ORBIT = -1
DEFAULT_RADIUS_RATIO = Fraction(5, 7)


class ConfigError(GeometryError):
    pass


class Incidence(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    RADIUS_DEPENDENT = "radius_dependent"

    @classmethod
    def of(cls, value: bool) -> "Incidence":
        return cls.TRUE if value else cls.FALSE


@dataclass(frozen=True)
class SymPoint:
    """orbit >= 1: circle orbit; INF (0): line at infinity; ORIGIN_ORBIT (-1): common center."""

    orbit: int
    half: int = 0

    @property
    def on_circle(self) -> bool:
        return self.orbit >= 1

    @property
    def at_infinity(self) -> bool:
        return self.orbit == INF

    @property
    def is_origin(self) -> bool:
        return self.orbit == ORIGIN_ORBIT

    @property
    def index(self) -> int | None:
        return self.half // 2 if self.half % 2 == 0 else None

    def to_json(self) -> dict:
        if self.is_origin:
            return {"orbit": "origin"}
        orbit = "inf" if self.at_infinity else self.orbit
        if self.half % 2 == 0:
            return {"orbit": orbit, "index": self.half // 2}
        return {"orbit": orbit, "half": self.half}

    @classmethod
    def from_json(cls, obj) -> "SymPoint":
        if isinstance(obj, (list, tuple)):
            obj = {"orbit": obj[0], "index": obj[1]}
        orbit = obj["orbit"]
        if orbit == "origin":
            return ORIGIN
        orbit = INF if orbit == "inf" else int(orbit)
        if "half" in obj:
            return cls(orbit, int(obj["half"]))
        return cls(orbit, 2 * int(obj["index"]))

    def __str__(self) -> str:
        if self.is_origin:
            return "origin"
        name = "inf" if self.at_infinity else f"c{self.orbit}"
        return f"{name}[{self.half / 2:g}]"


ORIGIN = SymPoint(ORIGIN_ORBIT, 0)


def member(orbit: int | str, index: int) -> SymPoint:
    if orbit == "inf":
        orbit = INF
    return SymPoint(int(orbit), 2 * index)


def _sort_key(p: SymPoint):
    return (p.orbit if p.orbit >= 1 else 100 - p.orbit, p.half)


@dataclass(frozen=True)
class SymmetricConfig:
    """Full orbits of a base family, minus ``deletions``, plus ``additions``.

    ``radii[k]`` is the radius of circle orbit k+1; ``n`` is the size parameter
    of the even/odd families (None for Böröczky sets, which use ``m``).
    """

    family: str
    m: int
    radii: tuple[Fraction, ...]
    has_infinity: bool = False
    n: int | None = None
    deletions: tuple[SymPoint, ...] = ()
    additions: tuple[SymPoint, ...] = ()
    base: str = field(default="")

    def __post_init__(self):
        if not self.base:
            object.__setattr__(self, "base", self.family)
        if len(set(self.radii)) != len(self.radii) or any(r <= 0 for r in self.radii):
            raise ConfigError("circle orbits need distinct positive radii")

    @cached_property
    def points(self) -> tuple[SymPoint, ...]:
        pts = [member(k + 1, j) for k in range(len(self.radii)) for j in range(self.m)]
        if self.has_infinity:
            pts += [member(INF, j) for j in range(self.m)]
        gone = set(self.deletions)
        pts = [p for p in pts if p not in gone] + list(self.additions)
        return tuple(sorted(pts, key=_sort_key))

    @property
    def size(self) -> int:
        return len(self.points)

    def __contains__(self, p: SymPoint) -> bool:
        return p in set(self.points)

    def normalize(self, p: SymPoint) -> SymPoint:
        """Reduce angle indices: mod 2m on circles, mod 2m for directions at infinity."""
        if p.is_origin:
            return ORIGIN
        return SymPoint(p.orbit, p.half % (2 * self.m))

    def radius(self, orbit: int) -> Fraction:
        return self.radii[orbit - 1]

    def parent(self) -> "SymmetricConfig":
        return replace(self, family=self.base, deletions=(), additions=())

    def descriptor(self) -> dict:
        d: dict = {"family": self.family}
        if self.base == "even":
            d["n"] = self.size if self.family == "odd" else self.n
        else:
            d["m"] = self.m
        if self.radii[1:]:
            d["radius_ratio"] = str(self.radii[1] / self.radii[0])
        if self.family == "modified":
            d["base"] = self.base
        d["deletions"] = [p.to_json() for p in self.deletions]
        d["additions"] = [p.to_json() for p in self.additions]
        return d

    def to_json(self) -> str:
        return json.dumps(self.descriptor(), sort_keys=True)


def _check_ratio(radius_ratio: Rational) -> Fraction:
    r = as_fraction(radius_ratio)
    if r <= 0 or r == 1:
        raise ConfigError(f"radius ratio must be positive and different from 1, got {r}")
    return r


def make_even_construction(n: int, radius_ratio: Rational = DEFAULT_RADIUS_RATIO) -> SymmetricConfig:
    """Two aligned regular (n/2)-gons on concentric circles of radii 1 and radius_ratio."""
    if n % 2 or n < 6:
        raise ConfigError(f"even construction needs an even n >= 6, got {n}")
    return SymmetricConfig("even", n // 2, (Fraction(1), _check_ratio(radius_ratio)), n=n)


def make_odd_construction(
    n: int, radius_ratio: Rational = DEFAULT_RADIUS_RATIO, removed: SymPoint | tuple = (1, 0)
) -> SymmetricConfig:
    """The even construction on n+1 points with one member removed."""
    if n % 2 == 0 or n < 7:
        raise ConfigError(f"odd construction needs an odd n >= 7, got {n}")
    parent = make_even_construction(n + 1, radius_ratio)
    removed = removed if isinstance(removed, SymPoint) else member(*removed)
    if removed not in parent:
        raise ConfigError(f"{removed} is not a member of the {n + 1}-point even construction")
    return replace(parent, family="odd", deletions=(removed,))


def make_boroczky(m: int) -> SymmetricConfig:
    """X_2m: the regular m-gon on the unit circle and m directions at infinity."""
    if m < 3:
        raise ConfigError(f"Böröczky sets need m >= 3, got {m}")
    return SymmetricConfig("boroczky", m, (Fraction(1),), has_infinity=True)


def _relabel(C: SymmetricConfig, deletions, additions) -> SymmetricConfig:
    deletions, additions = tuple(deletions), tuple(additions)
    if not additions and not deletions:
        family = C.base
    elif C.base == "even" and not additions and len(deletions) == 1 and deletions[0].on_circle:
        family = "odd"
    else:
        family = "modified"
    return replace(C, family=family, deletions=deletions, additions=additions)


def modify_config(C: SymmetricConfig, ops: Iterable) -> SymmetricConfig:
    """Apply ("remove", p), ("add", p) or ("add_origin",) operations in order.

    Only the origin and half-step points on existing orbits can be added.
    Re-adding a deleted member cancels the deletion.
    """
    deletions, additions = list(C.deletions), list(C.additions)
    current = set(C.points)
    for op in ops:
        kind = op[0]
        if kind == "add_origin":
            kind, p = "add", ORIGIN
        else:
            p = op[1] if isinstance(op[1], SymPoint) else member(*op[1])
        p = C.normalize(p)
        if kind == "remove":
            if p not in current:
                raise ConfigError(f"cannot remove {p}: not in the configuration")
            current.discard(p)
            if p in additions:
                additions.remove(p)
            else:
                deletions.append(p)
        elif kind == "add":
            if p in current:
                raise ConfigError(f"cannot add {p}: already present")
            if p.on_circle and p.orbit > len(C.radii) or p.at_infinity and not C.has_infinity:
                raise ConfigError(f"{p} is not on an orbit of this configuration")
            current.add(p)
            if p in deletions:
                deletions.remove(p)
            else:
                additions.append(p)
        else:
            raise ConfigError(f"unknown operation {op!r}")
    return _relabel(C, deletions, additions)


def config_from_descriptor(desc: dict) -> SymmetricConfig:
    """Inverse of :meth:`SymmetricConfig.descriptor` (also accepts linecircle pre-images)."""
    family = desc["family"]
    base = desc.get("base", family)
    ratio = desc.get("radius_ratio", str(DEFAULT_RADIUS_RATIO))
    if base == "boroczky":
        C = make_boroczky(int(desc["m"]))
    elif base in ("even", "odd", "linecircle"):
        n = int(desc["n"]) if "n" in desc else 2 * int(desc["m"])
        C = make_even_construction(n + n % 2, ratio)
    else:
        raise ConfigError(f"unknown family {family!r}")
    ops = [("remove", SymPoint.from_json(p)) for p in desc.get("deletions", [])]
    ops += [("add", SymPoint.from_json(p)) for p in desc.get("additions", [])]
    return modify_config(C, ops)


# incidence rules ---------------------------------------------------------


def _radial(C: SymmetricConfig, u: int, v: int) -> bool:
    """Circle angles u, v (half-steps) lie on one line through the center."""
    return (u - v) % C.m == 0


def _infinity_matches_radial(C: SymmetricConfig, u: int, w: int) -> bool:
    """The line from the center at angle pi*u/m has direction w at infinity."""
    return (2 * u - w - C.m) % (2 * C.m) == 0


def sym_collinear(C: SymmetricConfig, a: SymPoint, b: SymPoint, c: SymPoint) -> Incidence:
    """Collinearity of three distinct points decided from indices alone where symmetry allows."""
    pts = [C.normalize(p) for p in (a, b, c)]
    if len(set(pts)) < 3:
        raise ConfigError("sym_collinear needs three distinct points")
    m2 = 2 * C.m
    inf = [p for p in pts if p.at_infinity]
    fin = [p for p in pts if not p.at_infinity]
    if len(inf) == 3:
        return Incidence.TRUE
    if len(inf) == 2:
        return Incidence.FALSE
    origin = [p for p in fin if p.is_origin]
    circ = [p for p in fin if p.on_circle]
    if len(inf) == 1:
        w = inf[0].half
        if origin:
            return Incidence.of(_infinity_matches_radial(C, circ[0].half, w))
        p, q = circ
        if p.orbit == q.orbit:
            return Incidence.of((p.half + q.half - w) % m2 == 0)
        if _radial(C, p.half, q.half):
            return Incidence.of(_infinity_matches_radial(C, p.half, w))
        return Incidence.RADIUS_DEPENDENT
    if origin:
        p, q = circ
        return Incidence.of(_radial(C, p.half, q.half))
    orbits = {p.orbit for p in circ}
    if len(orbits) == 1:
        return Incidence.FALSE
    radial_pairs = [(p, q) for i, p in enumerate(circ) for q in circ[i + 1 :] if _radial(C, p.half, q.half)]
    if len(radial_pairs) == 3:
        return Incidence.TRUE
    if radial_pairs:
        return Incidence.FALSE
    return Incidence.RADIUS_DEPENDENT


def sym_cocircular(C: SymmetricConfig, a: SymPoint, b: SymPoint, c: SymPoint, d: SymPoint) -> Incidence:
    """Whether four circle-orbit points lie on one circle or line (two concentric orbits)."""
    pts = [C.normalize(p) for p in (a, b, c, d)]
    if any(not p.on_circle for p in pts):
        raise ConfigError("sym_cocircular takes circle-orbit points only")
    if len(set(pts)) < 4:
        raise ConfigError("sym_cocircular needs four distinct points")
    by_orbit: dict[int, list[int]] = {}
    for p in pts:
        by_orbit.setdefault(p.orbit, []).append(p.half)
    sizes = sorted(len(v) for v in by_orbit.values())
    if sizes == [4]:
        return Incidence.TRUE
    if sizes == [1, 3]:
        return Incidence.FALSE
    if sizes == [2, 2]:
        (u, v), (s, t) = by_orbit.values()
        return Incidence.of((u + v - s - t) % (2 * C.m) == 0)
    raise ConfigError("sym_cocircular is defined for two concentric orbits")


def equidistant_points(C: SymmetricConfig, j: SymPoint, k: SymPoint) -> list[SymPoint]:
    """Points of the other circle orbit on the perpendicular bisector of j, k (same orbit)."""
    j, k = C.normalize(j), C.normalize(k)
    if not (j.on_circle and k.on_circle and j.orbit == k.orbit) or j == k:
        raise ConfigError("equidistant_points needs two distinct members of one circle orbit")
    others = [p for p in C.points if p.on_circle and p.orbit != j.orbit]
    if not others:
        raise ConfigError("no second circle orbit")
    return [a for a in others if (2 * a.half - j.half - k.half) % (2 * C.m) == 0]
