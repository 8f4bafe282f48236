"""Point-set files (JSON, CSV, SVG) and exact or interval exports of configurations.

Rationals are always written as "p/q" strings, never as floats.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .configs import SymmetricConfig, SymPoint, config_from_descriptor
from .embedding import EmbeddedConfig, make_linecircle_construction
from .kernel import AffinePoint, GeometryError, PointSet, ProjPoint, as_fraction


class FormatError(GeometryError):
    """A file could not be parsed as a point set or descriptor."""


def _q(value: str | int) -> Fraction:
    try:
        return as_fraction(value if isinstance(value, int) else str(value).strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"not a rational number: {value!r}") from exc


def point_set_to_json(P: PointSet) -> dict:
    return {
        "points": [{"x": str(p.x), "y": str(p.y)} for p in P.affine],
        "infinity": [{"x": str(p.x), "y": str(p.y), "z": "0"} for p in P.infinity],
    }


def point_set_from_json(obj: dict) -> PointSet:
    if not isinstance(obj, dict) or "points" not in obj:
        raise FormatError('point-set JSON needs a "points" list')
    try:
        aff = tuple(AffinePoint(_q(p["x"]), _q(p["y"])) for p in obj["points"])
        inf = []
        for p in obj.get("infinity", []):
            if _q(p.get("z", "0")) != 0:
                raise FormatError(f"infinity member with nonzero z: {p}")
            inf.append(ProjPoint.of(_q(p["x"]), _q(p["y"]), 0))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed point entry: {exc}") from exc
    return PointSet(aff, tuple(inf))


def point_set_to_csv(P: PointSet) -> str:
    P.require_affine()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y"])
    for p in P.affine:
        w.writerow([str(p.x), str(p.y)])
    return buf.getvalue()


def point_set_from_csv(text: str) -> PointSet:
    rows = list(csv.DictReader(io.StringIO(text)))
    if rows and set(rows[0]) != {"x", "y"}:
        raise FormatError("CSV point sets need the header x,y")
    return PointSet(tuple(AffinePoint(_q(r["x"]), _q(r["y"])) for r in rows))


def point_set_to_svg(P: PointSet, size: int = 400) -> str:
    """Static picture of the affine members (points at infinity are drawn as rays from the center)."""
    pts = [(float(p.x), float(p.y)) for p in P.affine] or [(0.0, 0.0)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9) * 1.2
    scale = size / span

    def tr(x, y):
        return size / 2 + (x - cx) * scale, size / 2 - (y - cy) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    for p in P.infinity:
        norm = (float(p.x) ** 2 + float(p.y) ** 2) ** 0.5
        x1, y1 = tr(cx, cy)
        x2, y2 = x1 + float(p.x) / norm * size / 2, y1 - float(p.y) / norm * size / 2
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#bbb" stroke-dasharray="4"/>')
    for x, y in pts[: len(P.affine)]:
        sx, sy = tr(x, y)
        out.append(f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def read_point_set(path: str | Path) -> PointSet:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return point_set_from_csv(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    return point_set_from_json(obj)


def write_point_set(P: PointSet, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower() or "json"
    if fmt == "json":
        path.write_text(json.dumps(point_set_to_json(P), indent=1) + "\n")
    elif fmt == "csv":
        path.write_text(point_set_to_csv(P))
    elif fmt == "svg":
        path.write_text(point_set_to_svg(P))
    else:
        raise FormatError(f"unknown format {fmt!r}")


# configurations -----------------------------------------------------------

_UNIT = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}
_DIRECTION = {0: (0, 1), 1: (-1, 1), 2: (1, 0), 3: (1, 1)}


def exact_coordinates(C: SymmetricConfig, p: SymPoint) -> AffinePoint | ProjPoint | None:
    """Rational coordinates of a symbolic point, or None if they are irrational."""
    m = C.m
    if p.is_origin:
        return AffinePoint(Fraction(0), Fraction(0))
    if (2 * p.half) % m:
        return None
    k = (2 * p.half // m) % 4  # angle in quarter turns (circle) or eighth turns (infinity)
    if p.at_infinity:
        return ProjPoint.of(*_DIRECTION[k], 0)
    r = C.radius(p.orbit)
    x, y = _UNIT[k]
    return AffinePoint(r * x, r * y)


def exact_point_set(C: SymmetricConfig) -> PointSet | None:
    """The configuration as a rational point set when every member is rational."""
    coords = [exact_coordinates(C, p) for p in C.points]
    if any(c is None for c in coords):
        return None
    return PointSet.of(coords)


def interval_export(E: EmbeddedConfig) -> dict:
    """Interval coordinates (decimal endpoint strings) with precision metadata."""
    rows = []
    for label in E.labels:
        x, y = E.coords(label)
        rows.append(
            {
                "label": label.to_json(),
                "x": [str(x.a), str(x.b)],
                "y": [str(y.a), str(y.b)],
            }
        )
    return {"precision_bits": E.precision, "max_width": E.max_width(), "points": rows}


def load_descriptor(obj: dict, precision: int = 256) -> SymmetricConfig | EmbeddedConfig:
    """A descriptor names a symmetric configuration; linecircle descriptors give an embedding."""
    try:
        if obj.get("family") == "linecircle":
            pre = config_from_descriptor(obj)
            parent_n = pre.size
            removed = pre.deletions[0] if pre.deletions else (1, 0)
            return make_linecircle_construction(
                parent_n,
                obj.get("radius_ratio", str(pre.radii[1] / pre.radii[0])),
                int(obj.get("inversion_center_index", 1)),
                removed,
                precision,
            )
        return config_from_descriptor(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad descriptor: {exc}") from exc


def read_input(path: str | Path, precision: int = 256) -> Any:
    """A PointSet, a SymmetricConfig or an EmbeddedConfig, depending on the file."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return point_set_from_csv(path.read_text())
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if isinstance(obj, dict) and "family" in obj:
        return load_descriptor(obj, precision)
    return point_set_from_json(obj)
