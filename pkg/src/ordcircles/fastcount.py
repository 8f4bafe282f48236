"""Integer kernels for ordinary-circle counting on rational point sets.

Both kernels work on integer coordinates (rational input scaled by the common
denominator, which moves no incidence).

``brute_circle_tally`` walks every pair p, q and keys each third point r by
the circle through p, q, r.  With p at the origin the circles through p and q
form a pencil, and r sits on the member with parameter

    t(r) = (q.r - |r|^2) / cross(q, r),

so a pencil member holding exactly one third point is an ordinary circle.

``inversion_circle_tally`` inverts at each point p in homogeneous form,
r -> [r_x : r_y : |r|^2] (p at the origin), and counts the lines spanned by
the images.  A line with exactly two image points that misses [0:0:1] is an
ordinary circle through p.  This kernel is vectorized with numpy per center.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Sequence

import numpy as np

# line coefficients are bounded by 4 * B**3 for coordinate spread B: below
# 2**63 for the int64 path, below 2**53 for the float hash
_INT64_SPREAD_LIMIT = 1_200_000
_HASH_SPREAD_LIMIT = 120_000


def coordinate_spread(pts: Sequence[tuple[int, int]]) -> int:
    if not pts:
        return 0
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def line_tally(pts: Sequence[tuple[int, int]]) -> Counter:
    """Multiplicity of every line spanned by distinct integer points, keyed by (a, b, c)."""
    on: dict = {}
    gcd = math.gcd
    for i in range(len(pts)):
        px, py = pts[i]
        for j in range(i + 1, len(pts)):
            qx, qy = pts[j]
            a, b = qy - py, px - qx
            g = gcd(a, b)
            if a < 0 or (a == 0 and b < 0):
                g = -g
            a, b = a // g, b // g
            on.setdefault((a, b, a * px + b * py), set()).update((i, j))
    return Counter({key: len(idx) for key, idx in on.items()})


def brute_circle_tally(pts: Sequence[tuple[int, int]]) -> tuple[int, list[int]]:
    """(3 * ordinary circles, per-point tallies equal to 3 * oc_p), by pencil keys."""
    n = len(pts)
    tally = [0] * n
    total = 0
    gcd = math.gcd
    for i in range(n):
        px, py = pts[i]
        rel = [(x - px, y - py) for x, y in pts]
        for j in range(i + 1, n):
            qx, qy = rel[j]
            keys: dict = {}
            for k in range(n):
                if k == i or k == j:
                    continue
                rx, ry = rel[k]
                cr = qx * ry - qy * rx
                if cr == 0:
                    continue  # p, q, r collinear: a line, never a circle
                num = qx * rx + qy * ry - rx * rx - ry * ry
                g = gcd(num, cr)
                if cr < 0:
                    g = -g
                key = (num // g, cr // g)
                if key in keys:
                    keys[key] = -1
                else:
                    keys[key] = k
            for k in keys.values():
                if k >= 0:
                    total += 1
                    tally[i] += 1
                    tally[j] += 1
                    tally[k] += 1
    return total, tally


def _center_count_python(pts: Sequence[tuple[int, int]], c: int) -> int:
    px, py = pts[c]
    img = [(x - px, y - py, (x - px) ** 2 + (y - py) ** 2) for k, (x, y) in enumerate(pts) if k != c]
    lines: Counter = Counter()
    for a in range(len(img)):
        ax, ay, aw = img[a]
        for b in range(a + 1, len(img)):
            bx, by, bw = img[b]
            l2 = ax * by - ay * bx
            if l2 == 0:
                lines[None] += 1
                continue
            l0 = ay * bw - aw * by
            l1 = aw * bx - ax * bw
            g = math.gcd(math.gcd(l0, l1), l2)
            if l2 < 0:
                g = -g
            lines[(l0 // g, l1 // g, l2 // g)] += 1
    return sum(1 for key, k in lines.items() if key is not None and k == 1)


def _runs(keys: np.ndarray) -> np.ndarray:
    """Lengths of the runs of equal values in a sorted 1-D array."""
    new = np.ones(keys.size + 1, dtype=bool)
    new[1:-1] = keys[1:] != keys[:-1]
    return np.diff(np.flatnonzero(new))


def _exact_singletons(l0: np.ndarray, l1: np.ndarray, l2: np.ndarray) -> int:
    """Number of lines met exactly once, from unnormalized integer coefficients."""
    if l0.size == 0:
        return 0
    g = np.gcd(np.gcd(l0, l1), l2)
    g = np.where(l2 < 0, -g, g)
    l0, l1, l2 = l0 // g, l1 // g, l2 // g
    order = np.lexsort((l2, l1, l0))
    l0, l1, l2 = l0[order], l1[order], l2[order]
    new = np.ones(l0.size + 1, dtype=bool)
    new[1:-1] = (l0[1:] != l0[:-1]) | (l1[1:] != l1[:-1]) | (l2[1:] != l2[:-1])
    return int(np.count_nonzero(np.diff(np.flatnonzero(new)) == 1))


def _center_count_numpy(X: np.ndarray, Y: np.ndarray, c: int, iu: tuple[np.ndarray, np.ndarray], hashed: bool) -> int:
    mask = np.ones(len(X), dtype=bool)
    mask[c] = False
    dx = X[mask] - X[c]
    dy = Y[mask] - Y[c]
    w = dx * dx + dy * dy
    a, b = iu
    l2 = dx[a] * dy[b] - dy[a] * dx[b]
    keep = l2 != 0  # image lines through the center come from lines through p
    a, b, l2 = a[keep], b[keep], l2[keep]
    l0 = dy[a] * w[b] - w[a] * dy[b]
    l1 = w[a] * dx[b] - dx[a] * w[b]
    if not hashed:
        return _exact_singletons(l0, l1, l2)
    # l0/l2 and l1/l2 are correctly rounded quotients of exactly representable
    # integers, so pairs on one line get bit-identical hashes; a hash seen once
    # is an ordinary line, and only repeated hashes need exact keys.
    h = l0 / l2 + (l1 / l2) * 0.6180339887498949
    order = np.argsort(h, kind="stable")
    runs = _runs(h[order])
    single = int(np.count_nonzero(runs == 1))
    starts = np.repeat(runs > 1, runs)
    if not starts.any():
        return single
    rest = order[starts]
    return single + _exact_singletons(l0[rest], l1[rest], l2[rest])


def inversion_circle_tally(pts: Sequence[tuple[int, int]]) -> list[int]:
    """oc_p for every point: ordinary lines of the inverted set that avoid the center."""
    n = len(pts)
    if n < 3:
        return [0] * n
    spread = coordinate_spread(pts)
    if spread <= _INT64_SPREAD_LIMIT:
        X = np.array([p[0] for p in pts], dtype=np.int64)
        Y = np.array([p[1] for p in pts], dtype=np.int64)
        iu = np.triu_indices(n - 1, k=1)
        hashed = spread <= _HASH_SPREAD_LIMIT
        return [_center_count_numpy(X, Y, c, iu, hashed) for c in range(n)]
    return [_center_count_python(pts, c) for c in range(n)]
