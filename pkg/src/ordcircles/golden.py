"""Reference values used by the verification suite.

Closed forms are the counts claimed for each construction.  Oracle values were computed once
by the interval brute-force counters in :mod:`ordcircles.embedding`, which
share no incidence logic with the index arithmetic in :mod:`ordcircles.configs`,
and then frozen here.
"""

from __future__ import annotations

from math import comb

EVEN_SIZES = (8, 10, 12, 14, 16, 20)
ODD_SIZES = (9, 11, 13, 15)
BOROCZKY_MS = tuple(range(3, 31))
THEOREM_MS = (10, 15, 20)
THEOREM_DEVIATION_LIMIT = 6
ODD_RATIO_WINDOW = (0.30, 0.42)


def even_closed_form(n: int) -> int:
    """Ordinary circles claimed for the even construction: 2 * C(n/2, 2)."""
    return 2 * comb(n // 2, 2)


# Interval brute force on make_even_construction(n), radius ratio 5/7.
EVEN_ORACLE = {8: 8, 10: 20, 12: 24, 14: 42, 16: 48, 20: 80}

# Interval brute force on make_odd_construction(n), either removal orbit.
ODD_ORACLE = {9: 22, 11: 30, 13: 51, 15: 63}

# Exactly-three-point lines of the odd construction (interval line census).
ODD_THREE_POINT_LINES = {9: 0, 11: 1, 13: 0, 15: 1}

# ol_q for the representative instance of each type in
# counting.theorem_instance, from the interval line census.
THEOREM_OLQ = {
    "a": {10: 9, 15: 14, 20: 19},
    "b": {10: 15, 15: 21, 20: 27},
    "c": {10: 14, 15: 44, 20: 29},
    "d": {10: 10, 15: 15, 20: 20},
    "e": {10: 13, 15: 19, 20: 25},
    "f": {10: 14, 15: 43, 20: 29},
}
