"""Print ordinary-circle counts of the even, odd and line-circle constructions.

Counts come from the symmetric counter and the interval brute force, next to
the closed forms 2*C(n/2, 2) (even) and n^2/4 - n (lower bound).

    python3 scripts/construction_counts.py --max-n 24
"""

import argparse
from math import comb

from ordcircles.configs import make_even_construction, make_odd_construction
from ordcircles.counting import count_symmetric, linecircle_check, ordinary_circles_brute
from ordcircles.embedding import embed, make_linecircle_construction


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--no-embedded", action="store_true", help="skip the interval brute force")
    args = ap.parse_args()

    print("family,n,symmetric,embedded,closed_form,lower_bound,three_point_lines")
    for n in range(6, args.max_n + 1):
        C = make_even_construction(n) if n % 2 == 0 else make_odd_construction(n) if n >= 7 else None
        if C is None:
            continue
        r = count_symmetric(C)
        emb = "" if args.no_embedded else ordinary_circles_brute(embed(C)).ordinary_circles
        closed = 2 * comb(n // 2, 2) if n % 2 == 0 else ""
        family = "even" if n % 2 == 0 else "odd"
        print(f"{family},{n},{r.ordinary_circles},{emb},{closed},{n * n / 4 - n:g},{r.three_point_lines}")
    if args.no_embedded:
        return
    print()
    print("linecircle,n,image,preimage,through_center,three_point_lines_off_center,holds")
    for n in range(8, min(args.max_n, 16) + 1):
        r = linecircle_check(make_linecircle_construction(n))
        print(
            f"linecircle,{n},{r.image_circles},{r.preimage_circles},"
            f"{r.preimage_circles_through_center},{r.three_point_lines_off_center},{r.holds}"
        )


if __name__ == "__main__":
    main()
