"""Time the brute and inversion counters on seeded random sets and report the speed-up.

    python3 scripts/bench.py --n 50,100,200,300 --repeats 3
"""

import argparse
import time

from ordcircles.counting import ordinary_circles_brute, ordinary_circles_by_inversion
from ordcircles.sampling import random_rational_set


def best_of(fn, P, repeats):
    best, report = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        report = fn(P)
        best = min(best, time.perf_counter() - t0)
    return best, report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="50,100,200")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=1)
    args = ap.parse_args()
    print("n,ordinary_circles,brute_s,inversion_s,speedup")
    for n in (int(s) for s in args.n.split(",")):
        P = random_rational_set(n, args.seed)
        tb, b = best_of(ordinary_circles_brute, P, args.repeats)
        ti, i = best_of(ordinary_circles_by_inversion, P, args.repeats)
        if b.ordinary_circles != i.ordinary_circles:
            raise SystemExit(f"counters disagree at n={n}: {b.ordinary_circles} vs {i.ordinary_circles}")
        print(f"{n},{i.ordinary_circles},{tb:.3f},{ti:.3f},{tb / ti:.2f}", flush=True)


if __name__ == "__main__":
    main()
