"""Print ol_q and its deviation from the main term for every type and m.

    python3 scripts/olq_table.py --m 10,15,20,25
"""

import argparse

from ordcircles.counting import THEOREM_TYPES, theorem_check_ol


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", default="10,15,20")
    args = ap.parse_args()
    ms = [int(s) for s in args.m.split(",")]
    print("type,m,n,q,ol_q,main_term,deviation")
    for ctype in THEOREM_TYPES:
        for m in ms:
            r = theorem_check_ol(ctype, m)
            print(f"{ctype},{m},{r.n},{r.q},{r.ol_q},{r.main_term},{r.deviation}")


if __name__ == "__main__":
    main()
