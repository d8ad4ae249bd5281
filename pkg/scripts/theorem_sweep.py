"""Time the theorem check over larger (s, n) ranges than the default suite.

    python scripts/theorem_sweep.py --s-max 20 --n-max 120
"""

import argparse
import time

from polyreps.polygonal import PolygonalSpec
from polyreps.repcount import table_for
from polyreps.divisorside import divisor_lhs
from polyreps.verify import theorem_rhs


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--s-min", type=int, default=4)
    parser.add_argument("--s-max", type=int, default=16)
    parser.add_argument("--n-max", type=int, default=100)
    args = parser.parse_args()

    print(f"{'s':>3} {'table_s':>8} {'check_s':>8} {'ok':>6}")
    for s in range(args.s_min, args.s_max + 1):
        t0 = time.perf_counter()
        table = table_for(PolygonalSpec(s), args.n_max, args.n_max)
        t1 = time.perf_counter()
        ok = sum(divisor_lhs(n, s) == theorem_rhs(n, s, table) for n in range(1, args.n_max + 1))
        t2 = time.perf_counter()
        print(f"{s:>3} {t1 - t0:>8.3f} {t2 - t1:>8.3f} {ok:>3}/{args.n_max}")


if __name__ == "__main__":
    main()
