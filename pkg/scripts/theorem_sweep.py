"""Check the three classification theorems against the Ore engine over a range of m."""

import argparse
import time
from collections import Counter

from puremono.ore import common_index_divisor, dedekind_test, ore_index
from puremono.poly.integer import IntPoly, is_squarefree_int, prime_factors


def sweep(bound: int, pairs):
    tally = Counter()
    exceptions = []
    for u, v in pairs:
        n = 2**u * 3**v
        for m in range(-bound, bound + 1):
            if abs(m) < 2 or not is_squarefree_int(m):
                continue
            f = IntPoly.binomial(n, m)
            if m % 4 != 1 and m % 9 not in (1, 8):
                for p in sorted({2, 3} | set(prime_factors(m))):
                    rep = ore_index(f, p)
                    ok = dedekind_test(f, p) and rep.lower_bound == 0 and rep.exact
                    tally["monogenic", ok] += 1
                    if not ok:
                        exceptions.append(("monogenic", u, v, m, p))
            if m % 4 == 1:
                ok = common_index_divisor(f, 2) is not None
                tally["m=1 mod 4", ok] += 1
                if not ok:
                    exceptions.append(("m=1 mod 4", u, v, m))
            if m % 9 == 1 or (m % 9 == 8 and u % 2 == 0):
                w = common_index_divisor(f, 3)
                ok = w is not None
                tally["m=+-1 mod 9", ok] += 1
                if not ok:
                    exceptions.append(("m=+-1 mod 9", u, v, m))
    return tally, exceptions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=200)
    ap.add_argument("--pairs", default="1,1;2,1;1,2;2,2", help="u,v pairs separated by ';'")
    args = ap.parse_args()
    pairs = [tuple(int(x) for x in s.split(",")) for s in args.pairs.split(";")]
    t0 = time.perf_counter()
    tally, exceptions = sweep(args.bound, pairs)
    for (kind, ok), count in sorted(tally.items()):
        print(f"{kind:<14} {'ok' if ok else 'FAIL':<5} {count}")
    print(f"exceptions: {exceptions or 'none'}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
