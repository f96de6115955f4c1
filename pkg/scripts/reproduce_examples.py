"""Print the worked examples: expansions, polygons, residuals, witnesses and verdicts."""

import argparse

from puremono.monogenity import classify
from puremono.ore import analyze_prime, common_index_divisor, dedekind_test, guaranteed_primes
from puremono.poly.integer import IntPoly, discriminant

CASES = [
    (IntPoly.binomial(12, 13), 2),
    (IntPoly.binomial(12, 17), 3),
    (IntPoly([-8, -2, -1, 1]), 2),
]


def show(f: IntPoly, p: int, seed: int):
    print(f"F = {f}, p = {p}, disc = {discriminant(f)}")
    a = analyze_prime(f, p, seed)
    print("  F mod p:", " * ".join(f"({g})^{k}" for g, k in a.factors))
    for pa in a.phis:
        print(f"  phi = {pa.phi}")
        print("    expansion:", [str(t) for t in pa.expansion.terms])
        print("    principal polygon:", pa.principal)
        for s in pa.sides:
            facs = ", ".join(f"({g})^{k}" for g, k in s.factors)
            print(f"    side {s.side}: residual {s.residual} = ({s.unit}) * {facs}")
        print(f"    ind_phi = {pa.index}")
    print(f"  Dedekind: {dedekind_test(f, p, seed)}  regular: {a.regular}  ind >= {a.index_lower_bound}")
    print(f"  certified primes (e, f): {list(guaranteed_primes(f, p, seed).entries)}")
    print(f"  witness: {common_index_divisor(f, p, seed)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for f, p in CASES:
        show(f, p, args.seed)
        print()
    for u, v, m in [(2, 2, 37), (1, 1, 2), (2, 1, 13), (2, 1, 17), (1, 1, 35)]:
        verdict = classify(u, v, m)
        print(f"x^{2**u * 3**v} - {m}: {verdict.kind.value} [{verdict.theorem}]",
              [(w.p, w.f, w.P_f, w.N_f) for w in verdict.witnesses])


if __name__ == "__main__":
    main()
