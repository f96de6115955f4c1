"""Monogenity of pure fields Q(alpha), alpha^n = m, n = 2^u 3^v.

Closed-form congruence classification, with the Ore engine as a fallback for
the region the congruences leave open (m = -1 mod 9, m != 1 mod 4, u odd).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from puremono.config import Config
from puremono.ore import (
    DegenerateInput,
    IndexDivisorWitness,
    analyze_prime,
    common_index_divisor,
    dedekind_test,
    guaranteed_primes,
)
from puremono.poly.integer import IntPoly, binomial_is_irreducible, is_squarefree_int, prime_factors


class VerdictKind(str, enum.Enum):
    MONOGENIC = "MonogenicWithZalpha"
    NOT_MONOGENIC = "NotMonogenic"
    UNDECIDED = "Undecided"


class Unsupported(ValueError):
    pass


@dataclass(frozen=True)
class PureField:
    u: int
    v: int
    m: int

    def __post_init__(self):
        if self.u < 1 or self.v < 1:
            raise Unsupported("u and v must both be positive (u = 0 or v = 0 is not handled)")
        if self.m in (0, 1, -1):
            raise ValueError("m must be nonzero and different from +-1")

    @property
    def n(self) -> int:
        return 2**self.u * 3**self.v

    @property
    def polynomial(self) -> IntPoly:
        return IntPoly.binomial(self.n, self.m)


@dataclass
class Verdict:
    kind: VerdictKind
    theorem: Optional[str]
    congruences: dict
    witnesses: list[IndexDivisorWitness] = field(default_factory=list)
    fallback: Optional[dict] = None
    substitution: Optional[tuple[int, int]] = None
    warnings: list[str] = field(default_factory=list)


def congruence_data(u: int, m: int) -> dict:
    return {"m_mod_4": m % 4, "m_mod_9": m % 9, "u_parity": u % 2}


def _decide(u: int, m: int) -> tuple[VerdictKind, Optional[str]]:
    m4, m9 = m % 4, m % 9
    if m4 == 1 or m9 == 1:
        return VerdictKind.NOT_MONOGENIC, "not-monogenic:m=1mod4-or-m=1mod9"
    if m9 == 8:
        if u % 2 == 0:
            return VerdictKind.NOT_MONOGENIC, "not-monogenic:m=-1mod9-u-even"
        return VerdictKind.UNDECIDED, None
    return VerdictKind.MONOGENIC, "monogenic:Z[alpha]-integrally-closed"


def _require_squarefree(m: int, config: Config):
    if not is_squarefree_int(m, config.squarefree_bound):
        raise ValueError(f"m = {m} is not squarefree")


def _irreducibility_warnings(pf: PureField) -> list[str]:
    if not binomial_is_irreducible(pf.n, pf.m):
        return [f"{pf.polynomial} is reducible over Q"]
    return []


def classify(u: int, v: int, m: int, config: Config | None = None, fallback: bool = True) -> Verdict:
    """Monogenity verdict for x^(2^u 3^v) - m with squarefree m."""
    config = config or Config()
    pf = PureField(u, v, m)
    _require_squarefree(m, config)
    kind, tag = _decide(u, m)
    verdict = Verdict(kind, tag, congruence_data(u, m))
    verdict.warnings = _irreducibility_warnings(pf)
    if kind is VerdictKind.UNDECIDED and fallback:
        report = fallback_analyze(pf, config)
        verdict.fallback = report
        verdict.witnesses = list(report["witnesses"])
        if verdict.witnesses:
            verdict.kind = VerdictKind.NOT_MONOGENIC
            verdict.theorem = "engine:common-index-divisor"
    return verdict


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def surd_substitution(k: int, n: int) -> tuple[int, int]:
    """(x, y) with k*x - n*y = 1 and 0 < x < n."""
    g, s, _ = _ext_gcd(k, n)
    if g != 1:
        raise ValueError(f"gcd({k}, {n}) != 1")
    x = s % n
    y = (k * x - 1) // n
    return x, y


def classify_surd_power(a: int, k: int, u: int, v: int, config: Config | None = None) -> Verdict:
    """Verdict for x^n - a^k with gcd(k, 6) = 1, via theta = alpha^x / a^y whose minimal polynomial is x^n - a."""
    if math.gcd(k, 6) != 1:
        raise ValueError(f"k = {k} must be coprime to 6")
    n = 2**u * 3**v
    if not 0 < k < n:
        raise ValueError(f"k must satisfy 0 < k < {n}")
    verdict = classify(u, v, a, config)
    verdict.substitution = surd_substitution(k, n)
    return verdict


def fallback_analyze(pf: PureField, config: Config | None = None) -> dict:
    """Run the Ore engine at 2, 3 and the primes dividing m; collect index-divisor witnesses."""
    config = config or Config()
    f = pf.polynomial
    primes = sorted({2, 3} | set(prime_factors(pf.m)))
    sections = []
    witnesses = []
    for p in primes:
        try:
            a = analyze_prime(f, p, config.seed)
        except DegenerateInput as exc:
            sections.append({"p": p, "error": str(exc)})
            continue
        w = common_index_divisor(f, p, config.seed)
        shape = guaranteed_primes(f, p, config.seed)
        sections.append({
            "p": p,
            "dedekind": dedekind_test(f, p, config.seed),
            "index_lower_bound": a.index_lower_bound,
            "regular": a.regular,
            "shape": shape,
            "witness": w,
        })
        if w is not None:
            witnesses.append(w)
    return {"primes": primes, "sections": sections, "witnesses": witnesses}
