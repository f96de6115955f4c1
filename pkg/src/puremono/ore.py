"""Dedekind's criterion, Ore's index bound, prime factorization shapes, index divisors.

Everything is computed one prime at a time from the mod-p factorization of F
and one level of phi-Newton polygons; ``analyze_prime`` gathers that data once
and the public operations read from it.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from puremono.newton import (
    NewtonPolygon,
    ResidualPoly,
    Side,
    lattice_index,
    phi_polygon,
    residual_from_points,
)
from puremono.phiadic import INF, PhiExpansion
from puremono.poly.finite import (
    ExtensionField,
    ExtPoly,
    ModPoly,
    count_monic_irreducibles,
    factor_mod_p,
)
from puremono.poly.integer import IntPoly, is_prime


class DegenerateInput(ValueError):
    """F is not squarefree (or is reducible) in a way that breaks the phi-adic analysis."""


class IrregularPrime(ValueError):
    def __init__(self, p: int, phi: IntPoly, side: Side, residual: ResidualPoly):
        self.p, self.phi, self.side, self.residual = p, phi, side, residual
        super().__init__(
            f"F is not {p}-regular: residual polynomial {residual} of side {side} "
            f"at phi = {phi} is not squarefree"
        )


@dataclass(frozen=True)
class SideAnalysis:
    side: Side
    residual: ResidualPoly
    unit: object
    factors: tuple[tuple[ExtPoly, int], ...]

    @property
    def squarefree(self) -> bool:
        return all(k == 1 for _, k in self.factors)


@dataclass(frozen=True)
class PhiAnalysis:
    phi: IntPoly
    multiplicity: int
    expansion: PhiExpansion
    valuations: tuple
    polygon: NewtonPolygon
    principal: NewtonPolygon
    sides: tuple[SideAnalysis, ...]
    index: int

    @property
    def regular(self) -> bool:
        return self.multiplicity == 1 or all(s.squarefree for s in self.sides)


@dataclass(frozen=True)
class PrimeAnalysis:
    f: IntPoly
    p: int
    factors: tuple[tuple[ModPoly, int], ...]
    phis: tuple[PhiAnalysis, ...]

    @property
    def regular(self) -> bool:
        return all(a.regular for a in self.phis)

    @property
    def index_lower_bound(self) -> int:
        return sum(a.index for a in self.phis)


@dataclass(frozen=True)
class PrimeShape:
    """Multiset of (ramification e, residue degree f) for primes above p."""

    p: int
    entries: tuple[tuple[int, int], ...]
    complete: bool

    def count(self, f: int) -> int:
        return sum(1 for _, ff in self.entries if ff == f)

    def total_degree(self) -> int:
        return sum(e * f for e, f in self.entries)


@dataclass(frozen=True)
class IndexReport:
    p: int
    lower_bound: int
    exact: bool
    per_phi: tuple[tuple[IntPoly, int], ...]


@dataclass(frozen=True)
class IndexDivisorWitness:
    """P_f primes of residue degree f above p, more than the N_f monic irreducibles of degree f."""

    p: int
    f: int
    P_f: int
    N_f: int
    exact: bool  # P_f is the true count rather than a certified lower bound

    def __post_init__(self):
        if self.P_f <= self.N_f:
            raise ValueError("a witness needs P_f > N_f")


def _check(f: IntPoly, p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic() or f.degree < 1:
        raise ValueError(f"{f} must be monic of positive degree")


@functools.lru_cache(maxsize=4096)
def analyze_prime(f: IntPoly, p: int, seed: int = 0) -> PrimeAnalysis:
    """Newton polygon data of f at every irreducible factor of f mod p."""
    _check(f, p)
    factors = factor_mod_p(f, p, seed=seed)
    phis = []
    for g, l in factors:
        phi = g.lift()
        exp, vals, poly, principal = phi_polygon(f, phi, p)
        if vals[0] is INF and l > 1:
            raise DegenerateInput(f"{phi} divides {f} over Z while its reduction is a repeated factor mod {p}")
        sides = []
        if principal.sides:
            field = ExtensionField(g)
            for s in principal.sides:
                res = residual_from_points(exp.terms, vals, p, field, s)
                unit, facs = res.poly.factor(seed=seed)
                sides.append(SideAnalysis(s, res, unit, tuple(facs)))
        phis.append(PhiAnalysis(
            phi, l, exp, tuple(vals), poly, principal, tuple(sides),
            lattice_index(principal, phi.degree),
        ))
    return PrimeAnalysis(f, p, tuple(factors), tuple(phis))


def dedekind_test(f: IntPoly, p: int, seed: int = 0) -> bool:
    """True iff p does not divide (Z_K : Z[alpha]), via M(x) = (F - prod phi_i^l_i) / p."""
    _check(f, p)
    factors = factor_mod_p(f, p, seed=seed)
    prod = IntPoly((1,))
    for g, l in factors:
        prod = prod * g.lift() ** l
    m = (f - prod).exact_div_scalar(p)
    mbar = ModPoly(p, m.coeffs)
    for g, l in factors:
        if l >= 2 and (mbar % g).is_zero():
            return False
    return True


def is_p_regular(f: IntPoly, p: int, seed: int = 0) -> tuple[bool, list[dict]]:
    """(regular?, per-side report) where regular means every residual polynomial is squarefree."""
    a = analyze_prime(f, p, seed)
    report = []
    for pa in a.phis:
        for s in pa.sides:
            report.append({
                "phi": pa.phi,
                "side": s.side,
                "residual": s.residual,
                "squarefree": s.squarefree,
            })
    return a.regular, report


def ore_index(f: IntPoly, p: int, seed: int = 0) -> IndexReport:
    a = analyze_prime(f, p, seed)
    return IndexReport(p, a.index_lower_bound, a.regular, tuple((pa.phi, pa.index) for pa in a.phis))


def _shape_entries(a: PrimeAnalysis, certain_only: bool) -> list[tuple[int, int]]:
    entries = []
    for pa in a.phis:
        deg = pa.phi.degree
        if pa.multiplicity == 1:
            entries.append((1, deg))
            continue
        for s in pa.sides:
            e = s.side.ramification
            for psi, k in s.factors:
                if k == 1 or not certain_only:
                    entries.append((e, deg * psi.degree))
    return sorted(entries)


def factorization_shape(f: IntPoly, p: int, seed: int = 0) -> PrimeShape:
    """Full (e, f) multiset of p Z_K; requires F to be p-regular."""
    a = analyze_prime(f, p, seed)
    for pa in a.phis:
        if pa.multiplicity > 1:
            for s in pa.sides:
                if not s.squarefree:
                    raise IrregularPrime(p, pa.phi, s.side, s.residual)
    entries = _shape_entries(a, certain_only=False)
    assert sum(e * ff for e, ff in entries) == f.degree
    return PrimeShape(p, tuple(entries), True)


def guaranteed_primes(f: IntPoly, p: int, seed: int = 0) -> PrimeShape:
    """Primes above p certified without regularity: l_i = 1, degree-1 sides, simple residual factors."""
    a = analyze_prime(f, p, seed)
    entries = _shape_entries(a, certain_only=True)
    complete = sum(e * ff for e, ff in entries) == f.degree
    return PrimeShape(p, tuple(entries), complete)


def common_index_divisor(f: IntPoly, p: int, seed: int = 0) -> Optional[IndexDivisorWitness]:
    """Witness P_f > N_f for the smallest such f, or None (which proves nothing)."""
    shape = guaranteed_primes(f, p, seed)
    counts = Counter(ff for _, ff in shape.entries)
    for ff in sorted(counts):
        n = count_monic_irreducibles(p, ff)
        if counts[ff] > n:
            return IndexDivisorWitness(p, ff, counts[ff], n, shape.complete)
    return None
