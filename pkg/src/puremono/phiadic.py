"""phi-expansions of integer polynomials and their p-adic valuations."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from puremono.poly.finite import ExtElem, ExtensionField, ModPoly
from puremono.poly.integer import IntPoly, divrem, is_prime, valuation


@functools.total_ordering
class _Infinity:
    """Valuation of zero. Compares above every integer; not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("+inf")

    def __repr__(self):
        return "INF"

    __str__ = __repr__


INF = _Infinity()


@dataclass(frozen=True)
class PhiExpansion:
    """F = sum(terms[i] * phi**i) with deg terms[i] < deg phi."""

    base: IntPoly
    phi: IntPoly
    terms: tuple[IntPoly, ...]

    def recompose(self) -> IntPoly:
        return recompose(self.terms, self.phi)

    def valuations(self, p: int) -> list:
        return [poly_valuation(a, p) for a in self.terms]


@dataclass(frozen=True)
class GeneralExpansion:
    """F = sum(terms[i] * phi**i) with no degree restriction on the terms."""

    base: IntPoly
    phi: IntPoly
    terms: tuple[IntPoly, ...]

    @property
    def canonical(self) -> bool:
        return all(t.degree < self.phi.degree for t in self.terms)

    def recompose(self) -> IntPoly:
        return recompose(self.terms, self.phi)


def recompose(terms: Sequence[IntPoly], phi: IntPoly) -> IntPoly:
    acc = IntPoly()
    for a in reversed(terms):
        acc = acc * phi + a
    return acc


def phi_expand(f: IntPoly, phi: IntPoly) -> PhiExpansion:
    """Canonical phi-expansion by repeated division, lowest term first."""
    if phi.degree < 1:
        raise ValueError("phi must have positive degree")
    if not phi.is_monic():
        raise ValueError(f"phi = {phi} is not monic")
    terms = []
    q = f
    while not q.is_zero():
        q, r = divrem(q, phi)
        terms.append(r)
    if not terms:
        terms.append(IntPoly())
    return PhiExpansion(f, phi, tuple(terms))


def poly_valuation(a: IntPoly, p: int):
    """min over the coefficients of their p-adic valuation; INF for the zero polynomial."""
    if a.is_zero():
        return INF
    return min(valuation(c, p) for c in a.coeffs if c)


def binom_valuation(p: int, r: int, j: int) -> int:
    """v_p(C(p^r, j)) for 1 <= j <= p^r - 1, which is r - v_p(j)."""
    if r < 1:
        raise ValueError("r must be positive")
    if not 1 <= j <= p**r - 1:
        raise ValueError(f"j = {j} outside 1..{p ** r - 1}")
    return r - valuation(j, p)


def residue(a: IntPoly, u: int, p: int, field: ExtensionField) -> ExtElem:
    """(a / p^u) reduced modulo (p, phi)."""
    scaled = a.exact_div_scalar(p**u) if u else a
    return field(ModPoly(p, scaled.coeffs))


@dataclass(frozen=True)
class AdmissibilityResult:
    admissible: bool
    polygon: "NewtonPolygon"
    residual_coefficients: tuple  # c'_i for i = 0..len(terms)-1, None where absent
    residuals: tuple  # ResidualPoly per principal side


def admissibility_check(e: GeneralExpansion, p: int) -> AdmissibilityResult:
    """Polygon and residual data of a (possibly non-canonical) expansion.

    The expansion is admissible when the residue coefficient at every vertex
    abscissa of its polygon is nonzero; only then do the principal polygon and
    residual polynomials agree with those of the canonical expansion.
    """
    from puremono.newton import PolygonPoint, lower_envelope, principal_part, residual_from_points

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    field = ExtensionField(ModPoly(p, e.phi.coeffs))
    vals = [poly_valuation(t, p) for t in e.terms]
    poly = lower_envelope([PolygonPoint(i, u) for i, u in enumerate(vals)])
    coeffs = []
    for i, (t, u) in enumerate(zip(e.terms, vals)):
        if u is INF or not poly.on_polygon(i, u):
            coeffs.append(None)
        else:
            coeffs.append(residue(t, u, p, field))
    admissible = all(coeffs[i] is not None and coeffs[i] for i, _ in poly.vertices)
    principal = principal_part(poly)
    residuals = tuple(residual_from_points(e.terms, vals, p, field, s, strict=False) for s in principal.sides)
    return AdmissibilityResult(admissible, principal, tuple(coeffs), residuals)
