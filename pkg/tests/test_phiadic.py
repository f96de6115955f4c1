import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_polys
from puremono.newton import phi_polygon
from puremono.phiadic import (
    INF,
    GeneralExpansion,
    admissibility_check,
    binom_valuation,
    phi_expand,
    poly_valuation,
    recompose,
)
from puremono.poly.finite import ExtensionField, ModPoly
from puremono.poly.integer import IntPoly, valuation

PHI3 = IntPoly([1, 1, 1])
F13 = IntPoly.binomial(12, 13)


def test_trivial_expansion():
    assert phi_expand(PHI3, PHI3).terms == (IntPoly(), IntPoly([1]))


def test_x12_minus_13_expansion():
    exp = phi_expand(F13, PHI3)
    assert exp.terms == (
        IntPoly([-12]), IntPoly([-4, 4]), IntPoly([0, -18]), IntPoly([18, 24]),
        IntPoly([-25, -5]), IntPoly([9, -6]), IntPoly([1]),
    )
    assert exp.valuations(2) == [2, 2, 1, 1, 0, 0, 0]


def test_x12_minus_17_expansions_reconstruct():
    f = IntPoly.binomial(12, 17)
    for phi in (IntPoly([-1, 1, 1]), IntPoly([-1, -1, 1])):
        exp = phi_expand(f, phi)
        assert len(exp.terms) == 7
        assert exp.recompose() == f


def test_x12_minus_17_printed_lists():
    # both printed coefficient lists, checked against the lift each one reconstructs
    plus = [IntPoly([72, -144]), IntPoly([324, -420]), IntPoly([468, -474]), IntPoly([338, -256]),
            IntPoly([125, -65]), IntPoly([21, -6]), IntPoly([1])]
    minus = [IntPoly([72, 144]), IntPoly([324, 420]), IntPoly([468, 474]), IntPoly([338, 256]),
             IntPoly([125, 65]), IntPoly([21, 6]), IntPoly([1])]
    assert phi_expand(IntPoly.binomial(12, 17), IntPoly([-1, 1, 1])).terms == tuple(plus)
    assert phi_expand(IntPoly.binomial(12, 17), IntPoly([-1, -1, 1])).terms == tuple(minus)


def test_expand_rejects():
    with pytest.raises(ValueError):
        phi_expand(F13, IntPoly([1, 2]))
    with pytest.raises(ValueError):
        phi_expand(F13, IntPoly([3]))


@given(int_polys(14), int_polys(4, monic=True, min_degree=1))
def test_reconstruction(f, phi):
    exp = phi_expand(f, phi)
    assert exp.recompose() == f
    assert all(t.degree < phi.degree for t in exp.terms)
    if not f.is_zero():
        assert len(exp.terms) == f.degree // phi.degree + 1


@pytest.mark.parametrize("coeffs,p,v", [([-12], 2, 2), ([18, 24], 2, 1), ([], 2, INF), ([9, -6], 3, 1), ([7], 3, 0)])
def test_poly_valuation(coeffs, p, v):
    assert poly_valuation(IntPoly(coeffs), p) == v


def test_inf_sentinel():
    assert INF > 10**100 and not INF < 5 and INF == INF and INF != 10**100
    assert not isinstance(INF, (int, float))


@pytest.mark.parametrize("p,r,j,v", [(2, 3, 4, 1), (3, 2, 3, 1), (5, 2, 1, 2), (2, 1, 1, 1)])
def test_binom_valuation_examples(p, r, j, v):
    assert binom_valuation(p, r, j) == v


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", range(1, 7))
def test_binom_valuation_exhaustive(p, r):
    n = p**r
    c = 1
    for j in range(1, n):
        c = c * (n - j + 1) // j
        assert binom_valuation(p, r, j) == valuation(c, p)
    assert c == math.comb(n, n - 1)


def test_binom_valuation_range():
    with pytest.raises(ValueError):
        binom_valuation(2, 3, 8)
    with pytest.raises(ValueError):
        binom_valuation(2, 3, 0)


def test_canonical_is_admissible():
    exp = phi_expand(F13, PHI3)
    res = admissibility_check(GeneralExpansion(F13, PHI3, exp.terms), 2)
    assert res.admissible
    assert res.polygon.vertices == ((0, 2), (4, 0))


def test_single_term_not_admissible_when_phi_divides():
    # F = 0 mod (2, phi), so the only vertex carries a zero residue
    res = admissibility_check(GeneralExpansion(F13, PHI3, (F13,)), 2)
    assert not res.admissible
    assert len(res.polygon.vertices) == 1


def test_single_term_vacuous():
    f = IntPoly([1, 1, 0, 1])
    phi = IntPoly([1, 1, 1])
    res = admissibility_check(GeneralExpansion(f, phi, (f,)), 2)
    assert res.admissible
    assert res.polygon.sides == ()
    assert phi_polygon(f, phi, 2)[3].sides == ()


def _regroup(terms, phi, p, rng):
    terms = list(terms)
    for _ in range(rng.randint(1, 3)):
        i = rng.randrange(len(terms))
        c = IntPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) * IntPoly([p ** rng.randint(0, 3)])
        if i + 1 == len(terms):
            terms.append(IntPoly())
        terms[i] = terms[i] + c * phi
        terms[i + 1] = terms[i + 1] - c
    while len(terms) > 1 and terms[-1].is_zero():
        terms.pop()
    return tuple(terms)


def _proportional(a, b):
    if a.degree != b.degree:
        return False
    k = a.degree
    lam = b.coeffs[k] / a.coeffs[k]
    return all(a.coeffs[i] * lam == b.coeffs[i] for i in range(k + 1))


@pytest.mark.parametrize("f,phi,p", [
    (F13, PHI3, 2), (F13, IntPoly([1, 1]), 2), (IntPoly.binomial(12, 17), IntPoly([2, 1, 1]), 3),
    (IntPoly.binomial(6, 10), IntPoly([0, 1]), 5), (IntPoly.binomial(18, 26), IntPoly([1, 1]), 3),
])
def test_admissible_regroupings_match_canonical(f, phi, p):
    rng = random.Random(11)
    _, _, _, principal = phi_polygon(f, phi, p)
    canon = admissibility_check(GeneralExpansion(f, phi, phi_expand(f, phi).terms), p)
    admissible = 0
    for _ in range(200):
        terms = _regroup(phi_expand(f, phi).terms, phi, p, rng)
        e = GeneralExpansion(f, phi, terms)
        assert e.recompose() == f
        res = admissibility_check(e, p)
        if res.admissible:
            admissible += 1
            assert res.polygon == principal
            for r1, r2 in zip(res.residuals, canon.residuals):
                assert _proportional(r1.poly, r2.poly)
    assert admissible > 0


def test_recompose_function():
    assert recompose([IntPoly([1]), IntPoly([2])], IntPoly([0, 1])) == IntPoly([1, 2])
