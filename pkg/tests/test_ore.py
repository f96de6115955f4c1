import random
from collections import Counter

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import brute_lattice_count, sympy_irreducible_q
from puremono.newton import phi_polygon
from puremono.ore import (
    DegenerateInput,
    IndexDivisorWitness,
    IrregularPrime,
    analyze_prime,
    common_index_divisor,
    dedekind_test,
    factorization_shape,
    guaranteed_primes,
    is_p_regular,
    ore_index,
)
from puremono.poly.finite import factor_mod_p
from puremono.poly.integer import IntPoly, discriminant, valuation

F13 = IntPoly.binomial(12, 13)
F17 = IntPoly.binomial(12, 17)
CUBIC = IntPoly([-8, -2, -1, 1])


def test_dedekind_examples():
    assert dedekind_test(F13, 2) is False
    assert dedekind_test(CUBIC, 2) is False
    assert dedekind_test(IntPoly.binomial(12, 3), 2) is True
    assert dedekind_test(IntPoly.binomial(36, -5), 2) is True


def test_regularity_x12_minus_13():
    regular, report = is_p_regular(F13, 2)
    assert regular
    assert [str(r["residual"]) for r in report] == ["y^2 + y + 1", "(x + 1)*y^2 + x*y + 1"]


def test_vacuously_regular():
    assert is_p_regular(IntPoly([1, 1, 1]), 5) == (True, [])


def test_x4_minus_4_irregular():
    regular, report = is_p_regular(IntPoly.binomial(4, 4), 2)
    assert not regular
    (side,) = report
    assert str(side["residual"]) == "y^2 + 1"
    with pytest.raises(IrregularPrime):
        factorization_shape(IntPoly.binomial(4, 4), 2)


def test_ore_index_x12_minus_13():
    rep = ore_index(F13, 2)
    assert rep.exact and rep.lower_bound == 6
    assert [(str(phi), k) for phi, k in rep.per_phi] == [("x + 1", 2), ("x^2 + x + 1", 4)]
    # lattice oracle: both polygons are (0,2)->(4,0)
    assert brute_lattice_count([(0, 2), (4, 0)]) == 2


def test_ore_index_unramified():
    rep = ore_index(IntPoly.binomial(12, 13), 7)
    assert (rep.lower_bound, rep.exact) == (0, True)


@pytest.mark.parametrize("n,m,p", [(12, 13, 13), (36, 30, 5), (6, -14, 7), (24, 6, 2), (18, 15, 3)])
def test_ore_index_p_divides_m(n, m, p):
    rep = ore_index(IntPoly.binomial(n, m), p)
    assert (rep.lower_bound, rep.exact) == (0, True)


def test_shapes():
    assert factorization_shape(F13, 13).entries == ((12, 1),)
    assert factorization_shape(F13, 2).entries == ((2, 2),) * 3
    assert factorization_shape(F13, 5).entries == tuple(
        sorted((l, g.degree) for g, l in factor_mod_p(F13, 5))
    )


def test_guaranteed_primes():
    g = guaranteed_primes(F17, 3)
    assert g.count(2) == 4
    assert g.entries == ((1, 2), (1, 2), (2, 2), (2, 2)) and g.complete
    assert guaranteed_primes(IntPoly.binomial(2, 2), 2).entries == ((2, 1),)
    assert guaranteed_primes(F13, 2).count(2) >= 2


def test_witnesses():
    assert common_index_divisor(F13, 2) == IndexDivisorWitness(2, 2, 3, 1, True)
    assert common_index_divisor(F17, 3) == IndexDivisorWitness(3, 2, 4, 3, True)
    assert common_index_divisor(CUBIC, 2) == IndexDivisorWitness(2, 1, 3, 2, True)


@pytest.mark.parametrize("m", [2, 3, 5, 6, 7, -3, -5, 13, 17])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_quadratics_have_no_witness(m, p):
    assert common_index_divisor(IntPoly.binomial(2, m), p) is None


def test_witness_invariant():
    with pytest.raises(ValueError):
        IndexDivisorWitness(2, 2, 1, 1, True)


def test_degenerate_input():
    with pytest.raises(DegenerateInput):
        analyze_prime(IntPoly([0, 0, 1]), 2)


def test_rejects_non_prime_and_non_monic():
    with pytest.raises(ValueError):
        dedekind_test(F13, 4)
    with pytest.raises(ValueError):
        dedekind_test(IntPoly([1, 0, 2]), 3)


def _random_irreducible(rng, count):
    out = []
    while len(out) < count:
        deg = rng.randint(2, 12)
        f = IntPoly([rng.randint(-9, 9) for _ in range(deg)] + [1])
        if f[0] != 0 and sympy_irreducible_q(list(f.coeffs)):
            out.append(f)
    return out


CORPUS = _random_irreducible(random.Random(31337), 120)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_dedekind_ore_agreement(p):
    for f in CORPUS:
        rep = ore_index(f, p)
        assert dedekind_test(f, p) == (rep.lower_bound == 0 and rep.exact), str(f)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_degree_and_shape_consistency(p):
    for f in CORPUS:
        g = guaranteed_primes(f, p)
        assert g.total_degree() <= f.degree
        a = analyze_prime(f, p)
        if a.regular:
            shape = factorization_shape(f, p)
            assert shape.total_degree() == f.degree
            if dedekind_test(f, p):
                assert Counter(shape.entries) == Counter((l, h.degree) for h, l in factor_mod_p(f, p))
            assert valuation(discriminant(f), p) - 2 * a.index_lower_bound >= 0
        w = common_index_divisor(f, p)
        if w is not None:
            assert w.P_f > w.N_f and g.count(w.f) == w.P_f


@given(st.integers(1, 3), st.integers(1, 2), st.integers(-60, 60), st.sampled_from([2, 3]))
def test_pure_discriminant_bound(u, v, m, p):
    assume(m not in (-1, 0, 1) and m % p)
    f = IntPoly.binomial(2**u * 3**v, m)
    rep = ore_index(f, p)
    if rep.exact:
        assert valuation(discriminant(f), p) >= 2 * rep.lower_bound


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8), st.sampled_from([2, 3, 5]))
def test_ore_lower_bound_matches_lattice_oracle(tail, p):
    f = IntPoly(tail + [1])
    assume(f[0] != 0)
    try:
        a = analyze_prime(f, p)
    except DegenerateInput:
        return
    for pa in a.phis:
        _, vals, _, _ = phi_polygon(f, pa.phi, p)
        pts = [(i, u) for i, u in enumerate(vals) if isinstance(u, int)]
        expected = brute_lattice_count(pts) * pa.phi.degree
        assert pa.index == expected
