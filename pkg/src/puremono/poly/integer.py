"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial over Z; ``coeffs[i]`` is the coefficient of x^i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> IntPoly:
        return cls([0] * n + [c])

    @classmethod
    def binomial(cls, n: int, m: int) -> IntPoly:
        """x^n - m"""
        return cls([-m] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        return divrem(self, other)

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return divrem(self, other)[0]

    def __mod__(self, other: IntPoly) -> IntPoly:
        return divrem(self, other)[1]

    def exact_div_scalar(self, c: int) -> IntPoly:
        """Divide every coefficient by ``c``; raises if any division is inexact."""
        if any(a % c for a in self.coeffs):
            raise ValueError(f"{self} is not divisible by {c}")
        return IntPoly(a // c for a in self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def compose(self, other: IntPoly) -> IntPoly:
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def _coerce(a: IntPoly | int) -> IntPoly:
    return IntPoly((a,)) if isinstance(a, int) else a


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render integer coefficients (low degree first) as ``x^2 - 3x + 1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def divrem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Euclidean division by a monic ``b``: returns (q, r) with a = b*q + r, deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not b.is_monic():
        raise ValueError(f"divisor {b} is not monic")
    db = b.degree
    rem = list(a.coeffs)
    if len(rem) <= db:
        return IntPoly(), IntPoly(rem)
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for j in range(db):
                rem[k - db + j] -= c * bc[j]
            rem[k] = 0
    return IntPoly(quot), IntPoly(rem[:db])


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant Res(a, b) by the Euclidean recurrence over Q."""
    if a.is_zero() or b.is_zero():
        return 0
    f = [Fraction(c) for c in a.coeffs]
    g = [Fraction(c) for c in b.coeffs]
    res = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            res *= g[0] ** df
            break
        if df < dg:
            if (df * dg) % 2:
                res = -res
            f, g = g, f
            continue
        # f = q*g + r  =>  Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
        r = _frac_rem(f, g)
        if not r:
            return 0
        dr = len(r) - 1
        if (df * dg) % 2:
            res = -res
        res *= g[-1] ** (df - dr)
        f, g = g, r
    assert res.denominator == 1
    return int(res)


def _frac_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    rem = list(f)
    dg = len(g) - 1
    inv = 1 / g[-1]
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv
        if c:
            for j in range(dg + 1):
                rem[k - dg + j] -= c * g[j]
    rem = rem[:dg]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs a nonconstant polynomial")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return q


DEFAULT_SQUAREFREE_BOUND = 10**12


class CannotVerify(ValueError):
    """Raised when a property cannot be certified within the configured bounds."""


def is_squarefree_int(m: int, bound: int = DEFAULT_SQUAREFREE_BOUND) -> bool:
    """True iff no prime square divides ``m`` (trial division, |m| <= bound)."""
    m = abs(m)
    if m == 0:
        return False
    if m > bound:
        raise CannotVerify(f"|m| = {m} exceeds the trial-division bound {bound}")
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return False
        d += 1 if d == 2 else 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime divisors of ``m`` by trial division, ascending."""
    m = abs(m)
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return prime_factors(n) == [n]


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def integer_root(a: int, k: int) -> int | None:
    """Exact integer k-th root of a, or None."""
    if a < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-a, k)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi**k <= a:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < a:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == a else None


def binomial_is_irreducible(n: int, m: int) -> bool:
    """Capelli: x^n - m is irreducible over Q iff m is no q-th power for primes q | n
    and, when 4 | n, m is not of the form -4 b^4."""
    if n < 1 or m == 0:
        return n == 1
    for q in prime_factors(n):
        if integer_root(m, q) is not None:
            return False
    if n % 4 == 0 and m % 4 == 0 and m < 0 and integer_root(-m // 4, 4) is not None:
        return False
    return True
