"""Finite fields GF(p), GF(p)[x]/(phi), and polynomials over them.

Field elements are plain ints for ``PrimeField`` and ``ExtElem`` values for
``ExtensionField``; polynomial code only talks to fields through their
methods, so the same factorization routine serves both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from puremono.poly.integer import IntPoly, format_poly, is_prime, prime_factors


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def pow(self, a, k: int):
        return pow(a, k, self.p)

    def elements(self):
        return range(self.p)

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def key(self, a) -> tuple:
        return (a,)

    def fmt(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class ExtElem:
    """Element of GF(p)[x]/(phi): ``value`` holds the reduced residue, low degree first."""

    field: "ExtensionField"
    value: tuple[int, ...]

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, k: int):
        return self.field.pow(self, k)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.fmt(self)

    def __repr__(self):
        return f"ExtElem({self.field.fmt(self)!r})"


def _trim_mod(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class ExtensionField:
    """GF(p)[x]/(phi) for a monic irreducible ``phi``; irreducibility is checked here."""

    def __init__(self, modulus: ModPoly):
        if modulus.is_zero() or modulus.lc != 1:
            raise ValueError("defining polynomial must be monic")
        if not modulus.is_irreducible():
            raise ValueError(f"{modulus} is not irreducible over GF({modulus.p})")
        self.p = modulus.p
        self.modulus = modulus
        self.degree = modulus.degree
        self.characteristic = self.p
        self.order = self.p**self.degree
        self._mod = modulus.coeffs
        self.zero = ExtElem(self, ())
        self.one = ExtElem(self, (1,))

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other._mod == self._mod and other.p == self.p

    def __hash__(self):
        return hash(("GFext", self.p, self._mod))

    def __repr__(self):
        return f"GF({self.p})[x]/({self.modulus})"

    def __call__(self, a) -> ExtElem:
        if isinstance(a, ExtElem):
            if a.field != self:
                raise ValueError("element belongs to a different field")
            return a
        if isinstance(a, int):
            a = (a,)
        if isinstance(a, (IntPoly, ModPoly)):
            a = a.coeffs
        return ExtElem(self, self._reduce(list(a)))

    def _reduce(self, c: list[int]) -> tuple[int, ...]:
        p, m, k = self.p, self._mod, self.degree
        c = [x % p for x in c]
        for i in range(len(c) - 1, k - 1, -1):
            t = c[i]
            if t:
                for j in range(k):
                    c[i - k + j] = (c[i - k + j] - t * m[j]) % p
                c[i] = 0
        return _trim_mod(c[:k], p)

    def _check(self, a):
        if not isinstance(a, ExtElem) or (a.field is not self and a.field != self):
            raise ValueError("element belongs to a different field")

    def add(self, a, b):
        self._check(a)
        self._check(b)
        n = max(len(a.value), len(b.value))
        va, vb = a.value, b.value
        summed = ((va[i] if i < len(va) else 0) + (vb[i] if i < len(vb) else 0) for i in range(n))
        return ExtElem(self, _trim_mod(summed, self.p))

    def neg(self, a):
        self._check(a)
        return ExtElem(self, _trim_mod((-c for c in a.value), self.p))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        if not a.value or not b.value:
            return self.zero
        out = [0] * (len(a.value) + len(b.value) - 1)
        for i, x in enumerate(a.value):
            if x:
                for j, y in enumerate(b.value):
                    out[i + j] += x * y
        return ExtElem(self, self._reduce(out))

    def inv(self, a):
        self._check(a)
        if not a.value:
            raise ZeroDivisionError("inverse of 0")
        g, s, _ = ModPoly(self.p, a.value).xgcd(self.modulus)
        # g is a nonzero constant since the modulus is irreducible
        return ExtElem(self, self._reduce(list((s * self.p_field.inv(g.lc)).coeffs)))

    @property
    def p_field(self) -> PrimeField:
        return self.modulus.field

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self):
        def rec(prefix, i):
            if i == self.degree:
                yield ExtElem(self, _trim_mod(prefix, self.p))
                return
            for c in range(self.p):
                yield from rec(prefix + [c], i + 1)
        return rec([], 0)

    def random(self, rng: random.Random):
        return ExtElem(self, _trim_mod((rng.randrange(self.p) for _ in range(self.degree)), self.p))

    def key(self, a) -> tuple:
        return tuple(a.value) + (0,) * (self.degree - len(a.value))

    def fmt(self, a) -> str:
        return format_poly(a.value) if a.value else "0"


Field = Any  # PrimeField | ExtensionField


class FieldPoly:
    """Dense polynomial over a finite field; immutable.

    ``coeffs[i]`` is the coefficient of the i-th power; trailing zeros stripped.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        zero = field.zero
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    def _new(self, coeffs) -> FieldPoly:
        return type(self)._from_field(self.field, coeffs)

    @classmethod
    def _from_field(cls, field, coeffs):
        obj = object.__new__(cls)
        cs = list(coeffs)
        zero = field.zero
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    # basic protocol
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __eq__(self, other):
        return type(other) is type(self) and other.field == self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(self.field.key(c) for c in self.coeffs))

    def _same(self, other: FieldPoly):
        if not isinstance(other, FieldPoly) or other.field != self.field:
            raise ValueError("polynomials over different fields")

    # arithmetic
    def __add__(self, other):
        self._same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new(F.add(self[i], other[i]) for i in range(n))

    def __sub__(self, other):
        self._same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new(F.sub(self[i], other[i]) for i in range(n))

    def __neg__(self):
        return self._new(self.field.neg(c) for c in self.coeffs)

    def scale(self, c) -> FieldPoly:
        F = self.field
        return self._new(F.mul(c, a) for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, FieldPoly):
            return self.scale(self.field(other))
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return self._new(())
        F = self.field
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self._new(out)

    def __pow__(self, k: int):
        result, base = self._new((self.field.one,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        self._same(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return self._new(()), self
        inv = F.inv(other.lc)
        quot = [F.zero] * (len(rem) - db)
        oc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == F.zero:
                continue
            c = F.mul(c, inv)
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, oc[j]))
        return self._new(quot), self._new(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> FieldPoly:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> FieldPoly:
        F = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            k = i % F.characteristic
            out.append(F.mul(c, F(k)) if k else F.zero)
        return self._new(out)

    def gcd(self, other) -> FieldPoly:
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g (g not normalized)."""
        one = self._new((self.field.one,))
        zero = self._new(())
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while r1.coeffs:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        return r0, s0, t0

    def powmod(self, k: int, mod: FieldPoly) -> FieldPoly:
        result = self._new((self.field.one,))
        base = self % mod
        while k:
            if k & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            k >>= 1
        return result

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def x_poly(self) -> FieldPoly:
        F = self.field
        return self._new((F.zero, F.one))

    def is_squarefree(self) -> bool:
        if self.degree < 1:
            return True
        return self.gcd(self.derivative()).degree == 0

    def is_irreducible(self) -> bool:
        """Rabin's test."""
        n = self.degree
        if n < 1:
            return False
        f = self.monic()
        q = self.field.order
        x = f.x_poly()
        if x.powmod(q**n, f) != x % f:
            return False
        for r in prime_factors(n):
            h = x.powmod(q ** (n // r), f) - x
            if f.gcd(h).degree != 0:
                return False
        return True

    # factorization
    def _pth_root(self) -> FieldPoly:
        # f = g(x^p); coefficient-wise p-th root is a -> a^(q/p)
        F = self.field
        p = F.characteristic
        e = F.order // p
        return self._new(F.pow(self.coeffs[i], e) for i in range(0, len(self.coeffs), p))

    def squarefree_decomposition(self) -> list[tuple[FieldPoly, int]]:
        """Monic squarefree parts with multiplicities (char-p Yun variant)."""
        f = self.monic()
        p = self.field.characteristic
        out: dict[int, FieldPoly] = {}

        def rec(f: FieldPoly, mult: int):
            if f.degree < 1:
                return
            i = 1
            c = f.gcd(f.derivative())
            w = f // c
            while w.degree > 0:
                y = w.gcd(c)
                fac = w // y
                if fac.degree > 0:
                    out[i * mult] = out[i * mult] * fac if i * mult in out else fac
                w, c = y, c // y
                i += 1
            if c.degree > 0:
                rec(c._pth_root().monic(), mult * p)

        rec(f, 1)
        return sorted(((g.monic(), k) for k, g in out.items()), key=lambda t: t[1])

    def distinct_degree(self) -> list[tuple[FieldPoly, int]]:
        """For monic squarefree f: list of (product of all degree-d factors, d)."""
        f = self
        q = self.field.order
        x = f.x_poly()
        h = x % f
        out = []
        d = 0
        while f.degree >= 2 * (d + 1):
            d += 1
            h = h.powmod(q, f)
            g = f.gcd(h - x)
            if g.degree > 0:
                out.append((g, d))
                f = f // g
                h = h % f
        if f.degree > 0:
            out.append((f.monic(), f.degree))
        return out

    def equal_degree(self, d: int, rng: random.Random) -> list[FieldPoly]:
        """Cantor-Zassenhaus splitting of a monic squarefree product of degree-d irreducibles."""
        f = self
        n = f.degree
        if n == d:
            return [f]
        F = self.field
        q = F.order
        while True:
            a = self._new(F.random(rng) for _ in range(n))
            if a.degree < 1:
                continue
            if q % 2:
                g = a.powmod((q**d - 1) // 2, f) - self._new((F.one,))
            else:
                # trace map to GF(2)
                k = (q**d).bit_length() - 1
                t = a % f
                acc = t
                for _ in range(k - 1):
                    t = (t * t) % f
                    acc = acc + t
                g = acc
            g = f.gcd(g)
            if 0 < g.degree < n:
                return g.equal_degree(d, rng) + (f // g).equal_degree(d, rng)

    def factor(self, seed: int = 0) -> tuple[Any, list[tuple[FieldPoly, int]]]:
        """Return (leading unit, [(monic irreducible, exponent), ...]) in canonical order."""
        if not self.coeffs:
            raise ValueError("cannot factor the zero polynomial")
        unit = self.lc
        rng = random.Random(seed)
        found: dict[FieldPoly, int] = {}
        for part, mult in self.squarefree_decomposition():
            for block, d in part.distinct_degree():
                for g in block.equal_degree(d, rng):
                    g = g.monic()
                    found[g] = found.get(g, 0) + mult
        facs = sorted(found.items(), key=lambda t: t[0].sort_key())
        return unit, facs

    def __str__(self):
        return self._fmt()

    def _fmt(self, var: str = "x") -> str:
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == F.zero:
                continue
            cs = F.fmt(c)
            if " " in cs or "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(cs)
            elif c == F.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}{mono}" if not isinstance(c, ExtElem) else f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"{type(self).__name__}({self.field!r}, {str(self)!r})"


class ModPoly(FieldPoly):
    """Polynomial over GF(p) with integer coefficients in [0, p)."""

    __slots__ = ()

    def __init__(self, p: int | PrimeField, coeffs: Iterable[int] = ()):
        field = p if isinstance(p, PrimeField) else _prime_field(p)
        super().__init__(field, coeffs)

    @property
    def p(self) -> int:
        return self.field.p

    @classmethod
    def reduce(cls, f: IntPoly, p: int) -> ModPoly:
        return cls(p, f.coeffs)

    def lift(self) -> IntPoly:
        """Canonical lift to Z[x] with coefficients in [0, p)."""
        return IntPoly(self.coeffs)


class ExtPoly(FieldPoly):
    """Polynomial in y over an extension field GF(p)[x]/(phi)."""

    __slots__ = ()

    def __init__(self, field: ExtensionField, coeffs: Iterable = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if isinstance(c, ExtElem) and c.field != field:
                raise ValueError("coefficients from inconsistent fields")
        super().__init__(field, coeffs)

    def __str__(self):
        return self._fmt("y")


_FIELDS: dict[int, PrimeField] = {}


def _prime_field(p: int) -> PrimeField:
    if p not in _FIELDS:
        _FIELDS[p] = PrimeField(p)
    return _FIELDS[p]


def factor_mod_p(f: ModPoly | IntPoly, p: int | None = None, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Monic irreducible factors of f over GF(p), sorted by (degree, coefficients)."""
    if isinstance(f, IntPoly):
        if p is None:
            raise TypeError("prime required for an integer polynomial")
        f = ModPoly(p, f.coeffs)
    return f.factor(seed=seed)[1]


def factor_over_ext(g: ExtPoly, seed: int = 0):
    """(unit, [(monic irreducible ExtPoly, exponent), ...])."""
    return g.factor(seed=seed)


def mobius(n: int) -> int:
    ps = prime_factors(n)
    m = n
    for q in ps:
        m //= q
        if m % q == 0:
            return 0
    return -1 if len(ps) % 2 else 1


def count_monic_irreducibles(p: int, f: int) -> int:
    """Number of monic irreducible polynomials of degree f over GF(p) (necklace formula)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * p ** (f // d) for d in range(1, f + 1) if f % d == 0)
    assert total % f == 0
    return total // f


def expand_factors(unit, factors: Sequence[tuple[FieldPoly, int]], like: FieldPoly) -> FieldPoly:
    acc = like._new((unit,))
    for g, e in factors:
        acc = acc * g**e
    return acc
