"""Newton polygons: lower convex envelopes, sides, residual polynomials, phi-index.

All slopes and heights are exact ``Fraction`` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from puremono.phiadic import INF, phi_expand, poly_valuation, residue
from puremono.poly.finite import ExtensionField, ExtPoly, ModPoly, factor_mod_p
from puremono.poly.integer import IntPoly, valuation


@dataclass(frozen=True)
class PolygonPoint:
    i: int
    u: object  # int or INF

    @property
    def finite(self) -> bool:
        return self.u is not INF


@dataclass(frozen=True)
class Side:
    start: tuple[int, int]
    end: tuple[int, int]

    def __post_init__(self):
        if self.end[0] <= self.start[0]:
            raise ValueError("a side needs positive length")

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    @property
    def ramification(self) -> int:
        return self.slope.denominator

    @property
    def h(self) -> int:
        return -self.slope.numerator

    @property
    def degree(self) -> int:
        return self.length // self.ramification

    def ordinate_at(self, i) -> Fraction:
        return self.start[1] + self.slope * (i - self.start[0])

    def __str__(self):
        return f"{self.start}->{self.end}"


def side_data(s: Side) -> tuple[int, int, int, int, int]:
    """(length l, height H, ramification e, h, degree d) of a side; slope is -h/e."""
    return s.length, s.height, s.ramification, s.h, s.degree


@dataclass(frozen=True)
class NewtonPolygon:
    """Convex chain given by its vertices, left to right."""

    vertices: tuple[tuple[int, int], ...]

    @property
    def sides(self) -> tuple[Side, ...]:
        v = self.vertices
        return tuple(Side(v[k], v[k + 1]) for k in range(len(v) - 1))

    @property
    def start(self) -> int:
        return self.vertices[0][0]

    @property
    def end(self) -> int:
        return self.vertices[-1][0]

    @property
    def length(self) -> int:
        return self.end - self.start if self.vertices else 0

    def height_at(self, i) -> Fraction:
        if not self.start <= i <= self.end:
            raise ValueError(f"abscissa {i} outside the polygon")
        for s in self.sides:
            if s.start[0] <= i <= s.end[0]:
                return s.ordinate_at(i)
        return Fraction(self.vertices[0][1])

    def on_polygon(self, i, u) -> bool:
        if u is INF or not self.vertices or not self.start <= i <= self.end:
            return False
        return self.height_at(i) == u

    def __str__(self):
        return " -> ".join(f"({a},{b})" for a, b in self.vertices)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_envelope(points: Iterable[PolygonPoint | tuple]) -> NewtonPolygon:
    """Lower convex envelope (monotone chain); collinear points are merged into one side."""
    best: dict[int, int] = {}
    for pt in points:
        i, u = (pt.i, pt.u) if isinstance(pt, PolygonPoint) else pt
        if u is INF:
            continue
        if i not in best or u < best[i]:
            best[i] = u
    if not best:
        raise ValueError("no finite points")
    hull: list[tuple[int, int]] = []
    for pt in sorted(best.items()):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull))


def principal_part(n: NewtonPolygon) -> NewtonPolygon:
    """Sub-chain made of the sides with negative slope."""
    verts = [n.vertices[0]]
    for s in n.sides:
        if s.slope >= 0:
            break
        verts.append(s.end)
    return NewtonPolygon(tuple(verts))


@dataclass(frozen=True)
class ResidualPoly:
    side: Side
    poly: ExtPoly

    @property
    def field(self) -> ExtensionField:
        return self.poly.field

    def __str__(self):
        return str(self.poly)


def residual_from_points(terms: Sequence[IntPoly], vals: Sequence, p: int, field: ExtensionField,
                         s: Side, strict: bool = True) -> ResidualPoly:
    e, d = s.ramification, s.degree
    coeffs = []
    for j in range(d + 1):
        i = s.start[0] + j * e
        u = vals[i] if i < len(vals) else INF
        if u is INF or u != s.start[1] - j * s.h:
            coeffs.append(field.zero)
        else:
            coeffs.append(residue(terms[i], u, p, field))
    if strict and not (coeffs[0] and coeffs[-1]):
        raise ArithmeticError(f"residual polynomial of side {s} has a vanishing end coefficient")
    return ResidualPoly(s, ExtPoly(field, coeffs))


def phi_polygon(f: IntPoly, phi: IntPoly, p: int):
    """(expansion, valuations, full polygon, principal part) of f at phi."""
    exp = phi_expand(f, phi)
    vals = exp.valuations(p)
    poly = lower_envelope(PolygonPoint(i, u) for i, u in enumerate(vals))
    return exp, vals, poly, principal_part(poly)


def residual_polynomial(f: IntPoly, phi: IntPoly, p: int, s: Side) -> ResidualPoly:
    exp, vals, _, principal = phi_polygon(f, phi, p)
    if s not in principal.sides:
        raise ValueError(f"{s} is not a side of the principal phi-polygon {principal}")
    field = ExtensionField(ModPoly(p, phi.coeffs))
    return residual_from_points(exp.terms, vals, p, field, s)


def index_points(n: NewtonPolygon) -> list[tuple[int, int]]:
    """Lattice points (i, y) with i >= 1, y >= 1 lying on or under the polygon."""
    if len(n.vertices) < 2:
        return []
    out = []
    for i in range(max(1, n.start), n.end + 1):
        top = math.floor(n.height_at(i))
        out.extend((i, y) for y in range(1, top + 1))
    return out


def lattice_index(n: NewtonPolygon, deg_phi: int = 1) -> int:
    return deg_phi * len(index_points(n))


def phi_index(f: IntPoly, phi: IntPoly, p: int) -> int:
    """deg(phi) times the number of positive lattice points under the principal phi-polygon."""
    fb, pb = ModPoly(p, f.coeffs), ModPoly(p, phi.coeffs)
    if pb.degree < 1 or not (fb % pb).is_zero():
        raise ValueError(f"{phi} does not divide {f} modulo {p}")
    _, _, _, principal = phi_polygon(f, phi, p)
    return lattice_index(principal, phi.degree)


def pure_polygon(n: int, m: int, p: int) -> list[tuple[IntPoly, NewtonPolygon]]:
    """Closed-form principal polygon of x^n - m at each irreducible factor of x^t - m mod p.

    n = p^r * t with p not dividing t. When v_p(m^(p-1) - 1) <= r the polygon is
    the envelope of (0, v_p(m^p - m)) and (p^j, r - j); otherwise the ordinate at 0
    is read off the actual expansion, since it depends on the lift of phi.
    """
    if n < 1 or n % p:
        raise ValueError(f"{p} does not divide n = {n}")
    if m % p == 0:
        raise ValueError(f"{p} divides m = {m}")
    if m ** (p - 1) == 1:
        raise ValueError("m = +-1 is excluded")
    r, t = 0, n
    while t % p == 0:
        t //= p
        r += 1
    f = IntPoly.binomial(n, m)
    closed = valuation(m ** (p - 1) - 1, p) <= r
    tail = [(p**j, r - j) for j in range(r + 1)]
    out = []
    for g, _ in factor_mod_p(IntPoly.binomial(t, m), p):
        phi = g.lift()
        if closed:
            v = valuation(m**p - m, p)
        else:
            v = poly_valuation(phi_expand(f, phi).terms[0], p)
        out.append((phi, lower_envelope([(0, v)] + tail)))
    return out


def polygon_record(n: NewtonPolygon, deg_phi: int = 1) -> dict:
    """Plot-ready description: vertices, annotated sides and phi-index lattice points."""
    pts = index_points(n)
    return {
        "vertices": [[str(a), str(b)] for a, b in n.vertices],
        "sides": [
            {
                "start": [str(x) for x in s.start],
                "end": [str(x) for x in s.end],
                "length": str(s.length),
                "height": str(s.height),
                "slope": str(s.slope),
                "e": str(s.ramification),
                "h": str(s.h),
                "d": str(s.degree),
            }
            for s in n.sides
        ],
        "index_points": [[str(a), str(b)] for a, b in pts],
        "phi_index": str(deg_phi * len(pts)),
    }
