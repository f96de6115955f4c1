"""Parser for polynomial expressions such as ``x^12 - 13`` or ``-2x^3+x-8``.

Grammar (whitespace-insensitive)::

    poly := ['-'] term (('+' | '-') term)*
    term := int ['*'] 'x' ['^' nat] | 'x' ['^' nat] | int
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from puremono.poly.integer import IntPoly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[x+\-*^])|(?P<bad>\S))")


class PolyParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}")


@dataclass(frozen=True)
class PolyExpr:
    source: str
    poly: IntPoly


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:  # trailing whitespace only
            break
        if mt.group("bad"):
            raise PolyParseError(f"unexpected character {mt.group('bad')!r}", mt.start("bad"))
        kind = "int" if mt.group("int") else mt.group("sym")
        value = mt.group("int") or mt.group("sym")
        out.append((kind, value, mt.start(kind if kind == "int" else "sym")))
        pos = mt.end()
    out.append(("end", "", len(text.rstrip()) if text.strip() else len(text)))
    return out


def parse_poly(text: str) -> IntPoly:
    toks = _tokens(text)
    k = 0
    coeffs: dict[int, int] = {}

    def peek():
        return toks[k]

    def take(kind):
        nonlocal k
        tok = toks[k]
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        k += 1
        return tok

    def term(sign: int):
        nonlocal k
        coef, deg = None, 0
        if peek()[0] == "int":
            coef = int(take("int")[1])
            if peek()[0] == "*":
                k += 1
                if peek()[0] != "x":
                    raise PolyParseError("expected 'x' after '*'", peek()[2])
        if peek()[0] == "x":
            k += 1
            deg = 1
            if peek()[0] == "^":
                k += 1
                deg = int(take("int")[1])
            if coef is None:
                coef = 1
        if coef is None:
            tok = peek()
            raise PolyParseError(f"expected a term, found {tok[1] or 'end of input'!r}", tok[2])
        coeffs[deg] = coeffs.get(deg, 0) + sign * coef

    sign = 1
    if peek()[0] == "-":
        k += 1
        sign = -1
    elif peek()[0] == "+":
        k += 1
    term(sign)
    while peek()[0] in "+-" and peek()[0] != "end":
        sign = 1 if take(peek()[0])[1] == "+" else -1
        term(sign)
    tok = peek()
    if tok[0] != "end":
        raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
    top = max(coeffs)
    return IntPoly(coeffs.get(i, 0) for i in range(top + 1))


def format_expr(f: IntPoly) -> str:
    """Canonical text form; ``parse_poly(format_expr(f)) == f``."""
    return str(f)
