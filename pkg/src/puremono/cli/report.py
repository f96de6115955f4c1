"""Versioned JSON records for engine results. Every number is a decimal string."""

from __future__ import annotations

import json
from typing import Optional

from puremono.monogenity import Verdict
from puremono.newton import polygon_record
from puremono.ore import (
    DegenerateInput,
    IndexDivisorWitness,
    PrimeShape,
    analyze_prime,
    common_index_divisor,
    dedekind_test,
    guaranteed_primes,
)
from puremono.poly.integer import IntPoly, discriminant, prime_factors

SCHEMA = "puremono.report"
VERSION = "1"


def dumps(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"


def witness_record(w: Optional[IndexDivisorWitness]) -> Optional[dict]:
    if w is None:
        return None
    return {"p": str(w.p), "f": str(w.f), "P_f": str(w.P_f), "N_f": str(w.N_f), "P_f_exact": w.exact}


def shape_record(s: PrimeShape) -> dict:
    return {
        "entries": [{"e": str(e), "f": str(f)} for e, f in s.entries],
        "complete": s.complete,
    }


def prime_section(f: IntPoly, p: int, seed: int = 0) -> dict:
    try:
        a = analyze_prime(f, p, seed)
    except DegenerateInput as exc:
        return {"p": str(p), "status": "degenerate", "error": str(exc)}
    phis = []
    for pa in a.phis:
        phis.append({
            "phi": str(pa.phi),
            "multiplicity": str(pa.multiplicity),
            "expansion": [str(t) for t in pa.expansion.terms],
            "valuations": [str(v) for v in pa.valuations],
            "polygon": [[str(i), str(u)] for i, u in pa.polygon.vertices],
            "principal": polygon_record(pa.principal, pa.phi.degree),
            "sides": [
                {
                    "start": [str(x) for x in s.side.start],
                    "end": [str(x) for x in s.side.end],
                    "l": str(s.side.length),
                    "H": str(s.side.height),
                    "e": str(s.side.ramification),
                    "h": str(s.side.h),
                    "d": str(s.side.degree),
                    "residual": str(s.residual),
                    "residual_unit": str(s.unit),
                    "residual_factors": [{"factor": str(g), "exponent": str(k)} for g, k in s.factors],
                    "squarefree": s.squarefree,
                }
                for s in pa.sides
            ],
            "phi_index": str(pa.index),
        })
    return {
        "p": str(p),
        "status": "ok",
        "mod_p_factors": [{"factor": str(g), "exponent": str(l)} for g, l in a.factors],
        "dedekind": dedekind_test(f, p, seed),
        "phis": phis,
        "index": {"lower_bound": str(a.index_lower_bound), "exact": a.regular},
        "shape": shape_record(guaranteed_primes(f, p, seed)),
        "witness": witness_record(common_index_divisor(f, p, seed)),
    }


def _square_divisor_primes(d: int, limit: int = 10**6) -> Optional[list[int]]:
    """Primes whose square divides d, or None when d cannot be factored far enough."""
    d = abs(d)
    out = []
    q = 2
    while q * q <= d and q <= limit:
        if d % q == 0:
            k = 0
            while d % q == 0:
                d //= q
                k += 1
            if k >= 2:
                out.append(q)
        q += 1 if q == 2 else 2
    if d > 1 and d > limit * limit:
        return None  # cofactor may hide a square
    return out


def analyze_record(f: IntPoly, primes: list[int], seed: int = 0) -> dict:
    warnings = []
    disc = discriminant(f)
    if disc == 0:
        warnings.append("polynomial is not squarefree over Q")
    roots = [r for r in _rational_root_candidates(f) if f(r) == 0]
    if roots:
        warnings.append(f"polynomial has integer roots {roots}; it is reducible over Q")
    sections = [prime_section(f, p, seed) for p in primes]
    witnesses = [s["witness"] for s in sections if s.get("witness")]
    verdict = {"kind": "Undecided", "reason": "no index-divisor witness at the analyzed primes"}
    if witnesses:
        verdict = {"kind": "NotMonogenic", "reason": "common index divisor", "witnesses": witnesses}
    elif disc and not warnings:
        bad = _square_divisor_primes(disc)
        if bad is not None:
            try:
                ok = all(dedekind_test(f, q, seed) for q in bad)
            except ValueError:
                ok = False
            if ok:
                verdict = {"kind": "MonogenicWithZalpha",
                           "reason": "Dedekind's criterion holds at every prime whose square divides disc(F)",
                           "checked_primes": [str(q) for q in bad]}
    return {
        "schema": SCHEMA,
        "version": VERSION,
        "command": "analyze",
        "input": {
            "polynomial": str(f),
            "coefficients": [str(c) for c in f.coeffs],
            "degree": str(f.degree),
            "discriminant": str(disc),
        },
        "warnings": warnings,
        "primes": sections,
        "verdict": verdict,
    }


def _rational_root_candidates(f: IntPoly) -> list[int]:
    c = abs(f[0])
    if c == 0:
        return [0]
    divs = [d for d in range(1, c + 1) if c % d == 0] if c <= 10**6 else [1]
    return sorted({s * d for d in divs for s in (1, -1)})


def default_primes(f: IntPoly) -> list[int]:
    c = f[0]
    extra = prime_factors(c) if c and abs(c) <= 10**12 else []
    return sorted({2, 3} | set(extra))


def verdict_record(v: Verdict, u: int, vv: int, m: int) -> dict:
    rec = {
        "schema": SCHEMA,
        "version": VERSION,
        "command": "monogenic",
        "input": {"u": str(u), "v": str(vv), "m": str(m), "n": str(2**u * 3**vv)},
        "kind": v.kind.value,
        "theorem": v.theorem,
        "congruences": {k: str(x) for k, x in v.congruences.items()},
        "witnesses": [witness_record(w) for w in v.witnesses],
        "warnings": list(v.warnings),
    }
    if v.substitution is not None:
        rec["substitution"] = {"x": str(v.substitution[0]), "y": str(v.substitution[1])}
    if v.fallback is not None:
        rec["fallback"] = {
            "primes": [str(p) for p in v.fallback["primes"]],
            "sections": [_fallback_section(s) for s in v.fallback["sections"]],
        }
    return rec


def _fallback_section(s: dict) -> dict:
    if "error" in s:
        return {"p": str(s["p"]), "error": s["error"]}
    return {
        "p": str(s["p"]),
        "dedekind": s["dedekind"],
        "index_lower_bound": str(s["index_lower_bound"]),
        "regular": s["regular"],
        "shape": shape_record(s["shape"]),
        "witness": witness_record(s["witness"]),
    }

