"""Command-line front end: ``puremono analyze | monogenic | sweep | polygon``.

Exit codes: 0 success (or monogenic), 2 usage/input error, 3 not monogenic,
4 undecided.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from puremono.cli.parse import PolyParseError, parse_poly
from puremono.cli.report import analyze_record, default_primes, dumps, verdict_record
from puremono.cli.svg import render_polygon_svg
from puremono.config import Config
from puremono.monogenity import VerdictKind, classify
from puremono.newton import lower_envelope, phi_polygon, polygon_record, principal_part
from puremono.poly.finite import ModPoly
from puremono.poly.integer import CannotVerify, is_prime, is_squarefree_int

EXIT_OK, EXIT_USAGE, EXIT_NOT, EXIT_UNDECIDED = 0, 2, 3, 4
_VERDICT_EXIT = {
    VerdictKind.MONOGENIC: EXIT_OK,
    VerdictKind.NOT_MONOGENIC: EXIT_NOT,
    VerdictKind.UNDECIDED: EXIT_UNDECIDED,
}

SWEEP_COLUMNS = ["m", "m_mod_4", "m_mod_9", "verdict", "theorem_tag",
                 "witness_p", "witness_f", "P_f", "N_f", "reason"]


class UsageError(Exception):
    pass


def _poly_arg(text: str, what: str = "polynomial"):
    try:
        f = parse_poly(text)
    except PolyParseError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from exc
    if not f.is_monic() or f.degree < 1:
        raise UsageError(f"{what} {f} must be monic of positive degree")
    return f


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args, config: Config) -> int:
    f = _poly_arg(args.poly)
    primes = args.prime or default_primes(f)
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    record = analyze_record(f, sorted(set(primes)), config.seed)
    for w in record["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    if args.json or args.out:
        _emit(dumps(record), args.out)
    else:
        _emit(_analyze_text(record), None)
    return EXIT_OK


def _analyze_text(rec: dict) -> str:
    lines = [f"F = {rec['input']['polynomial']}   disc = {rec['input']['discriminant']}"]
    for sec in rec["primes"]:
        lines.append(f"p = {sec['p']}")
        if sec["status"] != "ok":
            lines.append(f"  degenerate: {sec['error']}")
            continue
        facs = " * ".join(f"({d['factor']})^{d['exponent']}" for d in sec["mod_p_factors"])
        lines.append(f"  F mod p = {facs}")
        lines.append(f"  Dedekind criterion: {'p does not divide the index' if sec['dedekind'] else 'fails'}")
        for ph in sec["phis"]:
            verts = " -> ".join(f"({a},{b})" for a, b in ph["principal"]["vertices"])
            lines.append(f"  phi = {ph['phi']} (l = {ph['multiplicity']}): principal polygon {verts}, "
                         f"ind_phi = {ph['phi_index']}")
            for s in ph["sides"]:
                facs = ", ".join(f"({d['factor']})^{d['exponent']}" for d in s["residual_factors"])
                lines.append(f"    side ({','.join(s['start'])})->({','.join(s['end'])}) "
                             f"e={s['e']} h={s['h']} d={s['d']}  residual {s['residual']} = ({s['residual_unit']}) * {facs}")
        idx = sec["index"]
        lines.append(f"  v_p(index) {'=' if idx['exact'] else '>='} {idx['lower_bound']}")
        shape = ", ".join(f"(e={d['e']}, f={d['f']})" for d in sec["shape"]["entries"])
        lines.append(f"  primes above p{'' if sec['shape']['complete'] else ' (certified part)'}: {shape}")
        w = sec["witness"]
        if w:
            lines.append(f"  common index divisor: P_{w['f']} = {w['P_f']} > N_{w['f']} = {w['N_f']}")
    lines.append(f"verdict: {rec['verdict']['kind']}")
    return "\n".join(lines) + "\n"


def cmd_monogenic(args, config: Config) -> int:
    try:
        v = classify(args.u, args.v, args.m, config)
    except (ValueError, CannotVerify) as exc:
        raise UsageError(str(exc)) from exc
    rec = verdict_record(v, args.u, args.v, args.m)
    if args.json or args.out:
        _emit(dumps(rec), args.out)
    else:
        line = f"x^{2 ** args.u * 3 ** args.v} - ({args.m}): {v.kind.value}"
        if v.theorem:
            line += f" [{v.theorem}]"
        for w in v.witnesses:
            line += f"; p={w.p} f={w.f} P_f={w.P_f} > N_f={w.N_f}"
        print(line)
    return _VERDICT_EXIT[v.kind]


def sweep_row(u: int, v: int, m: int, config: Config) -> dict:
    row = dict.fromkeys(SWEEP_COLUMNS, "")
    row.update(m=str(m), m_mod_4=str(m % 4), m_mod_9=str(m % 9))
    if m in (0, 1, -1):
        row.update(verdict="Skipped", reason="m in {0, 1, -1}")
        return row
    try:
        sf = is_squarefree_int(m, config.squarefree_bound)
    except CannotVerify as exc:
        row.update(verdict="Skipped", reason=str(exc))
        return row
    if not sf:
        row.update(verdict="Skipped", reason="not squarefree")
        return row
    verdict = classify(u, v, m, config)
    row.update(verdict=verdict.kind.value, theorem_tag=verdict.theorem or "")
    if verdict.witnesses:
        w = verdict.witnesses[0]
        row.update(witness_p=str(w.p), witness_f=str(w.f), P_f=str(w.P_f), N_f=str(w.N_f))
    return row


def _sweep_job(job):
    return sweep_row(*job)


def sweep_csv(u: int, v: int, m_from: int, m_to: int, config: Config, jobs: int = 1) -> str:
    jobs_list = [(u, v, m, config) for m in range(m_from, m_to + 1)]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_job, jobs_list, chunksize=8))
    else:
        rows = [_sweep_job(j) for j in jobs_list]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\r\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args, config: Config) -> int:
    if args.u < 1 or args.v < 1:
        raise UsageError("u and v must be positive")
    _emit(sweep_csv(args.u, args.v, args.m_from, args.m_to, config, args.jobs), args.out)
    return EXIT_OK


def _parse_points(text: str):
    pts = []
    for chunk in text.split(","):
        try:
            i, u = chunk.split(":")
            pts.append((int(i), int(u)))
        except ValueError as exc:
            raise UsageError(f"bad point {chunk!r}; expected i:u") from exc
    return pts


def cmd_polygon(args, config: Config) -> int:
    if args.points:
        pts = _parse_points(args.points)
        poly = principal_part(lower_envelope(pts))
        deg = 1
        title = f"lower envelope of {args.points}"
    else:
        if args.poly is None or args.phi is None or args.p is None:
            raise UsageError("polygon needs POLY PHI P or --points")
        f = _poly_arg(args.poly)
        phi = _poly_arg(args.phi, "phi")
        if not is_prime(args.p):
            raise UsageError(f"{args.p} is not prime")
        if not (ModPoly(args.p, f.coeffs) % ModPoly(args.p, phi.coeffs)).is_zero():
            raise UsageError(f"{phi} does not divide {f} modulo {args.p}")
        _, vals, _, poly = phi_polygon(f, phi, args.p)
        pts = [(i, u) for i, u in enumerate(vals) if isinstance(u, int) and i <= poly.end]
        deg = phi.degree
        title = f"principal {phi}-Newton polygon of {f} at p = {args.p}"
    svg = render_polygon_svg(poly, title, pts)
    if args.out:
        _emit(svg, args.out)
    if args.json or not args.out:
        rec = {"schema": "puremono.polygon", "version": "1", "title": title, **polygon_record(poly, deg)}
        sys.stdout.write(dumps(rec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="puremono", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized factorization")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Newton polygon / Ore analysis of a monic polynomial")
    a.add_argument("poly")
    a.add_argument("--prime", type=int, action="append", help="prime to analyze (repeatable)")
    a.add_argument("--json", action="store_true")
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("monogenic", help="classify x^(2^u 3^v) - m")
    m.add_argument("u", type=int)
    m.add_argument("v", type=int)
    m.add_argument("m", type=int)
    m.add_argument("--json", action="store_true")
    m.add_argument("--out")
    m.set_defaults(func=cmd_monogenic)

    s = sub.add_parser("sweep", help="classify a range of m and write CSV")
    s.add_argument("u", type=int)
    s.add_argument("v", type=int)
    s.add_argument("m_from", type=int)
    s.add_argument("m_to", type=int)
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    g = sub.add_parser("polygon", help="render a principal phi-Newton polygon as SVG")
    g.add_argument("poly", nargs="?")
    g.add_argument("phi", nargs="?")
    g.add_argument("p", nargs="?", type=int)
    g.add_argument("--points", help="explicit point set 'i:u,i:u,...' instead of a polynomial")
    g.add_argument("--json", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_polygon)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    # allow global flags after the subcommand too
    args, rest = ap.parse_known_args(argv)
    if rest:
        extra = argparse.ArgumentParser(add_help=False)
        extra.add_argument("--seed", type=int)
        known, unknown = extra.parse_known_args(rest)
        if unknown:
            ap.error(f"unrecognized arguments: {' '.join(unknown)}")
        if known.seed is not None:
            args.seed = known.seed
    config = replace(Config(), seed=args.seed)
    try:
        return args.func(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
