"""Write SVG plots of the small-point-set polygon and the x^12 - 13 / x^12 - 17 polygons."""

import argparse
import pathlib

from puremono.cli.svg import render_polygon_svg
from puremono.newton import lower_envelope, phi_polygon, principal_part
from puremono.poly.integer import IntPoly

POINTS = [(0, 5), (1, 3), (2, 4), (3, 3), (5, 1), (7, 1), (9, 0)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="plots")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    poly = principal_part(lower_envelope(POINTS))
    (out / "points.svg").write_text(render_polygon_svg(poly, "lower envelope", POINTS))

    for name, f, phi, p in [
        ("x12m13_phi2.svg", IntPoly.binomial(12, 13), IntPoly([1, 1, 1]), 2),
        ("x12m17_phi1.svg", IntPoly.binomial(12, 17), IntPoly([2, 1, 1]), 3),
        ("x12m17_phi2.svg", IntPoly.binomial(12, 17), IntPoly([2, 2, 1]), 3),
    ]:
        _, vals, _, principal = phi_polygon(f, phi, p)
        pts = [(i, u) for i, u in enumerate(vals) if isinstance(u, int) and i <= principal.end]
        (out / name).write_text(render_polygon_svg(principal, f"{phi}-polygon of {f} at p = {p}", pts))
    for path in sorted(out.glob("*.svg")):
        print(path, path.read_text().count('class="cross"'), "index points")


if __name__ == "__main__":
    main()
