"""Command-line surface: qshape <qbinom|regions|shape|converge|plot>.

Exit status: 0 on success, 2 on a usage error (bad arguments or arguments
outside an operation's domain), 1 on an internal error.  CSV output uses a
header row, comma separation, and LF line endings; all outputs, SVG
included, are byte-identical for identical inputs.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import InvalidArguments
from .measure import convergence_table
from .qcore import q_binomial_box
from .quasi import (
    coefficient_via_recursion,
    demo_quasipolynomial,
    region_decomposition,
)
from .shape import limit_shape
from .svgplot import PlotSpec, region_fills, render_svg


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad n list {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("n list is empty")
    return values


def _rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qshape",
        description="Coefficients of [n+k choose k]_q, their quasipolynomial "
        "regions, limit shapes, and convergence diagnostics.",
    )
    parser.add_argument("--version", action="version", version=f"qshape {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", help="coefficients of [n+k choose k]_q")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--format", choices=("coeffs", "csv", "json"), default="coeffs")
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("regions", help="quasipolynomial region report")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--format", choices=("coeffs", "csv", "json"), default="coeffs")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("shape", help="limit shape L_k, exact pieces or samples")
    p.add_argument("--k", type=_positive, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="list exact pieces")
    mode.add_argument("--samples", type=_positive, default=None,
                      help="emit S uniformly spaced (x, L_k(x)) rows")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("converge", help="KS distance to L_k for each n")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n-list", type=_n_list, required=True, metavar="a,b,c")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("plot", help="normalized bar graph as a deterministic SVG")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--k", type=_positive)
    p.add_argument("--out", required=True)
    p.add_argument("--overlay", action="store_true",
                   help="draw L_k over the bars; the curve is scaled as "
                   "L_k(x) * height / max_density with bar i's density "
                   "mass_i * (n*k + 1), so a perfectly converged bar graph "
                   "would trace the curve exactly")
    p.add_argument("--color-regions", action="store_true",
                   help="fill bars by quasipolynomial region, zones in black")
    p.add_argument("--demo", action="store_true",
                   help="plot the two-branch demo quasipolynomial on 0..40 "
                   "instead of a q-binomial")
    p.add_argument("--width", type=_positive, default=800)
    p.add_argument("--height", type=_positive, default=300)
    p.set_defaults(func=cmd_plot)
    return parser


def cmd_qbinom(args) -> int:
    poly = q_binomial_box(args.n, args.k)
    out = sys.stdout
    if args.format == "coeffs":
        for c in poly.coeffs:
            out.write(f"{c}\n")
    elif args.format == "csv":
        out.write("index,coefficient\n")
        for i, c in enumerate(poly.coeffs):
            out.write(f"{i},{c}\n")
    else:
        out.write(json.dumps(
            {"n": args.n, "k": args.k, "degree": poly.degree,
             "coefficients": list(poly.coeffs)}))
        out.write("\n")
    return 0


def cmd_regions(args) -> int:
    decomp = region_decomposition(args.n, args.k)
    out = sys.stdout
    zone_values = {
        zone: [coefficient_via_recursion(args.n, args.k, m)
               for m in range(zone[0], zone[1] + 1)]
        for zone in decomp.transition_zones
    }
    if args.format == "coeffs":
        for region in decomp.regions:
            f = region.formula
            out.write(
                f"region {region.index}: interval [{region.left}, {region.right}]"
                f" (formula valid from {region.valid_from}),"
                f" period {f.period}, degree {f.degree}\n"
            )
            for r, poly in enumerate(f.polys):
                out.write(f"  m = {r} (mod {f.period}): {poly.to_string('m', descending=True)}\n")
        for zone, values in zone_values.items():
            joined = " ".join(str(v) for v in values)
            out.write(f"transition zone [{zone[0]}, {zone[1]}]: {joined}\n")
    elif args.format == "csv":
        out.write("kind,index,left,right,valid_from,period,residue,formula\n")
        for region in decomp.regions:
            f = region.formula
            for r, poly in enumerate(f.polys):
                out.write(
                    f"region,{region.index},{region.left},{region.right},"
                    f"{region.valid_from},{f.period},{r},"
                    f"{poly.to_string('m', descending=True)}\n"
                )
        for i, (zone, values) in enumerate(zone_values.items()):
            joined = " ".join(str(v) for v in values)
            out.write(f"zone,{i},{zone[0]},{zone[1]},,,,{joined}\n")
    else:
        doc = {
            "n": decomp.n,
            "k": decomp.k,
            "regions": [
                {
                    "index": region.index,
                    "left": region.left,
                    "right": region.right,
                    "valid_from": region.valid_from,
                    "period": region.formula.period,
                    "degree": region.formula.degree,
                    "residue_polynomials": [
                        [_rat(Fraction(c)) for c in poly.coeffs]
                        for poly in region.formula.polys
                    ],
                }
                for region in decomp.regions
            ],
            "transition_zones": [
                {"left": zone[0], "right": zone[1], "coefficients": values}
                for zone, values in zone_values.items()
            ],
        }
        out.write(json.dumps(doc))
        out.write("\n")
    return 0


def cmd_shape(args) -> int:
    curve = limit_shape(args.k)
    out = sys.stdout
    if args.samples is None or args.exact:
        for i, piece in enumerate(curve.pieces):
            interval = f"[{_rat(Fraction(i, args.k))}, {_rat(Fraction(i + 1, args.k))}]"
            out.write(f"piece {i} on {interval}: {piece.to_string('x', descending=True)}\n")
    else:
        count = args.samples
        out.write("x,value\n")
        for j in range(count):
            x = Fraction(j, count - 1) if count > 1 else Fraction(0)
            out.write(f"{_rat(x)},{_rat(curve.evaluate(x))}\n")
    return 0


def cmd_converge(args) -> int:
    rows = convergence_table(args.k, args.n_list)
    out = sys.stdout
    out.write("n,ks\n")
    for row in rows:
        out.write(f"{row.n},{row.ks:.12g}\n")
    return 0


def cmd_plot(args) -> int:
    if args.demo:
        f = demo_quasipolynomial()
        heights = tuple(Fraction(f.evaluate(m)) for m in range(41))
        spec = PlotSpec(
            bar_heights=heights,
            width_px=args.width,
            height_px=args.height,
            title="two-branch quasipolynomial, arguments 0..40",
        )
    else:
        if args.n is None or args.k is None:
            raise InvalidArguments("plot needs --n and --k (or --demo)")
        poly = q_binomial_box(args.n, args.k)
        fills = None
        if args.color_regions:
            decomp = region_decomposition(args.n, args.k)
            fills = region_fills(len(poly.coeffs), decomp.regions)
        overlay = None
        if args.overlay:
            curve = limit_shape(args.k)
            total = poly.evaluate(1)
            bars = len(poly.coeffs)
            # curve in bar-value units: L(x) * total / bars  (see --help)
            samples = 512
            overlay = tuple(
                (Fraction(j, samples), curve.evaluate(Fraction(j, samples)) * total / bars)
                for j in range(samples + 1)
            )
        spec = PlotSpec(
            bar_heights=poly.coeffs,
            width_px=args.width,
            height_px=args.height,
            title=f"coefficients of [{args.n}+{args.k} choose {args.k}]_q",
            overlay=overlay,
            region_colors=fills,
        )
    with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(render_svg(spec))
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidArguments as exc:
        print(f"qshape: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qshape: i/o error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal-consistency failures
        print(f"qshape: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
