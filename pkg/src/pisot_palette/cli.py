"""Command line entry point: ``pisot-palette <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import io as pio
from .cutproject import Window
from .errors import InvalidRange, PaletteError
from .expr import format_qbeta, parse_window
from .field import make_base
from .spectra import density_profile, spectra_for_m, tribo_table, window_for_m
from .sweep import sweep
from .voronoi import palette_run


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _m_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise InvalidRange(f"bad m range {text!r}; expected lo..hi") from None
    if lo_i < 1 or hi_i < lo_i:
        raise InvalidRange(f"bad m range {text!r}")
    return lo_i, hi_i


def cmd_check_base(args):
    base = make_base(args.a, args.b)
    _emit(pio.dumps(pio.base_report(base)), args.out)


def cmd_palette(args):
    base = make_base(args.a, args.b)
    if args.m is not None:
        c = window_for_m(args.m, base).c
    else:
        c = parse_window(args.c, base)
    L_sq = parse_window(args.L, base) if args.L else None
    if L_sq is not None:
        L_sq = base.mul(L_sq, L_sq)
    run = palette_run(Window(c), base, L_sq)
    doc = pio.palette_to_dict(base, c, run.palette, run.L_sq)
    doc["xi_count"] = len(run.xi) - 1
    _emit(pio.dumps(doc), args.out)
    if args.svg:
        from .plotting import palette_figure, save_svg
        save_svg(palette_figure(run.palette, base, f"c = {format_qbeta(c)}"), args.svg)


def cmd_sweep(args):
    base = make_base(args.a, args.b)
    atlas = sweep(parse_window(args.b0, base), parse_window(args.c0, base), base)
    text = pio.atlas_csv(atlas) if args.format == "csv" else pio.dumps(pio.atlas_to_dict(atlas))
    _emit(text, args.out)


def cmd_spectra(args):
    base = make_base(args.a, args.b)
    lo, hi = _m_range(args.m_range)
    reports = [spectra_for_m(m, base) for m in range(lo, hi + 1)]
    _emit(pio.spectra_csv(reports), args.out)
    if args.plot:
        from .plotting import save_svg, spectra_figure
        save_svg(spectra_figure(reports, f"base ({base.a},{base.b})"), args.plot)


def cmd_tribo_table(args):
    base = make_base(1, 1)
    rows = tribo_table(base)
    out = []
    for r in rows:
        interval = format_qbeta(r["lo"]) if r["kind"] == "point" else \
            f"({format_qbeta(r['lo'])}, {format_qbeta(r['hi'])})"
        tiles = " ".join(f"[{d};{D};{Ds}]" for d, D, Ds in r["orbits"])
        out.append([interval, len(r["palette"]), len(r["orbits"]), tiles])
    if args.format == "json":
        _emit(pio.dumps([dict(zip(("interval", "protocells", "orbits", "values"), o)) for o in out]), args.out)
    else:
        _emit(pio.table_csv(["interval", "protocells", "orbits", "delta;Delta;Delta_star"], out), args.out)


def cmd_density(args):
    base = make_base(args.a, args.b)
    levels = density_profile(base, args.m, args.levels, args.budget)
    _emit(pio.density_csv(levels), args.out)
    if args.plot:
        from .plotting import density_figure, save_svg
        save_svg(density_figure(levels, f"base ({base.a},{base.b}), m={args.m}"), args.plot)


def cmd_render(args):
    from .plotting import palette_figure, save_svg

    with open(args.input, encoding="utf-8") as fh:
        doc = json.load(fh)
    a, b, c, cells = pio.palette_from_dict(doc)
    base = make_base(a, b)
    save_svg(palette_figure(cells, base, f"c = {format_qbeta(c)}"), args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pisot-palette",
                                description="Voronoi palettes and spectra of cubic complex Pisot numeration sets")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-base", help="validate (a, b) and report the base")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_check_base)

    def ab(sp):
        sp.add_argument("--a", type=int, required=True)
        sp.add_argument("--b", type=int, required=True)
        sp.add_argument("--out", help="write to this file instead of stdout")

    s = sub.add_parser("palette", help="palette of Sigma([0, c)) as JSON")
    ab(s)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--c", help="window end, e.g. 'beta^2+1'")
    g.add_argument("--m", type=int, help="use c = m/(1-gamma')")
    s.add_argument("--L", help="patch radius expression (default: covering bound)")
    s.add_argument("--svg", help="also draw the protocells to this SVG file")
    s.set_defaults(func=cmd_palette)

    s = sub.add_parser("sweep", help="all palettes for c in [b0, c0)")
    ab(s)
    s.add_argument("--b0", required=True)
    s.add_argument("--c0", required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("spectra", help="ell_m, L_m, L*_m as CSV")
    ab(s)
    s.add_argument("--m-range", required=True, help="lo..hi")
    s.add_argument("--plot", help="SVG plot of the values against m")
    s.set_defaults(func=cmd_spectra)

    s = sub.add_parser("tribo-table", help="palette table for the complex Tribonacci base")
    s.add_argument("--format", choices=("json", "csv"), default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_tribo_table)

    s = sub.add_parser("density", help="point counts of X^m in growing balls")
    ab(s)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--levels", type=int, default=6)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.add_argument("--plot")
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("render", help="draw a palette JSON file as SVG")
    s.add_argument("--input", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_render)
    return p


def run_cli(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except PaletteError as exc:
        err = {"error": type(exc).__name__, "code": exc.code, "message": str(exc)}
        if getattr(exc, "position", None) is not None:
            err["position"] = exc.position
        sys.stderr.write(json.dumps(err) + "\n")
        return exc.code
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
