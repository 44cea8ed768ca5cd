"""JSON and CSV encodings; every field element is three rational strings "p/q"."""

from __future__ import annotations

import csv
import io
import json

from .expr import format_qbeta
from .field import BaseSpec, QBeta, ZGamma, qbeta_max, qbeta_min
from .voronoi import Protocell, Vertex

APPROX_NOTE = "decimal approximations are for reading only; the rational triples are authoritative"


def q_json(q) -> list[str]:
    return QBeta(*q).to_strings()


def q_from_json(items) -> QBeta:
    return QBeta.from_strings(items)


def _num(x: float) -> str:
    return f"{x:.12f}"


def protocell_to_dict(cell: Protocell, base: BaseSpec) -> dict:
    return {
        "neighbors": [list(z) for z in cell.neighbors],
        "delta_sq": q_json(cell.delta_sq),
        "Delta_sq": q_json(cell.Delta_sq),
        "delta_star_sq": q_json(cell.delta_star_sq),
        "vertices": [
            {"incident": [list(z) for z in v.incident],
             "pair": [list(z) for z in v.pair],
             "diam_sq": q_json(v.diam_sq)}
            for v in cell.vertices
        ],
        "approx": {
            "delta": _num(base.sqrt_approx(cell.delta_sq)),
            "Delta": _num(base.sqrt_approx(cell.Delta_sq)),
            "delta_star": _num(base.sqrt_approx(cell.delta_star_sq)),
        },
    }


def protocell_from_dict(d: dict) -> Protocell:
    verts = tuple(
        Vertex(tuple(ZGamma(*z) for z in v["incident"]),
               tuple(ZGamma(*z) for z in v["pair"]),
               q_from_json(v["diam_sq"]))
        for v in d.get("vertices", [])
    )
    return Protocell(
        neighbors=tuple(ZGamma(*z) for z in d["neighbors"]),
        vertices=verts,
        delta_sq=q_from_json(d["delta_sq"]),
        Delta_sq=q_from_json(d["Delta_sq"]),
        delta_star_sq=q_from_json(d["delta_star_sq"]),
    )


def palette_to_dict(base: BaseSpec, c, cells, L_sq=None) -> dict:
    out = {
        "base": {"a": base.a, "b": base.b},
        "window": {"c": q_json(c), "approx": _num(base.approx(c))},
        "palette": [protocell_to_dict(p, base) for p in cells],
        "note": APPROX_NOTE,
    }
    if L_sq is not None:
        out["L_sq"] = q_json(L_sq)
    return out


def palette_from_dict(d: dict):
    """(a, b, c, protocells) from a palette document."""
    return (d["base"]["a"], d["base"]["b"], q_from_json(d["window"]["c"]),
            [protocell_from_dict(p) for p in d["palette"]])


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def base_report(base: BaseSpec) -> dict:
    return {
        "a": base.a,
        "b": base.b,
        "gamma_min_poly": list(base.gamma_min_poly),
        "beta_min_poly": list(base.beta_min_poly),
        "beta_bracket": [str(x) for x in base.beta_bracket],
        "gammap_bracket": [str(x) for x in base.gammap_bracket],
        "gamma": [_num(base.gamma_complex().real), _num(base.gamma_complex().imag)],
        "property_F": base.property_F,
        "is_tribonacci": base.is_tribonacci,
    }


def atlas_to_dict(atlas) -> dict:
    base = atlas.base
    return {
        "base": {"a": base.a, "b": base.b},
        "L_sq": q_json(atlas.L_sq),
        "breakpoints": [q_json(t) for t in atlas.breakpoints],
        "runs": atlas.runs,
        "entries": [
            {"kind": e.kind, "lo": q_json(e.lo), "hi": q_json(e.hi), "c": q_json(e.c),
             "palette_index": e.palette_index}
            for e in atlas.entries
        ],
        "palettes": [[protocell_to_dict(p, base) for p in pal] for pal in atlas.distinct_palettes],
        "note": APPROX_NOTE,
    }


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def atlas_csv(atlas) -> str:
    base = atlas.base
    rows = []
    for e in atlas.entries:
        pal = atlas.distinct_palettes[e.palette_index]
        rows.append([
            e.kind, format_qbeta(e.lo), format_qbeta(e.hi), _num(base.approx(e.lo)), _num(base.approx(e.hi)),
            e.palette_index, len(pal),
            _num(base.sqrt_approx(qbeta_min((p.delta_sq for p in pal), base))),
            _num(base.sqrt_approx(qbeta_max((p.Delta_sq for p in pal), base))),
            _num(base.sqrt_approx(qbeta_max((p.delta_star_sq for p in pal), base))),
        ])
    return _csv(["kind", "lo", "hi", "lo_approx", "hi_approx", "palette_index", "size",
                 "min_delta", "max_Delta", "max_Delta_star"], rows)


def spectra_csv(reports) -> str:
    rows = [[r.m, r.k, r.k_scale, format_qbeta(r.c), format_qbeta(r.ell_sq), format_qbeta(r.L_sq),
             format_qbeta(r.L_star_sq), _num(r.ell), _num(r.L), _num(r.L_star)] for r in reports]
    return _csv(["m", "k", "k_scale", "c", "ell_sq", "L_sq", "L_star_sq", "ell", "L", "L_star"], rows)


def density_csv(levels) -> str:
    rows = [[d.level, _num(d.r), d.count, d.count_low, _num(d.n)] for d in levels]
    return _csv(["level", "r", "count", "count_low", "n"], rows)


def table_csv(header, rows) -> str:
    return _csv(header, rows)
