"""L-patches, exact Voronoi protocells and the palette of Sigma([0, c)).

Every geometric predicate is a sign test in Z[beta].  For two patch points
x_i, x_j the Voronoi vertex v_ij is the circumcenter of 0, x_i, x_j, and a
third point w keeps it iff 2 Re(conj(v_ij) w) <= |w|^2.  Writing
A = (x_i - x_j) w and B = x_i x_j this becomes

    t(A, B) / t(x_i, x_j) <= |w|^2

where t is the imaginary part of a product divided by Im(gamma) (see
:meth:`BaseSpec.t_form`), so the test is the sign of an integer triple.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .cutproject import DiskQuery, Window, enumerate_interval, enumerate_sigma, l_bound_sq
from .errors import Collinear, InconsistentPartition, UnboundedCell
from .field import (
    ZERO, BaseSpec, QBeta, ZGamma, _clear_denominators, as_qbeta, canonical_key, qbeta_max, sort_exact,
)


@dataclass(frozen=True)
class Patch:
    """Nonzero points of an L-patch and the x'-range [lo, hi) it serves."""

    points: tuple[ZGamma, ...]
    interval: tuple[QBeta, QBeta] | None = None

    def negated(self) -> "Patch":
        return Patch(tuple(sorted((-z for z in self.points), key=canonical_key)), None)


class Vertex(NamedTuple):
    incident: tuple[ZGamma, ...]  # patch points on the circle, sorted; the origin is implicit
    pair: tuple[ZGamma, ZGamma]  # two incident points defining the circumcenter
    diam_sq: QBeta  # (2|v|)^2


@dataclass(frozen=True)
class Protocell:
    neighbors: tuple[ZGamma, ...]
    vertices: tuple[Vertex, ...]
    delta_sq: QBeta
    Delta_sq: QBeta
    delta_star_sq: QBeta

    @property
    def canonical_key(self) -> tuple:
        return tuple(self.neighbors)

    @property
    def vertex_keys(self) -> list[tuple[ZGamma, ...]]:
        """Incident point sets of the merged vertices, origin included."""
        return [(ZERO,) + v.incident for v in self.vertices]

    def negated_key(self) -> tuple:
        return tuple(sorted((-z for z in self.neighbors), key=canonical_key))


@dataclass
class IntervalCell:
    lo: QBeta
    hi: QBeta
    patch: Patch
    protocell: Protocell


@dataclass
class PaletteResult:
    window: Window
    L_sq: QBeta
    xi: list[QBeta]
    cells: list[IntervalCell] = field(default_factory=list)

    @property
    def palette(self) -> list[Protocell]:
        seen = {}
        for cell in self.cells:
            seen.setdefault(cell.protocell.canonical_key, cell.protocell)
        return list(seen.values())


def xi_set(window: Window, L_sq, base: BaseSpec) -> list[QBeta]:
    """Cut points 0 = xi_0 < ... < xi_N = c partitioning the window into constant-patch pieces."""
    pts = enumerate_sigma(window, DiskQuery(ZERO, L_sq), base)
    values = set()
    for z in pts:
        zp = QBeta.of(*base.galois_int(z))
        values.add(zp)
        values.add(window.c - zp)
    return sort_exact(values, base)


def window_candidates(window: Window, L_sq, base: BaseSpec) -> list[ZGamma]:
    """Nonzero z with |z| <= L and z' in (-c, c): every point any patch can contain."""
    pts = enumerate_interval(-window.c, window.c, ZERO, L_sq, base, lo_closed=False, hi_closed=False)
    return [z for z in pts if not z.is_zero()]


def _patch_at(t, window: Window, cands, base: BaseSpec) -> list[ZGamma]:
    """{z : 0 <= t + z' < c} among the candidates."""
    tn = _clear_denominators(as_qbeta(t))
    td = math.lcm(*(c.denominator for c in as_qbeta(t)))
    cn = _clear_denominators(window.c)
    cd = math.lcm(*(c.denominator for c in window.c))
    out = []
    for z in cands:
        zp = base.galois_int(z)
        s = base.sign_int((tn[0] + td * zp[0], tn[1] + td * zp[1], tn[2] + td * zp[2]))
        if s < 0:
            continue
        # c - t - z' > 0
        d = td * cd
        val = (cn[0] * td - tn[0] * cd - d * zp[0], cn[1] * td - tn[1] * cd - d * zp[1],
               cn[2] * td - tn[2] * cd - d * zp[2])
        if base.sign_int(val) <= 0:
            continue
        out.append(z)
    return out


def patch_for_interval(window: Window, xi_lo, xi_hi, L_sq, base: BaseSpec, candidates=None) -> Patch:
    """Patch shared by every t in [xi_lo, xi_hi), checked against the pointwise patch at xi_lo."""
    xi_lo, xi_hi = as_qbeta(xi_lo), as_qbeta(xi_hi)
    cands = window_candidates(window, L_sq, base) if candidates is None else candidates
    pointwise = _patch_at(xi_lo, window, cands, base)
    common = []
    for z in cands:
        zp = QBeta.of(*base.galois_int(z))
        if base.sign(xi_lo + zp) >= 0 and base.cmp(xi_hi + zp, window.c) <= 0:
            common.append(z)
    if set(common) != set(pointwise):
        raise InconsistentPartition(
            "patch changes inside a partition interval; the cut points were built with another L")
    return Patch(tuple(sorted(pointwise, key=canonical_key)), (xi_lo, xi_hi))


def circumradius_sq(xi, xj, base: BaseSpec) -> QBeta:
    """|v_ij|^2 for the circumcenter v_ij of 0, xi, xj."""
    t = base.t_form(xi, xj)
    if not any(t):
        raise Collinear(f"{tuple(xi)} and {tuple(xj)} are collinear with 0")
    return _diam_sq(xi, xj, t, base) / 4


def _diam_parts(xi, xj, t, base: BaseSpec):
    # (2|v|)^2 = |x_i x_j (x_i - x_j)|^2 / Im(x_i conj x_j)^2 = 2 p(M, M) / (4 Im(gamma)^2 t^2)
    m = base.zg_mul(base.zg_mul(xi, xj), (xi[0] - xj[0], xi[1] - xj[1], xi[2] - xj[2]))
    pm = base.p_form(m, m)
    num = (2 * pm[0], 2 * pm[1], 2 * pm[2])
    den = base.zb_mul(base.four_im_sq, base.zb_mul(t, t))
    return num, den


def _diam_sq(xi, xj, t, base: BaseSpec) -> QBeta:
    num, den = _diam_parts(xi, xj, t, base)
    return base.div(QBeta.of(*num), QBeta.of(*den))


def vertex_point(xi, xj, base: BaseSpec) -> complex:
    """Floating circumcenter of 0, xi, xj (for rendering and oracles)."""
    a = base.to_complex(xi)
    b = base.to_complex(xj)
    im = (a * b.conjugate()).imag
    return 1j * a * b * (a.conjugate() - b.conjugate()) / (2 * im)


def protocell_from_patch(patch: Patch, base: BaseSpec) -> Protocell:
    """Voronoi protocell of the origin against the patch points, with exact delta, Delta, Delta*."""
    pts = list(patch.points)
    n = len(pts)
    if n < 3:
        raise UnboundedCell("a bounded cell needs at least three surrounding points")
    norms2 = [base.p_form(w, w) for w in pts]
    fl = [abs(base.to_complex(w)) for w in pts]
    order = sorted(range(n), key=lambda k: fl[k])
    sign = base.sign_int
    zb_mul = base.zb_mul
    gpow = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    covered = set()
    found = []
    for ii in range(n):
        i = order[ii]
        xi = pts[i]
        for jj in range(ii + 1, n):
            j = order[jj]
            if (i, j) in covered:
                continue
            xj = pts[j]
            t_ij = base.t_form(xi, xj)
            if not any(t_ij):
                continue
            st = sign(t_ij)
            rows = base.t_rows(base.zg_mul(xi, xj))
            d = (xi[0] - xj[0], xi[1] - xj[1], xi[2] - xj[2])
            cols = []
            for g in gpow:
                dg = base.zg_mul(d, g)
                cols.append((dg[0] * rows[0][0] + dg[1] * rows[1][0] + dg[2] * rows[2][0],
                             dg[0] * rows[0][1] + dg[1] * rows[1][1] + dg[2] * rows[2][1],
                             dg[0] * rows[0][2] + dg[1] * rows[1][2] + dg[2] * rows[2][2]))
            c0, c1, c2 = cols
            incident = [i, j]
            kept = True
            for l in order:
                if l == i or l == j:
                    continue
                w = pts[l]
                w0, w1, w2 = w
                tp = zb_mul(t_ij, norms2[l])
                val = (2 * (w0 * c0[0] + w1 * c1[0] + w2 * c2[0]) - tp[0],
                       2 * (w0 * c0[1] + w1 * c1[1] + w2 * c2[1]) - tp[1],
                       2 * (w0 * c0[2] + w1 * c1[2] + w2 * c2[2]) - tp[2])
                s = sign(val) * st
                if s > 0:
                    kept = False
                    break
                if s == 0:
                    incident.append(l)
            if not kept:
                continue
            for p in incident:
                for q in incident:
                    covered.add((p, q))
            found.append((incident, i, j, t_ij))
    if len(found) < 3:
        raise UnboundedCell("fewer than three Voronoi vertices; the patch does not surround 0")
    angles = sorted(cmath.phase(vertex_point(pts[i], pts[j], base)) for _, i, j, _ in found)
    gaps = [b - a for a, b in zip(angles, angles[1:])] + [angles[0] + 2 * math.pi - angles[-1]]
    if max(gaps) >= math.pi - 1e-9:
        raise UnboundedCell("Voronoi vertices do not surround the origin")

    counts: dict[int, int] = {}
    for incident, *_ in found:
        for p in incident:
            counts[p] = counts.get(p, 0) + 1
    neighbor_idx = [p for p, c in counts.items() if c >= 2]
    neighbors = tuple(sorted((pts[p] for p in neighbor_idx), key=canonical_key))

    # radii compared as fractions with positive denominators, inverted once
    best = None
    vertices = []
    for incident, i, j, t_ij in found:
        num, den = _diam_parts(pts[i], pts[j], t_ij, base)
        inc = tuple(sorted((pts[p] for p in incident), key=canonical_key))
        vertices.append((inc, (pts[i], pts[j]), num, den))
        if best is None:
            best = (num, den)
        else:
            diff = tuple(x - y for x, y in zip(zb_mul(num, best[1]), zb_mul(best[0], den)))
            if sign(diff) > 0:
                best = (num, den)
    verts = []
    for inc, pair, num, den in vertices:
        verts.append(Vertex(inc, pair, base.div(QBeta.of(*num), QBeta.of(*den))))
    verts.sort(key=lambda v: cmath.phase(vertex_point(v.pair[0], v.pair[1], base)))
    Delta_sq = base.div(QBeta.of(*best[0]), QBeta.of(*best[1]))

    nb_norms = [norms2[p] for p in neighbor_idx]
    lo = hi = nb_norms[0]
    for v in nb_norms[1:]:
        if sign(tuple(x - y for x, y in zip(v, lo))) < 0:
            lo = v
        if sign(tuple(x - y for x, y in zip(v, hi))) > 0:
            hi = v
    return Protocell(
        neighbors=neighbors,
        vertices=tuple(verts),
        delta_sq=QBeta.of(*lo) / 2,
        Delta_sq=Delta_sq,
        delta_star_sq=QBeta.of(*hi) / 2,
    )


def palette_run(window: Window, base: BaseSpec, L_sq=None) -> PaletteResult:
    """Partition the window, build one patch and protocell per piece."""
    if L_sq is None:
        L_sq = l_bound_sq(window, base)[0]
    L_sq = as_qbeta(L_sq)
    xi = xi_set(window, L_sq, base)
    cands = window_candidates(window, L_sq, base)
    result = PaletteResult(window=window, L_sq=L_sq, xi=xi)
    cache: dict[tuple, Protocell] = {}
    for lo, hi in zip(xi, xi[1:]):
        patch = patch_for_interval(window, lo, hi, L_sq, base, candidates=cands)
        cell = cache.get(patch.points)
        if cell is None:
            cell = protocell_from_patch(patch, base)
            cache[patch.points] = cell
        result.cells.append(IntervalCell(lo, hi, patch, cell))
    return result


def certified_palette_run(window: Window, base: BaseSpec, start_sq=None) -> PaletteResult:
    """Palette run with the smallest radius, out of a doubling sequence, that certifies itself.

    A cell built from the points within L of the origin is the true cell as
    soon as every one of its vertices is within L/2 of 0: farther points
    have bisectors beyond L/2.  So a run whose largest Delta is at most L is
    exact.  The sequence starts at a quarter of the covering bound (squared)
    and ends at the covering bound itself, which is always valid.
    """
    top = l_bound_sq(window, base)[0]
    trial = as_qbeta(start_sq) if start_sq is not None else top / 16
    while base.cmp(trial, top) < 0:
        try:
            run = palette_run(window, base, trial)
        except UnboundedCell:
            run = None
        if run is not None:
            worst = qbeta_max((c.protocell.Delta_sq for c in run.cells), base)
            if base.cmp(worst, trial) <= 0:
                return run
        trial = trial * 4
    return palette_run(window, base, top)


def palette(window: Window, base: BaseSpec, L_sq=None) -> list[Protocell]:
    """Distinct protocells of Sigma(window), in order of first appearance along the window."""
    return palette_run(window, base, L_sq).palette


def palette_key_set(cells) -> frozenset:
    return frozenset(c.canonical_key for c in cells)
