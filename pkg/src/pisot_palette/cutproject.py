"""Points of Sigma([0, c)) = {z in Z[gamma] : z' in [0, c)} inside disks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import (
    ONE, ZERO, BaseSpec, QBeta, ZGamma, _clear_denominators, as_qbeta, canonical_key, gamma_pow,
)


@dataclass(frozen=True)
class Window:
    """Acceptance window ``[0, c)``."""

    c: QBeta

    def __post_init__(self):
        object.__setattr__(self, "c", as_qbeta(self.c))


@dataclass(frozen=True)
class DiskQuery:
    """Closed disk ``|z - center|^2 <= radius_sq``."""

    center: ZGamma
    radius_sq: QBeta

    def __post_init__(self):
        object.__setattr__(self, "center", ZGamma(*self.center))
        object.__setattr__(self, "radius_sq", as_qbeta(self.radius_sq))


def _int_with_den(q) -> tuple[tuple[int, int, int], int]:
    q = tuple(Fraction(c) for c in q)
    d = math.lcm(*(c.denominator for c in q))
    return _clear_denominators(q), d


def _float_embedding(base: BaseSpec):
    g = base.gamma_complex()
    gp = base.approx(QBeta.of(*base.gammap))
    return g, gp


def box_candidates(lo: float, hi: float, center: complex, radius: float, base: BaseSpec, margin=1e-6):
    """Integer triples whose real embedding can satisfy lo <= z' <= hi and |z - center| <= radius.

    Bounds come from floating arithmetic padded by ``margin`` plus one unit,
    which keeps them safe for the small magnitudes used here; callers filter
    exactly afterwards.
    """
    g, gp = _float_embedding(base)
    g2 = g * g
    gp2 = gp * gp
    # Re z - z' and Im z do not involve v0
    a11, a12 = g.real - gp, g2.real - gp2
    a21, a22 = g.imag, g2.imag
    det = a11 * a22 - a12 * a21
    u_lo, u_hi = center.real - radius - hi, center.real + radius - lo
    w_lo, w_hi = center.imag - radius, center.imag + radius
    u_mid, u_half = (u_lo + u_hi) / 2, (u_hi - u_lo) / 2
    w_mid, w_half = (w_lo + w_hi) / 2, (w_hi - w_lo) / 2
    i11, i12, i21, i22 = a22 / det, -a12 / det, -a21 / det, a11 / det
    v1_mid = i11 * u_mid + i12 * w_mid
    v2_mid = i21 * u_mid + i22 * w_mid
    v1_half = abs(i11) * u_half + abs(i12) * w_half + margin
    v2_half = abs(i21) * u_half + abs(i22) * w_half + margin
    out = []
    for v2 in range(math.floor(v2_mid - v2_half) - 1, math.ceil(v2_mid + v2_half) + 2):
        for v1 in range(math.floor(v1_mid - v1_half) - 1, math.ceil(v1_mid + v1_half) + 2):
            im = v1 * g.imag + v2 * g2.imag
            if abs(im - center.imag) > radius + margin:
                continue
            re_part = v1 * g.real + v2 * g2.real
            gal_part = v1 * gp + v2 * gp2
            v0_lo = max(center.real - radius - re_part, lo - gal_part) - margin
            v0_hi = min(center.real + radius - re_part, hi - gal_part) + margin
            for v0 in range(math.floor(v0_lo), math.ceil(v0_hi) + 1):
                out.append(ZGamma(v0, v1, v2))
    return out


def enumerate_interval(lo, hi, center, radius_sq, base: BaseSpec,
                       lo_closed: bool = True, hi_closed: bool = False) -> list[ZGamma]:
    """Exact set of z with z' between lo and hi and |z - center|^2 <= radius_sq, canonically sorted."""
    lo, hi, radius_sq = as_qbeta(lo), as_qbeta(hi), as_qbeta(radius_sq)
    center = ZGamma(*center)
    if base.sign(radius_sq) < 0:
        return []
    lo_n, lo_d = _int_with_den(lo)
    hi_n, hi_d = _int_with_den(hi)
    r2_n, r2_d = _int_with_den(radius_sq * 2)
    radius = base.approx(radius_sq) ** 0.5
    cands = box_candidates(base.approx(lo), base.approx(hi), base.to_complex(center), radius, base)
    sign = base.sign_int
    out = []
    for z in cands:
        zp = base.galois_int(z)
        s = sign((zp[0] * lo_d - lo_n[0], zp[1] * lo_d - lo_n[1], zp[2] * lo_d - lo_n[2]))
        if s < 0 or (s == 0 and not lo_closed):
            continue
        s = sign((hi_n[0] - zp[0] * hi_d, hi_n[1] - zp[1] * hi_d, hi_n[2] - zp[2] * hi_d))
        if s < 0 or (s == 0 and not hi_closed):
            continue
        d = (z[0] - center[0], z[1] - center[1], z[2] - center[2])
        n2 = base.p_form(d, d)
        if sign((r2_n[0] - n2[0] * r2_d, r2_n[1] - n2[1] * r2_d, r2_n[2] - n2[2] * r2_d)) < 0:
            continue
        out.append(z)
    out.sort(key=canonical_key)
    return out


def enumerate_sigma(window: Window, disk: DiskQuery, base: BaseSpec) -> list[ZGamma]:
    """Points of Sigma(window) in the closed disk, lexicographic on (v2, v1, v0)."""
    return enumerate_interval(QBeta.of(0), window.c, disk.center, disk.radius_sq, base)


def sigma_box_scan(window: Window, disk: DiskQuery, base: BaseSpec, extent: int) -> list[ZGamma]:
    """Brute-force oracle: scan every triple with |v_i| <= extent, filter numerically then exactly."""
    g, gp = _float_embedding(base)
    c = base.approx(window.c)
    ctr = base.to_complex(disk.center)
    r = base.approx(disk.radius_sq) ** 0.5
    out = []
    for v2 in range(-extent, extent + 1):
        for v1 in range(-extent, extent + 1):
            for v0 in range(-extent, extent + 1):
                zp = v0 + v1 * gp + v2 * gp * gp
                if zp < -1e-12 or zp > c + 1e-12:
                    continue
                if abs(v0 + v1 * g + v2 * g * g - ctr) > r + 1e-12:
                    continue
                z = ZGamma(v0, v1, v2)
                if enumerate_membership(z, window, disk, base):
                    out.append(z)
    out.sort(key=canonical_key)
    return out


def enumerate_membership(z, window: Window, disk: DiskQuery, base: BaseSpec) -> bool:
    zp = QBeta.of(*base.galois_int(z))
    if base.sign(zp) < 0 or base.cmp(zp, window.c) >= 0:
        return False
    d = tuple(p - q for p, q in zip(z, disk.center))
    return base.cmp(QBeta.of(*base.p_form(d, d)) / 2, disk.radius_sq) <= 0


def first_opposite_power(base: BaseSpec) -> int:
    """Least p >= 1 with Im(gamma^p) of sign opposite to Im(gamma)."""
    p = 1
    while True:
        # Im(gamma^p) = Im(gamma) * t(gamma^p, 1)
        if base.sign_int(base.t_form(gamma_pow(p, base), ONE)) < 0:
            return p
        p += 1


def scale_exponent(c, base: BaseSpec) -> int:
    """Smallest integer k with (gamma')^k < c/2."""
    half = as_qbeta(c) / 2
    k = 0
    if base.cmp(base.beta_pow(-k), half) < 0:
        while base.cmp(base.beta_pow(-(k - 1)), half) < 0:
            k -= 1
    else:
        while base.cmp(base.beta_pow(-k), half) >= 0:
            k += 1
    return k


def l_bound_sq(window: Window, base: BaseSpec) -> tuple[QBeta, int, int]:
    """Squared covering bound L^2 with Delta(T) <= L for every cell, plus (k, p)."""
    p = first_opposite_power(base)
    k = scale_exponent(window.c, base)
    best = None
    for i, j in ((0, p - 1), (0, p), (p - 1, p)):
        if i == j:
            continue
        gi, gj = gamma_pow(i, base), gamma_pow(j, base)
        num = base.zg_mul(gamma_pow(i + j, base), gi - gj)
        t = base.t_form(gi, gj)
        # |num|^2 / Im(g^i conj(g^j))^2 = 2 p(num,num) / (4 Im(gamma)^2 t^2)
        den = base.zb_mul(base.four_im_sq, base.zb_mul(t, t))
        val = base.div(QBeta.of(*base.p_form(num, num)) * 2, QBeta.of(*den))
        if best is None or base.cmp(val, best) > 0:
            best = val
    return base.mul(best, base.beta_pow(k)), k, p


def covering_triple(window: Window, base: BaseSpec) -> list[ZGamma]:
    """gamma^k, gamma^(k+p-1), gamma^(k+p): three window points surrounding 0."""
    _, k, p = l_bound_sq(window, base)
    return [gamma_pow(k, base), gamma_pow(k + p - 1, base), gamma_pow(k + p, base)]


def scale_window(window: Window, k: int, base: BaseSpec) -> Window:
    """Window [0, (gamma')^k c); its set is gamma^k times the original."""
    return Window(base.mul(window.c, base.beta_pow(-k)))


def scale_points(points, k: int, base: BaseSpec) -> list[ZGamma]:
    g = gamma_pow(k, base)
    return sorted((base.zg_mul(g, z) for z in points), key=canonical_key)


__all__ = [
    "Window", "DiskQuery", "enumerate_sigma", "enumerate_interval", "sigma_box_scan", "l_bound_sq",
    "scale_window", "scale_points", "first_opposite_power", "scale_exponent", "covering_triple", "ZERO",
]
