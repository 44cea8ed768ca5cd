"""Spectral quantities ell_m, L_m, L*_m of X^m(gamma), closed forms and the density experiment."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .cutproject import Window
from .errors import AlphabetTooSmall, BudgetExceeded, WindowViolation, WrongBase
from .field import ZERO, BaseSpec, QBeta, ZGamma, as_qbeta, qbeta_max, qbeta_min
from .sweep import reference_bound
from .voronoi import palette_run


@dataclass
class SpectralReport:
    m: int
    c: QBeta
    k_scale: int  # c * beta^k_scale lies in [beta^2, beta^3)
    ell_sq: QBeta
    L_sq: QBeta
    L_star_sq: QBeta
    ell: float = 0.0
    L: float = 0.0
    L_star: float = 0.0
    k: int | None = None  # k_for_m, when known
    extra: dict = field(default_factory=dict)

    def values(self) -> tuple[QBeta, QBeta, QBeta]:
        return self.ell_sq, self.L_sq, self.L_star_sq


def _fill_numeric(rep: SpectralReport, base: BaseSpec) -> SpectralReport:
    rep.ell = base.sqrt_approx(rep.ell_sq)
    rep.L = base.sqrt_approx(rep.L_sq)
    rep.L_star = base.sqrt_approx(rep.L_star_sq)
    return rep


def window_for_m(m: int, base: BaseSpec) -> Window:
    """Window [0, m/(1-gamma')) whose cut-and-project set is X^m(gamma)."""
    if not base.property_F:
        raise WindowViolation(f"base ({base.a},{base.b}) lacks Property (F); X^m is not a cut-and-project set")
    # m >= beta - 1, exactly
    if base.sign(QBeta.of(m + 1, -1)) < 0:
        raise AlphabetTooSmall(f"m={m} is below beta-1 for base ({base.a},{base.b})")
    one_minus = QBeta.of(1) - QBeta.of(*base.gammap)
    return Window(base.inv(one_minus) * m)


def k_for_m(m: int, base: BaseSpec) -> int:
    """Greatest k with (1-gamma') beta^k <= m."""
    if m < 1:
        raise ValueError("k_for_m needs m >= 1")
    one_minus = QBeta.of(1) - QBeta.of(*base.gammap)
    k = 0
    while base.cmp(base.mul(one_minus, base.beta_pow(k)), QBeta.of(m)) > 0:
        k -= 1
    while base.cmp(base.mul(one_minus, base.beta_pow(k + 1)), QBeta.of(m)) <= 0:
        k += 1
    return k


def normalize_exponent(c, base: BaseSpec) -> int:
    """The unique j with c * beta^j in [beta^2, beta^3)."""
    c = as_qbeta(c)
    j = 0
    lo, hi = base.beta_pow(2), base.beta_pow(3)
    while base.cmp(base.mul(c, base.beta_pow(j)), lo) < 0:
        j += 1
    while base.cmp(base.mul(c, base.beta_pow(j)), hi) >= 0:
        j -= 1
    return j


_bound_cache: dict[tuple[int, int], QBeta] = {}
_bound_lock = threading.Lock()


def _reference_L_sq(base: BaseSpec) -> QBeta:
    key = (base.a, base.b)
    with _bound_lock:
        hit = _bound_cache.get(key)
    if hit is None:
        hit = reference_bound(base.beta_pow(2), base)
        with _bound_lock:
            _bound_cache[key] = hit
    return hit


def spectra_for_window(c, base: BaseSpec, m: int = 0) -> SpectralReport:
    """min delta^2, max Delta^2, max Delta*^2 over the palette of [0, c), via self-similarity."""
    c = as_qbeta(c)
    j = normalize_exponent(c, base)
    cn = base.mul(c, base.beta_pow(j))
    run = palette_run(Window(cn), base, _reference_L_sq(base))
    pal = run.palette
    scale = base.beta_pow(j)
    rep = SpectralReport(
        m=m, c=c, k_scale=j,
        ell_sq=base.mul(scale, qbeta_min((p.delta_sq for p in pal), base)),
        L_sq=base.mul(scale, qbeta_max((p.Delta_sq for p in pal), base)),
        L_star_sq=base.mul(scale, qbeta_max((p.delta_star_sq for p in pal), base)),
    )
    rep.extra["palette_size"] = len(pal)
    rep.extra["on_lower_cut"] = cn == base.beta_pow(2)
    return _fill_numeric(rep, base)


def spectra_for_m(m: int, base: BaseSpec) -> SpectralReport:
    """ell_m, L_m and L*_m of X^m(gamma) (squared, exact)."""
    w = window_for_m(m, base)
    rep = spectra_for_window(w.c, base, m)
    rep.k = k_for_m(m, base)
    return rep


def tribo_closed_form(m: int, base: BaseSpec) -> SpectralReport:
    """Closed-form values for the complex Tribonacci base."""
    if not base.is_tribonacci:
        raise WrongBase(f"closed forms hold only for (a,b)=(1,1), got ({base.a},{base.b})")
    k = k_for_m(m, base)
    gp = QBeta.of(*base.gammap)
    gp2 = base.mul(gp, gp)
    ratio = base.div((QBeta.of(1) - gp2) * 4, QBeta.of(3) - gp2)
    c = window_for_m(m, base).c
    rep = SpectralReport(
        m=m, c=c, k_scale=normalize_exponent(c, base),
        ell_sq=base.beta_pow(-k),
        L_sq=base.mul(ratio, base.beta_pow(3 - k)),
        L_star_sq=base.beta_pow(3 - k),
        k=k,
    )
    return _fill_numeric(rep, base)


@dataclass
class DensityLevel:
    level: int
    r: float
    count: int
    count_low: int  # points at least 1e-9 inside the ball
    n: float


SLACK = 1e-9


def xm_points(base: BaseSpec, m: int, radius: float, budget: int = 2_000_000) -> dict[ZGamma, complex]:
    """All sums a_0 + a_1 gamma + ... (digits 0..m) of modulus <= radius, as exact triples.

    Breadth-first over y -> gamma*y + a from 0; a value farther than
    radius + 2m/(|gamma|-1) only has farther descendants, so it is dropped.
    """
    g = base.gamma_complex()
    mod = abs(g)
    prune = radius + 2 * m / (mod - 1) + SLACK
    seen: dict[ZGamma, complex] = {ZERO: 0j}
    frontier = [ZERO]
    gamma = (0, 1, 0)
    while frontier:
        nxt = []
        for y in frontier:
            gy = base.zg_mul(y, gamma)
            for a in range(m + 1):
                z = ZGamma(gy[0] + a, gy[1], gy[2])
                if z in seen:
                    continue
                zc = base.to_complex(z)
                if abs(zc) > prune:
                    continue
                seen[z] = zc
                nxt.append(z)
        if len(seen) > budget:
            raise BudgetExceeded(f"more than {budget} points generated")
        frontier = nxt
    return {z: zc for z, zc in seen.items() if abs(zc) <= radius + SLACK}


def density_profile(base: BaseSpec, m: int, levels: int, budget: int = 2_000_000) -> list[DensityLevel]:
    """Counts of X^m(gamma) in balls B(0, r_k), r_k = |gamma|^(k+2) + m/(|gamma|-1), and n_k = count/r_k^2."""
    mod = abs(base.gamma_complex())
    radii = [mod ** (k + 2) + m / (mod - 1) for k in range(levels)]
    pts = xm_points(base, m, radii[-1], budget)
    mods = [abs(zc) for zc in pts.values()]
    out = []
    for k, r in enumerate(radii):
        hi = sum(1 for x in mods if x <= r + SLACK)
        lo = sum(1 for x in mods if x <= r - SLACK)
        out.append(DensityLevel(k, r, hi, lo, hi / (r * r)))
    return out


def tribo_constants(base: BaseSpec) -> dict[str, QBeta]:
    """Squares of the values appearing in the Tribonacci palette table."""
    if not base.is_tribonacci:
        raise WrongBase("Tribonacci constants need (a,b)=(1,1)")
    b2 = base.beta_pow(2)
    A_sq = base.div((b2 - QBeta.of(1)) * 4, b2 * 3 - QBeta.of(1))
    return {
        "1/beta": base.beta_pow(-2),
        "1/sqrt(beta)": base.beta_pow(-1),
        "1": QBeta.of(1),
        "A": A_sq,
        "B": base.mul(A_sq, base.beta_pow(1)),
        "sqrt(beta)": base.beta_pow(1),
    }


def _label(q, consts) -> str:
    for name, v in consts.items():
        if v == q:
            return name
    return "?"


def palette_orbits(cells) -> list[list]:
    """Protocells grouped with their 180-degree rotations, in first-seen order."""
    seen = {}
    for p in cells:
        key = min(p.canonical_key, p.negated_key())
        seen.setdefault(key, []).append(p)
    return list(seen.values())


def orbit_labels(cells, base: BaseSpec) -> list[tuple[str, str, str]]:
    """Sorted (delta, Delta, Delta*) symbols, one per rotation orbit."""
    consts = tribo_constants(base)
    out = []
    for orbit in palette_orbits(cells):
        p = orbit[0]
        out.append((_label(p.delta_sq, consts), _label(p.Delta_sq, consts), _label(p.delta_star_sq, consts)))
    return sorted(out)


def tribo_table(base: BaseSpec, atlas=None) -> list[dict]:
    """Rows for c = beta^2 and each open interval of [beta^2, beta^3) where the palette is constant."""
    from .sweep import sweep

    if atlas is None:
        atlas = sweep(base.beta_pow(2), base.beta_pow(3), base)
    rows = []
    first = atlas.entries[0]
    rows.append({"lo": first.lo, "hi": first.lo, "kind": "point",
                 "palette": atlas.distinct_palettes[first.palette_index]})
    for e in atlas.entries:
        if e.kind != "interval":
            continue
        pal = atlas.distinct_palettes[e.palette_index]
        if rows[-1]["kind"] == "interval" and palette_key(rows[-1]["palette"]) == palette_key(pal):
            rows[-1]["hi"] = e.hi
            continue
        rows.append({"lo": e.lo, "hi": e.hi, "kind": "interval", "palette": pal})
    for r in rows:
        r["orbits"] = orbit_labels(r["palette"], base)
    return rows


def palette_key(cells) -> frozenset:
    return frozenset(p.canonical_key for p in cells)
