"""All palettes of Sigma([0, c)) for c in [b0, c0), and occurrence intervals of patches."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cutproject import Window, enumerate_interval, l_bound_sq
from .errors import InvalidRange
from .field import ZERO, BaseSpec, QBeta, as_qbeta, qbeta_max, sort_exact
from .voronoi import PaletteResult, Protocell, certified_palette_run, palette_key_set, palette_run


def w_values(c0, L_sq, base: BaseSpec) -> list[QBeta]:
    """Sorted z' for |z| <= L and z' in (-c0, c0); symmetric about 0."""
    c0 = as_qbeta(c0)
    pts = enumerate_interval(-c0, c0, ZERO, L_sq, base, lo_closed=False, hi_closed=False)
    return sort_exact({QBeta.of(*base.galois_int(z)) for z in pts}, base)


def w_with_sentinels(c0, L_sq, base: BaseSpec) -> list[QBeta]:
    c0 = as_qbeta(c0)
    return [-c0] + w_values(c0, L_sq, base) + [c0]


def theta_set(b0, c0, L_sq, base: BaseSpec) -> list[QBeta]:
    """Differences of W-values strictly between b0 and c0, sorted."""
    b0, c0 = as_qbeta(b0), as_qbeta(c0)
    w = w_values(c0, L_sq, base)
    out = set()
    for x in w:
        for y in w:
            d = x - y
            if base.cmp(d, b0) > 0 and base.cmp(d, c0) < 0:
                out.add(d)
    return sort_exact(out, base)


def patch_occurrence_interval(i: int, k: int, w: list[QBeta]) -> tuple[QBeta, QBeta]:
    """Open range of c where {w_i..w_k} is a patch: (w_k - w_i, w_{k+1} - w_{i-1}).

    ``w`` includes the sentinels -c0 and c0 at both ends.
    """
    n = len(w) - 1
    if not (1 <= i <= k <= n - 1):
        raise InvalidRange(f"indices ({i}, {k}) outside 1..{n - 1}")
    if not _contains_zero(w, i, k):
        raise InvalidRange("the range must contain 0")
    return w[k] - w[i], w[k + 1] - w[i - 1]


def _contains_zero(w, i, k) -> bool:
    zero = QBeta.of(0)
    return any(v == zero for v in w[i:k + 1])


def patch_w_range(points, w: list[QBeta], base: BaseSpec) -> tuple[int, int]:
    """Index range (i, k) in ``w`` covered by the patch's Galois images (origin included)."""
    vals = {QBeta.of(*base.galois_int(z)) for z in points} | {QBeta.of(0)}
    idx = [j for j, v in enumerate(w) if v in vals]
    if len(idx) != len(vals) or idx != list(range(idx[0], idx[-1] + 1)):
        raise InvalidRange("patch values are not a contiguous run of W")
    return idx[0], idx[-1]


@dataclass
class AtlasEntry:
    kind: str  # "point" or "interval"
    lo: QBeta
    hi: QBeta  # equal to lo for points
    c: QBeta  # representative window endpoint actually computed
    palette_index: int


@dataclass
class PaletteAtlas:
    base: BaseSpec
    L_sq: QBeta
    breakpoints: list[QBeta]
    entries: list[AtlasEntry] = field(default_factory=list)
    distinct_palettes: list[list[Protocell]] = field(default_factory=list)
    runs: int = 0

    @property
    def theta(self) -> list[QBeta]:
        return self.breakpoints[1:-1]

    def palette_for(self, c) -> list[Protocell]:
        """Atlas palette for a window endpoint c in [b0, c0)."""
        c = as_qbeta(c)
        base = self.base
        for e in self.entries:
            if e.kind == "point" and c == e.lo:
                return self.distinct_palettes[e.palette_index]
        for e in self.entries:
            if e.kind == "interval" and base.cmp(c, e.lo) > 0 and base.cmp(c, e.hi) < 0:
                return self.distinct_palettes[e.palette_index]
        raise InvalidRange("c outside the swept range")

    def neighbours_of_point(self, j: int):
        """(left interval, point, right interval) palettes around breakpoint j (1..N-1)."""
        pts = [e for e in self.entries if e.kind == "point"]
        ivs = [e for e in self.entries if e.kind == "interval"]
        p = self.distinct_palettes
        return p[ivs[j - 1].palette_index], p[pts[j].palette_index], p[ivs[j].palette_index]


def reference_bound(b0, base: BaseSpec, L_sq=None) -> QBeta:
    """max Delta^2 over the palette at c = b0, a valid bound for every c >= b0."""
    if L_sq is None:
        run = certified_palette_run(Window(b0), base)
    else:
        run = palette_run(Window(b0), base, L_sq)
    return qbeta_max((p.Delta_sq for p in run.palette), base)


def sweep(b0, c0, base: BaseSpec, L_sq=None, tighten: bool = True) -> PaletteAtlas:
    """Palettes at b0, at every cut point and at every midpoint between cut points.

    Without an explicit ``L_sq`` the covering bound at [0, b0) is used; with
    ``tighten`` it is replaced by the largest Delta^2 found at c = b0, which
    stays valid for all larger windows and shrinks the cut-point set.
    """
    b0, c0 = as_qbeta(b0), as_qbeta(c0)
    if L_sq is None:
        L_sq = reference_bound(b0, base) if tighten else l_bound_sq(Window(b0), base)[0]
    L_sq = as_qbeta(L_sq)
    theta = theta_set(b0, c0, L_sq, base)
    bps = [b0] + theta + [c0]
    atlas = PaletteAtlas(base=base, L_sq=L_sq, breakpoints=bps)
    index: dict[frozenset, int] = {}

    def record(kind, lo, hi, c):
        run: PaletteResult = palette_run(Window(c), base, L_sq)
        atlas.runs += 1
        pal = run.palette
        key = palette_key_set(pal)
        if key not in index:
            index[key] = len(atlas.distinct_palettes)
            atlas.distinct_palettes.append(pal)
        atlas.entries.append(AtlasEntry(kind, lo, hi, c, index[key]))

    for j in range(len(bps) - 1):
        lo, hi = bps[j], bps[j + 1]
        record("point", lo, lo, lo)
        record("interval", lo, hi, (lo + hi) / 2)
    return atlas
