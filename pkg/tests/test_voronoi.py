import math

import pytest

from oracles import embedding, lattice_points, min_pair_distance
from pisot_palette.cutproject import DiskQuery, Window, enumerate_sigma, l_bound_sq, covering_triple
from pisot_palette.errors import Collinear, InconsistentPartition, UnboundedCell
from pisot_palette.field import QBeta, ZGamma, ZERO, canonical_key, make_base
from pisot_palette.sweep import reference_bound
from pisot_palette.voronoi import (
    Patch, certified_palette_run, circumradius_sq, palette, palette_key_set, palette_run,
    patch_for_interval, protocell_from_patch, xi_set,
)

C_M2 = QBeta.of(1, 0, 1)  # beta^2 + 1


def _v_sq(base):
    # beta(beta^2-1)/(3beta^2-1)
    b2 = base.beta_pow(2)
    return base.div(base.mul(QBeta.of(0, 1), b2 - QBeta.of(1)), b2 * 3 - QBeta.of(1))


def test_xi_counts(tribo):
    w = Window(C_M2)
    L_sq = l_bound_sq(w, tribo)[0]
    xi = xi_set(w, L_sq, tribo)
    # the numeric scan finds the same 28 patch points and the same distinct cut values
    _, gp = embedding(1, 1)
    pts, _ = lattice_points(1, 1, 0, tribo.approx(C_M2), tribo.sqrt_approx(L_sq) + 1e-12)
    vals = sorted({round(v0 + v1 * gp + v2 * gp * gp, 9) for v0, v1, v2 in pts}
                  | {round(tribo.approx(C_M2) - (v0 + v1 * gp + v2 * gp * gp), 9) for v0, v1, v2 in pts})
    assert len(xi) == len(vals) == 34

    w2 = Window(QBeta.of(0, 0, 1))
    assert len(xi_set(w2, l_bound_sq(w2, tribo)[0], tribo)) == 40
    assert len(xi_set(w2, reference_bound(w2.c, tribo), tribo)) == 8


def test_first_patch_and_mirror(tribo):
    w = Window(C_M2)
    L_sq = l_bound_sq(w, tribo)[0]
    xi = xi_set(w, L_sq, tribo)
    first = patch_for_interval(w, xi[0], xi[1], L_sq, tribo)
    for z in [(1, 0, 0), (1, 1, 1), (2, 2, 1), (2, 1, 1)]:
        assert z in first.points
    last = patch_for_interval(w, w.c - xi[1], w.c, L_sq, tribo)
    assert last.points == first.negated().points


def test_inconsistent_partition(tribo):
    w = Window(C_M2)
    small = reference_bound(QBeta.of(0, 0, 1), tribo)
    big = l_bound_sq(w, tribo)[0]
    xi = xi_set(w, small, tribo)
    with pytest.raises(InconsistentPartition):
        for lo, hi in zip(xi, xi[1:]):
            patch_for_interval(w, lo, hi, big, tribo)


def test_circumradius_examples(tribo):
    target = _v_sq(tribo)
    assert circumradius_sq((2, 2, 1), (1, 1, 1), tribo) == target
    assert circumradius_sq((1, 0, 0), (2, 2, 1), tribo) == target
    assert abs(tribo.approx(target) - 0.692 ** 2) < 1e-3
    # gamma^-1 and 1 + gamma^-1
    assert abs(tribo.sqrt_approx(circumradius_sq((1, 1, 1), (2, 1, 1), tribo)) - 0.510) < 1e-3
    with pytest.raises(Collinear):
        circumradius_sq((1, 0, 0), (2, 0, 0), tribo)


def test_first_protocell(tribo):
    w = Window(C_M2)
    L_sq = l_bound_sq(w, tribo)[0]
    xi = xi_set(w, L_sq, tribo)
    cell = protocell_from_patch(patch_for_interval(w, xi[0], xi[1], L_sq, tribo), tribo)
    assert set(cell.neighbors) == {(1, 0, 0), (2, 1, 1), (1, 1, 1), (2, 2, 1)}
    assert cell.delta_sq == tribo.beta_pow(-2)
    assert cell.Delta_sq == _v_sq(tribo) * 4
    assert abs(tribo.sqrt_approx(cell.Delta_sq) - 1.384) < 1e-3


@pytest.mark.parametrize("a,b", [(1, 1), (2, 0), (3, -1)])
def test_hexagonal_cell_from_covering_triple(a, b):
    base = make_base(a, b)
    w = Window(base.beta_pow(2))
    tri = covering_triple(w, base)
    pts = sorted(tri + [-z for z in tri], key=canonical_key)
    cell = protocell_from_patch(Patch(tuple(pts)), base)
    norms = [QBeta.of(*base.p_form(z, z)) / 2 for z in tri]
    assert cell.delta_sq == min(norms, key=base.approx)
    assert set(cell.neighbors) <= set(pts)
    if base.is_tribonacci:
        assert len(cell.neighbors) == 6 and len(cell.vertices) == 6
    if len(cell.neighbors) == 6:
        assert cell.delta_star_sq == max(norms, key=base.approx)


def test_unbounded(tribo):
    with pytest.raises(UnboundedCell):
        protocell_from_patch(Patch(((1, 0, 0), (0, 1, 0))), tribo)
    with pytest.raises(UnboundedCell):
        protocell_from_patch(Patch((ZGamma(1, 0, 0), ZGamma(0, 1, 0), ZGamma(1, 1, 0))), tribo)


def test_palette_m2(tribo):
    run = palette_run(Window(C_M2), tribo)
    pal = run.palette
    assert len(pal) == 7
    deltas = sorted(tribo.approx(p.delta_sq) for p in pal)
    inv_sqrt = tribo.beta_pow(-1)
    mids = [p for p in pal if p.delta_sq == inv_sqrt]
    assert len(mids) == 5 and deltas[0] == pytest.approx(tribo.approx(tribo.beta_pow(-2)))
    assert palette_key_set(pal) == frozenset(p.negated_key() for p in pal)
    for p in pal:
        assert tribo.cmp(p.Delta_sq, run.L_sq) <= 0
        assert tribo.cmp(p.delta_sq, p.delta_star_sq) <= 0 <= tribo.cmp(p.Delta_sq, p.delta_star_sq)


def test_palette_beta_squared_with_better_bound(tribo):
    w = Window(QBeta.of(0, 0, 1))
    first = palette_run(w, tribo)
    assert len(first.palette) == 7
    better = max((p.Delta_sq for p in first.palette), key=tribo.approx)
    assert abs(tribo.sqrt_approx(better) - 1.384) < 1e-3
    second = palette_run(w, tribo, better)
    assert palette_key_set(second.palette) == palette_key_set(first.palette)
    assert len(second.xi) < len(first.xi)
    assert any(p.delta_sq == QBeta.of(1) for p in first.palette)


def test_certified_run_agrees_with_covering_bound(tribo):
    for c in [C_M2, QBeta.of(0, 0, 1), QBeta.of(3, 1)]:
        w = Window(c)
        assert palette_key_set(certified_palette_run(w, tribo).palette) == palette_key_set(palette(w, tribo))


@pytest.mark.parametrize("a,b,c", [(1, 1, (1, 0, 1)), (1, 1, (2, 1, 0)), (2, 0, (1, 1, 1))])
def test_min_delta_is_min_distance(a, b, c):
    base = make_base(a, b)
    c = QBeta.of(*c)
    run = certified_palette_run(Window(c), base)
    ell = math.sqrt(min(base.approx(p.delta_sq) for p in run.palette))
    L = math.sqrt(base.approx(run.L_sq))
    _, zs = lattice_points(a, b, 0, base.approx(c), 3 * L)
    assert abs(min_pair_distance(zs) - ell) < 1e-9


def test_deterministic(tribo):
    a = [p.canonical_key for p in palette(Window(C_M2), tribo)]
    b = [p.canonical_key for p in palette(Window(C_M2), tribo)]
    assert a == b
