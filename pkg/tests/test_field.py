import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import embedding
from pisot_palette.errors import DivisionByZero, NotComplex, NotPisotUnit
from pisot_palette.field import (
    QBeta, ZGamma, cross_decompose, discriminant, galois_real, make_base, norm_sq, qbeta_floor,
    qbeta_inverse, qbeta_mul, qbeta_sign, refine, zg_inverse, zg_mul, zg_pow,
)

BASES = [(1, 1), (2, 0), (3, -1), (2, 1), (4, 0), (3, 2)]

triples = st.tuples(*[st.integers(-30, 30)] * 3)


def test_tribonacci_base(tribo):
    assert tribo.property_F
    assert tribo.gamma_min_poly == (1, 1, 1, -1)
    assert tribo.beta_min_poly == (1, -1, -1, -1)
    g = tribo.gamma_complex()
    assert abs(g - complex(-0.771845, 1.115143)) < 1e-5
    lo, hi = tribo.beta_bracket
    assert lo < Fraction(18392867552, 10**10) < hi


def test_discriminant_and_rejections():
    assert discriminant(4, -4) == 5
    with pytest.raises(NotComplex):
        make_base(4, -4)
    # Y^3 - Y^2 + Y - 1 = (Y - 1)(Y^2 + 1): the real root is 1, not a Pisot unit
    with pytest.raises(NotPisotUnit):
        make_base(1, -1)
    with pytest.raises(NotPisotUnit):
        make_base(-1, 0)


def test_property_F_flag():
    assert make_base(2, 0).property_F
    assert not make_base(3, -2).property_F
    assert make_base(3, -1).property_F


@pytest.mark.parametrize("a,b", BASES)
def test_brackets_isolate_roots(a, b):
    base = make_base(a, b)
    f = lambda x: x ** 3 - a * x ** 2 - b * x - 1
    lo, hi = base.beta_bracket
    assert lo > 1 and f(lo) < 0 < f(hi)
    glo, ghi = base.gammap_bracket
    assert 0 < glo < ghi < 1
    g, gp = embedding(a, b)
    assert glo <= gp <= ghi
    re_lo, re_hi = base.regamma_bracket
    im_lo, im_hi = base.imgamma_bracket
    assert re_lo <= g.real <= re_hi and 0 < im_lo <= g.imag <= im_hi


def test_refine(tribo):
    lo, hi = refine(tribo, "beta", Fraction(1, 100))
    assert hi - lo <= Fraction(1, 100) and lo < 1.8392868 < hi
    lo, hi = refine(tribo, "gammap", Fraction(1, 100))
    assert lo < 0.5436890 < hi
    orig = tribo.beta_bracket
    assert refine(tribo, "beta", orig[1] - orig[0]) == orig


def test_zg_mul_examples(tribo):
    assert zg_mul((0, 1, 0), (0, 1, 0), tribo) == (0, 0, 1)
    assert zg_mul((0, 0, 1), (0, 1, 0), tribo) == (1, -1, -1)
    assert zg_mul((1, 1, 1), (0, 1, 0), tribo) == (1, 0, 0)
    assert zg_pow((0, 1, 0), -1, tribo) == (1, 1, 1)
    assert zg_inverse((1, 1, 1), tribo) == (0, 1, 0)


def test_galois_real_examples(tribo):
    assert galois_real((0, 0, 0), tribo) == QBeta.of(0)
    assert galois_real((1, 0, 0), tribo) == QBeta.of(1)
    assert galois_real((0, 1, 0), tribo) == QBeta.of(-1, -1, 1)


def test_cross_decompose_examples(tribo):
    cp = cross_decompose((0, 1, 0), (0, 1, 0), tribo)
    assert cp.p == QBeta.of(0, 2, 0) and cp.t == QBeta.of(0)
    cp = cross_decompose((0, 1, 0), (1, 0, 0), tribo)
    assert cp.p == QBeta.of(-1) - galois_real((0, 1, 0), tribo)
    assert cp.t == QBeta.of(1)
    cp = cross_decompose((1, 0, 0), (1, 0, 0), tribo)
    assert cp.p == QBeta.of(2) and cp.t == QBeta.of(0)


def test_norm_examples(tribo):
    assert norm_sq((1, 0, 0), tribo) == QBeta.of(1)
    assert norm_sq((0, 1, 0), tribo) == QBeta.of(0, 1)
    assert norm_sq((1, 1, 1), tribo) == QBeta.of(-1, -1, 1)


def test_sign_floor_inverse(tribo):
    assert qbeta_sign(QBeta.of(0), tribo) == 0
    assert qbeta_sign(QBeta.of(1, -1), tribo) == -1
    assert qbeta_floor(QBeta.of(0, 0, 1), tribo) == 3
    one_minus = QBeta.of(1) - galois_real((0, 1, 0), tribo)
    assert qbeta_inverse(one_minus, tribo) == QBeta.of(Fraction(1, 2), 0, Fraction(1, 2))
    with pytest.raises(DivisionByZero):
        qbeta_inverse(QBeta.of(0), tribo)


@pytest.mark.parametrize("a,b", BASES)
def test_homomorphism_and_norms(a, b):
    base = make_base(a, b)
    g, gp = embedding(a, b)
    rng = random.Random(a * 10 + b)
    for _ in range(200):
        x = ZGamma(*(rng.randint(-9, 9) for _ in range(3)))
        y = ZGamma(*(rng.randint(-9, 9) for _ in range(3)))
        xy = zg_mul(x, y, base)
        assert galois_real(xy, base) == qbeta_mul(galois_real(x, base), galois_real(y, base), base)
        assert norm_sq(xy, base) == qbeta_mul(norm_sq(x, base), norm_sq(y, base), base)
        c1, c2 = cross_decompose(x, y, base), cross_decompose(y, x, base)
        assert c1.p == c2.p and c1.t == -c2.t
        if not x.is_zero():
            assert qbeta_sign(norm_sq(x, base), base) == 1
            xc = x[0] + x[1] * g + x[2] * g * g
            lo, hi = base.interval(norm_sq(x, base), Fraction(1, 10**12))
            assert float(lo) - 1e-9 <= abs(xc) ** 2 <= float(hi) + 1e-9


def test_embedding_matches_complex(tribo):
    g = tribo.gamma_complex()
    for z in [(1, 2, 3), (-4, 0, 7), (2, -5, 1)]:
        zc = z[0] + z[1] * g + z[2] * g * g
        assert abs(tribo.to_complex(z) - zc) < 1e-12
        assert abs(tribo.approx(norm_sq(z, tribo)) - abs(zc) ** 2) < 1e-9
        t = cross_decompose(z, (1, 0, 0), tribo).t
        assert abs(tribo.approx(t) * g.imag - zc.imag) < 1e-9
    assert abs(cmath.phase(g) - cmath.phase(complex(-0.7718445, 1.1151425))) < 1e-6


@settings(max_examples=300, deadline=None)
@given(st.tuples(*[st.fractions(max_denominator=2**64).filter(lambda f: abs(f) < 2**20)] * 3))
def test_sign_terminates_and_matches_interval(q):
    base = make_base(1, 1)
    q = QBeta.of(*q)
    s = qbeta_sign(q, base)
    if q.is_zero():
        assert s == 0
    else:
        lo, hi = base.interval(q, Fraction(1, 10**30))
        assert (lo > 0 and s == 1) or (hi < 0 and s == -1)


@settings(max_examples=200, deadline=None)
@given(triples.filter(lambda t: any(t)))
def test_inverse_roundtrip(t):
    base = make_base(1, 1)
    q = QBeta.of(*t)
    assert base.mul(q, base.inv(q)) == QBeta.of(1)


def test_concurrent_sign_calls():
    from concurrent.futures import ThreadPoolExecutor

    base = make_base(2, 1)
    rng = random.Random(5)
    qs = [QBeta.of(*(Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6)) for _ in range(3)))
          for _ in range(300)]
    serial = [base.sign(q) for q in qs]
    with ThreadPoolExecutor(4) as ex:
        assert list(ex.map(base.sign, qs)) == serial
    lo, hi = base.beta_bracket
    assert lo ** 3 - 2 * lo ** 2 - lo - 1 < 0 < hi ** 3 - 2 * hi ** 2 - hi - 1
