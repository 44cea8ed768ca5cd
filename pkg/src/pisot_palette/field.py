"""Exact arithmetic in Z[gamma] and Q(beta) for a cubic complex Pisot unit.

The unit ``gamma`` is the complex root (positive imaginary part) of
``Y^3 + b Y^2 + a Y - 1``; its real conjugate ``gamma'`` lies in (0, 1) and
``beta = 1/gamma' = |gamma|^2`` is a root of ``Y^3 - a Y^2 - b Y - 1``.

Elements of Z[gamma] are integer triples in the basis (1, gamma, gamma^2).
Real quantities (Galois images, squared distances, window endpoints) are
triples in the basis (1, beta, beta^2).  Anything that mixes gamma with its
complex conjugate and is symmetric under the swap lands in Q(beta) through
the elementary symmetric functions e1 = gamma + conj(gamma) = -b - gamma'
and e2 = gamma * conj(gamma) = beta.  Signs in Q(beta) are decided exactly
against a dyadic isolating interval for beta that is refined on demand.
"""

from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DivisionByZero, NotComplex, NotPisotUnit

Interval = tuple[Fraction, Fraction]

ROOTS = ("beta", "gammap", "regamma", "imgamma")


class ZGamma(NamedTuple):
    """``v0 + v1*gamma + v2*gamma^2``."""

    v0: int
    v1: int
    v2: int

    def __add__(self, other):
        return ZGamma(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def __sub__(self, other):
        return ZGamma(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def __neg__(self):
        return ZGamma(-self[0], -self[1], -self[2])

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ZGamma(k * self[0], k * self[1], k * self[2])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not (self[0] or self[1] or self[2])


ZERO = ZGamma(0, 0, 0)
ONE = ZGamma(1, 0, 0)
GAMMA = ZGamma(0, 1, 0)


def canonical_key(z: Sequence[int]) -> tuple[int, int, int]:
    """Sort key for ZGamma: lexicographic on (v2, v1, v0)."""
    return (z[2], z[1], z[0])


class QBeta(NamedTuple):
    """``q0 + q1*beta + q2*beta^2`` with rational coefficients.

    Addition, subtraction and scaling by rationals need no base; products,
    inverses and signs go through the owning :class:`BaseSpec`.
    """

    q0: Fraction
    q1: Fraction
    q2: Fraction

    @classmethod
    def of(cls, q0=0, q1=0, q2=0) -> "QBeta":
        return cls(Fraction(q0), Fraction(q1), Fraction(q2))

    def __add__(self, other):
        return QBeta(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def __sub__(self, other):
        return QBeta(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def __neg__(self):
        return QBeta(-self[0], -self[1], -self[2])

    def __mul__(self, k):
        if isinstance(k, tuple):
            raise TypeError("QBeta products need a base: use base.mul(x, y)")
        k = Fraction(k)
        return QBeta(k * self[0], k * self[1], k * self[2])

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, tuple):
            raise TypeError("QBeta quotients need a base: use base.div(x, y)")
        k = Fraction(k)
        return QBeta(self[0] / k, self[1] / k, self[2] / k)

    def is_zero(self) -> bool:
        return not (self[0] or self[1] or self[2])

    def to_strings(self) -> list[str]:
        return [f"{q.numerator}/{q.denominator}" for q in self]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "QBeta":
        return cls(*(Fraction(s) for s in items))


def as_qbeta(x) -> QBeta:
    if isinstance(x, QBeta):
        return x
    if isinstance(x, (int, Fraction)):
        return QBeta.of(x)
    return QBeta.of(*x)


class CrossPair(NamedTuple):
    """``p = x*conj(y) + conj(x)*y`` and ``t`` with ``x*conj(y) - conj(x)*y = (gamma - conj(gamma)) * t``."""

    p: QBeta
    t: QBeta


def _clear_denominators(q: Sequence[Fraction]) -> tuple[int, int, int]:
    d = math.lcm(q[0].denominator, q[1].denominator, q[2].denominator)
    return (q[0].numerator * (d // q[0].denominator),
            q[1].numerator * (d // q[1].denominator),
            q[2].numerator * (d // q[2].denominator))


def _isqrt_floor(q: Fraction, bits: int) -> Fraction:
    s = 1 << bits
    return Fraction(math.isqrt(q.numerator * s * s // q.denominator), s)


def _isqrt_ceil(q: Fraction, bits: int) -> Fraction:
    s = 1 << bits
    n = -((-q.numerator * s * s) // q.denominator)
    r = math.isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, s)


@dataclass(eq=False)
class BaseSpec:
    """A validated cubic complex Pisot unit; build it with :func:`make_base`."""

    a: int
    b: int
    property_F: bool
    beta_bracket: Interval
    gammap_bracket: Interval
    regamma_bracket: Interval
    imgamma_bracket: Interval
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _dyadic: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        a, b = self.a, self.b
        # gamma' = 1/beta = beta^2 - a*beta - b
        self.gammap = (-b, -a, 1)
        self.gammap_sq = self.zb_mul(self.gammap, self.gammap)
        self.e1 = (0, a, -1)  # gamma + conj(gamma) = -b - gamma'
        self.beta = (0, 1, 0)
        # 4*(Im gamma)^2 = 4*beta - e1^2
        e1sq = self.zb_mul(self.e1, self.e1)
        self.four_im_sq = (-e1sq[0], 4 - e1sq[1], -e1sq[2])
        self._build_cross_tables()

    # -- identity and display ---------------------------------------------
    @property
    def gamma_min_poly(self) -> tuple[int, int, int, int]:
        """Coefficients of Y^3 + bY^2 + aY - 1, highest degree first."""
        return (1, self.b, self.a, -1)

    @property
    def beta_min_poly(self) -> tuple[int, int, int, int]:
        return (1, -self.a, -self.b, -1)

    @property
    def is_tribonacci(self) -> bool:
        return (self.a, self.b) == (1, 1)

    def __repr__(self):
        return f"BaseSpec(a={self.a}, b={self.b}, property_F={self.property_F})"

    # -- integer-triple kernel ----------------------------------------------
    def zb_mul(self, u, v):
        """Product in the beta basis; works for int or Fraction coefficients."""
        a, b = self.a, self.b
        c0 = u[0] * v[0]
        c1 = u[0] * v[1] + u[1] * v[0]
        c2 = u[0] * v[2] + u[1] * v[1] + u[2] * v[0]
        c3 = u[1] * v[2] + u[2] * v[1]
        c4 = u[2] * v[2]
        # beta^3 = 1 + b*beta + a*beta^2 ; beta^4 = a + (1+ab)*beta + (b+a^2)*beta^2
        return (c0 + c3 + a * c4,
                c1 + b * c3 + (1 + a * b) * c4,
                c2 + a * c3 + (b + a * a) * c4)

    def zg_mul(self, x, y) -> ZGamma:
        a, b = self.a, self.b
        c0 = x[0] * y[0]
        c1 = x[0] * y[1] + x[1] * y[0]
        c2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0]
        c3 = x[1] * y[2] + x[2] * y[1]
        c4 = x[2] * y[2]
        # gamma^3 = 1 - a*gamma - b*gamma^2 ; gamma^4 = -b + (1+ab)*gamma + (b^2-a)*gamma^2
        return ZGamma(c0 + c3 - b * c4,
                      c1 - a * c3 + (1 + a * b) * c4,
                      c2 - b * c3 + (b * b - a) * c4)

    def _build_cross_tables(self):
        e1, beta = self.e1, self.beta
        s = [(2, 0, 0), e1]
        u = [(0, 0, 0), (1, 0, 0)]
        for d in range(1, 2):
            e1s = self.zb_mul(e1, s[d])
            bs = self.zb_mul(beta, s[d - 1])
            s.append(tuple(p - q for p, q in zip(e1s, bs)))
            e1u = self.zb_mul(e1, u[d])
            bu = self.zb_mul(beta, u[d - 1])
            u.append(tuple(p - q for p, q in zip(e1u, bu)))
        beta_pows = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        P = {}
        T = {}
        for i in range(3):
            for j in range(3):
                m, d = min(i, j), abs(i - j)
                P[i, j] = self.zb_mul(beta_pows[m], s[d])
                tt = self.zb_mul(beta_pows[m], u[d])
                T[i, j] = tt if i >= j else tuple(-c for c in tt)
        self._P = P
        self._T = T
        self._pairs = [(i, j) for i in range(3) for j in range(3)]

    def p_form(self, x, y):
        """Integer triple of x*conj(y) + conj(x)*y."""
        r0 = r1 = r2 = 0
        P = self._P
        for i, j in self._pairs:
            c = x[i] * y[j]
            if c:
                e = P[i, j]
                r0 += c * e[0]
                r1 += c * e[1]
                r2 += c * e[2]
        return (r0, r1, r2)

    def t_form(self, x, y):
        """Integer triple t with x*conj(y) - conj(x)*y = (gamma - conj(gamma)) * t."""
        r0 = r1 = r2 = 0
        T = self._T
        for i, j in self._pairs:
            c = x[i] * y[j]
            if c:
                e = T[i, j]
                r0 += c * e[0]
                r1 += c * e[1]
                r2 += c * e[2]
        return (r0, r1, r2)

    def t_rows(self, y):
        """Precompute rows R with t_form(x, y) = sum_i x[i] * R[i]."""
        T = self._T
        rows = []
        for i in range(3):
            r0 = r1 = r2 = 0
            for j in range(3):
                c = y[j]
                if c:
                    e = T[i, j]
                    r0 += c * e[0]
                    r1 += c * e[1]
                    r2 += c * e[2]
            rows.append((r0, r1, r2))
        return rows

    def galois_int(self, z):
        g, g2 = self.gammap, self.gammap_sq
        return (z[0] + z[1] * g[0] + z[2] * g2[0],
                z[1] * g[1] + z[2] * g2[1],
                z[1] * g[2] + z[2] * g2[2])

    def norm_int2(self, z):
        """Integer triple of 2|z|^2."""
        return self.p_form(z, z)

    # -- exact signs --------------------------------------------------------
    def _beta_dyadic(self, bits: int) -> tuple[int, int, int, int]:
        """Integers (lo, hi, lo^2, hi^2) with beta in [lo, hi] / 2^bits, hi = lo + 1."""
        got = self._dyadic.get(bits)
        if got is not None:
            return got
        with self._lock:
            got = self._dyadic.get(bits)
            if got is not None:
                return got
            lo_f, hi_f = self.beta_bracket
            s = 1 << bits
            lo = math.floor(lo_f * s)
            hi = math.ceil(hi_f * s)
            a, b = self.a, self.b

            def f(x):
                return x * x * x - a * x * x * s - b * x * s * s - s * s * s

            # f(lo) < 0 < f(hi); keep the invariant while bisecting
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if f(mid) < 0:
                    lo = mid
                else:
                    hi = mid
            got = (lo, hi, lo * lo, hi * hi)
            self._dyadic[bits] = got
            return got

    def sign_int(self, n) -> int:
        """Sign of n0 + n1*beta + n2*beta^2 for integer coefficients."""
        n0, n1, n2 = n
        if not (n0 or n1 or n2):
            return 0
        bits = 64
        while True:
            lo, hi, lo2, hi2 = self._beta_dyadic(bits)
            s = 1 << bits
            base = n0 * s * s
            m1 = n1 * s
            if n1 >= 0:
                low, high = base + m1 * lo, base + m1 * hi
            else:
                low, high = base + m1 * hi, base + m1 * lo
            if n2 >= 0:
                low += n2 * lo2
                high += n2 * hi2
            else:
                low += n2 * hi2
                high += n2 * lo2
            if low > 0:
                return 1
            if high < 0:
                return -1
            bits *= 2

    def sign(self, q) -> int:
        if isinstance(q[0], int) and isinstance(q[1], int) and isinstance(q[2], int):
            return self.sign_int(q)
        return self.sign_int(_clear_denominators(tuple(Fraction(c) for c in q)))

    def cmp(self, x, y) -> int:
        return self.sign((x[0] - y[0], x[1] - y[1], x[2] - y[2]))

    # -- Q(beta) field operations -------------------------------------------
    def mul(self, x, y) -> QBeta:
        return QBeta(*(Fraction(c) for c in self.zb_mul(x, y)))

    def inv(self, x) -> QBeta:
        """Inverse by the extended Euclidean algorithm against the beta polynomial."""
        x = as_qbeta(x)
        if x.is_zero():
            raise DivisionByZero("inverse of zero in Q(beta)")
        # polynomials as coefficient lists, lowest degree first
        f = [Fraction(-1), Fraction(-self.b), Fraction(-self.a), Fraction(1)]
        g = _poly_trim(list(x))
        r0, r1 = f, g
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # invariant s1 * x == r1 (mod f); r1 is a nonzero constant since f is irreducible
        if _poly_is_zero(r1):
            raise DivisionByZero("element shares a factor with the minimal polynomial")
        c = r1[0]
        inv_poly = [coef / c for coef in s1]
        return self._reduce_poly(inv_poly)

    def _reduce_poly(self, coeffs) -> QBeta:
        out = [Fraction(0)] * 3
        power = (1, 0, 0)
        for c in coeffs:
            for k in range(3):
                out[k] += c * power[k]
            power = self.zb_mul(power, (0, 1, 0))
        return QBeta(*out)

    def div(self, x, y) -> QBeta:
        return self.mul(x, self.inv(y))

    def beta_pow(self, k: int) -> QBeta:
        base = (0, 1, 0) if k >= 0 else self.gammap
        out = (1, 0, 0)
        for _ in range(abs(k)):
            out = self.zb_mul(out, base)
        return QBeta.of(*out)

    def floor(self, q) -> int:
        q = as_qbeta(q)
        n = math.floor(self.approx(q))
        while self.sign(q - QBeta.of(n)) < 0:
            n -= 1
        while self.sign(q - QBeta.of(n + 1)) >= 0:
            n += 1
        return n

    def interval(self, q, width=Fraction(1, 10**15)) -> Interval:
        """Certified rational enclosure of q of the requested width (q != 0 or exact 0)."""
        n = _clear_denominators(tuple(Fraction(c) for c in q))
        scale = math.lcm(*(Fraction(c).denominator for c in q))
        bits = 64
        while True:
            lo, hi, lo2, hi2 = self._beta_dyadic(bits)
            s = 1 << bits
            bl, bh = Fraction(lo, s), Fraction(hi, s)
            b2l, b2h = Fraction(lo2, s * s), Fraction(hi2, s * s)
            low = n[0] + (n[1] * bl if n[1] >= 0 else n[1] * bh) + (n[2] * b2l if n[2] >= 0 else n[2] * b2h)
            high = n[0] + (n[1] * bh if n[1] >= 0 else n[1] * bl) + (n[2] * b2h if n[2] >= 0 else n[2] * b2l)
            low, high = low / scale, high / scale
            if high - low <= width:
                return low, high
            bits *= 2

    def approx(self, q) -> float:
        lo, hi = self.interval(as_qbeta(q))
        return float((lo + hi) / 2)

    def sqrt_approx(self, q) -> float:
        """sqrt of a nonnegative element, error below 1e-12 for moderate magnitudes."""
        lo, hi = self.interval(as_qbeta(q), Fraction(1, 10**20))
        return (float(max(lo, 0)) ** 0.5 + float(max(hi, 0)) ** 0.5) / 2

    # -- complex embedding (numeric, for rendering and oracles) ----------------
    def gamma_complex(self) -> complex:
        re = sum(self.refine("regamma", Fraction(1, 10**30))) / 2
        im = sum(self.refine("imgamma", Fraction(1, 10**30))) / 2
        return complex(float(re), float(im))

    def to_complex(self, z) -> complex:
        g = self.gamma_complex()
        return z[0] + z[1] * g + z[2] * g * g

    def refine(self, root: str, width) -> Interval:
        return refine(self, root, width)


# -- polynomial helpers for the extended Euclidean algorithm -------------------

def _poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_is_zero(p):
    return all(c == 0 for c in p)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return _poly_trim(out)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, c in enumerate(p):
        for j, d in enumerate(q):
            out[i + j] += c * d
    return _poly_trim(out)


def _poly_divmod(p, q):
    p = _poly_trim(p)
    q = _poly_trim(q)
    out = [Fraction(0)] * max(1, len(p) - len(q) + 1)
    r = list(p)
    while len(r) >= len(q) and not _poly_is_zero(r):
        shift = len(r) - len(q)
        c = r[-1] / q[-1]
        out[shift] = c
        for i, d in enumerate(q):
            r[i + shift] -= c * d
        r.pop()
        r = _poly_trim(r) if r else [Fraction(0)]
    return _poly_trim(out), r


# -- public operations ---------------------------------------------------------

def discriminant(a: int, b: int) -> int:
    return -18 * a * b - 4 * a ** 3 + a * a * b * b + 4 * b ** 3 - 27


def _beta_poly(a, b, x):
    return x ** 3 - a * x ** 2 - b * x - 1


def _gamma_poly(a, b, x):
    return x ** 3 + b * x ** 2 + a * x - 1


def make_base(a: int, b: int) -> BaseSpec:
    """Validate (a, b) and return a :class:`BaseSpec` with certified brackets.

    Raises NotComplex when the discriminant is nonnegative and NotPisotUnit
    when the real root of the beta polynomial is not > 1 (equivalently
    gamma' is not in (0, 1)).
    """
    a, b = int(a), int(b)
    if discriminant(a, b) >= 0:
        raise NotComplex(f"Y^3{b:+d}Y^2{a:+d}Y-1 has no complex root (discriminant {discriminant(a, b)} >= 0)")
    # One real root, and the product of the roots of the beta polynomial is 1,
    # so the real root exceeds 1 exactly when f(1) = -a-b < 0.
    bound = abs(a) + abs(b) + 2
    lo = None
    if _beta_poly(a, b, 1) < 0:
        for n in range(2, bound + 1):
            if _beta_poly(a, b, n) > 0:
                lo = Fraction(n - 1)
                hi = Fraction(n)
                break
    if lo is None:
        raise NotPisotUnit(f"Y^3{-a:+d}Y^2{-b:+d}Y-1 has no root > 1, so gamma' is not in (0,1)")
    # shrink so that the reciprocal bracket sits strictly inside (0, 1)
    while hi - lo > Fraction(1, 1024):
        mid = (lo + hi) / 2
        if _beta_poly(a, b, mid) < 0:
            lo = mid
        else:
            hi = mid
    beta_br = (lo, hi)
    gp_br = (1 / hi, 1 / lo)
    assert _gamma_poly(a, b, gp_br[0]) < 0 < _gamma_poly(a, b, gp_br[1])
    re_br, im_br = _complex_brackets(a, b, beta_br, gp_br)
    prop_f = abs(b - 1) <= a and b >= -1
    return BaseSpec(a=a, b=b, property_F=prop_f, beta_bracket=beta_br, gammap_bracket=gp_br,
                    regamma_bracket=re_br, imgamma_bracket=im_br)


def _complex_brackets(a, b, beta_br, gp_br, bits=40):
    # gamma, conj(gamma) are the roots of Y^2 - e1*Y + beta with e1 = -b - gamma'
    re_lo = (-b - gp_br[1]) / 2
    re_hi = (-b - gp_br[0]) / 2
    re_sq_hi = max(re_lo * re_lo, re_hi * re_hi)
    re_sq_lo = 0 if re_lo <= 0 <= re_hi else min(re_lo * re_lo, re_hi * re_hi)
    im_sq_lo = beta_br[0] - re_sq_hi
    im_sq_hi = beta_br[1] - re_sq_lo
    im_lo = _isqrt_floor(max(im_sq_lo, Fraction(0)), bits)
    im_hi = _isqrt_ceil(im_sq_hi, bits)
    return (re_lo, re_hi), (im_lo, im_hi)


def refine(base: BaseSpec, root: str, width) -> Interval:
    """Isolating interval of length <= width for one of the base's real quantities."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    original = {
        "beta": base.beta_bracket,
        "gammap": base.gammap_bracket,
        "regamma": base.regamma_bracket,
        "imgamma": base.imgamma_bracket,
    }[root]
    if original[1] - original[0] <= width:
        return original
    bits = 64
    while True:
        lo, hi, _, _ = base._beta_dyadic(bits)
        s = 1 << bits
        bl, bh = Fraction(lo, s), Fraction(hi, s)
        gp = (1 / bh, 1 / bl)
        if root == "beta":
            out = (bl, bh)
        elif root == "gammap":
            out = gp
        else:
            re_br, im_br = _complex_brackets(base.a, base.b, (bl, bh), gp, bits=bits)
            out = re_br if root == "regamma" else im_br
        if out[1] - out[0] <= width:
            return out
        bits *= 2


def zg_add(x, y) -> ZGamma:
    return ZGamma(x[0] + y[0], x[1] + y[1], x[2] + y[2])


def zg_neg(x) -> ZGamma:
    return ZGamma(-x[0], -x[1], -x[2])


def zg_mul(x, y, base: BaseSpec) -> ZGamma:
    return base.zg_mul(x, y)


def zg_inverse(x, base: BaseSpec) -> ZGamma:
    """Inverse of a unit of Z[gamma]; raises DivisionByZero for non-units."""
    cols = [base.zg_mul(x, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    m = [[Fraction(cols[c][r]) for c in range(3)] + [Fraction(1 if r == 0 else 0)] for r in range(3)]
    for c in range(3):
        piv = next((r for r in range(c, 3) if m[r][c] != 0), None)
        if piv is None:
            raise DivisionByZero("zero has no inverse")
        m[c], m[piv] = m[piv], m[c]
        for r in range(3):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [u - f * v for u, v in zip(m[r], m[c])]
    sol = [m[r][3] / m[r][r] for r in range(3)]
    if any(s.denominator != 1 for s in sol):
        raise DivisionByZero(f"{tuple(x)} is not a unit of Z[gamma]")
    return ZGamma(*(int(s) for s in sol))


def zg_pow(x, n: int, base: BaseSpec) -> ZGamma:
    if n < 0:
        x = zg_inverse(x, base)
        n = -n
    out = ONE
    sq = ZGamma(*x)
    while n:
        if n & 1:
            out = base.zg_mul(out, sq)
        sq = base.zg_mul(sq, sq)
        n >>= 1
    return out


def gamma_pow(n: int, base: BaseSpec) -> ZGamma:
    return zg_pow(GAMMA, n, base)


def galois_real(z, base: BaseSpec) -> QBeta:
    return QBeta.of(*base.galois_int(z))


def cross_decompose(x, y, base: BaseSpec) -> CrossPair:
    return CrossPair(QBeta.of(*base.p_form(x, y)), QBeta.of(*base.t_form(x, y)))


def norm_sq(z, base: BaseSpec) -> QBeta:
    n = base.p_form(z, z)
    return QBeta.of(*n) / 2


def im_gamma_sq(base: BaseSpec) -> QBeta:
    return QBeta.of(*base.four_im_sq) / 4


def qbeta_add(x, y) -> QBeta:
    return as_qbeta(x) + as_qbeta(y)


def qbeta_mul(x, y, base: BaseSpec) -> QBeta:
    return base.mul(x, y)


def qbeta_inverse(x, base: BaseSpec) -> QBeta:
    return base.inv(x)


def qbeta_sign(q, base: BaseSpec) -> int:
    return base.sign(q)


def qbeta_floor(q, base: BaseSpec) -> int:
    return base.floor(q)


def qbeta_max(values, base: BaseSpec) -> QBeta:
    it = iter(values)
    best = next(it)
    for v in it:
        if base.cmp(v, best) > 0:
            best = v
    return best


def qbeta_min(values, base: BaseSpec) -> QBeta:
    it = iter(values)
    best = next(it)
    for v in it:
        if base.cmp(v, best) < 0:
            best = v
    return best


def sort_exact(values, base: BaseSpec) -> list:
    return sorted(values, key=functools.cmp_to_key(base.cmp))
