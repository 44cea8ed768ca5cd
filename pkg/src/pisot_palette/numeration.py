"""Greedy (Renyi) beta-expansions and digit witnesses for X^m(gamma)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DigitBudgetExceeded, OutOfRange, WindowViolation
from .field import ONE, ZERO, BaseSpec, QBeta, ZGamma, as_qbeta, galois_real, gamma_pow

DEFAULT_MAX_DIGITS = 64


@dataclass(frozen=True)
class DigitString:
    """Digits most significant first; ``digits[i]`` multiplies ``base**(offset - i)``.

    Leading and trailing zeros are stripped, so the empty string is zero.
    """

    digits: tuple[int, ...] = ()
    offset: int = 0

    @classmethod
    def from_coefficients(cls, coeffs: dict[int, int]) -> "DigitString":
        nz = {k: v for k, v in coeffs.items() if v}
        if not nz:
            return cls()
        hi, lo = max(nz), min(nz)
        return cls(tuple(nz.get(e, 0) for e in range(hi, lo - 1, -1)), hi)

    def coefficients(self) -> dict[int, int]:
        return {self.offset - i: d for i, d in enumerate(self.digits) if d}

    def __str__(self):
        if not self.digits:
            return "0"
        coeffs = self.coefficients()
        hi = max(self.offset, 0)
        lo = min(self.offset - len(self.digits) + 1, 0)
        sep = "," if max(self.digits) > 9 else ""
        left = sep.join(str(coeffs.get(e, 0)) for e in range(hi, -1, -1))
        right = sep.join(str(coeffs.get(e, 0)) for e in range(-1, lo - 1, -1))
        if lo >= 0:
            return left
        return ("" if left == "0" else left) + "." + right

    def evaluate_zgamma(self, base: BaseSpec) -> ZGamma:
        """Sum of digit * gamma^exponent, exactly in Z[gamma]."""
        total = ZERO
        for e, d in self.coefficients().items():
            total = total + d * gamma_pow(e, base)
        return total

    def evaluate_qbeta(self, base: BaseSpec) -> QBeta:
        total = QBeta.of(0)
        for e, d in self.coefficients().items():
            total = total + d * base.beta_pow(e)
        return total


def renyi_expand(x, base: BaseSpec, max_digits: int = DEFAULT_MAX_DIGITS):
    """Greedy expansion of x in [0, 1); returns ``(DigitString, 'finite'|'truncated')``."""
    x = as_qbeta(x)
    if base.sign(x) < 0 or base.cmp(x, QBeta.of(1)) >= 0:
        raise OutOfRange("renyi_expand needs 0 <= x < 1")
    beta = QBeta.of(0, 1)
    coeffs = {}
    r = x
    for j in range(1, max_digits + 1):
        if r.is_zero():
            return DigitString.from_coefficients(coeffs), "finite"
        br = base.mul(beta, r)
        d = base.floor(br)
        coeffs[-j] = d
        r = br - QBeta.of(d)
    status = "finite" if r.is_zero() else "truncated"
    return DigitString.from_coefficients(coeffs), status


def xm_witness(z, m: int, base: BaseSpec, max_digits: int = DEFAULT_MAX_DIGITS) -> DigitString:
    """Digits a_j in {0..m} with z = sum a_j gamma^j, following the membership argument.

    For z' < 1 the greedy expansion of z' in base beta gives the digits
    directly (gamma' = 1/beta).  Otherwise k leading digits equal to m are
    stripped, one digit b in {0..m} is placed, and the rest is expanded.
    """
    z = ZGamma(*z)
    if not base.property_F:
        raise WindowViolation("xm_witness requires a base with Property (F)")
    zp = galois_real(z, base)
    gp = QBeta.of(*base.gammap)
    c = m * base.inv(QBeta.of(1) - gp)
    if base.sign(zp) < 0 or base.cmp(zp, c) >= 0:
        raise WindowViolation(f"z' of {tuple(z)} lies outside [0, m/(1-gamma'))")
    coeffs: dict[int, int] = {}
    if base.cmp(zp, QBeta.of(1)) < 0:
        ds, status = renyi_expand(zp, base, max_digits)
        if status != "finite":
            raise DigitBudgetExceeded(f"no finite expansion within {max_digits} digits")
        coeffs = {-e: d for e, d in ds.coefficients().items()}
    else:
        # minimal k >= 0 with z' - sum_{j<=k} m beta^-j < 0
        partial = QBeta.of(0)
        k = 0
        while True:
            nxt = partial + m * base.beta_pow(-k)
            if base.cmp(zp, nxt) < 0:
                break
            partial = nxt
            k += 1
        rest = zp - partial  # in [0, m beta^-k)
        bk = base.beta_pow(k)
        scaled = base.mul(rest, bk)
        bdig = base.floor(scaled)
        u = scaled - QBeta.of(bdig)
        ds, status = renyi_expand(u, base, max_digits)
        if status != "finite":
            raise DigitBudgetExceeded(f"no finite expansion within {max_digits} digits")
        for j in range(k):
            coeffs[j] = m
        coeffs[k] = bdig
        for e, d in ds.coefficients().items():
            coeffs[k - e] = d
    out = DigitString.from_coefficients(coeffs)
    assert max(out.digits, default=0) <= m
    if out.evaluate_zgamma(base) != z:
        raise AssertionError(f"witness for {tuple(z)} does not re-evaluate")
    return out


def xm_value(digits, base: BaseSpec) -> ZGamma:
    """Evaluate a_0 + a_1 gamma + ... for a little-endian digit list."""
    total = ZERO
    for d in reversed(list(digits)):
        total = base.zg_mul(total, (0, 1, 0)) + d * ONE
    return total


def property_F_evidence(base: BaseSpec, samples: int, max_digits: int = DEFAULT_MAX_DIGITS,
                        seed: int = 0, box: int = 20) -> dict:
    """Expand seeded samples of Z[beta] ∩ [0,1) and count finite vs truncated expansions."""
    rng = random.Random(seed)
    finite = truncated = 0
    failures = []
    for _ in range(samples):
        # the integer part is fixed so that the sample lands in [0, 1)
        n1, n2 = rng.randint(-box, box), rng.randint(-box, box)
        q = QBeta.of(0, n1, n2)
        q = q - QBeta.of(base.floor(q))
        _, status = renyi_expand(q, base, max_digits)
        if status == "finite":
            finite += 1
        else:
            truncated += 1
            failures.append([str(Fraction(c)) for c in q])
    return {
        "a": base.a,
        "b": base.b,
        "samples": samples,
        "finite": finite,
        "truncated": truncated,
        "akiyama_property_F": base.property_F,
        "agrees": (truncated == 0) == base.property_F,
        "truncated_examples": failures[:5],
    }
