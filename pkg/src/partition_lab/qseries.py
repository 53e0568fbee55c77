"""Exact truncated power series in q and q-Pochhammer products.

Coefficients are Python ints, so nothing overflows at any truncation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_TRUNCATION = 200


class TruncatedSeries:
    """Power series ``sum c[i] q^i`` known exactly for ``i <= trunc``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], trunc: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ValueError("truncation degree must be nonnegative")
        coeffs = coeffs[: trunc + 1]
        coeffs += [0] * (trunc + 1 - len(coeffs))
        self.coeffs: tuple[int, ...] = tuple(coeffs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, trunc: int) -> TruncatedSeries:
        return cls([1], trunc)

    @classmethod
    def monomial(cls, degree: int, trunc: int, coeff: int = 1) -> TruncatedSeries:
        c = [0] * (trunc + 1)
        if degree <= trunc:
            c[degree] = coeff
        return cls(c, trunc)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}q^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; O(q^{self.trunc + 1}))"

    def _check(self, other: TruncatedSeries) -> None:
        if other.trunc != self.trunc:
            raise ValueError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * a for a in self.coeffs])
        return mul(self, other)

    __rmul__ = __mul__

    def alternate(self) -> TruncatedSeries:
        """The series with ``q -> -q``."""
        return TruncatedSeries([-c if i % 2 else c for i, c in enumerate(self.coeffs)])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    n = a.trunc
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"invert needs constant term +1 or -1, got {c0}")
    n = a.trunc
    ac = a.coeffs
    out = [0] * (n + 1)
    out[0] = c0
    for i in range(1, n + 1):
        s = 0
        for j in range(1, i + 1):
            if ac[j]:
                s += ac[j] * out[i - j]
        # c0 is a unit equal to its own inverse
        out[i] = -s * c0
    return TruncatedSeries(out)


@dataclass(frozen=True)
class PochhammerFactor:
    """``prod_{m = s, s+t, s+2t, ...} (1 + sign*q^m) ** power``.

    ``sign=-1`` gives ``(q^s; q^t)_inf`` and ``sign=+1`` gives ``(-q^s; q^t)_inf``;
    ``power=-1`` puts the product in the denominator.
    """

    sign: int
    base: int
    step: int
    power: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1) or self.power not in (1, -1):
            raise ValueError("sign and power must be +1 or -1")
        if self.base < 1 or self.step < 1:
            raise ValueError("base exponent and step must be positive")

    def __str__(self) -> str:
        a = "-" if self.sign == 1 else ""
        sym = f"({a}q^{self.base};q^{self.step})"
        return sym if self.power == 1 else f"1/{sym}"


def poch(base: int, step: int, sign: int = -1, power: int = 1) -> PochhammerFactor:
    return PochhammerFactor(sign, base, step, power)


def _apply(c: list[int], m: int, sign: int, power: int) -> None:
    n = len(c) - 1
    if power == 1:
        # times (1 + sign q^m): descend so c[i - m] is still the old value
        for i in range(n, m - 1, -1):
            c[i] += sign * c[i - m]
    else:
        # divide by (1 + sign q^m): ascend, c[i - m] already divided
        for i in range(m, n + 1):
            c[i] -= sign * c[i - m]


def series_from_factors(factors: Sequence[PochhammerFactor], trunc: int) -> TruncatedSeries:
    """Expand a product of q-Pochhammer factors exactly up to ``q^trunc``."""
    if trunc < 0:
        raise ValueError("truncation degree must be nonnegative")
    c = [0] * (trunc + 1)
    c[0] = 1
    for f in factors:
        m = f.base
        while m <= trunc:
            _apply(c, m, f.sign, f.power)
            m += f.step
    return TruncatedSeries(c)


class GfId(enum.Enum):
    F = "F"
    F0_MINUS_F1 = "F0_minus_F1"
    F2_MINUS_F3 = "F2_minus_F3"
    OVER = "OVER"
    OVER_ODD = "OVER_ODD"
    G = "G"
    G0_MINUS_G1 = "G0_minus_G1"
    G2_MINUS_G3 = "G2_minus_G3"
    G4_MINUS_G5 = "G4_minus_G5"
    H = "H"
    K = "K"
    L = "L"
    L0_MINUS_L1 = "L0_minus_L1"
    L2_MINUS_L3 = "L2_minus_L3"


# Each product is read off from the definition of the counting function:
# a statistic weighted by -1 turns 1/(1 - q^m) into 1/(1 + q^m) for the
# parts it counts.
GF_FACTORS: dict[GfId, tuple[PochhammerFactor, ...]] = {
    # odd parts in two colors, even parts blue
    GfId.F: (poch(1, 2, power=-1), poch(1, 2, power=-1), poch(2, 2, power=-1)),
    GfId.F0_MINUS_F1: (poch(1, 2, power=-1), poch(1, 2, power=-1), poch(2, 2, +1, -1)),
    GfId.F2_MINUS_F3: (poch(1, 2, +1, -1), poch(1, 2, +1, -1), poch(2, 2, +1, -1)),
    GfId.OVER: (poch(1, 1, +1), poch(1, 1, power=-1)),
    GfId.OVER_ODD: (poch(1, 2, +1), poch(1, 2, power=-1)),
    GfId.G: (poch(2, 2, power=-1), poch(1, 1, power=-1)),
    GfId.G0_MINUS_G1: (poch(2, 2, +1, -1), poch(1, 1, power=-1)),
    GfId.G2_MINUS_G3: (poch(2, 2, power=-1), poch(1, 1, +1, -1)),
    GfId.G4_MINUS_G5: (poch(2, 2, +1, -1), poch(1, 1, +1, -1)),
    GfId.H: (poch(1, 2, +1), poch(2, 2, power=-1)),
    GfId.K: (poch(2, 4), poch(1, 2, +1)),
    GfId.L: (poch(2, 2, +1), poch(1, 1, +1)),
    GfId.L0_MINUS_L1: (poch(2, 2), poch(1, 1, +1)),
    GfId.L2_MINUS_L3: (poch(2, 2, +1), poch(1, 1)),
}


def family_gf(gf: GfId | str, trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    if not isinstance(gf, GfId):
        try:
            gf = GfId(gf)
        except ValueError:
            raise ValueError(f"unknown generating function {gf!r}") from None
    return series_from_factors(GF_FACTORS[gf], trunc)


def staircase_series(signed: bool, trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """``sum_k q^(k(k+1)/2)``, or with coefficient ``(-1)^k`` when ``signed``.

    The signed form is the series as literally displayed for the ``L2 - L3``
    generating function.  It is *not* equal to that generating function:
    the true coefficient at ``q^(T_k)`` is ``(-1)^(T_k)``, see
    :func:`staircase_series_weight_signed`.
    """
    c = [0] * (trunc + 1)
    k = 0
    while k * (k + 1) // 2 <= trunc:
        c[k * (k + 1) // 2] = (-1) ** k if signed else 1
        k += 1
    return TruncatedSeries(c)


def staircase_series_weight_signed(trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """``sum_k (-1)^(T_k) q^(T_k)``: the staircase series at ``q -> -q``."""
    return staircase_series(False, trunc).alternate()
