"""Exact comparison of a rational slope s/t against real algebraic thresholds.

A threshold is a root of an integer polynomial, pinned down by a rational
isolating interval.  Deciding s/t < rho never touches floating point: outside
the interval the interval decides, inside it the sign of the homogenised
polynomial t^d * P(s/t) does.  Each interval is checked when the threshold is
built, with a Sturm-sequence root count in rational arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput


class Side(enum.Enum):
    LESS = "Less"
    BOUNDARY = "Boundary"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value


# Polynomials are coefficient tuples, highest degree first.

def _trim(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def poly_eval(coeffs: Sequence, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def homogeneous_sign(coeffs: Sequence[int], s: int, t: int) -> int:
    """Sign of t^d * P(s/t) = sum c_i s^(d-i) t^i, in exact integers."""
    d = len(coeffs) - 1
    total = sum(c * s ** (d - i) * t**i for i, c in enumerate(coeffs))
    return (total > 0) - (total < 0)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _derivative(p: Sequence) -> list:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def _poly_rem(a: list, b: list) -> list:
    a = [Fraction(c) for c in a]
    while len(a) >= len(b) and any(a):
        q = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= q * b[i]
        a.pop(0)
    return _trim(a) if a else [Fraction(0)]


def sturm_sequence(coeffs: Sequence[int]) -> list[list]:
    seq = [list(coeffs), _derivative(coeffs)]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        rem = _poly_rem(seq[-2], seq[-1])
        if rem == [0]:
            break
        seq.append([-c for c in rem])
    return seq


def count_roots(coeffs: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi], for squarefree ``coeffs``."""
    seq = sturm_sequence(coeffs)

    def variations(x) -> int:
        signs = [s for s in (_sign(poly_eval(p, x)) for p in seq) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(lo) - variations(hi)


@dataclass(frozen=True)
class Threshold:
    """A real root rho of ``poly`` isolated in ``(iso_lo, iso_hi)``.

    ``sign_left`` is the sign of ``poly`` on ``[iso_lo, rho)``.
    """

    poly: tuple[int, ...]
    iso_lo: Fraction
    iso_hi: Fraction
    sign_left: int
    label: str

    @classmethod
    def build(cls, poly: Sequence[int], lo, hi, label: str) -> "Threshold":
        poly = tuple(int(c) for c in poly)
        lo, hi = Fraction(lo), Fraction(hi)
        if len(poly) < 2 or poly[0] <= 0:
            raise InvalidInput(f"{label}: need a positive leading coefficient")
        if not lo < hi:
            raise InvalidInput(f"{label}: empty isolating interval")
        f_lo, f_hi = poly_eval(poly, lo), poly_eval(poly, hi)
        if f_lo == 0 or f_hi == 0 or _sign(f_lo) == _sign(f_hi):
            raise InvalidInput(f"{label}: no sign change on [{lo}, {hi}]")
        if count_roots(poly, lo, hi) != 1:
            raise InvalidInput(f"{label}: interval [{lo}, {hi}] holds more than one root")
        return cls(poly, lo, hi, _sign(f_lo), label)

    @classmethod
    def rational(cls, num: int, den: int, label: str | None = None) -> "Threshold":
        q = Fraction(num, den)
        half = Fraction(1, 2 * q.denominator)
        return cls.build(
            (q.denominator, -q.numerator), q - half, q + half, label or str(q)
        )

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def mirror(self, label: str) -> "Threshold":
        """The root 1/rho, of the reversed polynomial."""
        rev = list(reversed(self.poly))
        if rev[0] < 0:
            rev = [-c for c in rev]
        return Threshold.build(rev, 1 / self.iso_hi, 1 / self.iso_lo, label)

    def approx(self, digits: int = 12) -> Fraction:
        """Bisect the isolating interval down to ``10**-digits`` (display only)."""
        lo, hi = self.iso_lo, self.iso_hi
        eps = Fraction(1, 10**digits)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if _sign(poly_eval(self.poly, mid)) == self.sign_left:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    def __str__(self) -> str:
        return self.label


def compare_ratio(s: int, t: int, th: Threshold) -> Side:
    """Where s/t lies relative to the threshold root."""
    if s < 1 or t < 1:
        raise InvalidInput(f"s and t must be positive, got ({s}, {t})")
    q = Fraction(s, t)
    if q < th.iso_lo:
        return Side.LESS
    if q > th.iso_hi:
        return Side.GREATER
    sg = homogeneous_sign(th.poly, s, t)
    if sg == 0:
        return Side.BOUNDARY
    return Side.LESS if sg == th.sign_left else Side.GREATER


def _q(text: str) -> Fraction:
    return Fraction(text)


def _t(poly, lo, hi, label) -> Threshold:
    return Threshold.build(poly, _q(lo), _q(hi), label)


# Threshold catalog.  Each interval brackets the named root to about 1e-4.
ONE = Threshold.rational(1, 1)
TWO = Threshold.rational(2, 1)
SEVEN_QUARTERS = Threshold.rational(7, 4)
FIVE_HALVES = Threshold.rational(5, 2)

SQRT3 = _t((1, 0, -3), "1.7320", "1.7321", "sqrt(3)")
R3_3_SQRT34 = _t((5, -6, -5), "1.7661", "1.7662", "(3+sqrt(34))/5")
R3_18139 = _t((3, -7, 6, -3, -5), "1.8139", "1.8140", "1.8139")
R3_2_SQRT13 = _t((3, -4, -3), "1.8685", "1.8686", "(2+sqrt(13))/3")
ONE_SQRT2 = _t((1, -2, -1), "2.4142", "2.4143", "1+sqrt(2)")
TWO_SQRT3 = _t((1, -4, 1), "3.7320", "3.7321", "2+sqrt(3)")
R3_35163 = _t((1, -4, 3, -4, -2), "3.5163", "3.5164", "3.5163")

R4_24422 = _t((7, -9, -21, 3), "2.4422", "2.4423", "2.4422")
R4_25855 = _t((2, -3, -6, 1), "2.5855", "2.5856", "2.5855")
R4_28350 = _t((1, -4, 6, -8, 1), "2.8350", "2.8351", "2.8350")

R5_30777 = _t((1, 0, -10, 0, 5), "3.0776", "3.0777", "sqrt(5+2*sqrt(5))")
R5_30976 = _t((3, -4, -18, 4, 3), "3.0976", "3.0977", "3.0976")
R5_31098 = _t((2, -4, -5, 0, -20, 4, 3), "3.1098", "3.1099", "3.1098")
R5_35201 = _t((1, -2, -6, 2, 1), "3.5201", "3.5202", "3.5201")
R5_41894 = _t((1, -4, 0, 0, -15, 4, 2), "4.1894", "4.1895", "4.1894")
R5_50273 = _t((1, -4, -6, 4, 1), "5.0273", "5.0274", "1+sqrt(2)+sqrt(2(2+sqrt(2)))")
R5_63137 = _t((1, -4, -14, -4, 1), "6.3137", "6.3138", "1+sqrt(5)+sqrt(5+2*sqrt(5))")

# Swapping s and t maps the r=5 family to itself, so the lower thresholds
# are reciprocals of the upper ones.
R5_01583 = R5_63137.mirror("0.1583")
R5_01989 = R5_50273.mirror("0.1989")
R5_02386 = R5_41894.mirror("0.2386")
R5_02840 = R5_35201.mirror("0.2840")
R5_03215 = R5_31098.mirror("0.3215")
R5_03228 = R5_30976.mirror("0.3228")
R5_03249 = R5_30777.mirror("sqrt(1-2/sqrt(5))")

# Lower edge of the positivity domain for each r (r=5 also has the window
# below R5_03249).
DOMAIN_LOWER = {2: ONE, 3: SQRT3, 4: ONE_SQRT2, 5: R5_30777}


def in_domain(s: int, t: int, r: int) -> bool:
    """x > 0 and y > 0 for r in 2..5, decided by threshold comparison."""
    if r not in DOMAIN_LOWER:
        raise InvalidInput(f"no domain thresholds for r = {r}")
    if compare_ratio(s, t, DOMAIN_LOWER[r]) is Side.GREATER:
        return True
    return r == 5 and compare_ratio(s, t, R5_03249) is Side.LESS
