"""Primitive triples (x, y, z) with x^2 + y^2 = z^r from coprime, opposite-parity (s, t)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .algebraic import DOMAIN_LOWER, in_domain
from .errors import CommonFactor, DomainViolation, InvalidInput, NotCoprime, ParityError


@dataclass(frozen=True, order=True)
class TripleParams:
    s: int
    t: int
    r: int

    @property
    def slope(self) -> tuple[int, int]:
        return (self.s, self.t)


@dataclass(frozen=True)
class Triple:
    x: int
    y: int
    z: int
    params: TripleParams

    @property
    def gens(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    @property
    def ordering(self) -> str:
        return ordering_of(self)

    def named(self) -> dict[str, int]:
        return {"x": self.x, "y": self.y, "z": self.z}


def xyz_values(s: int, t: int, r: int) -> tuple[int, int, int]:
    """Real and imaginary parts of (s + it)^r, and s^2 + t^2."""
    x = sum(
        (-1) ** k * math.comb(r, 2 * k) * s ** (r - 2 * k) * t ** (2 * k)
        for k in range(r // 2 + 1)
    )
    y = sum(
        (-1) ** k * math.comb(r, 2 * k + 1) * s ** (r - 2 * k - 1) * t ** (2 * k + 1)
        for k in range((r - 1) // 2 + 1)
    )
    return x, y, s * s + t * t


def check_params(s: int, t: int, r: int) -> TripleParams:
    """Validate (s, t, r); raises on the first failed condition.

    For r <= 5 the positivity domain is decided by comparing s/t with the
    algebraic domain thresholds; for larger r, x and y are tested directly.
    """
    if r < 2:
        raise InvalidInput(f"r must be >= 2, got {r}")
    if s < 1 or t < 1:
        raise InvalidInput(f"s and t must be positive, got ({s}, {t})")
    if math.gcd(s, t) != 1:
        raise NotCoprime(f"gcd(s, t) = gcd({s}, {t}) != 1")
    if (s - t) % 2 == 0:
        raise ParityError(f"s = {s} and t = {t} have the same parity")
    x, y, z = xyz_values(s, t, r)
    inside = in_domain(s, t, r) if r in DOMAIN_LOWER else (x > 0 and y > 0)
    assert inside == (x > 0 and y > 0)
    if not inside:
        raise DomainViolation(f"(s, t, r) = ({s}, {t}, {r}) gives x = {x}, y = {y}")
    if math.gcd(x, y, z) != 1:
        raise CommonFactor(f"gcd({x}, {y}, {z}) != 1")
    return TripleParams(s, t, r)


def is_valid(s: int, t: int, r: int) -> bool:
    try:
        check_params(s, t, r)
    except InvalidInput:
        return False
    return True


def general_xyz(params: TripleParams) -> Triple:
    p = check_params(params.s, params.t, params.r)
    x, y, z = xyz_values(p.s, p.t, p.r)
    assert x * x + y * y == z**p.r
    return Triple(x, y, z, p)


def make_triple(s: int, t: int, r: int) -> Triple:
    return general_xyz(TripleParams(s, t, r))


def enumerate_params(r: int, z_max: int) -> Iterator[TripleParams]:
    """Every valid (s, t) with s^2 + t^2 <= z_max, lexicographic in (s, t)."""
    if z_max < 5:
        raise InvalidInput(f"z_max must be >= 5, got {z_max}")
    s = 1
    while s * s + 1 <= z_max:
        t = 1
        while s * s + t * t <= z_max:
            if is_valid(s, t, r):
                yield TripleParams(s, t, r)
            t += 1
        s += 1


def ordering_of(triple: Triple) -> str:
    """Sorted relation among x, y, z, e.g. ``"z<x<y"``."""
    vals = triple.named()
    if len(set(vals.values())) != 3:
        raise InvalidInput(f"tied generators in {vals}")
    return "<".join(sorted(vals, key=vals.__getitem__))
