"""Exact generic engine for p-numerical semigroups.

Two independent routes to (g_p, n_p, s_p):

* :func:`p_apery_set` followed by :func:`stats_from_apery` (the Apery-set
  formulas for the p-Frobenius number, p-genus and p-Sylvester sum);
* :func:`gaps_oracle`, which scans a denumerant table and reads the
  statistics straight off the set of p-gaps.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BoundCapExceeded,
    DenumerantOverflow,
    InexactDivision,
    InvalidInput,
    NotCoprime,
)

INT32_MAX = 2**31 - 1
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted tuple of positive generators with overall gcd 1.

    Non-minimal systems such as ``(2, 5, 11)`` are accepted as given; the
    denumerant counts over every coordinate.
    """

    gens: tuple[int, ...]

    def __init__(self, gens: Iterable[int]):
        vals = tuple(sorted(int(g) for g in gens))
        if len(vals) < 2:
            raise InvalidInput(f"need at least two generators, got {vals}")
        if vals[0] < 1:
            raise InvalidInput(f"generators must be positive, got {vals}")
        if math.gcd(*vals) != 1:
            raise NotCoprime(f"gcd{vals} = {math.gcd(*vals)} != 1")
        object.__setattr__(self, "gens", vals)

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def a1(self) -> int:
        return self.gens[0]

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]


def as_generators(gens) -> GeneratorSet:
    return gens if isinstance(gens, GeneratorSet) else GeneratorSet(gens)


@dataclass(frozen=True)
class DenumerantTable:
    gens: GeneratorSet
    bound: int
    counts: np.ndarray = field(repr=False)

    def d(self, n: int) -> int:
        """d(n; A), with d = 0 for negative n."""
        if n < 0:
            return 0
        if n > self.bound:
            raise IndexError(f"{n} is beyond the table bound {self.bound}")
        return int(self.counts[n])


@dataclass(frozen=True)
class PAperySet:
    gens: GeneratorSet
    p: int
    m: tuple[int, ...]

    @property
    def a1(self) -> int:
        return self.gens.a1

    def __iter__(self):
        return iter(self.m)

    def __len__(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class SemigroupStats:
    g: int
    n: int
    s: int
    p: int
    method: str = field(default="generic", compare=False)

    def values(self) -> tuple[int, int, int]:
        return (self.g, self.n, self.s)


def _count_dtype(gens: Sequence[int], top: int):
    # d(n) <= prod_{i>=2} (n // a_i + 1): the a_1 coordinate is forced.
    worst = 1
    for a in gens[1:]:
        worst *= top // a + 1
        if worst > INT64_MAX:
            raise DenumerantOverflow(
                f"denumerants of {tuple(gens)} up to {top} may exceed 64 bits"
            )
    return np.int32 if worst <= INT32_MAX else np.int64


def denumerant_table(gens, bound: int) -> DenumerantTable:
    """Count representations of every n <= bound by unbounded-knapsack accumulation.

    Generators are folded in one at a time, so each multiset of coins is
    counted once.  For a single generator ``a`` the update
    ``c[n] += c[n - a]`` (ascending n) is a cumulative sum down each residue
    class mod ``a``, which numpy does as a reshape + accumulate.
    """
    gs = as_generators(gens)
    if bound < 0:
        raise InvalidInput(f"bound must be >= 0, got {bound}")
    top = bound + max(gs.gens)  # scratch tail past the bound
    if top >= INT64_MAX:
        raise DenumerantOverflow(f"table index {top} exceeds 64 bits")
    buf = np.zeros(top + 1, dtype=_count_dtype(gs.gens, top))
    buf[0] = 1
    for a in gs.gens:
        rows = (bound + 1 + a - 1) // a
        block = buf[: rows * a].reshape(rows, a)
        np.add.accumulate(block, axis=0, out=block)
    counts = buf[: bound + 1].copy()
    counts.setflags(write=False)
    return DenumerantTable(gs, bound, counts)


def _initial_bound(gs: GeneratorSet, p: int) -> int:
    return (p + 1) * gs.gens[-1]


def _grow_table(gs: GeneratorSet, bound: int, max_bound: int | None) -> DenumerantTable:
    if max_bound is not None and bound > max_bound:
        raise BoundCapExceeded(
            f"denumerant table for {gs.gens} needs bound > {max_bound}"
        )
    return denumerant_table(gs, bound)


def _apery_by_residue_merge(gs: GeneratorSet, p: int) -> list[int]:
    # For every residue class mod a1 keep the p+1 smallest values of
    # sum_{i>=2} a_i x_i (with multiplicity).  d(n) >= p+1 exactly when n is
    # at least the (p+1)-th of these in its class.
    a1, keep = gs.a1, p + 1
    best: list[list[int]] = [[] for _ in range(a1)]
    best[0] = [0]
    for a in gs.gens[1:]:
        step = a % a1
        old = best
        new = [list(v) for v in old]
        seen = [False] * a1
        for start in range(a1):
            if seen[start]:
                continue
            cycle = []
            r = start
            while not seen[r]:
                seen[r] = True
                cycle.append(r)
                r = (r + step) % a1
            changed = True
            while changed:
                changed = False
                for r in cycle:
                    prev = new[(r - step) % a1]
                    if not prev:
                        continue
                    merged = sorted(old[r] + [v + a for v in prev])[:keep]
                    if merged != new[r]:
                        new[r] = merged
                        changed = True
        best = new
    out = []
    for j, vals in enumerate(best):
        if len(vals) < keep:
            raise InvalidInput(f"residue {j} mod {a1} never reaches {keep} representations")
        out.append(vals[p])
    return out


def _apery_by_table(gs: GeneratorSet, p: int, max_bound: int | None) -> list[int]:
    a1 = gs.a1
    bound = _initial_bound(gs, p)
    while True:
        table = _grow_table(gs, bound, max_bound)
        hits = np.flatnonzero(table.counts >= p + 1)
        res, first = np.unique(hits % a1, return_index=True)
        if len(res) == a1:
            return [int(hits[i]) for i in first]
        bound *= 2


def p_apery_set(gens, p: int, method: str = "merge", max_bound: int | None = None) -> PAperySet:
    """The p-Apery set: per residue j mod a1, the least n = j with d(n) > p.

    ``method="merge"`` works residue-by-residue and never materialises a
    denumerant table, so it scales with a1 rather than with the size of the
    Frobenius number.  ``method="table"`` scans a doubling denumerant table
    and is kept as a cross-check.
    """
    gs = as_generators(gens)
    if p < 0:
        raise InvalidInput(f"p must be >= 0, got {p}")
    if method == "merge":
        m = _apery_by_residue_merge(gs, p)
    elif method == "table":
        m = _apery_by_table(gs, p, max_bound)
    else:
        raise InvalidInput(f"unknown Apery method {method!r}")
    return PAperySet(gs, p, tuple(m))


def _exact(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise InexactDivision(f"{what} = {q} is not an integer")
    return q.numerator


def stats_from_apery(ap: PAperySet) -> SemigroupStats:
    """g_p, n_p, s_p from the Apery set, in exact rational arithmetic."""
    a1 = ap.a1
    if len(ap.m) != a1 or sorted(v % a1 for v in ap.m) != list(range(a1)):
        raise InvalidInput("Apery set residues are not a permutation of 0..a1-1")
    total = sum(ap.m)
    squares = sum(v * v for v in ap.m)
    g = max(ap.m) - a1
    n = _exact(Fraction(total, a1) - Fraction(a1 - 1, 2), "n_p")
    s = _exact(
        Fraction(squares, 2 * a1) - Fraction(total, 2) + Fraction(a1 * a1 - 1, 12),
        "s_p",
    )
    return SemigroupStats(g, n, s, ap.p, method="apery")


def generic_stats(gens, p: int = 0) -> SemigroupStats:
    return stats_from_apery(p_apery_set(gens, p))


def gaps_oracle(
    gens, p: int = 0, max_bound: int | None = None, start_bound: int | None = None
):
    """Enumerate G_p = {n >= 0 : d(n) <= p} directly from denumerants.

    The table doubles until the last p-gap is followed by a1 consecutive
    non-gaps inside it; from there on adding a1 keeps d above p.  Returns
    ``(gaps, stats)`` with ``gaps`` a sorted int64 array.

    ``start_bound`` only sets the first table size (a good guess saves the
    doubling passes); the stopping test alone decides when the scan is done.
    """
    gs = as_generators(gens)
    if p < 0:
        raise InvalidInput(f"p must be >= 0, got {p}")
    a1 = gs.a1
    bound = max(_initial_bound(gs, p), start_bound or 0)
    while True:
        table = _grow_table(gs, bound, max_bound)
        gaps = np.flatnonzero(table.counts <= p).astype(np.int64)
        last = int(gaps[-1]) if len(gaps) else -1
        if bound - last >= a1:
            break
        bound *= 2
    if len(gaps) == 0:
        return gaps, SemigroupStats(-1, 0, 0, p, method="oracle")
    if len(gaps) * last > INT64_MAX:
        raise DenumerantOverflow("p-Sylvester sum exceeds 64 bits")
    stats = SemigroupStats(last, int(len(gaps)), int(gaps.sum()), p, method="oracle")
    return gaps, stats


def two_gen_stats(a: int, b: int) -> SemigroupStats:
    """Classical two-generator values at p = 0.

    The Sylvester sum uses the Brown-Shiue formula
    (a-1)(b-1)(2ab-a-b-1)/12.
    """
    if a < 2 or b < 2:
        raise InvalidInput(f"generators must be >= 2, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    prod = (a - 1) * (b - 1)
    s = _exact(Fraction(prod * (2 * a * b - a - b - 1), 12), "s_0")
    return SemigroupStats(prod - 1, prod // 2, s, 0, method="two-generator")
