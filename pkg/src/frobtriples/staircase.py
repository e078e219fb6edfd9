"""Apery sets of three generators drawn on a two-axis coefficient grid.

A 0-Apery element of <a1, U, V> written as u*U + v*V sits at cell (u, v).
When every element has exactly one such representation the occupied cells
form a staircase (a down-set), described here by its row widths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DecompositionFailure


@dataclass(frozen=True)
class Staircase:
    """Row v holds cells u = 0 .. widths[v] - 1; widths never increase."""

    axes: tuple[str, str]
    widths: tuple[int, ...]

    @property
    def area(self) -> int:
        return sum(self.widths)

    @property
    def height(self) -> int:
        return len(self.widths)

    def corners(self) -> list[tuple[int, int]]:
        """Outer corners (u, v), top row first."""
        out = []
        for v, w in enumerate(self.widths):
            if v + 1 == len(self.widths) or self.widths[v + 1] < w:
                out.append((w - 1, v))
        return out

    def cells(self) -> Iterable[tuple[int, int]]:
        for v, w in enumerate(self.widths):
            for u in range(w):
                yield (u, v)

    def cell_sum(self, gu: int, gv: int) -> int:
        """Sum of u*gu + v*gv over all cells, in closed form per row."""
        total = 0
        for v, w in enumerate(self.widths):
            total += gu * w * (w - 1) // 2 + gv * v * w
        return total

    @classmethod
    def from_blocks(cls, axes, blocks) -> "Staircase":
        """Build from ``[(width, height), ...]`` blocks stacked top to bottom."""
        widths: list[int] = []
        for w, h in blocks:
            if w <= 0 or h < 0:
                raise ValueError(f"bad block {(w, h)}")
            widths.extend([w] * h)
        if any(b > a for a, b in zip(widths, widths[1:])):
            raise ValueError(f"blocks {blocks} do not form a staircase")
        return cls(tuple(axes), tuple(widths))


def extract_staircase(values, gu: int, gv: int, axes=("u", "v")) -> Staircase:
    """Read the staircase of ``values`` on the (gu, gv) grid.

    Scans v = 0, 1, ... and for each row counts consecutive u from 0 whose
    cell value u*gu + v*gv is in the set.  Raises
    :class:`DecompositionFailure` unless the cells found account for every
    value exactly once.
    """
    pool = set(values)
    widths = []
    v = 0
    while True:
        w = 0
        base = v * gv
        while base + w * gu in pool:
            w += 1
        if w == 0:
            break
        widths.append(w)
        v += 1
    stairs = Staircase(tuple(axes), tuple(widths))
    placed = {u * gu + v * gv for u, v in stairs.cells()}
    if stairs.area != len(pool) or placed != pool:
        raise DecompositionFailure(
            f"{len(pool)} values but {stairs.area} grid cells on axes {axes}"
        )
    if any(b > a for a, b in zip(widths, widths[1:])):
        raise DecompositionFailure(f"row widths {widths} are not a staircase")
    return stairs
