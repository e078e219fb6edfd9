"""Slope regimes for the x^2 + y^2 = z^r triples.

For fixed (r, p) the slope axis s/t is cut by algebraic thresholds into open
intervals.  Inside one interval the Apery set of (x, y, z) has a fixed
staircase shape on a fixed pair of axes, so the Frobenius number and genus
are fixed polynomials in (s, t).  Each interval carries a :class:`ShapeRule`
describing that staircase, or ``None`` when no uniform shape is known there
and the generic engine has to be used.

The catalog is plain data; :func:`classify_regime` only walks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import algebraic as th
from .algebraic import Side, Threshold, compare_ratio
from .errors import InvalidInput, UnsupportedRegime
from .triples import Triple, TripleParams, check_params, xyz_values

Blocks = Callable[[int, int], list]
Corner = Callable[[int, int], tuple]

IRREGULAR = "irregular"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class ShapeRule:
    """Staircase of the Apery set on the ``axes`` grid, modulo ``a1``.

    ``blocks(s, t)`` gives ``[(width, height), ...]`` from the top row down;
    ``winner(s, t)`` is the outer corner carrying the largest value.
    ``winner_text`` spells the winner's coefficients for display.
    ``requires``, when set, is an extra exact test on the named generators
    that must hold for the shape to apply.
    """

    a1: str
    axes: tuple[str, str]
    blocks: Blocks
    winner: Corner
    winner_text: tuple[str, str]
    requires: Optional[Callable[[dict], bool]] = None
    requires_text: str = ""


@dataclass(frozen=True)
class Regime:
    case_id: str
    r: int
    p: int
    lo: Optional[Threshold]
    hi: Optional[Threshold]
    rule: Optional[ShapeRule]

    @property
    def interval_text(self) -> str:
        lo = self.lo.label if self.lo else ("0" if self.r == 5 else "-inf")
        hi = self.hi.label if self.hi else "inf"
        return f"{lo} < s/t < {hi}"

    def contains(self, s: int, t: int) -> bool:
        """Strictly inside the open interval (exact)."""
        if self.lo is not None and compare_ratio(s, t, self.lo) is not Side.GREATER:
            return False
        if self.hi is not None and compare_ratio(s, t, self.hi) is not Side.LESS:
            return False
        return True


@dataclass(frozen=True)
class RegimeLabel:
    r: int
    p: int
    case_id: str
    boundary: bool = False
    description: str = ""

    @property
    def has_closed_form(self) -> bool:
        reg = REGIMES.get((self.r, self.p, self.case_id))
        return not self.boundary and reg is not None and reg.rule is not None

    def __str__(self) -> str:
        return self.case_id


def in_two_generated(v: int, a: int, m: int) -> bool:
    """Whether v is in the semigroup <a, m>, for coprime a and m."""
    k = v * pow(a, -1, m) % m
    return k * a <= v


def _swap_xy(named: dict) -> dict:
    return {"x": named["y"], "y": named["x"], "z": named["z"]}


def _mirror(rule: ShapeRule, text: tuple[str, str], requires_text: str = "") -> ShapeRule:
    # (s, t) -> (t, s) swaps x and y in the r=5 family.
    req = None
    if rule.requires is not None:
        req = lambda g: rule.requires(_swap_xy(g))  # noqa: E731
    return ShapeRule(
        rule.a1,
        (rule.axes[1], rule.axes[0]),
        lambda s, t: rule.blocks(t, s),
        lambda s, t: rule.winner(t, s),
        text,
        req,
        requires_text,
    )


# Staircase shapes on (x, y) with a1 = z.  Names describe block layout.
def _rule(blocks: Blocks, winner: Corner, text) -> ShapeRule:
    return ShapeRule("z", ("x", "y"), blocks, winner, text)


def _wide_top(k: int) -> Blocks:
    # k = 1, 2, 3: [(k s + t, t), (s, s - k t)]
    return lambda s, t: [(k * s + t, t), (s, s - k * t)]


SQUARE_TOP = _rule(_wide_top(1), lambda s, t: (s - 1, s - 1), ("s-1", "s-1"))
DOUBLE_OUTER = _rule(_wide_top(2), lambda s, t: (2 * s + t - 1, t - 1), ("2s+t-1", "t-1"))
DOUBLE_INNER = _rule(_wide_top(2), lambda s, t: (s - 1, s - t - 1), ("s-1", "s-t-1"))
TRIPLE_OUTER = _rule(_wide_top(3), lambda s, t: (3 * s + t - 1, t - 1), ("3s+t-1", "t-1"))
TRIPLE_INNER = _rule(_wide_top(3), lambda s, t: (s - 1, s - 2 * t - 1), ("s-1", "s-2t-1"))
# One row of multiples of x: only when y already lies in <x, z>.
SINGLE_ROW = ShapeRule(
    "z", ("x", "y"),
    lambda s, t: [(s * s + t * t, 1)],
    lambda s, t: (s * s + t * t - 1, 0),
    ("z-1", "0"),
    lambda g: in_two_generated(g["y"], g["x"], g["z"]),
    "y in <x, z>",
)

R3_STEP3 = lambda s, t: [(3 * s + 2 * t, 2 * t - s), (2 * s + t, 2 * s - 3 * t)]  # noqa: E731
R3_STEP5 = lambda s, t: [(5 * s + 3 * t, 2 * t - s), (2 * s + t, 3 * s - 5 * t)]  # noqa: E731
R3_STEP7 = lambda s, t: [(7 * s + 4 * t, 2 * t - s), (2 * s + t, 4 * s - 7 * t)]  # noqa: E731
R4_STEP5 = lambda s, t: [(5 * s + 2 * t, 3 * t - s), (3 * s + t, 2 * s - 5 * t)]  # noqa: E731
R4_STEP7 = lambda s, t: [(7 * s + 3 * t, 5 * t - 2 * s), (5 * s + 2 * t, 3 * s - 7 * t)]  # noqa: E731

R2_X_MIN = ShapeRule(
    "x", ("y", "z"),
    lambda s, t: [(s, s - t), (s - t, t)],
    lambda s, t: (s - t - 1, s - 1),
    ("s-t-1", "s-1"),
)
R2_Y_MIN = ShapeRule(
    "y", ("x", "z"),
    lambda s, t: [(s + t, t), (t, s - t)],
    lambda s, t: (s + t - 1, t - 1),
    ("s+t-1", "t-1"),
)

# Maximal cells of the 1-Apery set on (x, y), r = 3: the four outer
# corners A..D.  Only A and D can carry the largest value.
P1_CANDIDATES = {
    "A": lambda s, t: (s - t - 1, 2 * s - t - 1),
    "B": lambda s, t: (s - 1, s + t - 1),
    "C": lambda s, t: (s + t - 1, s - 1),
    "D": lambda s, t: (2 * s + t - 1, t - 1),
}
P1_A = _rule(lambda s, t: [], P1_CANDIDATES["A"], ("s-t-1", "2s-t-1"))
P1_D = _rule(lambda s, t: [], P1_CANDIDATES["D"], ("2s+t-1", "t-1"))


def _cat(r: int, p: int, rows) -> list[Regime]:
    return [Regime(cid, r, p, lo, hi, rule) for cid, lo, hi, rule in rows]


CATALOG: dict[tuple[int, int], list[Regime]] = {
    (2, 0): _cat(2, 0, [
        ("r2:x-min", th.ONE, th.ONE_SQRT2, R2_X_MIN),
        ("r2:y-min", th.ONE_SQRT2, None, R2_Y_MIN),
    ]),
    (3, 0): _cat(3, 0, [
        ("r3:near-sqrt3", th.SQRT3, th.SEVEN_QUARTERS, None),
        ("r3:c6", th.SEVEN_QUARTERS, th.R3_3_SQRT34,
         _rule(R3_STEP7, lambda s, t: (7 * s + 4 * t - 1, 2 * t - s - 1), ("7s+4t-1", "2t-s-1"))),
        ("r3:c5", th.R3_3_SQRT34, th.R3_18139,
         _rule(R3_STEP5, lambda s, t: (2 * s + t - 1, 2 * s - 3 * t - 1), ("2s+t-1", "2s-3t-1"))),
        ("r3:c4", th.R3_18139, th.R3_2_SQRT13,
         _rule(R3_STEP5, lambda s, t: (5 * s + 3 * t - 1, 2 * t - s - 1), ("5s+3t-1", "2t-s-1"))),
        ("r3:c3", th.R3_2_SQRT13, th.TWO,
         _rule(R3_STEP3, lambda s, t: (2 * s + t - 1, s - t - 1), ("2s+t-1", "s-t-1"))),
        ("r3:c2", th.TWO, th.ONE_SQRT2, DOUBLE_OUTER),
        ("r3:c1", th.ONE_SQRT2, th.TWO_SQRT3, SQUARE_TOP),
        ("r3:top", th.TWO_SQRT3, None, SQUARE_TOP),
    ]),
    (3, 1): _cat(3, 1, [
        ("r3:p1:none-low", th.SQRT3, th.ONE_SQRT2, None),
        ("r3:p1:A", th.ONE_SQRT2, th.R3_35163, P1_A),
        ("r3:p1:D", th.R3_35163, th.TWO_SQRT3, P1_D),
        ("r3:p1:none-high", th.TWO_SQRT3, None, None),
    ]),
    (4, 0): _cat(4, 0, [
        ("r4:near-1+sqrt2", th.ONE_SQRT2, th.R4_24422, None),
        ("r4:c5", th.R4_24422, th.FIVE_HALVES,
         _rule(R4_STEP7, lambda s, t: (5 * s + 2 * t - 1, s - 2 * t - 1), ("5s+2t-1", "s-2t-1"))),
        ("r4:c4", th.FIVE_HALVES, th.R4_25855,
         _rule(R4_STEP5, lambda s, t: (5 * s + 2 * t - 1, 3 * t - s - 1), ("5s+2t-1", "3t-s-1"))),
        ("r4:c3", th.R4_25855, th.R4_28350, DOUBLE_INNER),
        ("r4:c2", th.R4_28350, th.TWO_SQRT3, DOUBLE_OUTER),
        ("r4:c1", th.TWO_SQRT3, None, SQUARE_TOP),
    ]),
    (5, 0): _cat(5, 0, [
        ("r5:l1", None, th.R5_01583, _mirror(SQUARE_TOP, ("t-1", "t-1"))),
        ("r5:l2", th.R5_01583, th.R5_01989, _mirror(SQUARE_TOP, ("t-1", "t-1"))),
        ("r5:l3", th.R5_01989, th.R5_02386, _mirror(DOUBLE_OUTER, ("s+2t-1", "s-1"))),
        ("r5:l4", th.R5_02386, th.R5_02840, _mirror(DOUBLE_INNER, ("t-1", "t-s-1"))),
        ("r5:l5", th.R5_02840, th.R5_03215, _mirror(TRIPLE_OUTER, ("s+3t-1", "s-1"))),
        ("r5:l6", th.R5_03215, th.R5_03228, _mirror(TRIPLE_INNER, ("t-1", "t-2s-1"))),
        ("r5:l7", th.R5_03228, th.R5_03249, _mirror(SINGLE_ROW, ("z-1", "0"), "x in <y, z>")),
        ("r5:u7", th.R5_30777, th.R5_30976, SINGLE_ROW),
        ("r5:u6", th.R5_30976, th.R5_31098, TRIPLE_INNER),
        ("r5:u5", th.R5_31098, th.R5_35201, TRIPLE_OUTER),
        ("r5:u4", th.R5_35201, th.R5_41894, DOUBLE_INNER),
        ("r5:u3", th.R5_41894, th.R5_50273, DOUBLE_OUTER),
        ("r5:u2", th.R5_50273, th.R5_63137, SQUARE_TOP),
        ("r5:u1", th.R5_63137, None, SQUARE_TOP),
    ]),
}

REGIMES: dict[tuple[int, int, str], Regime] = {
    (reg.r, reg.p, reg.case_id): reg for rows in CATALOG.values() for reg in rows
}


def regimes_for(r: int, p: int) -> list[Regime]:
    try:
        return CATALOG[(r, p)]
    except KeyError:
        raise UnsupportedRegime(f"no regime catalog for r = {r}, p = {p}") from None


def thresholds_for(r: int, p: int) -> list[Threshold]:
    seen: dict[str, Threshold] = {}
    for reg in regimes_for(r, p):
        for edge in (reg.lo, reg.hi):
            if edge is not None:
                seen.setdefault(edge.label, edge)
    return list(seen.values())


def matching_regimes(r: int, p: int, s: int, t: int) -> list[Regime]:
    return [reg for reg in regimes_for(r, p) if reg.contains(s, t)]


def classify_slope(r: int, p: int, s: int, t: int) -> RegimeLabel:
    """Regime of the slope s/t alone, ignoring which generator is smallest.

    Slopes outside every interval raise :class:`InvalidInput`; slopes on a
    threshold come back as a boundary label.
    """
    for edge in thresholds_for(r, p):
        if compare_ratio(s, t, edge) is Side.BOUNDARY:
            return RegimeLabel(r, p, BOUNDARY, True, f"s/t = {edge.label}")
    hits = matching_regimes(r, p, s, t)
    if len(hits) != 1:
        raise InvalidInput(f"s/t = {s}/{t} lies in {len(hits)} regimes for r = {r}")
    reg = hits[0]
    return RegimeLabel(r, p, reg.case_id, False, reg.interval_text)


def smallest_name(s: int, t: int, r: int) -> str:
    x, y, z = xyz_values(s, t, r)
    return min((("x", x), ("y", y), ("z", z)), key=lambda kv: kv[1])[0]


def classify_regime(params: TripleParams | Triple, p: int = 0) -> RegimeLabel:
    """Regime label for a valid parameter set at level p.

    A triple whose smallest generator differs from the one the slope regime
    assumes is labelled irregular; it has no closed form and is handled by
    staircase extraction from the generic Apery set.
    """
    if isinstance(params, Triple):
        params = params.params
    s, t, r = params.s, params.t, params.r
    check_params(s, t, r)
    if p < 0:
        raise InvalidInput(f"p must be >= 0, got {p}")
    label = classify_slope(r, p, s, t)
    expected = "z" if r >= 3 else None
    rule = None
    if not label.boundary:
        rule = REGIMES[(r, p, label.case_id)].rule
        if rule is not None:
            expected = rule.a1
    if expected is not None and smallest_name(s, t, r) != expected:
        what = f"{smallest_name(s, t, r)} < {expected}"
        return RegimeLabel(r, p, IRREGULAR, False, what)
    if rule is not None and rule.requires is not None:
        named = dict(zip("xyz", xyz_values(s, t, r)))
        if not rule.requires(named):
            what = f"{label.case_id} slope without {rule.requires_text}"
            return RegimeLabel(r, p, IRREGULAR, False, what)
    return label
