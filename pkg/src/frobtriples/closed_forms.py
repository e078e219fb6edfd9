"""Closed-form g_0, n_0 and g_1 for the x^2 + y^2 = z^r triples.

Inside a charted regime the Apery set is a known staircase (see
:mod:`frobtriples.regimes`), so

* g_0 is the value of the winning outer corner minus a1, and
* n_0 is (sum of cell values) / a1 - (a1 - 1) / 2, where the cell sum is
  evaluated row by row in closed form.

Irregular and uncharted triples have no closed form; :func:`apery_corners`
reads their staircase off the generic Apery set instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import DecompositionFailure, InexactDivision, NoClosedForm, OutOfRegime
from .regimes import (
    IRREGULAR,
    P1_CANDIDATES,
    REGIMES,
    RegimeLabel,
    ShapeRule,
    classify_regime,
)
from .semigroup import PAperySet, p_apery_set
from .staircase import Staircase, extract_staircase
from .triples import Triple, TripleParams, general_xyz

Engine = Callable[[tuple, int], PAperySet]


@dataclass(frozen=True)
class CornerSpec:
    """Outer corners of an Apery staircase on a two-generator grid.

    ``axes`` names the generators multiplying the first and second
    coordinate; ``a1`` names the modulus.  ``stairs`` is ``None`` when only
    the candidate corners are known (the p = 1 table).
    """

    axes: tuple[str, str]
    a1: str
    corners: tuple[tuple[int, int], ...]
    stairs: Optional[Staircase] = None

    @property
    def area(self) -> Optional[int]:
        return None if self.stairs is None else self.stairs.area

    @property
    def extents(self) -> Optional[tuple[int, int]]:
        if self.stairs is None:
            return None
        return (max(self.stairs.widths), self.stairs.height)

    def value(self, corner: tuple[int, int], triple: Triple) -> int:
        g = triple.named()
        return corner[0] * g[self.axes[0]] + corner[1] * g[self.axes[1]]

    def best(self, triple: Triple) -> tuple[int, int]:
        return max(self.corners, key=lambda c: self.value(c, triple))


@dataclass(frozen=True)
class ClosedFormResult:
    value: int
    case_id: RegimeLabel
    corner_used: tuple[int, int]
    formula_text: str


def _triple(params) -> Triple:
    if isinstance(params, Triple):
        return params
    return general_xyz(params)


def _combo_text(axes, coeffs, a1: str) -> str:
    a, b = coeffs
    terms = [f"({a}){axes[0]}"]
    if b != "0":
        terms.append(f"({b}){axes[1]}")
    return " + ".join(terms) + f" - {a1}"


def _charted_rule(label: RegimeLabel) -> ShapeRule:
    if not label.has_closed_form:
        raise NoClosedForm(f"regime {label.case_id} ({label.description}) has no closed form")
    return REGIMES[(label.r, label.p, label.case_id)].rule


def shape_of(rule: ShapeRule, s: int, t: int) -> Staircase:
    return Staircase.from_blocks(rule.axes, rule.blocks(s, t))


def analytic_corners(params, p: int = 0) -> CornerSpec:
    """Corner layout of a charted regime, without touching the engine."""
    tr = _triple(params)
    label = classify_regime(tr, p)
    rule = _charted_rule(label)
    s, t = tr.params.s, tr.params.t
    if p == 1:
        cands = tuple(f(s, t) for f in P1_CANDIDATES.values())
        return CornerSpec(rule.axes, rule.a1, cands)
    stairs = shape_of(rule, s, t)
    return CornerSpec(rule.axes, rule.a1, tuple(stairs.corners()), stairs)


def _grid_axes(tr: Triple, a1: str) -> tuple[str, str]:
    # Irregular r = 3 tables are read on (z, y); otherwise keep x before y.
    if tr.params.r == 3 and a1 == "x":
        return ("z", "y")
    return tuple(n for n in ("x", "y", "z") if n != a1)


def extracted_corners(
    params, p: int = 0, engine: Engine = p_apery_set, axes: Optional[tuple[str, str]] = None
) -> CornerSpec:
    """Read the staircase off the generic p-Apery set.

    ``axes`` defaults to (z, y) for irregular r = 3 triples and to the two
    non-modulus generators in x, y, z order otherwise.
    """
    tr = _triple(params)
    named = tr.named()
    if p != 0:
        raise DecompositionFailure("staircase extraction needs unique representations (p = 0)")
    a1 = min(named, key=named.__getitem__)
    ap = engine(tr.gens, p)
    axes = tuple(axes) if axes is not None else _grid_axes(tr, a1)
    stairs = extract_staircase(ap.m, named[axes[0]], named[axes[1]], axes)
    return CornerSpec(axes, a1, tuple(stairs.corners()), stairs)


def apery_corners(params, p: int = 0, engine: Engine = p_apery_set) -> CornerSpec:
    """Corners from the analytic shape when charted, else by extraction."""
    tr = _triple(params)
    label = classify_regime(tr, p)
    if label.has_closed_form:
        return analytic_corners(tr, p)
    return extracted_corners(tr, p, engine)


def g0_closed(params) -> ClosedFormResult:
    tr = _triple(params)
    label = classify_regime(tr, 0)
    rule = _charted_rule(label)
    s, t = tr.params.s, tr.params.t
    corner = rule.winner(s, t)
    spec = CornerSpec(rule.axes, rule.a1, (corner,))
    value = spec.value(corner, tr) - tr.named()[rule.a1]
    return ClosedFormResult(value, label, corner, _combo_text(rule.axes, rule.winner_text, rule.a1))


def g0_from_corners(params, engine: Engine = p_apery_set) -> ClosedFormResult:
    """g_0 as the largest extracted corner value minus a1."""
    tr = _triple(params)
    spec = extracted_corners(tr, 0, engine)
    corner = spec.best(tr)
    value = spec.value(corner, tr) - tr.named()[spec.a1]
    text = _combo_text(spec.axes, tuple(str(c) for c in corner), spec.a1)
    return ClosedFormResult(value, classify_regime(tr, 0), corner, text)


def genus_from_stairs(stairs: Staircase, tr: Triple, a1: str) -> int:
    named = tr.named()
    m = named[a1]
    total = stairs.cell_sum(named[stairs.axes[0]], named[stairs.axes[1]])
    q = Fraction(total, m) - Fraction(m - 1, 2)
    if q.denominator != 1:
        raise InexactDivision(f"genus {q} is not an integer for {tr.params}")
    return q.numerator


def n0_closed(params) -> ClosedFormResult:
    """n_0 from the regime's staircase; the area must equal a1."""
    tr = _triple(params)
    label = classify_regime(tr, 0)
    rule = _charted_rule(label)
    stairs = shape_of(rule, tr.params.s, tr.params.t)
    if stairs.area != tr.named()[rule.a1]:
        raise InexactDivision(
            f"{label.case_id}: staircase area {stairs.area} != {rule.a1} for {tr.params}"
        )
    value = genus_from_stairs(stairs, tr, rule.a1)
    text = f"sum over the {label.case_id} staircase / {rule.a1} - ({rule.a1} - 1)/2"
    return ClosedFormResult(value, label, rule.winner(tr.params.s, tr.params.t), text)


def n0_from_corners(params, engine: Engine = p_apery_set) -> ClosedFormResult:
    tr = _triple(params)
    spec = extracted_corners(tr, 0, engine)
    value = genus_from_stairs(spec.stairs, tr, spec.a1)
    return ClosedFormResult(value, classify_regime(tr, 0), spec.best(tr), "extracted staircase")


def g1_closed(params) -> ClosedFormResult:
    """g_1 for r = 3 with (1+sqrt 2) t < s < (2+sqrt 3) t."""
    tr = _triple(params)
    if tr.params.r != 3:
        raise OutOfRegime(f"g_1 closed form needs r = 3, got r = {tr.params.r}")
    label = classify_regime(tr, 1)
    if not label.has_closed_form:
        raise OutOfRegime(f"s/t = {tr.params.s}/{tr.params.t} is outside the g_1 window")
    rule = REGIMES[(3, 1, label.case_id)].rule
    corner = rule.winner(tr.params.s, tr.params.t)
    spec = CornerSpec(rule.axes, rule.a1, (corner,))
    value = spec.value(corner, tr) - tr.z
    return ClosedFormResult(value, label, corner, _combo_text(rule.axes, rule.winner_text, "z"))


def closed_stats(params, p: int = 0) -> tuple[int, Optional[int], str]:
    """(g_p, n_p or None, case_id) from the closed forms at level p."""
    if p == 0:
        g = g0_closed(params)
        return g.value, n0_closed(params).value, g.case_id.case_id
    if p == 1:
        g = g1_closed(params)
        return g.value, None, g.case_id.case_id
    raise NoClosedForm(f"no closed forms at p = {p}")


def irregular_stats(params, engine: Engine = p_apery_set) -> tuple[int, int, str]:
    """(g_0, n_0, case_id) by staircase extraction, for rows without a closed form."""
    g = g0_from_corners(params, engine)
    n = n0_from_corners(params, engine)
    return g.value, n.value, g.case_id.case_id


__all__ = [
    "CornerSpec",
    "ClosedFormResult",
    "IRREGULAR",
    "analytic_corners",
    "apery_corners",
    "closed_stats",
    "extracted_corners",
    "g0_closed",
    "g0_from_corners",
    "g1_closed",
    "genus_from_stairs",
    "irregular_stats",
    "n0_closed",
    "n0_from_corners",
    "shape_of",
]
