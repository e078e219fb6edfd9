"""Cross-check closed forms against the generic engine over a parameter range.

Every valid (s, t) with s^2 + t^2 <= z_max gives one row per requested level
p.  The closed value comes from the regime catalog (or from staircase
extraction when the regime has no closed form); the generic value comes from
the p-Apery set.  The denumerant-table oracle can be added on top, with a
size cap; rows whose table would exceed the cap are reported, not failed.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import __version__
from .closed_forms import closed_stats, irregular_stats
from .errors import BoundCapExceeded, DecompositionFailure, DenumerantOverflow, FrobError
from .regimes import RegimeLabel, classify_regime
from .semigroup import gaps_oracle, generic_stats
from .triples import TripleParams, enumerate_params, general_xyz

CSV_COLUMNS = (
    "s", "t", "r", "p", "x", "y", "z", "case_id",
    "closed_value", "generic_value", "match", "elapsed_us",
)

# Row status values.
OK = "ok"
MISMATCH = "mismatch"
NO_CLOSED_FORM = "no-closed-form"
CAP_EXCEEDED = "cap-exceeded"
ERROR = "error"


@dataclass(frozen=True)
class SweepRow:
    """One (s, t, r, p) comparison.

    ``closed_value`` and ``generic_value`` are g_p.  At p = 0 the genus is
    compared too, and ``match`` covers both.  ``oracle_value`` is the gap
    scan's g_p when that check ran.
    """

    s: int
    t: int
    r: int
    p: int
    x: int
    y: int
    z: int
    case_id: str
    closed_value: Optional[int]
    generic_value: Optional[int]
    match: Optional[bool]
    elapsed_us: int = field(default=0, compare=False, metadata={"serialize": False})
    closed_genus: Optional[int] = None
    generic_genus: Optional[int] = None
    oracle_value: Optional[int] = None
    oracle_genus: Optional[int] = None
    status: str = OK
    note: str = ""

    def csv_record(self) -> list[str]:
        def cell(v) -> str:
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return [cell(getattr(self, c)) for c in CSV_COLUMNS]


@dataclass(frozen=True)
class ReportDocument:
    tool_version: str
    inputs: dict
    rows: tuple[SweepRow, ...]
    discrepancies: tuple[SweepRow, ...]
    summary: dict

    @property
    def ok(self) -> bool:
        return not self.discrepancies


# Largest denumerant table the oracle may build in a sweep (about 0.5 GB of
# counts); larger rows are reported as cap-exceeded.
DEFAULT_MAX_BOUND = 120_000_000


@dataclass(frozen=True)
class SweepConfig:
    oracle: bool = False
    max_bound: Optional[int] = DEFAULT_MAX_BOUND


def _agree(a: Optional[int], b: Optional[int]) -> bool:
    return a is None or b is None or a == b


def evaluate_row(params: TripleParams, p: int, cfg: SweepConfig = SweepConfig()) -> SweepRow:
    start = time.perf_counter_ns()
    tr = general_xyz(params)
    base = dict(s=params.s, t=params.t, r=params.r, p=p, x=tr.x, y=tr.y, z=tr.z)

    def done(**kw) -> SweepRow:
        kw.setdefault("elapsed_us", (time.perf_counter_ns() - start) // 1000)
        return SweepRow(**base, **kw)

    note = ""
    label: Optional[RegimeLabel]
    try:
        label = classify_regime(tr, p)
        case_id = label.case_id
    except FrobError as exc:
        label, case_id = None, "unsupported"
        note = str(exc)
    closed_g = closed_n = None
    try:
        if label is not None and label.has_closed_form:
            closed_g, closed_n, _ = closed_stats(tr, p)
        elif p == 0 and params.r >= 3:
            closed_g, closed_n, _ = irregular_stats(tr)
    except DecompositionFailure as exc:
        note = f"extraction failed: {exc}"

    gen = generic_stats(tr.gens, p)
    oracle_g = oracle_n = None
    status = OK
    if cfg.oracle:
        try:
            seed = gen.g + min(tr.gens) + 1
            _, ost = gaps_oracle(tr.gens, p, cfg.max_bound, start_bound=seed)
            oracle_g, oracle_n = ost.g, ost.n
        except BoundCapExceeded as exc:
            status, note = CAP_EXCEEDED, str(exc)
        except DenumerantOverflow as exc:
            status, note = ERROR, str(exc)

    if closed_g is None:
        match = None
        if status == OK:
            status = NO_CLOSED_FORM
    else:
        match = (
            closed_g == gen.g
            and _agree(closed_n, gen.n if p == 0 else None)
            and _agree(closed_g, oracle_g)
            and _agree(closed_n if p == 0 else None, oracle_n)
        )
    generic_ok = _agree(gen.g, oracle_g) and _agree(gen.n, oracle_n)
    if match is False or not generic_ok:
        status = MISMATCH
        match = False
    return done(
        case_id=case_id,
        closed_value=closed_g,
        generic_value=gen.g,
        match=match,
        closed_genus=closed_n,
        generic_genus=gen.n,
        oracle_value=oracle_g,
        oracle_genus=oracle_n,
        status=status,
        note=note,
    )


def _row_task(args) -> SweepRow:
    params, p, cfg = args
    return evaluate_row(params, p, cfg)


def run_sweep(
    r: int,
    z_max: int,
    p_levels: Sequence[int] = (0,),
    cfg: SweepConfig = SweepConfig(),
    jobs: int = 1,
) -> list[SweepRow]:
    """Rows in (s, t, p) input order, whatever the execution order."""
    tasks = [(pr, p, cfg) for pr in enumerate_params(r, z_max) for p in p_levels]
    if jobs <= 1:
        return [_row_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_task, tasks, chunksize=4))


def build_report(inputs: dict, rows: Iterable[SweepRow]) -> ReportDocument:
    rows = tuple(rows)
    bad = tuple(row for row in rows if row.status in (MISMATCH, ERROR))
    counts: dict[str, int] = {}
    for row in rows:
        counts[row.status] = counts.get(row.status, 0) + 1
    summary = {"rows": len(rows), "status_counts": dict(sorted(counts.items())),
               "mismatches": len(bad)}
    return ReportDocument(__version__, dict(inputs), rows, bad, summary)


def write_csv(rows: Iterable[SweepRow], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.csv_record())


def csv_text(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
