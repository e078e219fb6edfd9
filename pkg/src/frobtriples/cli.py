"""Command line: ``frobtriples {triple,compute,apery,classify,verify}``.

Exit codes: 0 success, 1 closed/generic mismatch, 2 invalid input,
3 overflow or internal error.  Errors are written to stderr as one JSON
object ``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .closed_forms import CornerSpec, apery_corners, closed_stats, irregular_stats
from .errors import DecompositionFailure, FrobError, InvalidInput, NoClosedForm
from .regimes import classify_regime
from .semigroup import GeneratorSet, gaps_oracle, p_apery_set, stats_from_apery
from .serialization import dumps, to_payload
from .staircase import extract_staircase
from .sweep import DEFAULT_MAX_BOUND, SweepConfig, build_report, run_sweep, write_csv
from .triples import Triple, make_triple

EXIT_OK, EXIT_MISMATCH = 0, 1


def _gens_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_source(sp: argparse.ArgumentParser, gens: bool = True) -> None:
    if gens:
        sp.add_argument("--gens", type=_gens_arg, help="generators, e.g. 3,4,5")
    sp.add_argument("--s", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--r", type=int)


def _triple_from(args) -> Optional[Triple]:
    given = [v is not None for v in (args.s, args.t, args.r)]
    if any(given) and not all(given):
        raise InvalidInput("--s, --t and --r must be given together")
    if not any(given):
        return None
    return make_triple(args.s, args.t, args.r)


def _source(args) -> tuple[Optional[Triple], GeneratorSet]:
    tr = _triple_from(args)
    gens = getattr(args, "gens", None)
    if tr is not None and gens:
        raise InvalidInput("give either --gens or --s/--t/--r, not both")
    if tr is not None:
        return tr, GeneratorSet(tr.gens)
    if not gens:
        raise InvalidInput("give --gens or --s/--t/--r")
    return None, GeneratorSet(gens)


def _emit(obj, as_json: bool, text: str) -> None:
    print(dumps(obj) if as_json else text)


# -- triple -----------------------------------------------------------------

def cmd_triple(args) -> int:
    tr = _triple_from(args)
    if tr is None:
        raise InvalidInput("triple needs --s, --t and --r")
    payload = {"x": tr.x, "y": tr.y, "z": tr.z, "s": tr.params.s, "t": tr.params.t,
               "r": tr.params.r, "ordering": tr.ordering}
    if args.format == "json":
        print(dumps(payload))
    else:
        print(f"x={tr.x} y={tr.y} z={tr.z} ({tr.ordering})")
    return EXIT_OK


# -- compute ----------------------------------------------------------------

def _closed_for(tr: Triple, p: int) -> tuple[int, Optional[int], str]:
    label = classify_regime(tr, p)
    if label.has_closed_form:
        return closed_stats(tr, p)
    if p == 0 and tr.params.r >= 3:
        return irregular_stats(tr)
    raise NoClosedForm(f"no closed form for {tr.params} at p = {p} ({label.case_id})")


def cmd_compute(args) -> int:
    tr, gs = _source(args)
    p = args.p
    out: dict = {"gens": list(gs.gens), "p": p}
    lines = []
    status = EXIT_OK
    generic = None
    if args.method in ("generic", "both"):
        generic = stats_from_apery(p_apery_set(gs, p))
        out["generic"] = {"g": generic.g, "n": generic.n, "s": generic.s}
        lines.append(f"generic: g={generic.g} n={generic.n} s={generic.s}")
    if args.method == "oracle":
        _, st = gaps_oracle(gs, p, args.max_bound)
        out["oracle"] = {"g": st.g, "n": st.n, "s": st.s}
        lines.append(f"oracle: g={st.g} n={st.n} s={st.s}")
    if args.method in ("closed", "both"):
        if tr is None:
            raise InvalidInput("closed forms need --s/--t/--r")
        g, n, case_id = _closed_for(tr, p)
        out["closed"] = {"g": g, "n": n, "case_id": case_id}
        lines.append(f"closed ({case_id}): g={g}" + ("" if n is None else f" n={n}"))
        if generic is not None:
            agree = g == generic.g and (n is None or n == generic.n)
            out["agree"] = agree
            lines.append("agree" if agree else "MISMATCH")
            status = EXIT_OK if agree else EXIT_MISMATCH
    _emit(out, args.json, "\n".join(lines))
    return status


# -- apery ------------------------------------------------------------------

def _grid_text(spec: CornerSpec, tr: Triple, values: bool) -> list[str]:
    named = tr.named()
    gu, gv = named[spec.axes[0]], named[spec.axes[1]]
    lines = []
    for v, w in enumerate(spec.stairs.widths):
        cells = [str(u * gu + v * gv) if values else f"{u},{v}" for u in range(w)]
        lines.append(" ".join(cells))
    return lines


def _block_text(spec: CornerSpec) -> list[str]:
    lines, v = [], 0
    widths = spec.stairs.widths
    while v < len(widths):
        end = v
        while end + 1 < len(widths) and widths[end + 1] == widths[v]:
            end += 1
        rows = f"row {v}" if end == v else f"rows {v}-{end}"
        lines.append(f"  {rows}: width {widths[v]}")
        v = end + 1
    return lines


def cmd_apery(args) -> int:
    tr, gs = _source(args)
    ap = p_apery_set(gs, args.p)
    spec = None
    if tr is not None:
        try:
            spec = apery_corners(tr, args.p)
        except (DecompositionFailure, NoClosedForm):
            spec = None
    entries = []
    coords: dict[int, tuple[int, int]] = {}
    if spec is not None and spec.stairs is not None:
        named = tr.named()
        gu, gv = named[spec.axes[0]], named[spec.axes[1]]
        coords = {u * gu + v * gv: (u, v) for u, v in spec.stairs.cells()}
    elif tr is None and gs.k == 3 and args.p == 0:
        try:
            st = extract_staircase(ap.m, gs[1], gs[2], ("a2", "a3"))
            coords = {u * gs[1] + v * gs[2]: (u, v) for u, v in st.cells()}
        except DecompositionFailure:
            coords = {}
    for j, m in enumerate(ap.m):
        row = {"residue": j, "m": m}
        if m in coords:
            row["coeffs"] = list(coords[m])
        entries.append(row)
    if args.format == "json":
        payload = {"gens": list(gs.gens), "p": args.p, "modulus": gs.a1, "entries": entries}
        if spec is not None:
            payload["axes"] = list(spec.axes)
            payload["corners"] = [list(c) for c in spec.corners]
        print(dumps(payload))
        return EXIT_OK
    if spec is None:
        print(f"Ap_{args.p} of {gs.gens} modulo {gs.a1}:")
        for row in entries:
            extra = f"  {tuple(row['coeffs'])}" if "coeffs" in row else ""
            print(f"  {row['residue']:>6}  {row['m']}{extra}")
        return EXIT_OK
    label = classify_regime(tr, args.p)
    print(f"Ap_{args.p} of (x, y, z) = {tr.gens}, modulus {spec.a1}, "
          f"cells (u, v) = u*{spec.axes[0]} + v*{spec.axes[1]}")
    print(f"regime {label.case_id}: {label.description}")
    if spec.stairs is not None:
        print("\n".join(_block_text(spec)))
        if args.grid:
            print("\n".join(_grid_text(spec, tr, args.values)))
    corner_text = ", ".join(f"{c} -> {spec.value(c, tr)}" for c in spec.corners)
    print(f"outer corners: {corner_text}")
    best = spec.best(tr)
    print(f"largest corner {best}: g_{args.p} = {spec.value(best, tr) - tr.named()[spec.a1]}")
    return EXIT_OK


# -- classify ---------------------------------------------------------------

def cmd_classify(args) -> int:
    tr = _triple_from(args)
    if tr is None:
        raise InvalidInput("classify needs --s, --t and --r")
    label = classify_regime(tr, args.p)
    if args.json:
        print(dumps(label))
    else:
        flag = " (boundary)" if label.boundary else ""
        form = "closed form" if label.has_closed_form else "generic engine"
        print(f"{label.case_id}{flag}: {label.description} [{form}]")
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.z_max < 5:
        raise InvalidInput(f"--z-max must be >= 5, got {args.z_max}")
    levels = tuple(sorted(set(args.p or [0])))
    cfg = SweepConfig(oracle=args.oracle, max_bound=args.max_bound)
    rows = run_sweep(args.r, args.z_max, levels, cfg, jobs=args.jobs)
    inputs = {"r": args.r, "z_max": args.z_max, "p": list(levels), "oracle": args.oracle,
              "max_bound": args.max_bound}
    report = build_report(inputs, rows)
    if args.csv == "-":
        write_csv(rows, sys.stdout)
    elif args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps(report) + "\n")
    counts = report.summary["status_counts"]
    summary = ", ".join(f"{k}={v}" for k, v in counts.items())
    print(f"r={args.r} z_max={args.z_max} p={list(levels)}: {len(rows)} rows; {summary}; "
          f"{len(report.discrepancies)} mismatches", file=sys.stderr if args.csv == "-" else sys.stdout)
    for row in report.discrepancies:
        print(f"  mismatch s={row.s} t={row.t} p={row.p} {row.case_id}: "
              f"closed={row.closed_value} generic={row.generic_value} oracle={row.oracle_value}",
              file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frobtriples", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("triple", help="x, y, z from (s, t, r)")
    _add_source(sp, gens=False)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_triple)

    sp = sub.add_parser("compute", help="g_p, n_p, s_p")
    _add_source(sp)
    sp.add_argument("--p", type=int, default=0)
    sp.add_argument("--method", choices=("generic", "closed", "both", "oracle"), default="generic")
    sp.add_argument("--max-bound", type=int, default=None, help="table cap for --method oracle")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("apery", help="p-Apery set and its staircase")
    _add_source(sp)
    sp.add_argument("--p", type=int, default=0)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--grid", action="store_true", help="print every cell")
    sp.add_argument("--values", action="store_true", help="grid cells show values, not (u, v)")
    sp.set_defaults(func=cmd_apery)

    sp = sub.add_parser("classify", help="slope regime of (s, t, r)")
    _add_source(sp, gens=False)
    sp.add_argument("--p", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="sweep closed forms against the generic engine")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--z-max", type=int, required=True)
    sp.add_argument("--p", type=int, action="append", help="level; repeat for several")
    sp.add_argument("--csv", help="CSV output path, or - for stdout")
    sp.add_argument("--report", help="JSON report path")
    sp.add_argument("--oracle", action="store_true", help="also run the gap-scan oracle")
    sp.add_argument("--max-bound", type=int, default=DEFAULT_MAX_BOUND)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return ap


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FrobError as exc:
        return _fail(type(exc).__name__, str(exc), exc.exit_code)
    except (OverflowError, MemoryError) as exc:
        return _fail(type(exc).__name__, str(exc), 3)


__all__ = ["build_parser", "main", "to_payload"]
