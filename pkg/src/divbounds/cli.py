"""Batch command-line front end.

Four subcommands: ``compute`` evaluates named measures over distribution
pairs, ``sweep`` tabulates the unified AG/JS family and its bounds across a
parameter grid, ``verify`` runs the consolidated inequality report, and
``gen`` writes reproducible test pairs.  Input is CSV
(``pair_id,role,v1,...,vn`` with role P or Q) or JSON
(``{"pairs": [{"id": ..., "p": [...], "q": [...]}]}``); output is
newline-delimited JSON or CSV with shortest-round-trip decimals so reports
are diffable.  Exit codes: 0 success, 1 input or usage error, 2 verified
inequality violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from . import bounds as bounds_mod
from . import divergences as div
from .csiszar import GapTarget
from .divergences import DivergenceValue
from .simplex import (
    DistributionPair,
    SimplexError,
    random_pair,
    ratio_bounds,
    validate,
)
from .type_s import SParameter, omega_s, phi_s
from .bounds import theorem42_bounds, verify_all

DEFAULT_S_LIST = (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0)

_SIMPLE_MEASURES: dict[str, Callable[[DistributionPair], float]] = {
    "chi2": div.chi_squared,
    "kl": div.relative_information,
    "rel_j": div.relative_j_divergence,
    "rel_js": div.relative_js_divergence,
    "rel_ag": div.relative_ag_divergence,
    "delta": div.triangular_discrimination,
    "bhat": div.bhattacharyya,
    "hellinger": div.hellinger,
    "psi_sym": div.symmetric_chi_squared,
    "j": div.j_divergence,
    "i": div.jensen_shannon,
    "t": div.ag_mean_divergence,
}

_PARAMETRIC_MEASURES: dict[str, Callable[[DistributionPair, float], float]] = {
    "vajda": div.vajda_abs_chi,
    "phi": phi_s,
    "omega": omega_s,
}


class CliInputError(Exception):
    """Input or usage failure: reported on stderr, exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; route them through the
    # input-error path so exit 2 stays reserved for verified violations.
    def error(self, message):
        raise CliInputError(message)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_s_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise CliInputError(f"bad s-list {text!r}: {exc}") from None
    if not values:
        raise CliInputError("s-list is empty")
    return values


def _load_json_pairs(text: str, renormalize: bool):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"JSON parse failure: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("pairs"), list):
        raise CliInputError('JSON input must be {"pairs": [...]}')
    out = []
    for i, rec in enumerate(doc["pairs"]):
        if not isinstance(rec, dict):
            raise CliInputError(f"pairs[{i}] is not an object")
        pid = str(rec.get("id", f"pair-{i}"))
        try:
            p = validate(rec["p"], renormalize=renormalize)
            q = validate(rec["q"], renormalize=renormalize)
            out.append((pid, DistributionPair(p, q)))
        except KeyError as exc:
            raise CliInputError(f"pair {pid}: missing field {exc}") from None
        except (SimplexError, TypeError, ValueError) as exc:
            raise CliInputError(f"pair {pid}: {exc}") from None
    return out


def _load_csv_pairs(text: str, renormalize: bool):
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise CliInputError("CSV input is empty")
    header = [cell.strip() for cell in rows[0]]
    if header[:2] != ["pair_id", "role"]:
        raise CliInputError(
            "CSV header must start with pair_id,role followed by components")
    staged: dict[str, dict[str, tuple[float, ...]]] = {}
    order: list[str] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) < 3:
            raise CliInputError(f"line {lineno}: expected at least 3 cells")
        pid, role = row[0].strip(), row[1].strip()
        if role not in ("P", "Q"):
            raise CliInputError(
                f"pair {pid}: role must be P or Q, got {role!r}")
        cells = [cell.strip() for cell in row[2:] if cell.strip() != ""]
        try:
            values = tuple(float(cell) for cell in cells)
        except ValueError as exc:
            raise CliInputError(f"pair {pid}: bad component: {exc}") from None
        slot = staged.setdefault(pid, {})
        if pid not in order:
            order.append(pid)
        if role in slot:
            raise CliInputError(f"pair {pid}: duplicate role {role}")
        slot[role] = values
    out = []
    for pid in order:
        slot = staged[pid]
        for role in ("P", "Q"):
            if role not in slot:
                raise CliInputError(f"pair {pid}: missing role {role}")
        if len(slot["P"]) != len(slot["Q"]):
            raise CliInputError(
                f"pair {pid}: P has {len(slot['P'])} components, "
                f"Q has {len(slot['Q'])}")
        try:
            pair = DistributionPair(validate(slot["P"], renormalize=renormalize),
                                    validate(slot["Q"], renormalize=renormalize))
        except SimplexError as exc:
            raise CliInputError(f"pair {pid}: {exc}") from None
        out.append((pid, pair))
    return out


def load_pairs(path: str, renormalize: bool):
    """Read pairs from a CSV or JSON file (sniffed from the content)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        pairs = _load_json_pairs(text, renormalize)
    else:
        pairs = _load_csv_pairs(text, renormalize)
    if not pairs:
        raise CliInputError(f"{path}: no pairs found")
    return pairs


def resolve_measures(tokens: Sequence[str], s_list: tuple[float, ...]):
    """Expand measure tokens into (measure_id, sort_param, callable).

    Parametric measures take their parameter inline (``omega:-0.5``,
    ``vajda:3``); a bare parametric name expands across the s-list.
    """
    resolved = []
    for raw in tokens:
        token = raw.strip()
        if not token:
            continue
        if ":" in token:
            base, _, arg = token.partition(":")
            if base not in _PARAMETRIC_MEASURES:
                raise CliInputError(f"unknown parametric measure {base!r}")
            try:
                param = float(arg)
            except ValueError:
                raise CliInputError(
                    f"bad parameter in measure {token!r}") from None
            fn = _PARAMETRIC_MEASURES[base]
            resolved.append((f"{base}:{param:g}", param,
                             lambda pair, f=fn, v=param: f(pair, v)))
        elif token in _PARAMETRIC_MEASURES:
            fn = _PARAMETRIC_MEASURES[token]
            for param in s_list:
                resolved.append((f"{token}:{param:g}", param,
                                 lambda pair, f=fn, v=param: f(pair, v)))
        elif token in _SIMPLE_MEASURES:
            resolved.append((token, None, _SIMPLE_MEASURES[token]))
        else:
            raise CliInputError(f"unknown measure {token!r}")
    if not resolved:
        raise CliInputError("no measures requested")
    return resolved


def _write_records(records, columns, args) -> None:
    out = sys.stdout if args.output == "-" else open(
        args.output, "w", encoding="utf-8", newline="")
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(columns)
            for rec in records:
                writer.writerow([_fmt(rec.get(col)) for col in columns])
        else:
            for rec in records:
                line = {col: rec.get(col) for col in columns}
                out.write(json.dumps(line, separators=(",", ":")) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _cmd_compute(args) -> int:
    pairs = load_pairs(args.input, args.renormalize)
    s_list = _parse_s_list(args.s_list) if args.s_list else DEFAULT_S_LIST
    measures = resolve_measures(args.measures.split(","), s_list)
    records = []
    for pid, pair in pairs:
        for measure_id, param, fn in measures:
            result = DivergenceValue(measure_id, fn(pair))
            records.append({
                "pair_id": pid,
                "measure": result.measure_id,
                "value": result.value,
                "_sort": ((0, 0.0) if param is None else (1, param)),
            })
    records.sort(key=lambda rec: (rec["pair_id"], rec["_sort"],
                                  rec["measure"]))
    _write_records(records, ("pair_id", "measure", "value"), args)
    return 0


def _sweep_grid(s_min: float, s_max: float, s_step: float):
    if not (s_min < s_max):
        raise CliInputError(f"empty grid: s_min={s_min!r} >= s_max={s_max!r}")
    if not s_step > 0.0:
        raise CliInputError(f"s_step must be positive, got {s_step!r}")
    values = []
    k = 0
    while True:
        s = s_min + k * s_step
        if s > s_max + 1e-9 * s_step:
            break
        values.append(s)
        k += 1
    return values


def _cmd_sweep(args) -> int:
    pairs = load_pairs(args.input, args.renormalize)
    grid = _sweep_grid(args.s_min, args.s_max, args.s_step)
    records = []
    for pid, pair in pairs:
        rb = ratio_bounds(pair)
        degenerate = rb.r == rb.R
        for s in grid:
            sp = SParameter.from_value(s)
            rec = {
                "pair_id": pid,
                "s": s,
                "regime": sp.regime.value,
                "omega": omega_s(pair, sp),
                "e": bounds_mod.e_omega(pair, sp),
                "e_star": bounds_mod.e_star_omega(pair, sp),
                "a": None, "b": None,
                "gap_half_e_bound": None, "gap_e_star_bound": None,
            }
            if not degenerate:
                rec["a"] = bounds_mod.a_omega(rb, sp)
                rec["b"] = bounds_mod.b_omega(rb, sp)
                if sp.s >= -1.0:
                    rec["gap_half_e_bound"] = theorem42_bounds(
                        pair, rb, sp, GapTarget.HALF_E).minimum
                    rec["gap_e_star_bound"] = theorem42_bounds(
                        pair, rb, sp, GapTarget.E_STAR).minimum
            records.append(rec)
    records.sort(key=lambda rec: (rec["pair_id"], rec["s"]))
    _write_records(records, ("pair_id", "s", "regime", "omega", "e", "e_star",
                             "a", "b", "gap_half_e_bound",
                             "gap_e_star_bound"), args)
    return 0


def _cmd_verify(args) -> int:
    pairs = load_pairs(args.input, args.renormalize)
    s_list = _parse_s_list(args.s_list) if args.s_list else DEFAULT_S_LIST
    tolerance = args.tolerance if args.tolerance is not None else (
        bounds_mod.VIOLATION_TOLERANCE)
    records = []
    notes_emitted = False
    any_fail = False
    for pid, pair in pairs:
        report = verify_all(pair, s_list, violation_tolerance=tolerance,
                            pair_id=pid)
        if not notes_emitted:
            for note in report.notes:
                records.append({"pair_id": "*", "s": None,
                                "inequality_id": "note", "lhs": None,
                                "rhs": None, "slack": None,
                                "verdict": "info", "reason": note})
            notes_emitted = True
        for entry in report.entries:
            records.append({
                "pair_id": pid, "s": entry.context.s,
                "inequality_id": entry.inequality_id,
                "lhs": entry.lhs, "rhs": entry.rhs, "slack": entry.slack,
                "verdict": entry.verdict, "reason": None,
            })
        for item in report.skipped:
            records.append({
                "pair_id": pid, "s": item.context.s,
                "inequality_id": item.inequality_id,
                "lhs": None, "rhs": None, "slack": None,
                "verdict": "skip", "reason": item.reason,
            })
    if args.inject_violation and records:
        # Self-test of the failure path: corrupt the first checked entry.
        for rec in records:
            if rec["verdict"] in ("pass", "fail"):
                rec["lhs"] = rec["lhs"] + 1.0
                rec["slack"] = rec["rhs"] - rec["lhs"]
                rec["verdict"] = ("pass" if rec["slack"] >= -tolerance
                                  else "fail")
                break
    any_fail = any(rec["verdict"] == "fail" for rec in records)
    # stable sort: note records ("*") lead, then pair-level before per-s
    records.sort(key=lambda rec: (
        rec["pair_id"],
        (0, 0.0) if rec["s"] is None else (1, rec["s"]),
        rec["inequality_id"]))
    _write_records(records, ("pair_id", "s", "inequality_id", "lhs", "rhs",
                             "slack", "verdict", "reason"), args)
    return 2 if any_fail else 0


def _cmd_gen(args) -> int:
    if args.n < 2:
        raise CliInputError(f"dimension must be >= 2, got {args.n}")
    if args.count < 1:
        raise CliInputError(f"count must be >= 1, got {args.count}")
    width = max(4, len(str(args.count)))
    out = sys.stdout if args.output == "-" else None
    try:
        if out is None:
            try:
                out = open(args.output, "w", encoding="utf-8", newline="")
            except OSError as exc:
                raise CliInputError(
                    f"cannot write {args.output}: {exc}") from None
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["pair_id", "role"]
                        + [f"v{i + 1}" for i in range(args.n)])
        for i in range(args.count):
            pair = random_pair(args.n, args.seed + i)
            pid = f"pair-{i:0{width}d}"
            writer.writerow([pid, "P"] + [repr(v) for v in pair.p.values])
            writer.writerow([pid, "Q"] + [repr(v) for v in pair.q.values])
    finally:
        if out is not None and out is not sys.stdout:
            out.close()
    return 0


def _add_io_flags(sub, needs_input=True):
    if needs_input:
        sub.add_argument("--input", required=True,
                         help="input pairs file (CSV or JSON, sniffed)")
        sub.add_argument("--renormalize", action="store_true",
                         help="divide components by their sum before "
                              "validation")
    sub.add_argument("--output", default="-",
                     help="output path (default: standard output)")
    sub.add_argument("--format", choices=("jsonl", "csv"), default="jsonl",
                     help="output format (default: jsonl)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="divbounds",
                     description="Divergence measures and verified bounds "
                                 "over discrete distribution pairs.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_compute = subs.add_parser(
        "compute", help="evaluate named measures over pairs")
    _add_io_flags(p_compute)
    p_compute.add_argument(
        "--measures", required=True,
        help="comma-separated measure ids: chi2, kl, rel_j, rel_js, rel_ag, "
             "delta, bhat, hellinger, vajda:M, psi_sym, j, i, t, phi:S, "
             "omega:S; bare vajda/phi/omega expand over --s-list")
    p_compute.add_argument("--s-list", default=None,
                           help="comma-separated parameters used to expand "
                                "bare parametric measure names")
    p_compute.set_defaults(handler=_cmd_compute)

    p_sweep = subs.add_parser(
        "sweep", help="tabulate the unified family and bounds over a grid")
    _add_io_flags(p_sweep)
    p_sweep.add_argument("--s-min", type=float, required=True)
    p_sweep.add_argument("--s-max", type=float, required=True)
    p_sweep.add_argument("--s-step", type=float, required=True)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_verify = subs.add_parser(
        "verify", help="run the consolidated inequality report")
    _add_io_flags(p_verify)
    p_verify.add_argument("--s-list", default=None,
                          help="comma-separated family parameters "
                               "(default: -1,-0.5,0,0.5,1,2)")
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="violation tolerance override (absolute)")
    p_verify.add_argument("--inject-violation", action="store_true",
                          help="self-test: corrupt one entry to exercise "
                               "the failure exit path")
    p_verify.set_defaults(handler=_cmd_verify)

    p_gen = subs.add_parser(
        "gen", help="write reproducible random pairs in the CSV schema")
    p_gen.add_argument("--n", type=int, required=True,
                       help="dimension of each distribution (>= 2)")
    p_gen.add_argument("--count", type=int, required=True,
                       help="number of pairs")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", default="-",
                       help="output path (default: standard output)")
    p_gen.set_defaults(handler=_cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
