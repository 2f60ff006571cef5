"""Command-line interface: ``nilcentral <subcommand> ...``.

Exit codes: 0 property holds / computation succeeded, 1 a checked property
fails (certificate in the report), 2 usage or input error.  Reports go to
stdout (or ``--out``), logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .analyzer import (
    centralizer_closed_form,
    centralizer_oracle,
    charp_sweep,
    decompose_centralizing,
    decompose_commuting,
    factorial_inequality_check,
    is_centralizing,
    is_commuting,
    lemma3_report,
    map_space_dimension,
    power_closed_form_check,
    predicted_dimension,
    s1_commutator_check,
    span_s_rank,
    w1c_identity_check,
)
from .analyzer.census import SweepRow
from .analyzer.centralizer import s1_generic_diagonals
from .exactfield import FieldError, FieldSpec, parse_field, render_scalar
from .linsolve import SubspaceBasis
from .maps import MapOnN, g_map, p_map
from .nilmatrix import RingContext, UTMatrix, is_s1_shaped, named_matrix, s1_element, s2_element

log = logging.getLogger("nilcentral")


class UsageError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _load_map(path: str) -> MapOnN:
    try:
        return MapOnN.from_dict(_load_json(path))
    except UsageError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise UsageError(f"{path}: not a valid map ({exc})") from None


def _load_matrix(path: str) -> UTMatrix:
    try:
        return UTMatrix.from_dict(_load_json(path))
    except UsageError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise UsageError(f"{path}: not a valid matrix ({exc})") from None


def _ctx_echo(ctx: RingContext | None):
    return None if ctx is None else {"r": ctx.r, "field": str(ctx.field), "n": ctx.n}


def _basis_json(basis: SubspaceBasis) -> list[list[str]]:
    return [[render_scalar(v) for v in vec] for vec in basis.vectors]


def _emit(args, subcommand: str, ctx, payload, started: float) -> None:
    envelope = {
        "tool": "nilcentral",
        "version": __version__,
        "subcommand": subcommand,
        "context": _ctx_echo(ctx),
        "result": payload,
        "timing_ms": None if args.no_timing else round((time.perf_counter() - started) * 1000),
    }
    text = json.dumps(envelope, indent=2) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
        log.info("report written to %s", args.out)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- subcommands


def cmd_decide(args) -> int:
    started = time.perf_counter()
    f = _load_map(args.map)
    decider = is_centralizing if args.property == "centralizing" else is_commuting
    report = decider(f)
    _emit(args, "decide", f.ctx, report.to_dict(), started)
    return 0 if report.verdict else 1


def cmd_decompose(args) -> int:
    started = time.perf_counter()
    f = _load_map(args.map)
    if f.ctx.r < 4:
        raise UsageError("decomposition needs r >= 4 (not unique below)")
    if not f.is_linear:
        raise UsageError("decomposition needs a linear map (constant term present)")
    report = is_centralizing(f)
    if not report.verdict:
        _emit(args, "decompose", f.ctx, {"centralizing": False, "witnesses": report.to_dict()["witnesses"]}, started)
        return 1
    cd = decompose_centralizing(f)
    payload = {"centralizing": True, "lambda": render_scalar(cd.lam)}
    commuting = is_commuting(f).verdict
    payload["commuting"] = commuting
    if commuting:
        md = decompose_commuting(f)
        payload.update(
            a=render_scalar(md.a),
            zeta=[render_scalar(v) for v in md.zeta],
            standard_form=md.is_standard_form,
        )
    payload["mu"] = cd.mu.to_dict()
    _emit(args, "decompose", f.ctx, payload, started)
    return 0


def _dims_rows(ctx: RingContext, kinds) -> list[dict]:
    rows = []
    for kind in kinds:
        dim, _ = map_space_dimension(ctx, kind)
        pred = predicted_dimension(ctx, kind)
        if pred is not None:
            shown, match = pred, dim == pred
        elif not ctx.field.is_rational:
            shown, match = "exploration", None
        else:
            shown, match = "n/a (r<4)", None
        rows.append({"kind": kind, "computed": dim, "predicted": shown, "match": match})
    return rows


def cmd_dims(args) -> int:
    started = time.perf_counter()
    ctx = RingContext(args.r, args.field)
    kinds = ("centralizing", "commuting") if args.kind == "both" else (args.kind,)
    rows = _dims_rows(ctx, kinds)
    if args.format == "csv":
        lines = ["r,field,n,kind,computed,predicted,match"]
        for row in rows:
            match = "" if row["match"] is None else str(row["match"]).lower()
            lines.append(f"{ctx.r},{ctx.field},{ctx.n},{row['kind']},{row['computed']},{row['predicted']},{match}")
        text = "\n".join(lines) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        payload = {"exploration": not ctx.field.is_rational, "rows": rows}
        _emit(args, "dims", ctx, payload, started)
    return 1 if any(row["match"] is False for row in rows) else 0


def cmd_centralizer(args) -> int:
    started = time.perf_counter()
    a = _load_matrix(args.matrix)
    oracle = centralizer_oracle(a)
    payload = {"oracle_dimension": oracle.dimension, "oracle_basis": _basis_json(oracle)}
    ok = True
    if is_s1_shaped(a):
        closed = centralizer_closed_form(a)
        ok = closed.equals(oracle)
        payload.update(
            closed_form_dimension=closed.dimension,
            closed_form_basis=_basis_json(closed),
            equal=ok,
        )
    else:
        payload.update(closed_form_dimension="n/a", closed_form_basis="n/a", equal="n/a")
    _emit(args, "centralizer", a.ctx, payload, started)
    return 0 if ok else 1


def cmd_span(args) -> int:
    started = time.perf_counter()
    ctx = RingContext(args.r)
    rank = span_s_rank(ctx)
    _emit(args, "span", ctx, {"rank": rank, "n": ctx.n, "spans": rank == ctx.n}, started)
    return 0 if rank == ctx.n else 1


def cmd_identities(args) -> int:
    started = time.perf_counter()
    if args.r_max < 5:
        raise UsageError("--r-max must be >= 5")
    reports = [factorial_inequality_check(args.r_max)]
    for r in range(4, args.r_max + 1):
        reports.append(w1c_identity_check(RingContext(r)))
    for r in range(4, args.r_max + 1):
        for t in range(1, r):
            reports.append(power_closed_form_check(r, t))
    reports.append(lemma3_report(args.r_max))
    for r in range(4, args.r_max + 1):
        reports.append(s1_commutator_check(RingContext(r), args.trials, seed=args.seed))

    def summary(name):
        subset = [rep for rep in reports if rep.name == name]
        recs = [rec for rep in subset for rec in rep.records]
        return {
            "records": len(recs),
            "display_matches": sum(rec.status == "matches_paper" for rec in recs),
            "claims_hold": all(rep.claims_hold for rep in subset),
        }

    names = ["factorial_inequality", "w1c_identity", "power_closed_form", "lemma3_coefficient_system", "s1_commutator"]
    power_recs = [rec for rep in reports if rep.name == "power_closed_form" for rec in rep.records]
    payload = {
        "r_max": args.r_max,
        "seed": args.seed,
        "summary": {name: summary(name) for name in names},
        "power_corrected_form_matches": all(rec.notes["corrected_matches"] for rec in power_recs),
        "claims_hold": all(rep.claims_hold for rep in reports),
        "reports": [rep.to_dict() for rep in reports],
    }
    _emit(args, "identities", None, payload, started)
    return 0 if payload["claims_hold"] else 1


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _parse_field_list(text: str) -> list[FieldSpec]:
    out = []
    for tok in text.split(","):
        if not tok:
            continue
        out.append(parse_field(tok if tok == "Q" or tok.startswith("F") else f"F{tok}"))
    return out


def cmd_sweep(args) -> int:
    r_values = _parse_int_list(args.r)
    fields = _parse_field_list(args.p)
    if not r_values or not fields:
        raise UsageError("sweep needs at least one r and one field")
    rows = charp_sweep(r_values, fields)
    text = SweepRow.CSV_HEADER + "\n" + "".join(row.csv_line() + "\n" for row in rows)
    if args.out:
        Path(args.out).write_text(text)
        log.info("sweep written to %s", args.out)
    else:
        sys.stdout.write(text)
    return 1 if any(row.match is False for row in rows) else 0


def cmd_examples(args) -> int:
    ctx = RingContext(args.r)
    name = args.name
    if name in ("g", "p"):
        if ctx.r < 4:
            raise UsageError(f"{name} needs r >= 4")
        obj = (g_map if name == "g" else p_map)(ctx).to_dict()
    elif name in ("J", "W1", "W2"):
        obj = named_matrix(ctx, name).to_dict()
    elif name == "S1":
        obj = {
            "family": "S1",
            "members": [
                {"d": d, "matrix": s1_element(ctx, d).to_dict()} for d in s1_generic_diagonals(ctx)
            ],
        }
    else:
        obj = {
            "family": "S2",
            "members": [{"i": i, "j": j, "matrix": s2_element(ctx, i, j).to_dict()} for i, j in ctx.pairs],
        }
    text = json.dumps(obj, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------- parser


def _field_arg(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--no-timing", action="store_true", help="emit timing_ms as null (byte-stable output)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="nilcentral", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"nilcentral {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide centralizing/commuting for a map")
    p.add_argument("--map", required=True)
    p.add_argument("--property", choices=("centralizing", "commuting"), default="centralizing")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("decompose", parents=[common], help="lambda*id + mu (and lambda, a, zeta)")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dims", parents=[common], help="dimension of the space of centralizing/commuting maps")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--field", type=_field_arg, default=parse_field("Q"))
    p.add_argument("--kind", choices=("centralizing", "commuting", "both"), default="both")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("centralizer", parents=[common], help="centralizer of a matrix, oracle vs power span")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("span", parents=[common], help="rank of S1 u S2")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("identities", parents=[common], help="check the displayed proof formulas")
    p.add_argument("--r-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=25, help="random S1 pairs per r")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("sweep", parents=[common], help="census over r values and fields, as CSV")
    p.add_argument("--r", required=True, help="comma-separated r values, e.g. 4,5")
    p.add_argument("--p", required=True, help="comma-separated fields: Q, primes, or F<p>")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("examples", parents=[common], help="emit a named object as JSON")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--name", choices=("g", "p", "J", "W1", "W2", "S1", "S2"), required=True)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, FieldError, ValueError) as exc:
        log.error("%s", exc)
        print(f"nilcentral: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
