"""Command-line interface: ``fano-curves <command> ...``.

Every command builds a report dict and prints it as JSON (exact rationals
as ``"num/den"``), CSV or an aligned table. Exit status is 0 on success,
1 when a verification finds a counterexample and 2 on bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import classification, counting, invariants, mbb, monoid
from .errors import FanoCurvesError, InputError, UndefinedInvariantError
from .lattice import enumerate_lattice_points, hilbert_basis
from .models import (
    FanoThreefoldModel,
    builtin_names,
    classify_class,
    find_model,
    model_to_dict,
    parse_linear,
    search_path,
    validate_model,
)
from .serialize import parse_rational, to_csv, to_json, to_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Result:
    """A payload plus the rows used by the csv and table formats."""

    def __init__(self, payload: Any, rows: list[dict] | None = None, ok: bool = True):
        self.payload = payload
        self.rows = rows
        self.ok = ok


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _names(m: FanoThreefoldModel, space: str) -> dict[str, tuple]:
    if space == "curve":
        return {k: tuple(v) for k, v in m.metadata.get("named_curves", {}).items()}
    out = {}
    for i, nm in enumerate(m.divisor_basis_names):
        out[nm] = tuple(int(i == j) for j in range(m.rank))
    out.update({k: tuple(v) for k, v in m.metadata.get("named_divisors", {}).items()})
    out["antiK"] = tuple(m.anticanonical.coords)
    out["K"] = tuple(-c for c in m.anticanonical.coords)
    return out


def parse_class(m: FanoThreefoldModel, text: str, space: str = "curve") -> tuple[int, ...]:
    """``"1,0,2"`` or a named combination such as ``"2R1 + l0"``."""
    if any(ch.isalpha() for ch in text):
        names = _names(m, space)
        if not names:
            raise InputError(f"model {m.name} has no named {space} classes")
        return parse_linear(text, names)
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse class {text!r}") from None
    if len(v) != m.rank:
        raise InputError(f"class {text!r} has {len(v)} coordinates, model {m.name} has rank {m.rank}")
    return v


# ---------------------------------------------------------------------------
# commands


def cmd_models_list(args) -> Result:
    rows = [{"name": n, "source": "builtin"} for n in builtin_names()]
    for d in search_path():
        for p in sorted(d.glob("*.json")) if d.is_dir() else []:
            rows.append({"name": p.stem, "source": str(p)})
    return Result({"models": rows}, rows)


def cmd_models_show(args) -> Result:
    m = args.model_obj
    data = model_to_dict(m)
    data["nef_curve_rays"] = [list(r) for r in m.nef_curve_cone.rays]
    rows = [{"field": k, "value": v} for k, v in sorted(data.items())]
    return Result(data, rows)


def cmd_models_validate(args) -> Result:
    report = validate_model(args.model_obj)
    d = report.to_dict()
    rows = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]
    return Result(d, rows, ok=report.ok)


def cmd_enumerate(args) -> Result:
    m = args.model_obj
    pts = enumerate_lattice_points(m.nef_curve_cone, m.degree_functional, args.degree)
    rows = [{"class": list(p.coords), "degree": m.degree(p.coords)} for p in pts]
    return Result({"model": m.name, "d_max": args.degree, "count": len(rows), "points": rows}, rows)


def cmd_hilbert(args) -> Result:
    m = args.model_obj
    basis = hilbert_basis(m.nef_curve_cone, m.degree_functional, args.check_bound)
    rows = [{"class": list(h.coords), "degree": m.degree(h.coords)} for h in basis]
    return Result({"model": m.name, "basis": rows}, rows)


def cmd_count(args) -> Result:
    m = args.model_obj
    n = counting.count_exact(m, args.q, args.degree)
    payload = {"model": m.name, "q": args.q, "d": args.degree, "N": n}
    return Result(payload, [payload])


def cmd_alpha(args) -> Result:
    m = args.model_obj
    n_vertices = len(m.nef_curve_cone.rays) + 1
    apices = range(n_vertices) if args.apex is None else [args.apex]
    if args.apex is not None and not 0 <= args.apex < n_vertices:
        raise InputError(f"apex must lie in [0, {n_vertices - 1}]")
    rows = [{"apex": i, "alpha": counting.alpha_constant(m, i)} for i in apices]
    agree = len({r["alpha"] for r in rows}) == 1
    payload = {"model": m.name, "alpha": rows[0]["alpha"], "triangulations": rows, "agree": agree}
    return Result(payload, rows, ok=agree)


def cmd_asymptotic(args) -> Result:
    m = args.model_obj
    report = counting.convergence_report(m, args.q, args.degree, args.stride)
    return Result(report.to_dict(), report.rows())


def _presentation(args) -> monoid.PresentedCommutativeMonoid:
    if args.presentation:
        try:
            data = json.loads(Path(args.presentation).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read presentation: {exc}") from exc
        return monoid.presentation_from_dict(data)
    m = args.model_obj
    if m.name == "two_e5":
        return monoid.two_e5_presentation(m)
    basis = hilbert_basis(m.nef_curve_cone, m.degree_functional)
    classes = [h.coords for h in basis]
    return monoid.free_presentation(classes, [m.degree(c) for c in classes])


def cmd_monoid_verify(args) -> Result:
    pres = _presentation(args)
    if args.drop_relation is not None:
        if not 0 <= args.drop_relation < len(pres.relations):
            raise InputError(f"relation index must lie in [0, {len(pres.relations) - 1}]")
        pres = pres.without_relation(args.drop_relation)
    report = monoid.verify_presentation(pres, args.degree, walks=args.walks, seed=args.seed)
    payload = report.to_dict()
    payload["presentation"] = monoid.presentation_to_dict(pres)
    return Result(payload, report.violations, ok=report.ok)


def cmd_mbb_verify(args) -> Result:
    report = mbb.verify_mbb(args.model_obj, args.degree, jobs=args.jobs)
    d = report.to_dict()
    rows = [{"class": v, "kind": "violation"} for v in d["violations"]]
    rows += [{"class": e["class"], "kind": "degree5_exception"} for e in d["degree5_exceptions"]]
    return Result(d, rows, ok=report.ok)


def cmd_mbb_decompose(args) -> Result:
    m = args.model_obj
    a = parse_class(m, args.cls)
    free = mbb.free_breakings(m, a)
    chains = mbb.e5_chain_breakings(m, a)
    payload = {
        "model": m.name,
        "class": classify_class(m, a).to_dict(),
        "free_breakings": [b.to_dict() for b in free],
        "e5_chain_breakings": [b.to_dict() for b in chains],
    }
    rows = [{"kind": b.kind.value, "parts": b.to_dict()["parts"]} for b in free + chains]
    return Result(payload, rows)


def cmd_invariants_a(args) -> Result:
    m = args.model_obj
    L = parse_class(m, args.divisor, "divisor")
    res = invariants.a_invariant(m, L)
    payload = {"model": m.name, "L": list(L), **res.to_dict()}
    payload["certificate_verified"] = invariants.verify_a_certificate(m, L, res)
    return Result(payload, [payload], ok=payload["certificate_verified"])


def cmd_invariants_b(args) -> Result:
    m = args.model_obj
    L = parse_class(m, args.divisor, "divisor")
    payload = {"model": m.name, "L": list(L), "b": invariants.b_invariant(m, L)}
    return Result(payload, [payload])


def _filter_value(text: str):
    if text.lstrip("-").isdigit():
        return int(text)
    if text == "null":
        return None
    return text


def cmd_db_query(args) -> Result:
    filters = {}
    for item in args.filters:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"filters look like field=value, got {item!r}")
        filters[key] = _filter_value(value)
    recs = classification.query(**filters)
    rows = [{"record": r.record, **classification.record_to_dict(r)} for r in recs]
    return Result({"filters": filters, "count": len(rows), "records": rows}, rows)


def cmd_db_dump(args) -> Result:
    db = classification.default_db()
    if args.format == "json":
        return Result(classification.dump())
    rows = [{"record": r.record, **classification.record_to_dict(r)} for r in db.records]
    return Result(None, rows)


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, model: bool = True, default_model: str | None = None) -> None:
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    if model:
        p.add_argument(
            "--model",
            required=default_model is None,
            default=default_model,
            help="built-in name, name on $MANIN_MODEL_PATH, or path to a .json model",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fano-curves", description="Exact curve-counting toolkit for Fano threefolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name: str, fn: Callable, help: str, **common) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help)
        _add_common(p, **common)
        p.set_defaults(fn=fn)
        return p

    models = sub.add_parser("models", help="inspect model files").add_subparsers(dest="action", required=True)
    leaf(models, "list", cmd_models_list, "list available models", model=False)
    leaf(models, "show", cmd_models_show, "print a model")
    leaf(models, "validate", cmd_models_validate, "run consistency checks")

    p = leaf(sub, "enumerate", cmd_enumerate, "nef lattice points up to a degree")
    p.add_argument("--degree", type=int, required=True)
    p = leaf(sub, "hilbert", cmd_hilbert, "Hilbert basis of the nef monoid")
    p.add_argument("--check-bound", type=int, default=None)

    p = leaf(sub, "count", cmd_count, "exact counting function N(q, d)")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = leaf(sub, "alpha", cmd_alpha, "leading constant alpha(X)")
    p.add_argument("--apex", type=int, default=None, help="triangulation apex (default: all)")

    p = leaf(sub, "asymptotic", cmd_asymptotic, "exact count against the prediction")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)

    mono = sub.add_parser("monoid", help="monoid presentations").add_subparsers(dest="action", required=True)
    p = leaf(mono, "verify", cmd_monoid_verify, "check a presentation up to a degree", default_model="two_e5")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--presentation", help="JSON presentation file")
    p.add_argument("--drop-relation", type=int, default=None, help="delete relation i (0-based)")
    p.add_argument("--walks", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    mb = sub.add_parser("mbb", help="bend-and-break witnesses").add_subparsers(dest="action", required=True)
    p = leaf(mb, "verify", cmd_mbb_verify, "scan all nef classes up to a degree")
    p.add_argument("--degree", type=int, default=mbb.DEFAULT_D_MAX)
    p = leaf(mb, "decompose", cmd_mbb_decompose, "breakings of one class")
    p.add_argument("--class", dest="cls", required=True, help='e.g. "1,0,2" or "2R1+l0"')

    inv = sub.add_parser("invariants", help="a- and b-invariants").add_subparsers(dest="action", required=True)
    for name, fn in (("a", cmd_invariants_a), ("b", cmd_invariants_b)):
        p = leaf(inv, name, fn, f"{name}(X, L)")
        p.add_argument("--divisor", default="antiK", help='e.g. "H", "antiK", "1,0,0"')

    db = sub.add_parser("db", help="classification tables").add_subparsers(dest="action", required=True)
    p = leaf(db, "query", cmd_db_query, "records matching field=value filters", model=False)
    p.add_argument("filters", nargs="*")
    leaf(db, "dump", cmd_db_dump, "the whole database", model=False)
    return parser


def _emit(result: Result, fmt: str, out) -> None:
    if isinstance(result.payload, str):
        out.write(result.payload)
    elif fmt == "json":
        out.write(to_json(result.payload))
    elif fmt == "csv":
        out.write(to_csv(result.rows or []))
    else:
        out.write(to_table(result.rows or []))


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "model", None) is not None:
            args.model_obj = find_model(args.model)
        result = args.fn(args)
    except (InputError, UndefinedInvariantError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except FanoCurvesError as exc:
        err.write(f"failed: {exc}\n")
        return EXIT_FAIL
    _emit(result, args.format, out)
    return EXIT_OK if result.ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "main", "parse_class", "run"]
