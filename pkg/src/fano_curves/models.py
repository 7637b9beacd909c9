"""Numerical data of a Fano threefold: loading, validation and queries.

A model is everything the other modules need about a threefold ``X`` as
numerical classes: the divisor basis, the pairing with curves, ``-K_X``,
the pseudo-effective divisor cone and its dual nef curve cone, the
contractible divisors, fibrations, distinguished line and conic classes,
and the rule giving the number of Manin components per curve class.
"""

from __future__ import annotations

import copy
import enum
import json
import math
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .builtin_models import BUILTIN_MODEL_DATA
from .errors import (
    IncompleteRuleError,
    InputError,
    ModelError,
    UnsupportedConeError,
)
from .lattice import LatticeVector, Pairing, RationalPolyhedralCone, Space, dual_cone
from .lattice.linalg import Vector, dot, rank

MODEL_PATH_ENV = "MANIN_MODEL_PATH"

MODEL_FIELDS = {
    "name",
    "rank",
    "divisor_basis",
    "pairing",
    "anticanonical",
    "pseff_divisor_rays",
    "nef_curve_rays",
    "contractible_divisors",
    "fibrations",
    "line_classes",
    "conic_classes",
    "component_rule",
    "metadata",
}
_REQUIRED = MODEL_FIELDS - {"pairing", "nef_curve_rays"}
_DIVISOR_FIELDS = {"label", "divisor_class", "etype", "flags", "line_class"}
_FIBRATION_FIELDS = {"label", "kind", "base_dimension", "pullback", "contracted_face"}
_CLASS_FIELDS = {"class", "label"}
_RULE_FIELDS = {"kind", "table", "min_degree"}


class EType(enum.Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    E4 = "E4"
    E5 = "E5"


class FibrationKind(enum.Enum):
    DEL_PEZZO = "DelPezzoFibration"
    CONIC_BUNDLE = "ConicBundle"
    P1_BUNDLE = "P1Bundle"


class RuleKind(enum.Enum):
    UNIQUE_PER_NEF_CLASS = "unique_per_nef_class"
    EXPLICIT_TABLE = "explicit_table"


@dataclass(frozen=True)
class ContractibleDivisorRecord:
    label: str
    divisor_class: Vector
    etype: EType
    flags: frozenset[str] = frozenset()
    line_class: Vector | None = None


@dataclass(frozen=True)
class FibrationRecord:
    label: str
    kind: FibrationKind
    base_dimension: int
    pullback: Vector
    contracted_face: tuple[Vector, ...]


@dataclass(frozen=True)
class ComponentCountRule:
    kind: RuleKind = RuleKind.UNIQUE_PER_NEF_CLASS
    table: tuple[tuple[Vector, int], ...] | None = None
    min_degree: int = 2

    def count(self, alpha: Sequence[int]) -> int:
        """Number of Manin components of the nef class ``alpha``."""
        if self.kind is RuleKind.UNIQUE_PER_NEF_CLASS:
            return 1
        lookup = dict(self.table or ())
        try:
            return lookup[tuple(alpha)]
        except KeyError:
            raise IncompleteRuleError(f"component table has no entry for {tuple(alpha)}") from None


@dataclass(frozen=True)
class FanoThreefoldModel:
    name: str
    rank: int
    divisor_basis_names: tuple[str, ...]
    pairing: Pairing
    anticanonical: LatticeVector
    pseff_divisor_cone: RationalPolyhedralCone
    nef_curve_cone: RationalPolyhedralCone
    contractible_divisors: tuple[ContractibleDivisorRecord, ...]
    fibrations: tuple[FibrationRecord, ...]
    line_classes: tuple[tuple[Vector, str], ...]
    conic_classes: tuple[tuple[Vector, str], ...]
    component_rule: ComponentCountRule
    metadata: dict[str, Any] = field(compare=False, hash=False)
    declared_nef_rays: tuple[Vector, ...] | None = None

    @property
    def degree_functional(self) -> Vector:
        """``-K_X`` as a coordinate functional on curve classes."""
        return self.pairing.curve_functional(self.anticanonical.coords)

    def degree(self, alpha: Sequence[int]) -> int:
        return dot(self.degree_functional, alpha)

    def pair(self, d: Sequence[int], c: Sequence[int]) -> int:
        return dot(self.pairing.curve_functional(d), c)

    def is_nef(self, alpha: Sequence[int]) -> bool:
        return self.nef_curve_cone.contains(alpha)

    def e5_divisors(self) -> list[ContractibleDivisorRecord]:
        return [d for d in self.contractible_divisors if d.etype is EType.E5]

    def curve(self, coords: Sequence[int]) -> LatticeVector:
        return LatticeVector(Space.CURVE, coords)


# ---------------------------------------------------------------------------
# loading


def _int_vector(v: Any, n: int, what: str) -> Vector:
    if not isinstance(v, list) or len(v) != n or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in v
    ):
        raise ModelError(f"{what} must be a list of {n} integers, got {v!r}")
    return tuple(v)


def _strict(obj: Any, allowed: set[str], required: set[str], what: str) -> dict:
    if not isinstance(obj, dict):
        raise ModelError(f"{what} must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise ModelError(f"unknown field(s) in {what}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ModelError(f"missing field(s) in {what}: {sorted(missing)}")
    return obj


def model_from_dict(data: dict) -> FanoThreefoldModel:
    """Build a model from the JSON dialect. Structural problems raise
    :class:`ModelError`; mathematical inconsistencies are left for
    :func:`validate_model` to report."""
    _strict(data, MODEL_FIELDS, _REQUIRED, "model")
    n = data["rank"]
    if not isinstance(n, int) or n < 1:
        raise ModelError("rank must be a positive integer")
    basis = data["divisor_basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise ModelError("divisor_basis must list one name per basis vector")
    if "pairing" in data:
        rows = data["pairing"]
        if not isinstance(rows, list) or len(rows) != n:
            raise ModelError("pairing must be an n x n integer matrix")
        pairing = Pairing(tuple(_int_vector(r, n, "pairing row") for r in rows))
    else:
        pairing = Pairing.identity(n)
    anti = LatticeVector(Space.DIVISOR, _int_vector(data["anticanonical"], n, "anticanonical"))
    pseff_rays = [_int_vector(r, n, "pseff ray") for r in data["pseff_divisor_rays"]]
    try:
        pseff = RationalPolyhedralCone.from_rays(Space.DIVISOR, pseff_rays)
        nef = dual_cone(pseff, pairing)
    except UnsupportedConeError as exc:
        raise ModelError(f"pseudo-effective cone: {exc}") from exc
    declared = None
    if "nef_curve_rays" in data:
        declared = tuple(_int_vector(r, n, "nef ray") for r in data["nef_curve_rays"])

    divisors = []
    for d in data["contractible_divisors"]:
        _strict(d, _DIVISOR_FIELDS, {"label", "divisor_class", "etype"}, "contractible divisor")
        try:
            etype = EType(d["etype"])
        except ValueError:
            raise ModelError(f"unknown contraction type {d['etype']!r}") from None
        line = d.get("line_class")
        divisors.append(
            ContractibleDivisorRecord(
                label=d["label"],
                divisor_class=_int_vector(d["divisor_class"], n, "divisor_class"),
                etype=etype,
                flags=frozenset(d.get("flags", [])),
                line_class=None if line is None else _int_vector(line, n, "line_class"),
            )
        )

    fibrations = []
    for f in data["fibrations"]:
        _strict(f, _FIBRATION_FIELDS, _FIBRATION_FIELDS, "fibration")
        try:
            kind = FibrationKind(f["kind"])
        except ValueError:
            raise ModelError(f"unknown fibration kind {f['kind']!r}") from None
        if f["base_dimension"] not in (1, 2):
            raise ModelError("fibration base_dimension must be 1 or 2")
        fibrations.append(
            FibrationRecord(
                label=f["label"],
                kind=kind,
                base_dimension=f["base_dimension"],
                pullback=_int_vector(f["pullback"], n, "pullback"),
                contracted_face=tuple(_int_vector(c, n, "face class") for c in f["contracted_face"]),
            )
        )

    def classes(items, what):
        out = []
        for c in items:
            _strict(c, _CLASS_FIELDS, _CLASS_FIELDS, what)
            out.append((_int_vector(c["class"], n, what), str(c["label"])))
        return tuple(out)

    rule_data = _strict(data["component_rule"], _RULE_FIELDS, {"kind"}, "component_rule")
    try:
        kind = RuleKind(rule_data["kind"])
    except ValueError:
        raise ModelError(f"unknown component rule {rule_data['kind']!r}") from None
    table = None
    if kind is RuleKind.EXPLICIT_TABLE:
        entries = rule_data.get("table")
        if not isinstance(entries, list):
            raise ModelError("explicit_table rule needs a table")
        table = []
        for e in entries:
            _strict(e, {"class", "count"}, {"class", "count"}, "table entry")
            if not isinstance(e["count"], int) or e["count"] < 0:
                raise ModelError("component counts must be nonnegative integers")
            table.append((_int_vector(e["class"], n, "table class"), e["count"]))
        table = tuple(table)
    rule = ComponentCountRule(kind, table, rule_data.get("min_degree", 2))

    metadata = data["metadata"]
    if not isinstance(metadata, dict):
        raise ModelError("metadata must be an object")

    return FanoThreefoldModel(
        name=str(data["name"]),
        rank=n,
        divisor_basis_names=tuple(basis),
        pairing=pairing,
        anticanonical=anti,
        pseff_divisor_cone=pseff,
        nef_curve_cone=nef,
        contractible_divisors=tuple(divisors),
        fibrations=tuple(fibrations),
        line_classes=classes(data["line_classes"], "line class"),
        conic_classes=classes(data["conic_classes"], "conic class"),
        component_rule=rule,
        metadata=copy.deepcopy(metadata),
        declared_nef_rays=declared,
    )


def model_to_dict(m: FanoThreefoldModel) -> dict:
    out: dict[str, Any] = {
        "name": m.name,
        "rank": m.rank,
        "divisor_basis": list(m.divisor_basis_names),
        "pairing": [list(r) for r in m.pairing.matrix],
        "anticanonical": list(m.anticanonical.coords),
        "pseff_divisor_rays": [list(r) for r in m.pseff_divisor_cone.rays],
        "nef_curve_rays": [list(r) for r in (m.declared_nef_rays or m.nef_curve_cone.rays)],
        "contractible_divisors": [
            {
                "label": d.label,
                "divisor_class": list(d.divisor_class),
                "etype": d.etype.value,
                "flags": sorted(d.flags),
                **({"line_class": list(d.line_class)} if d.line_class is not None else {}),
            }
            for d in m.contractible_divisors
        ],
        "fibrations": [
            {
                "label": f.label,
                "kind": f.kind.value,
                "base_dimension": f.base_dimension,
                "pullback": list(f.pullback),
                "contracted_face": [list(c) for c in f.contracted_face],
            }
            for f in m.fibrations
        ],
        "line_classes": [{"class": list(c), "label": lab} for c, lab in m.line_classes],
        "conic_classes": [{"class": list(c), "label": lab} for c, lab in m.conic_classes],
        "component_rule": {"kind": m.component_rule.kind.value, "min_degree": m.component_rule.min_degree},
        "metadata": copy.deepcopy(m.metadata),
    }
    if m.component_rule.table is not None:
        out["component_rule"]["table"] = [
            {"class": list(c), "count": k} for c, k in m.component_rule.table
        ]
    return out


def load_model_file(path: str | os.PathLike) -> FanoThreefoldModel:
    try:
        text = Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ModelError(f"cannot read model file {path}: {exc}") from exc
    return model_from_dict(data)


def builtin_names() -> list[str]:
    return list(BUILTIN_MODEL_DATA)


def builtin(name: str) -> FanoThreefoldModel:
    try:
        return model_from_dict(BUILTIN_MODEL_DATA[name])
    except KeyError:
        raise ModelError(f"no built-in model named {name!r}") from None


def shipped_model_path(name: str) -> Path:
    return Path(str(resources.files("fano_curves") / "data" / "models" / f"{name}.json"))


def search_path() -> list[Path]:
    env = os.environ.get(MODEL_PATH_ENV, "")
    return [Path(p) for p in env.split(os.pathsep) if p]


def find_model(name_or_path: str) -> FanoThreefoldModel:
    """Resolve a model by file path, then ``$MANIN_MODEL_PATH`` entries,
    then the built-ins."""
    p = Path(name_or_path)
    if p.suffix == ".json" and p.is_file():
        return load_model_file(p)
    for d in search_path():
        cand = d / f"{name_or_path}.json"
        if cand.is_file():
            return load_model_file(cand)
    return builtin(name_or_path)


# ---------------------------------------------------------------------------
# validation

_TERM = re.compile(r"([+-])(\d*)\*?([A-Za-z_][A-Za-z0-9_']*)")
_EXPR = re.compile(r"(?:[+-]\d*\*?[A-Za-z_][A-Za-z0-9_']*)+")


def parse_linear(expr: str, names: dict[str, Vector]) -> Vector:
    """Evaluate an integer combination like ``"H + E0 - 2E_inf"``."""
    s = expr.replace(" ", "")
    if not s.startswith(("+", "-")):
        s = "+" + s
    if not _EXPR.fullmatch(s):
        raise InputError(f"cannot parse linear expression {expr!r}")
    terms = _TERM.findall(s)
    n = len(next(iter(names.values())))
    total = [0] * n
    for sign, num, nm in terms:
        if nm not in names:
            raise InputError(f"unknown name {nm!r} in {expr!r}")
        k = int(num) if num else 1
        if sign == "-":
            k = -k
        total = [a + k * b for a, b in zip(total, names[nm])]
    return tuple(total)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    model: str
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def validate_model(m: FanoThreefoldModel) -> ValidationReport:
    checks: list[Check] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(Check(name, bool(passed), detail))

    def guarded(name: str, fn) -> None:
        try:
            fn()
        except Exception as exc:  # a malformed entry is a failed check, not a crash
            add(name, False, f"{type(exc).__name__}: {exc}")

    add("pseff cone well formed", not m.pseff_divisor_cone.check(), "; ".join(m.pseff_divisor_cone.check()))
    add("nef cone well formed", not m.nef_curve_cone.check(), "; ".join(m.nef_curve_cone.check()))
    if m.declared_nef_rays is not None:
        same = set(map(tuple, m.declared_nef_rays)) == set(m.nef_curve_cone.rays)
        add(
            "nef cone dual",
            same,
            "" if same else f"declared {sorted(m.declared_nef_rays)} != dual {list(m.nef_curve_cone.rays)}",
        )

    g = m.degree_functional
    bad = [r for r in m.nef_curve_cone.rays if dot(g, r) <= 0]
    add("Fano: -K positive on nef rays", not bad, f"nonpositive on {bad}" if bad else "")
    for c, lab in m.line_classes:
        add(f"line {lab} has degree 1", m.degree(c) == 1, f"degree {m.degree(c)}")
    for c, lab in m.conic_classes:
        add(f"conic {lab} has degree 2", m.degree(c) == 2, f"degree {m.degree(c)}")

    for d in m.contractible_divisors:
        if d.etype is EType.E5:
            if d.line_class is None:
                add(f"E5 divisor {d.label} has a line class", False)
                continue
            v = m.pair(d.divisor_class, d.line_class)
            add(f"E5 line of {d.label} pairs to -2", v == -2, f"pairing {v}")
            add(f"E5 line of {d.label} has degree 1", m.degree(d.line_class) == 1, f"degree {m.degree(d.line_class)}")

    for f in m.fibrations:
        outside = [c for c in f.contracted_face if not m.is_nef(c)]
        add(f"fibration {f.label} face is nef", not outside, f"not nef: {outside}" if outside else "")
        nonzero = [c for c in f.contracted_face if m.pair(f.pullback, c) != 0]
        add(f"fibration {f.label} face is contracted", not nonzero, f"nonzero: {nonzero}" if nonzero else "")

    rule = m.component_rule
    if rule.table is not None:
        negative = [c for c, k in rule.table if k < 0]
        non_nef = [c for c, k in rule.table if not m.is_nef(c)]
        add("component table counts nonnegative", not negative)
        add("component table classes nef", not non_nef, f"not nef: {non_nef}" if non_nef else "")

    md = m.metadata
    div_names = {nm: tuple(int(i == j) for j in range(m.rank)) for i, nm in enumerate(m.divisor_basis_names)}
    div_names.update({k: tuple(v) for k, v in md.get("named_divisors", {}).items()})
    div_names["antiK"] = m.anticanonical.coords
    curve_names = {k: tuple(v) for k, v in md.get("named_curves", {}).items()}

    for ident in md.get("divisor_identities", []):
        def check_div(ident=ident):
            lhs, rhs = ident.split("=")
            a, b = parse_linear(lhs, div_names), parse_linear(rhs, div_names)
            add(f"divisor identity {ident}", a == b, "" if a == b else f"{a} != {b}")
        guarded(f"divisor identity {ident}", check_div)

    for ident in md.get("curve_identities", []):
        def check_curve(ident=ident):
            lhs, rhs = ident.split("=")
            a, b = parse_linear(lhs, curve_names), parse_linear(rhs, curve_names)
            add(f"curve identity {ident}", a == b, "" if a == b else f"{a} != {b}")
        guarded(f"curve identity {ident}", check_curve)

    for pc in md.get("pairing_checks", []):
        label = f"({pc.get('divisor')}).({pc.get('curve')})"

        def check_pair(pc=pc, label=label):
            v = m.pair(parse_linear(pc["divisor"], div_names), parse_linear(pc["curve"], curve_names))
            if "value" in pc:
                add(f"{label} = {pc['value']}", v == pc["value"], f"got {v}")
            else:
                want = {"+": v > 0, "-": v < 0, "0": v == 0}[pc["sign"]]
                add(f"{label} sign {pc['sign']}", want, f"got {v}")
        guarded(label, check_pair)

    return ValidationReport(m.name, checks)


# ---------------------------------------------------------------------------
# class queries


def minimal_degree(m: FanoThreefoldModel) -> int:
    """Smallest positive anticanonical degree of an integral curve class."""
    g = math.gcd(*m.degree_functional)
    if g == 0:
        raise ModelError("anticanonical functional is identically zero")
    return g


@dataclass
class ClassReport:
    alpha: Vector
    degree: int
    nef: bool
    facet_values: tuple[int, ...]
    zero_facets: tuple[Vector, ...]
    matches: list[str]
    fibration_contracted: bool
    good: bool

    def to_dict(self) -> dict:
        return {
            "class": list(self.alpha),
            "degree": self.degree,
            "nef": self.nef,
            "facet_values": list(self.facet_values),
            "zero_facets": [list(f) for f in self.zero_facets],
            "matches": self.matches,
            "fibration_contracted": self.fibration_contracted,
            "good": self.good,
        }


def _in_span(vectors: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    if not vectors:
        return not any(x)
    return rank(list(vectors) + [list(x)]) == rank(list(vectors))


def classify_class(m: FanoThreefoldModel, alpha) -> ClassReport:
    a = tuple(alpha.coords if isinstance(alpha, LatticeVector) else alpha)
    if len(a) != m.rank:
        raise InputError(f"class {a} has rank {len(a)}, model {m.name} has rank {m.rank}")
    facets = m.nef_curve_cone.facets
    values = tuple(dot(f, a) for f in facets)
    nef = all(v >= 0 for v in values)
    matches = []
    for c, lab in m.line_classes:
        if tuple(c) == a:
            matches.append(f"line:{lab}")
    for d in m.contractible_divisors:
        if d.etype is EType.E5 and d.line_class is not None and tuple(d.line_class) == a:
            matches.append(f"e5-line:{d.label}")
    for c, lab in m.conic_classes:
        if tuple(c) == a:
            matches.append(f"conic:{lab}")
    for f in m.fibrations:
        if a in f.contracted_face:
            matches.append(f"fiber:{f.label}")
    contracted = any(_in_span(f.contracted_face, a) for f in m.fibrations) and any(a)
    deg = m.degree(a)
    return ClassReport(
        alpha=a,
        degree=deg,
        nef=nef,
        facet_values=values,
        zero_facets=tuple(f for f, v in zip(facets, values) if v == 0),
        matches=matches,
        fibration_contracted=contracted,
        good=nef and deg >= 3 and not contracted,
    )
