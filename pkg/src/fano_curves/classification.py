"""Queryable classification records.

All records live in one flat list: contraction types, E5 threefolds,
threefolds whose anticanonical system has base points, links to the
built-in models, singularity table rows (``T1``/``T2``/``T3``) and
exclusions stated outside the tables. ``query`` filters on any field;
``record`` filters on the kind itself.
"""

from __future__ import annotations

import functools
import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from importlib import resources
from typing import Any, Union

from .classification_data import DATA
from .errors import InputError, QueryError, TableInconsistencyError
from .serialize import parse_rational, rational

Cell = Union[int, str, None]


@dataclass(frozen=True)
class ContractionTypeRecord:
    etype: str
    center: str
    exceptional_surface: str
    anticanonical_restriction: str
    record = "ContractionType"


@dataclass(frozen=True)
class E5ThreefoldRecord:
    index: int
    description: str
    picard_rank: int
    e5_contraction_count: int
    model: str | None
    record = "E5Threefold"


@dataclass(frozen=True)
class NonBasepointFreeRecord:
    index: int
    description: str
    record = "NonBasepointFree"


@dataclass(frozen=True)
class ModelReference:
    model: str
    collection: str
    index: int | None
    note: str
    record = "ModelReference"


@dataclass(frozen=True)
class DWitness:
    i: int
    j: int
    value: int


@dataclass(frozen=True)
class SingularityTableRow:
    table: str
    sing_type: str
    column: str | None
    r: Cell
    a: Cell
    n: int | None
    witness: tuple[int, ...] | DWitness | None
    intersection_value: Fraction | None
    exclusion_note: str | None
    record = "SingularityTableRow"


@dataclass(frozen=True)
class ExclusionRecord:
    sing_type: str
    r: Cell
    a: int
    n: int
    status: str
    note: str
    record = "Exclusion"


Record = Union[
    ContractionTypeRecord,
    E5ThreefoldRecord,
    NonBasepointFreeRecord,
    ModelReference,
    SingularityTableRow,
    ExclusionRecord,
]

_SECTIONS = {
    "contraction_types": ContractionTypeRecord,
    "e5_threefolds": E5ThreefoldRecord,
    "non_basepoint_free": NonBasepointFreeRecord,
    "model_references": ModelReference,
    "singularity_rows": SingularityTableRow,
    "exclusions": ExclusionRecord,
}

ETYPES = ("E1", "E2", "E3", "E4", "E5")
CENTERS = ("Curve", "SmoothPoint", "ODP", "cA2Point", "QuotientPoint")
TABLES = ("T1", "T2", "T3")


def _witness_from(data) -> tuple[int, ...] | DWitness | None:
    if data is None:
        return None
    if data.get("kind") == "i":
        return tuple(data["values"])
    if data.get("kind") == "d":
        return DWitness(data["i"], data["j"], data["value"])
    raise InputError(f"unknown witness {data!r}")


def _witness_to(w) -> dict | None:
    if w is None:
        return None
    if isinstance(w, DWitness):
        return {"kind": "d", "i": w.i, "j": w.j, "value": w.value}
    return {"kind": "i", "values": list(w)}


def record_from_dict(cls, item: dict):
    names = {f.name for f in fields(cls)}
    if set(item) != names:
        raise InputError(f"{cls.record} fields {sorted(item)} differ from {sorted(names)}")
    item = dict(item)
    if cls is SingularityTableRow:
        item["witness"] = _witness_from(item["witness"])
        if item["intersection_value"] is not None:
            item["intersection_value"] = parse_rational(item["intersection_value"])
    return cls(**item)


def record_to_dict(rec) -> dict:
    out = asdict(rec)
    if isinstance(rec, SingularityTableRow):
        out["witness"] = _witness_to(rec.witness)
        if rec.intersection_value is not None:
            out["intersection_value"] = rational(rec.intersection_value)
    return out


@dataclass(frozen=True)
class ClassificationDB:
    records: tuple[Record, ...]
    notes: tuple[str, ...] = ()

    def of_kind(self, cls) -> list:
        return [r for r in self.records if isinstance(r, cls)]

    def field_names(self) -> set[str]:
        names = {"record"}
        for cls in _SECTIONS.values():
            names |= {f.name for f in fields(cls)}
        return names

    def query(self, **filters: Any) -> list[Record]:
        unknown = set(filters) - self.field_names()
        if unknown:
            raise QueryError(f"unknown field(s): {', '.join(sorted(unknown))}")
        out = []
        for rec in self.records:
            for key, want in filters.items():
                if key != "record" and key not in {f.name for f in fields(rec)}:
                    break
                if not _matches(getattr(rec, key), want):
                    break
            else:
                out.append(rec)
        return out

    def check(self) -> list[str]:
        """Structural invariants; an empty list means the data is sound."""
        problems = []
        ct = self.of_kind(ContractionTypeRecord)
        if [r.etype for r in ct] != list(ETYPES):
            problems.append("contraction types must be exactly E1..E5")
        if any(r.center not in CENTERS for r in ct):
            problems.append("unknown contraction center")
        e5 = self.of_kind(E5ThreefoldRecord)
        if [r.index for r in e5] != list(range(1, 7)):
            problems.append("E5 threefolds must be indexed 1..6")
        if [r.e5_contraction_count for r in e5] != [1, 1, 1, 1, 1, 2]:
            problems.append("E5 contraction counts must be 1 except the last, which is 2")
        if len(self.of_kind(NonBasepointFreeRecord)) != 3:
            problems.append("there must be three non-basepoint-free threefolds")
        for row in self.of_kind(SingularityTableRow):
            if row.table not in TABLES:
                problems.append(f"unknown table {row.table}")
        by_index = {r.index: r for r in e5}
        for ref in self.of_kind(ModelReference):
            if ref.collection == "e5_threefolds" and by_index.get(ref.index, None) is None:
                problems.append(f"{ref.model} points at a missing E5 entry")
            elif ref.collection == "e5_threefolds" and by_index[ref.index].model != ref.model:
                problems.append(f"{ref.model} link disagrees with E5 entry {ref.index}")
        return problems


def _matches(value, want) -> bool:
    if isinstance(value, Fraction) or isinstance(want, Fraction):
        try:
            return value is not None and Fraction(value) == Fraction(want)
        except (TypeError, ValueError):
            return False
    if isinstance(value, int) and isinstance(want, str):
        return str(value) == want
    return value == want


def db_from_dict(data: dict) -> ClassificationDB:
    if not isinstance(data, dict):
        raise InputError("classification data must be an object")
    unknown = set(data) - set(_SECTIONS) - {"notes"}
    if unknown:
        raise InputError(f"unknown sections: {sorted(unknown)}")
    records = []
    for key, cls in _SECTIONS.items():
        records += [record_from_dict(cls, item) for item in data.get(key, [])]
    return ClassificationDB(tuple(records), tuple(data.get("notes", [])))


def db_to_dict(db: ClassificationDB) -> dict:
    out: dict[str, Any] = {key: [] for key in _SECTIONS}
    for rec in db.records:
        key = next(k for k, cls in _SECTIONS.items() if isinstance(rec, cls))
        out[key].append(record_to_dict(rec))
    out["notes"] = list(db.notes)
    return out


def dump(db: ClassificationDB | None = None) -> str:
    """Canonical JSON text; the shipped data file is exactly this string."""
    data = DATA if db is None else db_to_dict(db)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> ClassificationDB:
    try:
        return db_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"bad classification JSON: {exc}") from exc


def shipped_text() -> str:
    return (resources.files("fano_curves") / "data" / "classification.json").read_text(encoding="utf-8")


@functools.lru_cache(maxsize=1)
def default_db() -> ClassificationDB:
    if shipped_text() != dump():
        raise TableInconsistencyError("data/classification.json differs from the embedded table")
    db = db_from_dict(DATA)
    problems = db.check()
    if problems:
        raise TableInconsistencyError("; ".join(problems))
    return db


def query(**filters: Any) -> list[Record]:
    return default_db().query(**filters)


def derive_e_cubed(row: SingularityTableRow) -> Fraction:
    """Solve ``value = -(i a/n + j)(a/n) E^3`` for ``E^3``."""
    w = row.witness
    if not isinstance(w, DWitness) or row.intersection_value is None:
        raise TableInconsistencyError("row needs a d(i,j) witness and an intersection value")
    if not isinstance(row.a, int) or not row.n:
        raise TableInconsistencyError("row needs integer a and n")
    t = Fraction(row.a, row.n)
    factor = -(w.i * t + w.j) * t
    if factor == 0:
        raise TableInconsistencyError(f"degenerate row: -(i a/n + j)(a/n) = 0 for {row}")
    e3 = row.intersection_value / factor
    if e3 <= 0:
        raise TableInconsistencyError(f"row gives E^3 = {e3}, which is not positive")
    return e3
