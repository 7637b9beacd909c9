"""Numerical shadow of Movable Bend-and-Break.

Free curves are represented by their numerical classes: a free curve is
dominant, hence nef of anticanonical degree at least 2. A breaking of a
nef class ``alpha`` is either a pair of such classes summing to ``alpha``,
or such a pair joined by the class of a line in an E5 divisor. Existence
of a breaking is only a necessary condition for the geometric statement.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError
from .lattice import LatticeVector
from .lattice.linalg import Vector
from .lattice.points import iter_points, sort_key
from .models import FanoThreefoldModel

MIN_FREE_DEGREE = 2
DEFAULT_D_MAX = 40


class BreakingKind(enum.Enum):
    FREE_PAIR = "FreePair"
    E5_CHAIN = "E5Chain"


@dataclass(frozen=True)
class Breaking:
    kind: BreakingKind
    first: Vector
    second: Vector
    line_label: str | None = None
    line_class: Vector | None = None
    # E5-chain annotations: both parts of degree <= 4 and alpha . E = 0
    profile: dict = field(default_factory=dict, compare=False, hash=False)

    def total(self) -> Vector:
        parts = [self.first, self.second] + ([self.line_class] if self.line_class else [])
        return tuple(sum(c) for c in zip(*parts))

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "parts": [list(self.first), list(self.second)]}
        if self.kind is BreakingKind.E5_CHAIN:
            out["parts"] = [list(self.first), list(self.line_class), list(self.second)]
            out["line"] = self.line_label
            out["profile"] = self.profile
        return out


def _coords(alpha) -> Vector:
    return tuple(alpha.coords if isinstance(alpha, LatticeVector) else alpha)


def _require_nef(m: FanoThreefoldModel, a: Vector) -> None:
    if len(a) != m.rank:
        raise InputError(f"class {a} does not have rank {m.rank}")
    if not m.is_nef(a):
        raise InputError(f"class {a} is not nef")


def _pairs(m: FanoThreefoldModel, a: Vector, candidates: Sequence[Vector] | None = None) -> list[tuple[Vector, Vector]]:
    """Unordered pairs {b, c} of nef classes of degree >= 2 with b + c = a."""
    key = sort_key(m.degree_functional)
    da = m.degree(a)
    if da < 2 * MIN_FREE_DEGREE:
        return []
    if candidates is None:
        candidates = sorted(iter_points(m.nef_curve_cone, m.degree_functional, da - MIN_FREE_DEGREE), key=key)
    out = []
    for b in candidates:
        db = m.degree(b)
        if db < MIN_FREE_DEGREE or db > da - MIN_FREE_DEGREE:
            continue
        c = tuple(x - y for x, y in zip(a, b))
        if key(b) <= key(c) and m.is_nef(c):
            out.append((b, c))
    return out


def free_breakings(m: FanoThreefoldModel, alpha) -> list[Breaking]:
    a = _coords(alpha)
    _require_nef(m, a)
    return [Breaking(BreakingKind.FREE_PAIR, b, c) for b, c in _pairs(m, a)]


def e5_chain_breakings(m: FanoThreefoldModel, alpha) -> list[Breaking]:
    a = _coords(alpha)
    _require_nef(m, a)
    out = []
    for d in m.e5_divisors():
        if d.line_class is None:
            continue
        rest = tuple(x - y for x, y in zip(a, d.line_class))
        if m.degree(rest) < 2 * MIN_FREE_DEGREE or not m.is_nef(rest):
            continue
        for b, c in _pairs(m, rest):
            profile = {
                "parts_degree_le_4": m.degree(b) <= 4 and m.degree(c) <= 4,
                "meets_divisor_trivially": m.pair(d.divisor_class, a) == 0,
                "degree_le_9": m.degree(a) <= 9,
            }
            profile["exceptional_profile"] = profile["parts_degree_le_4"] and profile["meets_divisor_trivially"]
            out.append(Breaking(BreakingKind.E5_CHAIN, b, c, d.label, d.line_class, profile))
    return out


def mbb_threshold(m: FanoThreefoldModel) -> int:
    return 6 if m.e5_divisors() else 5


@dataclass
class MBBReport:
    model: str
    d_max: int
    threshold: int
    classes_checked: int
    violations: list[Vector]
    degree5_exceptions: list[tuple[Vector, list[Breaking]]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "d_max": self.d_max,
            "threshold": self.threshold,
            "classes_checked": self.classes_checked,
            "violations": [list(v) for v in self.violations],
            "degree5_exceptions": [
                {"class": list(a), "chain_breakings": [b.to_dict() for b in chains]}
                for a, chains in self.degree5_exceptions
            ],
            "ok": self.ok,
        }


def _has_free_breaking(a: Vector, da: int, by_degree: dict[int, list[Vector]], nef: frozenset) -> bool:
    for e in range(MIN_FREE_DEGREE, da // 2 + 1):
        for b in by_degree.get(e, ()):
            if tuple(x - y for x, y in zip(a, b)) in nef:
                return True
    return False


def _scan(args) -> tuple[list[Vector], list[Vector]]:
    """Worker: (violations, degree-5 classes without a free breaking)."""
    chunk, by_degree, nef, threshold = args
    bad, five = [], []
    for a, da in chunk:
        if da == 5 or da >= threshold:
            found = _has_free_breaking(a, da, by_degree, nef)
            if not found and da == 5:
                five.append(a)
            if not found and da >= threshold:
                bad.append(a)
    return bad, five


def verify_mbb(m: FanoThreefoldModel, d_max: int = DEFAULT_D_MAX, jobs: int = 1) -> MBBReport:
    """Every nef class of degree in [threshold, d_max] must have a free
    breaking; degree-5 classes without one are listed with their chains."""
    threshold = mbb_threshold(m)
    if d_max < threshold:
        raise InputError(f"d_max={d_max} is below the threshold {threshold} for {m.name}")
    if jobs < 1:
        raise InputError("jobs must be positive")
    key = sort_key(m.degree_functional)
    points = sorted(iter_points(m.nef_curve_cone, m.degree_functional, d_max), key=key)
    graded = [(a, int(m.degree(a))) for a in points]
    by_degree: dict[int, list[Vector]] = {}
    for a, da in graded:
        by_degree.setdefault(da, []).append(a)
    nef = frozenset(points)
    checked = sum(1 for _, da in graded if da >= threshold)

    chunks = [graded[i::jobs] for i in range(jobs)]
    tasks = [(c, by_degree, nef, threshold) for c in chunks]
    if jobs == 1:
        results = [_scan(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan, tasks))
    violations = sorted((a for bad, _ in results for a in bad), key=key)
    fives = sorted((a for _, five in results for a in five), key=key)
    exceptions = [(a, e5_chain_breakings(m, a)) for a in fives]
    return MBBReport(m.name, d_max, threshold, checked, violations, exceptions)
