"""Graded lattice-point enumeration in pointed cones and Hilbert bases."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

from ..errors import GradingError, IncompletenessError, InputError
from .cone import LatticeVector, RationalPolyhedralCone
from .linalg import Vector, dot


def _degree_coords(degree) -> Vector:
    return tuple(degree.coords if isinstance(degree, LatticeVector) else degree)


def check_grading(k: RationalPolyhedralCone, g: Sequence[int]) -> None:
    if len(g) != k.rank:
        raise InputError("degree functional has the wrong rank")
    bad = [r for r in k.rays if dot(g, r) <= 0]
    if bad:
        raise GradingError(f"degree functional is not positive on rays {bad}")


def _box(k: RationalPolyhedralCone, g: Sequence[int], d_max: int) -> list[tuple[int, int]]:
    # the slice {x in K : g.x <= d_max} is the hull of 0 and d_max*r/g(r)
    verts = [[Fraction(d_max * c, dot(g, r)) for c in r] for r in k.rays]
    box = []
    for i in range(k.rank):
        lo = min([Fraction(0)] + [v[i] for v in verts])
        hi = max([Fraction(0)] + [v[i] for v in verts])
        box.append((math.floor(lo), math.ceil(hi)))
    return box


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def iter_points(k: RationalPolyhedralCone, g: Sequence[int], d_max: int) -> Iterator[Vector]:
    """Integral points of ``k`` with ``1 <= g.x <= d_max``, unordered.

    Scans the bounding box on all but the last coordinate and solves the
    facet and degree inequalities for the last one.
    """
    check_grading(k, g)
    if d_max < 1:
        return
    box = _box(k, g, d_max)
    n = k.rank
    rows = [tuple(f) for f in k.facets] + [tuple(-c for c in g)]
    offsets = [0] * len(k.facets) + [d_max]
    lo_last, hi_last = box[-1]
    for head in itertools.product(*(range(a, b + 1) for a, b in box[:-1])):
        lo, hi = lo_last, hi_last
        for row, off in zip(rows, offsets):
            # row[:-1].head + row[-1]*t + off >= 0
            rest = off + sum(row[i] * head[i] for i in range(n - 1))
            c = row[-1]
            if c > 0:
                lo = max(lo, _ceil_div(-rest, c))
            elif c < 0:
                hi = min(hi, (rest) // (-c))
            elif rest < 0:
                hi = lo - 1
                break
        for t in range(lo, hi + 1):
            x = head + (t,)
            if any(x):
                yield x


def sort_key(g: Sequence[int]):
    return lambda x: (dot(g, x), tuple(x))


def enumerate_lattice_points(
    k: RationalPolyhedralCone, degree, d_max: int
) -> list[LatticeVector]:
    """Nonzero integral points of ``k`` of degree at most ``d_max``,
    sorted by (degree, coordinates)."""
    g = _degree_coords(degree)
    pts = sorted(iter_points(k, g, d_max), key=sort_key(g))
    return [LatticeVector(k.space, p) for p in pts]


def degree_histogram(k: RationalPolyhedralCone, degree, d_max: int) -> list[int]:
    """``hist[e]`` = number of integral points of degree exactly ``e``."""
    g = _degree_coords(degree)
    check_grading(k, g)
    hist = [0] * (max(d_max, 0) + 1)
    if d_max < 1:
        return hist
    box = _box(k, g, d_max)
    n = k.rank
    rows = [tuple(f) for f in k.facets] + [tuple(-c for c in g)]
    offsets = [0] * len(k.facets) + [d_max]
    lo_last, hi_last = box[-1]
    gl = g[-1]
    for head in itertools.product(*(range(a, b + 1) for a, b in box[:-1])):
        lo, hi = lo_last, hi_last
        for row, off in zip(rows, offsets):
            rest = off + sum(row[i] * head[i] for i in range(n - 1))
            c = row[-1]
            if c > 0:
                lo = max(lo, _ceil_div(-rest, c))
            elif c < 0:
                hi = min(hi, rest // (-c))
            elif rest < 0:
                hi = lo - 1
                break
        base = sum(g[i] * head[i] for i in range(n - 1))
        for t in range(lo, hi + 1):
            hist[base + gl * t] += 1
    hist[0] = 0
    return hist


def hilbert_basis(
    k: RationalPolyhedralCone, degree, check_bound: int | None = None
) -> list[LatticeVector]:
    """Minimal generating set of the monoid of integral points of ``k``.

    Candidates run up to the sum of the ray degrees; a point is kept when no
    smaller basis element can be subtracted from it without leaving the cone.
    Every point of degree at most ``check_bound`` is then decomposed over
    the result, and :class:`IncompletenessError` is raised on failure.
    """
    g = _degree_coords(degree)
    check_grading(k, g)
    bound = sum(dot(g, r) for r in k.rays)
    if check_bound is None:
        check_bound = bound
    basis: list[Vector] = []
    for p in sorted(iter_points(k, g, bound), key=sort_key(g)):
        dp = dot(g, p)
        if not any(
            dot(g, h) < dp and k.contains(tuple(a - b for a, b in zip(p, h))) for h in basis
        ):
            basis.append(p)

    missing = undecomposable_points(k, g, basis, check_bound)
    if missing:
        raise IncompletenessError(
            f"{len(missing)} points up to degree {check_bound} do not decompose, e.g. {missing[0]}"
        )
    return [LatticeVector(k.space, h) for h in basis]


def undecomposable_points(
    k: RationalPolyhedralCone, g: Sequence[int], gens: Sequence[Sequence[int]], d_max: int
) -> list[Vector]:
    """Points of degree <= d_max that are not nonnegative integral
    combinations of ``gens`` (bounded-knapsack reachability)."""
    gens = [tuple(h) for h in gens]
    reach: set[Vector] = set()
    missing = []
    for p in sorted(iter_points(k, g, d_max), key=sort_key(g)):
        ok = p in gens or any(tuple(a - b for a, b in zip(p, h)) in reach for h in gens)
        if ok:
            reach.add(p)
        else:
            missing.append(p)
    return missing
