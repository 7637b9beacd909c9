"""Exact volumes of rational polytopes given by vertices."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InputError
from .cone import Space
from .linalg import det, dot, nullspace, rank, solve


@dataclass(frozen=True)
class RationalPolytope:
    space: Space
    vertices: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        verts = tuple(tuple(Fraction(c) for c in v) for v in self.vertices)
        if not verts:
            raise InputError("polytope needs at least one vertex")
        if len({len(v) for v in verts}) != 1:
            raise InputError("vertices have different dimensions")
        for i, v in enumerate(verts):
            if in_hull(v, verts[:i] + verts[i + 1 :]):
                raise InputError(f"{v} is not a vertex of the polytope")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])


def in_hull(p: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> bool:
    """Whether ``p`` is a convex combination of ``points`` (Caratheodory:
    some affinely independent subset suffices)."""
    target = list(p) + [Fraction(1)]
    for size in range(1, min(len(points), len(p) + 1) + 1):
        for combo in itertools.combinations(points, size):
            cols = [list(c) + [Fraction(1)] for c in combo]
            if rank(cols) < size:
                continue
            lam = solve([list(r) for r in zip(*cols)], target)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def _affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def _facets(pts: list[tuple[Fraction, ...]], idx: frozenset[int], n: int) -> list[frozenset[int]]:
    """Vertex sets of the facets of the full-dimensional polytope on ``idx``."""
    found = set()
    members = sorted(idx)
    for combo in itertools.combinations(members, n):
        base = pts[combo[0]]
        diffs = [[a - b for a, b in zip(pts[j], base)] for j in combo[1:]]
        if rank(diffs) != n - 1:
            continue
        normal = nullspace(diffs, n)[0]
        c = dot(normal, base)
        vals = {j: dot(normal, pts[j]) - c for j in members}
        if all(v >= 0 for v in vals.values()) or all(v <= 0 for v in vals.values()):
            found.add(frozenset(j for j, v in vals.items() if v == 0))
    return sorted(found, key=sorted)


def _subfacets(pts, face: frozenset[int], facets_of_p: list[frozenset[int]], k: int):
    """Facets (dimension k-1) of the k-dimensional face ``face``."""
    cands = {face & f for f in facets_of_p if face & f != face}
    cands = [c for c in cands if _affine_rank([pts[j] for j in sorted(c)]) == k - 1]
    return sorted(set(cands), key=sorted)


def triangulate(q: RationalPolytope, apex: int = 0) -> list[tuple[int, ...]]:
    """Pulling triangulation: cone each facet not containing the apex over it,
    recursing into facets with their own smallest vertex as apex.

    Returns simplices as tuples of vertex indices. Empty when the polytope
    is not full-dimensional.
    """
    pts = list(q.vertices)
    n = q.dim
    if _affine_rank(pts) < n:
        return []
    all_idx = frozenset(range(len(pts)))
    facets_of_p = _facets(pts, all_idx, n)

    def rec(face: frozenset[int], k: int, top: int | None) -> list[tuple[int, ...]]:
        if k == 0:
            return [tuple(face)]
        v = top if top is not None else min(face)
        out = []
        for sub in _subfacets(pts, face, facets_of_p, k):
            if v in sub:
                continue
            for s in rec(sub, k - 1, None):
                out.append((v,) + s)
        return out

    return rec(all_idx, n, apex)


def simplex_volume(vertices: Sequence[Sequence[Fraction]]) -> Fraction:
    v0 = vertices[0]
    m = [[a - b for a, b in zip(v, v0)] for v in vertices[1:]]
    return abs(det(m)) / math.factorial(len(m))


def polytope_volume(q: RationalPolytope, apex: int = 0) -> Fraction:
    """Euclidean volume normalized so the unit cube of the integer lattice
    has volume 1. Zero for polytopes that are not full-dimensional."""
    if q.dim == 0:
        return Fraction(0)
    pts = q.vertices
    return sum((simplex_volume([pts[i] for i in s]) for s in triangulate(q, apex)), Fraction(0))
