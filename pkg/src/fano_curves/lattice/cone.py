"""Lattice vectors, the intersection pairing, and pointed rational cones.

Cones carry both descriptions: primitive generating rays and primitive
inward facet normals. Facet normals are stored as coordinate vectors ``u``
with ``u . x >= 0`` on the cone, i.e. as elements of the dual space under
the standard (identity) pairing. Conversion between the two descriptions is
the double description method, run in exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import InputError, UnsupportedConeError
from .linalg import Vector, det, dot, primitive, rank, row_echelon


class Space(enum.Enum):
    CURVE = "curve"
    DIVISOR = "divisor"

    @property
    def dual(self) -> "Space":
        return Space.DIVISOR if self is Space.CURVE else Space.CURVE


@dataclass(frozen=True)
class LatticeVector:
    space: Space
    coords: Vector

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if not self.coords:
            raise InputError("lattice vector must have positive rank")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _check_same(self, other)
        return LatticeVector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _check_same(self, other)
        return LatticeVector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, k: int) -> "LatticeVector":
        return LatticeVector(self.space, tuple(k * a for a in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


def curve(*coords: int) -> LatticeVector:
    return LatticeVector(Space.CURVE, coords)


def divisor(*coords: int) -> LatticeVector:
    return LatticeVector(Space.DIVISOR, coords)


def _check_same(a: LatticeVector, b: LatticeVector) -> None:
    if a.space is not b.space or a.rank != b.rank:
        raise InputError(f"incompatible vectors: {a} and {b}")


@dataclass(frozen=True)
class Pairing:
    """Nondegenerate integer pairing ``D . C = D^T M C`` of divisors with curves."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise InputError("pairing matrix must be square and nonempty")
        if det(m) == 0:
            raise InputError("pairing matrix is degenerate")

    @classmethod
    def identity(cls, n: int) -> "Pairing":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return self == Pairing.identity(self.rank)

    def curve_functional(self, d: Sequence[int]) -> Vector:
        """Coordinates of ``C -> D . C`` as a coordinate functional on curves."""
        return tuple(sum(d[i] * self.matrix[i][j] for i in range(self.rank)) for j in range(self.rank))

    def divisor_functional(self, c: Sequence[int]) -> Vector:
        """Coordinates of ``D -> D . C`` as a coordinate functional on divisors."""
        return tuple(dot(row, c) for row in self.matrix)


def pair(d: LatticeVector, c: LatticeVector, p: Pairing) -> int:
    if d.space is not Space.DIVISOR or c.space is not Space.CURVE:
        raise InputError("pair() expects a divisor class and a curve class")
    if not d.rank == c.rank == p.rank:
        raise InputError(f"rank mismatch: {d.rank}, {c.rank}, {p.rank}")
    return dot(d.coords, p.divisor_functional(c.coords))


# ---------------------------------------------------------------------------
# double description


def _extreme_rays(normals: Sequence[Vector], n: int) -> list[Vector]:
    """Extreme rays of the pointed cone {x : u . x >= 0 for u in normals}.

    Incremental double description with the algebraic adjacency test.
    """
    if rank(normals) < n:
        raise UnsupportedConeError("inequality system does not define a pointed cone")

    # seed with n independent inequalities: the cone they cut out is simplicial
    basis: list[int] = []
    for i, u in enumerate(normals):
        if rank([normals[j] for j in basis] + [u]) > len(basis):
            basis.append(i)
        if len(basis) == n:
            break
    b = [normals[i] for i in basis]
    rays: list[tuple[Vector, frozenset[int]]] = []
    for k in range(n):
        # ray r with b_j . r = 0 for j != k, b_k . r > 0
        others = [b[j] for j in range(n) if j != k]
        red, pivots = row_echelon(others)
        free = next(c for c in range(n) if c not in pivots)
        sol = [0] * n
        sol[free] = 1
        for row, p in zip(red, pivots):
            sol[p] = -row[free]
        r = primitive(sol)
        if dot(b[k], r) < 0:
            r = tuple(-v for v in r)
        rays.append((r, frozenset(basis[j] for j in range(n) if j != k)))

    for i, u in enumerate(normals):
        if i in basis:
            continue
        vals = [dot(u, r) for r, _ in rays]
        pos = [(r, z) for (r, z), v in zip(rays, vals) if v > 0]
        zero = [(r, z | {i}) for (r, z), v in zip(rays, vals) if v == 0]
        neg = [((r, z), v) for (r, z), v in zip(rays, vals) if v < 0]
        new = pos + zero
        if neg:
            posv = [((r, z), v) for (r, z), v in zip(rays, vals) if v > 0]
            for (rp, zp), vp in posv:
                for (rn, zn), vn in neg:
                    common = zp & zn
                    if len(common) < n - 2:
                        continue
                    if rank([normals[j] for j in common]) != n - 2:
                        continue
                    comb = tuple(vp * a - vn * c for a, c in zip(rn, rp))
                    new.append((primitive(comb), common | {i}))
        rays = new

    return sorted({r for r, _ in rays})


def _irredundant_normals(normals: Iterable[Vector], rays: Sequence[Vector], n: int) -> list[Vector]:
    keep = set()
    for u in {primitive(u) for u in normals}:
        if not any(u):
            continue
        on = [r for r in rays if dot(u, r) == 0]
        if rank(on) == n - 1 and all(dot(u, r) >= 0 for r in rays):
            keep.add(u)
    return sorted(keep)


@dataclass(frozen=True)
class RationalPolyhedralCone:
    space: Space
    rays: tuple[Vector, ...]
    facets: tuple[Vector, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.rays[0])

    @classmethod
    def from_rays(cls, space: Space, rays: Iterable[Sequence[int]]) -> "RationalPolyhedralCone":
        rays = [primitive(r) for r in rays]
        rays = [r for r in rays if any(r)]
        if not rays:
            raise UnsupportedConeError("cone needs at least one nonzero ray")
        n = len(rays[0])
        if rank(rays) < n:
            raise UnsupportedConeError("cone is not full-dimensional")
        facets = _extreme_rays(rays, n)
        if rank(facets) < n:
            raise UnsupportedConeError("cone is not pointed")
        extreme = sorted({r for r in rays if rank([f for f in facets if dot(f, r) == 0]) == n - 1})
        return cls(space, tuple(extreme), tuple(facets))

    @classmethod
    def from_inequalities(cls, space: Space, normals: Iterable[Sequence[int]]) -> "RationalPolyhedralCone":
        normals = [primitive(u) for u in normals]
        normals = [u for u in normals if any(u)]
        if not normals:
            raise UnsupportedConeError("no inequalities given")
        n = len(normals[0])
        rays = _extreme_rays(normals, n)
        if rank(rays) < n:
            raise UnsupportedConeError("cone is not full-dimensional")
        facets = _irredundant_normals(normals, rays, n)
        return cls(space, tuple(rays), tuple(facets))

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(f, x) >= 0 for f in self.facets)

    def same_as(self, other: "RationalPolyhedralCone") -> bool:
        return (
            self.space is other.space
            and set(self.rays) == set(other.rays)
            and set(self.facets) == set(other.facets)
        )

    def check(self) -> list[str]:
        """Invariant violations, empty when the cone is well formed."""
        problems = []
        n = self.rank
        if len(set(self.rays)) != len(self.rays) or len(set(self.facets)) != len(self.facets):
            problems.append("duplicate rays or facets")
        for r in self.rays:
            if primitive(r) != tuple(r):
                problems.append(f"ray {r} not primitive")
            if any(dot(f, r) < 0 for f in self.facets):
                problems.append(f"ray {r} violates a facet")
            if rank([f for f in self.facets if dot(f, r) == 0]) != n - 1:
                problems.append(f"ray {r} is not extreme")
        for f in self.facets:
            if rank([r for r in self.rays if dot(f, r) == 0]) != n - 1:
                problems.append(f"facet {f} is not a facet")
        if rank(self.facets) < n:
            problems.append("cone is not pointed")
        if rank(self.rays) < n:
            problems.append("cone is not full-dimensional")
        return problems


def dual_cone(k: RationalPolyhedralCone, p: Pairing | None = None) -> RationalPolyhedralCone:
    """The cone in the paired space of vectors pairing nonnegatively with ``k``."""
    if p is None:
        p = Pairing.identity(k.rank)
    if p.rank != k.rank:
        raise InputError("pairing rank does not match cone rank")
    if k.check():
        raise UnsupportedConeError("; ".join(k.check()))
    if k.space is Space.DIVISOR:
        normals = [p.curve_functional(r) for r in k.rays]
    else:
        normals = [p.divisor_functional(r) for r in k.rays]
    return RationalPolyhedralCone.from_inequalities(k.space.dual, normals)
