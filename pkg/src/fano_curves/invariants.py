"""Fujita a-invariant and b-invariant of a polarized model.

``a(X, L)`` is the least ``t`` with ``tL + K_X`` pseudo-effective. The
pseudo-effective cone is cut out by pairing with the nef curve rays, so
feasibility at ``t`` is the finite system ``t (L.n) >= -K.n`` over those
rays and the minimum is a maximum of exact ratios. A ray with ``L.n = 0``
makes the system infeasible for every ``t`` and is itself the separating
certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, UndefinedInvariantError, UnsupportedInputError
from .lattice import LatticeVector
from .lattice.linalg import Vector, dot, rank, solve, transpose
from .models import FanoThreefoldModel


@dataclass(frozen=True)
class AInvariantResult:
    value: Fraction | None
    coefficients: tuple[Fraction, ...] | None = None
    witness: Vector | None = None

    @property
    def infinite(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict:
        from .serialize import rational

        if self.infinite:
            return {"value": "inf", "witness": list(self.witness)}
        return {"value": rational(self.value), "coefficients": [rational(c) for c in self.coefficients]}


def _coords(v) -> Vector:
    return tuple(v.coords if isinstance(v, LatticeVector) else v)


def cone_decomposition(rays: Sequence[Vector], target: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Nonnegative coefficients over ``rays`` summing to ``target``.

    Tries simplicial subsets (Caratheodory), so a solution is found whenever
    one exists. Coefficients are reported for every ray, zeros included.
    """
    n = len(target)
    if not any(target):
        return tuple(Fraction(0) for _ in rays)
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(len(rays)), size):
            sub = [rays[i] for i in idx]
            if rank(sub) < size:
                continue
            x = solve(transpose(sub), list(target))
            if x is None or any(c < 0 for c in x):
                continue
            out = [Fraction(0)] * len(rays)
            for i, c in zip(idx, x):
                out[i] = c
            return tuple(out)
    return None


def a_invariant(m: FanoThreefoldModel, L) -> AInvariantResult:
    L = _coords(L)
    if len(L) != m.rank:
        raise InputError("divisor rank does not match the model")
    rays = m.nef_curve_cone.rays
    vals = [m.pair(L, r) for r in rays]
    if any(v < 0 for v in vals):
        raise UnsupportedInputError(f"{L} is not pseudo-effective, so a(X, L) is not defined here")
    for r, v in zip(rays, vals):
        if v == 0:
            # L is not big: the ray pairs to 0 with L and negatively with K_X
            return AInvariantResult(None, witness=r)
    t = max(Fraction(m.degree(r), v) for r, v in zip(rays, vals))
    target = [t * l - k for l, k in zip(L, m.anticanonical.coords)]
    coeffs = cone_decomposition(m.pseff_divisor_cone.rays, target)
    assert coeffs is not None, "boundary point of the pseudo-effective cone has no decomposition"
    return AInvariantResult(t, coefficients=coeffs)


def verify_a_certificate(m: FanoThreefoldModel, L, result: AInvariantResult) -> bool:
    """Independent check of the certificate shipped with ``result``."""
    L = _coords(L)
    K = tuple(-c for c in m.anticanonical.coords)
    if result.infinite:
        w = result.witness
        return (
            all(m.pair(d, w) >= 0 for d in m.pseff_divisor_cone.rays)
            and m.pair(L, w) <= 0
            and m.pair(K, w) < 0
        )
    c = result.coefficients
    if c is None or any(x < 0 for x in c):
        return False
    recon = [sum(ci * r[j] for ci, r in zip(c, m.pseff_divisor_cone.rays)) for j in range(m.rank)]
    if recon != [result.value * l + k for l, k in zip(L, K)]:
        return False
    # minimality: some nef ray is tight, so any smaller t leaves the cone
    return any(
        m.pair(L, r) > 0 and result.value * m.pair(L, r) + m.pair(K, r) == 0
        for r in m.nef_curve_cone.rays
    )


def b_invariant(m: FanoThreefoldModel, L) -> int:
    """Dimension of the span of the nef face killed by ``K_X + a L``."""
    L = _coords(L)
    a = a_invariant(m, L)
    if a.infinite:
        raise UndefinedInvariantError("b(X, L) needs a finite a-invariant")
    face_functional = [a.value * l - k for l, k in zip(L, m.anticanonical.coords)]
    on_face = [
        r for r in m.nef_curve_cone.rays if dot(m.pairing.curve_functional(face_functional), r) == 0
    ]
    return rank(on_face) if on_face else 0
