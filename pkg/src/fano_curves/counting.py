"""The counting function N(X, -K_X, q, d) and its predicted asymptotic.

For a Fano threefold every Manin component in class ``alpha`` has dimension
``-K_X . alpha``, so

    N(X, -K_X, q, d) = sum over nef integral alpha with
                       min_degree <= -K.alpha <= d*r  of  C_alpha * q^(-K.alpha)

and the prediction is

    q^(dim X - 3) * alpha(X) / (1 - q^-r) * q^(d r) * d^(rho - 1)

with ``alpha(X) = rho * vol(Nef_1 cap {-K.alpha <= r})``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivergentPredictionError, InputError
from .lattice import RationalPolytope, Space, degree_histogram, enumerate_lattice_points, polytope_volume
from .lattice.linalg import dot
from .models import FanoThreefoldModel, RuleKind, minimal_degree

DIM_X = 3


def _check_q(q) -> Fraction:
    q = Fraction(q)
    if q <= 0:
        raise InputError("q must be positive")
    return q


def weighted_degree_counts(m: FanoThreefoldModel, max_degree: int) -> list[int]:
    """``w[e]`` = sum of C_alpha over nef classes of degree exactly ``e``,
    zero below the rule's minimum degree."""
    g = m.degree_functional
    rule = m.component_rule
    if rule.kind is RuleKind.UNIQUE_PER_NEF_CLASS:
        w = degree_histogram(m.nef_curve_cone, g, max_degree)
    else:
        w = [0] * (max_degree + 1)
        for p in enumerate_lattice_points(m.nef_curve_cone, g, max_degree):
            if dot(g, p.coords) >= rule.min_degree:
                w[dot(g, p.coords)] += rule.count(p.coords)
    for e in range(min(rule.min_degree, max_degree + 1)):
        w[e] = 0
    return w


def _weighted_sum(w: list[int], q: Fraction, top: int) -> Fraction:
    total = Fraction(0)
    power = Fraction(1)
    for e in range(0, min(top, len(w) - 1) + 1):
        if w[e]:
            total += w[e] * power
        power *= q
    return total


def count_exact(m: FanoThreefoldModel, q, d: int) -> Fraction:
    q = _check_q(q)
    if d < 1:
        raise InputError("d must be at least 1")
    top = d * minimal_degree(m)
    return _weighted_sum(weighted_degree_counts(m, top), q, top)


def degree_slice(m: FanoThreefoldModel, apex: int = 0) -> RationalPolytope:
    """The polytope Nef_1 cap {-K.alpha <= r}, vertices 0 then one per nef ray."""
    r = minimal_degree(m)
    g = m.degree_functional
    verts = [tuple(Fraction(0) for _ in range(m.rank))]
    verts += [tuple(Fraction(r * c, dot(g, ray)) for c in ray) for ray in m.nef_curve_cone.rays]
    if apex:
        verts = [verts[apex]] + verts[:apex] + verts[apex + 1 :]
    return RationalPolytope(Space.CURVE, tuple(verts))


def alpha_constant(m: FanoThreefoldModel, apex: int = 0) -> Fraction:
    """``rho`` times the lattice volume of the degree-``r`` slice of the
    nef cone. ``apex`` picks the vertex the triangulation fans out from."""
    return m.rank * polytope_volume(degree_slice(m, apex))


def predicted(m: FanoThreefoldModel, q, d: int, alpha: Fraction | None = None) -> Fraction:
    q = Fraction(q)
    if q <= 1:
        raise DivergentPredictionError("the predicted asymptotic needs q > 1")
    if alpha is None:
        alpha = alpha_constant(m)
    r = minimal_degree(m)
    return q ** (DIM_X - 3) * alpha / (1 - q ** (-r)) * q ** (d * r) * Fraction(d) ** (m.rank - 1)


@dataclass
class CountingReport:
    model: str
    q: Fraction
    d_max: int
    alpha: Fraction
    r: int
    exact_values: list[tuple[int, Fraction]] = field(default_factory=list)
    predicted: list[tuple[int, Fraction]] = field(default_factory=list)
    ratios: list[tuple[int, Fraction]] = field(default_factory=list)

    def rows(self) -> list[dict]:
        return [
            {"d": d, "exact": e, "predicted": p, "ratio": r}
            for (d, e), (_, p), (_, r) in zip(self.exact_values, self.predicted, self.ratios)
        ]

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "q": self.q,
            "d_max": self.d_max,
            "alpha": self.alpha,
            "r": self.r,
            "values": self.rows(),
        }


def convergence_report(m: FanoThreefoldModel, q, d_max: int, stride: int = 1) -> CountingReport:
    q = Fraction(q)
    if q <= 1:
        raise DivergentPredictionError("convergence needs q > 1")
    if stride < 1:
        raise InputError("stride must be positive")
    r = minimal_degree(m)
    alpha = alpha_constant(m)
    report = CountingReport(m.name, q, d_max, alpha, r)
    if d_max < 1:
        return report
    w = weighted_degree_counts(m, d_max * r)
    for d in range(stride, d_max + 1, stride):
        if d * r < m.component_rule.min_degree:
            continue
        exact = _weighted_sum(w, q, d * r)
        pred = predicted(m, q, d, alpha)
        report.exact_values.append((d, exact))
        report.predicted.append((d, pred))
        report.ratios.append((d, exact / pred))
    return report


@dataclass
class GrowthReport:
    model: str
    d_max: int
    exponent: int
    counts: list[tuple[int, int]]
    constant: int
    doubling: list[tuple[int, Fraction]]

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "d_max": self.d_max,
            "counts": [{"d": d, "count": c} for d, c in self.counts],
            "constant": self.constant,
            "exponent": self.exponent,
            "doubling": [{"d": d, "ratio": x} for d, x in self.doubling],
        }


def growth_bound_check(m: FanoThreefoldModel, d_max: int) -> GrowthReport:
    """Cumulative Manin (class, component) counts by degree, the least
    integer ``c`` with ``count(d) <= c d^rho`` on the range, and the
    doubling ratios ``count(2d)/count(d)``."""
    w = weighted_degree_counts(m, max(d_max, 0))
    counts = []
    running = 0
    for d in range(1, d_max + 1):
        running += w[d]
        counts.append((d, running))
    c = max((math.ceil(Fraction(k, d**m.rank)) for d, k in counts), default=0)
    by_d = dict(counts)
    doubling = [(d, Fraction(by_d[2 * d], k)) for d, k in counts if 2 * d <= d_max and k > 0]
    return GrowthReport(m.name, d_max, m.rank, counts, c, doubling)
