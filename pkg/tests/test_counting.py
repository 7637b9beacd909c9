from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano_curves.counting import (
    alpha_constant,
    convergence_report,
    count_exact,
    growth_bound_check,
    predicted,
)
from fano_curves.errors import DivergentPredictionError, InputError
from fano_curves.lattice import enumerate_lattice_points


def test_quartic_examples(quartic):
    assert count_exact(quartic, 2, 4) == 28
    for d in range(1, 12):
        assert count_exact(quartic, 1, d) == d - 1


def test_two_e5_count_one(two_e5):
    assert count_exact(two_e5, 1, 5) == 8


@pytest.mark.parametrize("q", [Fraction(2), Fraction(3), Fraction(7, 2)])
def test_quartic_closed_form(quartic, q):
    for d in (1, 2, 3, 10, 50):
        assert count_exact(quartic, q, d) == (q ** (d + 1) - q**2) / (q - 1)


def test_count_matches_enumeration(model):
    g = model.degree_functional
    pts = enumerate_lattice_points(model.nef_curve_cone, g, 14)
    q = Fraction(3, 2)
    for d in (2, 7, 14):
        oracle = sum(q ** model.degree(p.coords) for p in pts if 2 <= model.degree(p.coords) <= d)
        assert count_exact(model, q, d) == oracle


def test_count_rejects_bad_input(quartic):
    with pytest.raises(InputError):
        count_exact(quartic, 0, 3)
    with pytest.raises(InputError):
        count_exact(quartic, 2, 0)


def test_alpha_values(quartic, p_o_o2, two_e5):
    assert alpha_constant(quartic) == 1
    assert alpha_constant(p_o_o2) == Fraction(1, 10)
    assert alpha_constant(two_e5) == Fraction(1, 15)


def test_alpha_independent_of_apex(model):
    values = {alpha_constant(model, apex) for apex in range(len(model.nef_curve_cone.rays) + 1)}
    assert len(values) == 1


def test_predicted_examples(quartic, two_e5):
    assert predicted(quartic, 2, 10) == 2048
    assert predicted(two_e5, 2, 10) == Fraction(40960, 3)
    with pytest.raises(DivergentPredictionError):
        predicted(quartic, 1, 10)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 9), st.integers(1, 40))
def test_predicted_ratio_identity(q, d):
    from fano_curves.models import builtin

    m = builtin("two_e5")
    ratio = predicted(m, q, d + 1) / predicted(m, q, d)
    assert ratio == q * Fraction(d + 1, d) ** 2


def test_quartic_convergence(quartic):
    rep = convergence_report(quartic, 2, 30)
    assert rep.ratios[-1] == (30, 1 - Fraction(1, 2**29))
    for d, r in rep.ratios:
        if d >= 5:
            assert abs(r - 1) <= 2 * Fraction(2) ** (1 - d)


def test_two_e5_convergence_short(two_e5):
    rep = convergence_report(two_e5, 2, 100, stride=25)
    ratios = [r for _, r in rep.ratios]
    assert all(abs(b - 1) < abs(a - 1) for a, b in zip(ratios, ratios[1:]))


def test_exact_values_nondecreasing(model):
    rep = convergence_report(model, Fraction(3, 2), 20)
    vals = [v for _, v in rep.exact_values]
    assert vals == sorted(vals)
    assert all(r == e / p for (_, e), (_, p), (_, r) in zip(rep.exact_values, rep.predicted, rep.ratios))


def test_convergence_empty_below_min_degree(quartic):
    assert convergence_report(quartic, 2, 1).exact_values == []


def test_growth_quartic(quartic):
    g = growth_bound_check(quartic, 40)
    assert all(c == d - 1 for d, c in g.counts)
    assert g.constant == 1
    assert abs(g.doubling[-1][1] - 2) < Fraction(1, 10)


def test_growth_trivial(two_e5):
    g = growth_bound_check(two_e5, 1)
    assert g.counts == [(1, 0)]


def test_report_serializes(two_e5):
    from fano_curves.serialize import to_json

    text = to_json(convergence_report(two_e5, 2, 4).to_dict())
    assert '"alpha": "1/15"' in text
