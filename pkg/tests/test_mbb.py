from __future__ import annotations

import pytest

from fano_curves.errors import InputError
from fano_curves.lattice import enumerate_lattice_points
from fano_curves.mbb import (
    BreakingKind,
    e5_chain_breakings,
    free_breakings,
    mbb_threshold,
    verify_mbb,
)

from conftest import L0, L_INF, R


def test_free_examples(two_e5, quartic):
    assert any({b.first, b.second} == {R["R1"], R["R2"]} for b in free_breakings(two_e5, (1, 1, 1)))
    assert free_breakings(two_e5, R["R3"]) == []
    qb = free_breakings(quartic, (4,))
    assert len(qb) == 1 and (qb[0].first, qb[0].second) == ((2,), (2,))


def test_chain_examples(two_e5, p_o_o2, quartic):
    c3 = e5_chain_breakings(two_e5, R["R3"])
    assert any(b.first == b.second == R["R1"] and b.line_class == L0 for b in c3)
    c4 = e5_chain_breakings(two_e5, R["R4"])
    assert any(b.first == b.second == R["R1"] and b.line_class == L_INF for b in c4)
    cs = e5_chain_breakings(p_o_o2, (1, 0))
    assert any(b.first == b.second == (0, 1) and b.line_class == (1, -2) for b in cs)
    assert all(b.profile["exceptional_profile"] for b in c3 + c4 + cs)
    assert e5_chain_breakings(quartic, (5,)) == []


def test_breakings_sum_and_are_nef(model):
    for p in enumerate_lattice_points(model.nef_curve_cone, model.degree_functional, 12):
        a = p.coords
        for b in free_breakings(model, a) + e5_chain_breakings(model, a):
            assert b.total() == a
            assert model.is_nef(b.first) and model.is_nef(b.second)
            assert model.degree(b.first) >= 2 and model.degree(b.second) >= 2
            if b.kind is BreakingKind.E5_CHAIN:
                assert b.line_class in {d.line_class for d in model.e5_divisors()}


def test_free_breakings_unordered(two_e5):
    for p in enumerate_lattice_points(two_e5.nef_curve_cone, two_e5.degree_functional, 14):
        pairs = [frozenset([b.first, b.second]) for b in free_breakings(two_e5, p.coords)]
        assert len(pairs) == len(set(pairs))


def test_non_nef_rejected(two_e5):
    with pytest.raises(InputError):
        free_breakings(two_e5, L0)
    with pytest.raises(InputError):
        e5_chain_breakings(two_e5, L0)


def test_thresholds(quartic, p_o_o2, two_e5):
    assert mbb_threshold(quartic) == 5
    assert mbb_threshold(two_e5) == 6
    assert mbb_threshold(p_o_o2) == 6


def test_verify_below_threshold(quartic):
    with pytest.raises(InputError):
        verify_mbb(quartic, 3)


def test_verify_agrees_with_free_breakings(model):
    rep = verify_mbb(model, 16)
    assert rep.ok
    for p in enumerate_lattice_points(model.nef_curve_cone, model.degree_functional, 16):
        d = model.degree(p.coords)
        if d >= rep.threshold or d == 5:
            empty = not free_breakings(model, p.coords)
            assert empty == (p.coords in rep.violations or p.coords in [a for a, _ in rep.degree5_exceptions])


def test_jobs_do_not_change_report(two_e5):
    assert verify_mbb(two_e5, 20, jobs=1).to_dict() == verify_mbb(two_e5, 20, jobs=3).to_dict()
