from __future__ import annotations

import random
from fractions import Fraction

import pytest

from fano_curves.errors import InputError, UndefinedInvariantError, UnsupportedInputError
from fano_curves.invariants import a_invariant, b_invariant, cone_decomposition, verify_a_certificate


def random_nef_divisors(m, count, seed):
    """Positive combinations of pseff rays that are >= 0 on every nef ray."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coeffs = [rng.randint(0, 4) for _ in m.pseff_divisor_cone.rays]
        L = tuple(sum(c * r[j] for c, r in zip(coeffs, m.pseff_divisor_cone.rays)) for j in range(m.rank))
        if any(L) and all(m.pair(L, n) >= 0 for n in m.nef_curve_cone.rays):
            out.append(L)
    return out


def brute_a(m, L):
    """Oracle: scan t over a fine rational grid for the least t with
    t L + K in the pseff cone, then compare with the exact answer."""
    K = [-c for c in m.anticanonical.coords]
    best = None
    for num in range(0, 400):
        t = Fraction(num, 60)
        D = [t * l + k for l, k in zip(L, K)]
        if all(sum(a * b for a, b in zip(D, n)) >= 0 for n in m.nef_curve_cone.rays):
            best = t
            break
    return best


def test_anticanonical(model):
    res = a_invariant(model, model.anticanonical.coords)
    assert res.value == 1
    assert verify_a_certificate(model, model.anticanonical.coords, res)
    assert b_invariant(model, model.anticanonical.coords) == model.rank


def test_two_e5_h_is_not_big(two_e5):
    res = a_invariant(two_e5, (1, 0, 0))
    assert res.infinite
    assert verify_a_certificate(two_e5, (1, 0, 0), res)
    with pytest.raises(UndefinedInvariantError):
        b_invariant(two_e5, (1, 0, 0))


def test_scaling_of_anticanonical(model):
    L = model.anticanonical.coords
    assert a_invariant(model, tuple(2 * c for c in L)).value == Fraction(1, 2)
    for c in (1, 2, 7):
        assert b_invariant(model, tuple(c * x for x in L)) == model.rank


@pytest.mark.parametrize("c", [2, 3, 5])
def test_scaling_law_random(model, c):
    for L in random_nef_divisors(model, 20, seed=c):
        a1 = a_invariant(model, L)
        a2 = a_invariant(model, tuple(c * x for x in L))
        if a1.infinite:
            assert a2.infinite
            continue
        assert a2.value == a1.value / c
        assert b_invariant(model, L) == b_invariant(model, tuple(c * x for x in L))


def test_against_grid_oracle(model):
    for L in random_nef_divisors(model, 15, seed=11):
        res = a_invariant(model, L)
        assert verify_a_certificate(model, L, res)
        if res.infinite:
            continue
        if (res.value * 60).denominator == 1:
            assert brute_a(model, L) == res.value


def test_monotonicity(model):
    rng = random.Random(5)
    Ls = random_nef_divisors(model, 12, seed=21)
    rays = model.pseff_divisor_cone.rays
    for L in Ls:
        extra = [rng.randint(0, 3) for _ in rays]
        L2 = tuple(l + sum(e * r[j] for e, r in zip(extra, rays)) for j, l in enumerate(L))
        a1, a2 = a_invariant(model, L), a_invariant(model, L2)
        if a1.infinite:
            continue
        assert not a2.infinite and a2.value <= a1.value


def test_non_nef_rejected(two_e5):
    with pytest.raises(UnsupportedInputError):
        a_invariant(two_e5, (0, -1, 0))
    with pytest.raises(InputError):
        a_invariant(two_e5, (1, 0))


def test_cone_decomposition():
    rays = [(1, 0), (0, 1), (1, 1)]
    c = cone_decomposition(rays, [2, 3])
    assert c is not None and all(x >= 0 for x in c)
    assert [sum(ci * r[j] for ci, r in zip(c, rays)) for j in range(2)] == [2, 3]
    assert cone_decomposition(rays, [-1, 0]) is None


def test_certificate_tamper_detected(two_e5):
    L = two_e5.anticanonical.coords
    res = a_invariant(two_e5, L)
    from fano_curves.invariants import AInvariantResult

    bad = AInvariantResult(res.value + 1, res.coefficients)
    assert not verify_a_certificate(two_e5, L, bad)
