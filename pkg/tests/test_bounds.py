from __future__ import annotations

import math
from fractions import Fraction

import pytest

from treecodes import bounds as B
from treecodes.errors import ParameterError
from treecodes.oracle import count_forests


def test_first_upper_bound():
    assert B.first_upper_bound(8, 5).rounded == 128
    assert B.first_upper_bound(6, 4).rounded == 12
    assert B.first_upper_bound(4, 1).rounded == 16
    with pytest.raises(ParameterError):
        B.first_upper_bound(6, 5)


def test_rounding_contract():
    b = B.first_upper_bound(7, 3)
    assert b.rounded == math.floor(b.exact)
    lo = B.lower_bound_independent(8, 4)
    assert lo.exact == Fraction(256, 35) and lo.rounded == 8
    for n, d in [(7, 3), (9, 2), (12, 8)]:
        for v in (B.first_upper_bound(n, d), B.sphere_packing_bound(n, d), B.lower_bound_independent(n, d)):
            assert abs(v.log10 - math.log10(v.exact)) <= 1e-9 * max(1, abs(v.log10))


def test_sphere_packing_paths():
    assert B.sphere_packing_bound(4, 2).rounded == 5
    for n in range(3, 8):
        assert B.sphere_packing_bound(n, 1).exact == n ** (n - 2)
        for d in range(1, n):
            assert (B.sphere_packing_bound(n, d, "exact").exact
                    == B.sphere_packing_bound(n, d, "enumerate").exact)
    est = B.sphere_packing_bound(8, 5, "estimate")
    assert est.rounded <= 128 and "estimate" in est.note
    assert B.sphere_packing_bound(8, 5).exact <= est.exact


def test_forest_estimate_is_an_upper_estimate():
    for n in range(3, 8):
        for d in range(1, n):
            assert count_forests(n, d) <= B.forest_count_estimate(n, d)


def test_second_upper_bound_branches():
    b = B.second_upper_bound(20, 17)
    assert "degree-variance" in b.note
    assert 18 ** 2 - (190 - 1) == 135
    small = B.second_upper_bound(20, 3)
    assert "pair-count" in small.note
    assert B.second_upper_bound(13, 10).rounded >= 13
    with pytest.raises(ParameterError):
        B.second_upper_bound(10, 1)


def test_explicit_bounds_thresholds():
    ex14 = {b.name: b for b in B.explicit_upper_bounds(14)}
    assert ex14["explicit_n_minus_3"].rounded == 112 and ex14["explicit_n_minus_3"].applicable
    ex13 = {b.name: b for b in B.explicit_upper_bounds(13)}
    assert ex13["explicit_n_minus_3"].rounded == 97
    ex12 = {b.name: b for b in B.explicit_upper_bounds(12)}
    assert not ex12["explicit_n_minus_3"].applicable
    assert ex12["legacy_n_squared"].applicable and ex12["legacy_n_squared"].rounded == 144
    ex100 = {b.name: b for b in B.explicit_upper_bounds(100)}
    assert not ex100["explicit_n_minus_5"].applicable and ex100["shared_edge_n_minus_5"].applicable
    assert "117" in ex100["explicit_n_minus_5"].requires


def test_explicit_vs_generic_chain_ordering():
    """Record how the refined n-3 bound compares with the generic chain."""
    rows = []
    for n in range(13, 61):
        explicit = next(b for b in B.explicit_upper_bounds(n) if b.name == "explicit_n_minus_3")
        rows.append(explicit.exact <= B.second_upper_bound(n, n - 3).exact)
    assert all(rows)


def test_lower_bound_independent():
    for n in range(3, 12):
        assert B.lower_bound_independent(n, n - 1).rounded == 1
    for n in (8, 12, 16):
        g, h = B.independent_set_formulas(n, n // 2)
        assert g == h
    with pytest.raises(ParameterError):
        B.lower_bound_independent(5, 5)


def test_delta_constants():
    pt = B.delta_constants(Fraction(1, 2))
    assert abs(pt.C_delta - math.e / 4) <= 1e-12 and pt.c_delta == 0.125
    assert abs(B.delta_constants(1e-6).c_delta - 1) < 1e-3
    for bad in (0, 1, 1.5):
        with pytest.raises(ParameterError):
            B.delta_constants(bad)
    for x in (0.2, 0.5, 0.9):
        p = B.delta_constants(x)
        assert 0 < p.c_delta <= 1 and p.C_delta > 0.5


def test_polynomial_regime():
    assert B.polynomial_regime_distance(16, 1)[0] == 11
    assert B.polynomial_regime_distance(10 ** 6, 2)[0] == 10 ** 6 - 16
    ds = [B.polynomial_regime_distance(n, 2)[0] for n in range(40, 400, 7)]
    assert all(a < b for a, b in zip(ds, ds[1:]))
    with pytest.raises(ParameterError):
        B.polynomial_regime_distance(10, 1)


def test_bounds_table_examples():
    t = B.bounds_table(8, 5)
    assert any(b.name == "witness:bibd-8-28-5" and b.rounded == 28 for b in t)
    assert any(b.name == "first_upper" and b.rounded == 128 for b in t)
    for n in range(3, 7):
        tab = B.bounds_table(n, 1)
        assert tab.best_lower.rounded == tab.best_upper.rounded == n ** (n - 2)
    assert B.bounds_table(4, 3, oracle_exact=True).exact == 2


def test_bounds_table_consistent_over_a_range():
    for n in range(4, 30):
        for d in range(1, n):
            B.bounds_table(n, d)


def test_half_size_formula_dominates_past_n_over_2():
    for n in range(3, 61):
        for d in range(n // 2 + 1, n):
            if 2 * d > n:
                general, half = B.independent_set_formulas(n, d)
                assert half >= general
                assert B.lower_bound_independent(n, d).exact == half
