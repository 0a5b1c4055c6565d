from math import gcd, isqrt

import pytest
from hypothesis import given, strategies as st

from pythsec.diophantine import QuarticEquation, Regime, Solution, median_radicand_scan, search_quartic


def brute(eq, regime, bound):
    # no symmetry shortcut, no residue filter
    out = []
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            if regime == "mixed" and not (gcd(x, y) == 1 and (x + y) % 2 == 1):
                continue
            if regime == "both-odd" and not (gcd(x, y) == 1 and x % 2 == 1 and y % 2 == 1):
                continue
            v = x**4 - x * x * y * y + y**4 if eq == "A" else x**4 + 14 * x * x * y * y + y**4
            z = isqrt(v)
            if z * z == v:
                out.append(Solution(x, y, z))
    return out


@pytest.mark.parametrize(
    "eq, regime, bound, expected",
    [
        ("A", "mixed", 200, []),
        ("A", "both-odd", 200, [(1, 1, 1)]),
        ("A", "unconstrained", 5, [(t, t, t * t) for t in range(1, 6)]),
        ("B", "mixed", 200, []),
        ("B", "both-odd", 200, [(1, 1, 4)]),
    ],
)
def test_search_quartic(eq, regime, bound, expected):
    assert search_quartic(eq, regime, bound) == [Solution(*s) for s in expected]


@pytest.mark.parametrize("eq", ["A", "B"])
@pytest.mark.parametrize("regime", ["mixed", "both-odd", "unconstrained"])
def test_search_matches_brute_force(eq, regime):
    assert search_quartic(eq, regime, 60) == brute(eq, regime, 60)


def test_search_is_symmetric_and_deterministic():
    for eq in QuarticEquation:
        for regime in (Regime.UNCONSTRAINED, Regime.BOTH_ODD_COPRIME):
            sols = search_quartic(eq, regime, 80)
            assert {(s.y, s.x, s.z) for s in sols} == {(s.x, s.y, s.z) for s in sols}
            assert search_quartic(eq, regime, 80) == sols


def test_parallel_search_matches_serial():
    assert search_quartic("A", "unconstrained", 40, workers=3) == search_quartic("A", "unconstrained", 40)


@given(st.integers(1, 500), st.integers(1, 500))
def test_coprime_regimes_partition(x, y):
    admitted = [r.admits(x, y) for r in (Regime.MIXED_PARITY_COPRIME, Regime.BOTH_ODD_COPRIME)]
    assert sum(admitted) == (1 if gcd(x, y) == 1 else 0)
    assert Regime.UNCONSTRAINED.admits(x, y)


def test_median_radicand_scan():
    assert median_radicand_scan(50) == []
    assert median_radicand_scan(2) == []
    hits = median_radicand_scan(50, parity_filter=False)
    assert [(h.m, h.n, h.median, h.radicand, h.root) for h in hits] == [
        (1, 1, "mu_beta", 1, 1),
        (1, 1, "mu_gamma", 16, 4),
    ]


def test_bad_bound():
    with pytest.raises(ValueError):
        search_quartic("A", "mixed", 0)
    with pytest.raises(ValueError):
        search_quartic("C", "mixed", 3)
