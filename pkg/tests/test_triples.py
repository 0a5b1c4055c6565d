from math import gcd

import pytest
from hypothesis import given, strategies as st

from pythsec.exactmath import DomainError
from pythsec.triples import Triple, TripleParams, decompose, enumerate_params, generate, validate_params


@pytest.mark.parametrize(
    "params, violations",
    [((1, 2, 1), []), ((1, 3, 1), ["parity"]), ((1, 4, 2), ["coprimality", "parity"]), ((1, 1, 1), ["m>n", "parity"])],
)
def test_validate_params(params, violations):
    assert validate_params(*params) == violations


def test_validate_params_rejects_non_positive():
    with pytest.raises(DomainError):
        validate_params(0, 2, 1)


@pytest.mark.parametrize(
    "params, triple",
    [((1, 2, 1), (5, 4, 3)), ((4, 4, 3), (100, 96, 28)), ((1, 3, 2), (13, 12, 5))],
)
def test_generate(params, triple):
    assert generate(TripleParams(*params)) == Triple(*triple)


def test_invalid_params_cannot_be_built():
    with pytest.raises(DomainError, match="coprimality"):
        TripleParams(1, 4, 2)


@pytest.mark.parametrize(
    "sides, params",
    [((13, 12, 5), (1, 3, 2)), ((100, 96, 28), (4, 4, 3)), ((28, 100, 96), (4, 4, 3)), ((8, 15, 17), (1, 4, 1))],
)
def test_decompose(sides, params):
    assert decompose(*sides) == TripleParams(*params)


def test_decompose_rejects_non_triple():
    with pytest.raises(DomainError):
        decompose(6, 4, 3)


def test_round_trip_on_the_survey_box():
    for m, n in enumerate_params(60):
        for d in range(1, 6):
            p = TripleParams(d, m, n)
            t = generate(p)
            assert decompose(*t.sides) == p
            assert decompose(t.gamma, t.alpha, t.beta) == p


@given(st.integers(2, 10**6), st.integers(1, 10**6), st.integers(1, 1000))
def test_round_trip_hypothesis(m, n, d):
    if n >= m or gcd(m, n) != 1 or (m + n) % 2 == 0:
        return
    p = TripleParams(d, m, n)
    assert decompose(*generate(p).sides) == p


@pytest.mark.parametrize(
    "m_max, expected",
    [(3, [(2, 1), (3, 2)]), (4, [(2, 1), (3, 2), (4, 1), (4, 3)])],
)
def test_enumerate_params(m_max, expected):
    assert enumerate_params(m_max) == expected


def test_enumerate_params_matches_brute_force():
    brute = []
    for m in range(1, 6):
        for n in range(1, 6):
            if n < m and gcd(m, n) == 1 and (m + n) % 2 == 1:
                brute.append((m, n))
    got = enumerate_params(5)
    assert got == sorted(brute) and len(got) == 6 and got[-1] == (5, 4)
    with pytest.raises(DomainError):
        enumerate_params(1)


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
def test_sum_of_two_squares_mod_prime_3_mod_4(p):
    for a in range(p):
        for b in range(p):
            if (a, b) != (0, 0):
                assert (a * a + b * b) % p != 0


def test_gcd_of_sum_and_difference():
    for a in range(2, 201):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            expected = 1 if (a + b) % 2 else 2
            assert gcd(a + b, a - b) == expected


def test_gcd_of_sum_or_difference_with_product():
    for a in range(2, 201):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            expected = 1 if (a + b) % 2 else 2
            for s in (a + b, a - b):
                assert gcd(s, a * b) == 1
                assert gcd(s, 2 * a * b) == expected


def test_hypotenuse_coprime_to_both_generator_legs():
    for m, n in enumerate_params(80):
        assert gcd(m * m + n * n, 2 * m * n) == 1
        assert gcd(m * m + n * n, m * m - n * n) == 1
