import pytest
from hypothesis import given, strategies as st

from rouquier.cyclotomic import (
    cyclotomic_polynomial, is_essential_pair, norm_one_minus_root,
    prime_divisors_of_root_difference, prime_factors, prime_power_base,
)


@pytest.mark.parametrize("n, p", [(1, None), (2, 2), (8, 2), (9, 3), (6, None), (12, None), (7, 7)])
def test_prime_power_base(n, p):
    assert prime_power_base(n) == p


@pytest.mark.parametrize("d, s, t, primes", [
    (2, 0, 1, {2}),
    (6, 0, 1, set()),
    (6, 0, 2, {3}),
    (4, 1, 3, {2}),
    (12, 0, 3, {2}),
    (12, 0, 4, {3}),
    (12, 0, 6, {2}),
])
def test_root_difference_examples(d, s, t, primes):
    assert prime_divisors_of_root_difference(d, s, t) == frozenset(primes)


def test_root_difference_rejects_equal_residues():
    with pytest.raises(ValueError):
        prime_divisors_of_root_difference(4, 1, 5)


def test_essential_pair_examples():
    assert is_essential_pair(2, 0, 1)
    assert not is_essential_pair(6, 0, 1)
    assert is_essential_pair(4, 1, 3)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    assert len(cyclotomic_polynomial(15)) - 1 == 8


def test_norm_examples():
    assert norm_one_minus_root(2, 1) == 2
    assert norm_one_minus_root(4, 1) == 2
    assert abs(norm_one_minus_root(6, 1)) == 1
    assert norm_one_minus_root(6, 2) == 3
    # zeta_9^3 has order 3; Q(zeta_9) has degree 3 over Q(zeta_3)
    assert norm_one_minus_root(9, 3) == 27
    assert norm_one_minus_root(5, 0) == 0


@given(st.integers(2, 30), st.data())
def test_criterion_matches_norm(d, data):
    s = data.draw(st.integers(0, d - 2))
    t = data.draw(st.integers(s + 1, d - 1))
    assert prime_divisors_of_root_difference(d, s, t) == prime_factors(norm_one_minus_root(d, t - s))


@given(st.integers(2, 40), st.integers(0, 39), st.integers(0, 39))
def test_symmetric_and_translation_invariant(d, s, t):
    s, t = s % d, t % d
    if s == t:
        return
    base = prime_divisors_of_root_difference(d, s, t)
    assert prime_divisors_of_root_difference(d, t, s) == base
    assert prime_divisors_of_root_difference(d, s + 1, t + 1) == base
