from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rouquier.schur import (
    CycloFactor, FactoredSchurElement, is_essential_for, neg_part, pos_part,
    q_valuation_and_degree, same_up_to_inversion, specialize_monomial,
    valuation_and_degree,
)


@pytest.mark.parametrize("n, pos, neg", [(0, 0, 0), (5, 5, 0), (-3, 0, -3)])
def test_parts(n, pos, neg):
    assert (pos_part(n), neg_part(n)) == (pos, neg)


@pytest.mark.parametrize("m, s, out", [((1, -1), (3, 3), 0), ((1, -1), (5, 2), 3), ((2, -1, -1), (1, 1, 1), 0)])
def test_specialize_monomial(m, s, out):
    assert specialize_monomial(m, s) == out


def test_specialize_length_mismatch():
    with pytest.raises(ValueError):
        specialize_monomial((1, -1), (1,))


def test_valuation_examples():
    unit = FactoredSchurElement(frozenset(), (0, 0))
    assert valuation_and_degree(unit, (4, -2)) == (0, 0)
    f = FactoredSchurElement(frozenset(), (0, 0), (CycloFactor((1, -1)),))
    assert valuation_and_degree(f, (2, 5)) == (-3, 0)
    assert valuation_and_degree(f, (5, 2)) == (0, 3)


def test_leading_monomial_and_denominator():
    f = FactoredSchurElement(frozenset({2}), (1, 0), (CycloFactor((1, -1), 2),), denominator=2)
    # N -> y^3, factor degree 2 at exponent 3 - 1 = 2
    assert valuation_and_degree(f, (3, 1)) == (3, 7)
    assert q_valuation_and_degree(f, (3, 1)) == (Fraction(3, 2), Fraction(7, 2))


def test_essential_examples():
    m = (1, -1)
    f = FactoredSchurElement(frozenset(), (0, 0), (CycloFactor(m, 1, 2),))
    assert is_essential_for(f, m, 2)
    assert not is_essential_for(f, m, 3)
    assert is_essential_for(f, (-1, 1), 2)
    assert not is_essential_for(FactoredSchurElement(frozenset(), (0, 0), (CycloFactor(m),)), m, 2)


def test_factor_validation():
    with pytest.raises(ValueError):
        CycloFactor((2, -2))
    with pytest.raises(ValueError):
        CycloFactor((1, -1), degree=0)
    with pytest.raises(ValueError):
        FactoredSchurElement(frozenset(), (0, 0), (CycloFactor((1, -1, 0)),))


def test_same_up_to_inversion():
    assert same_up_to_inversion((1, -1, 0), (-1, 1, 0))
    assert not same_up_to_inversion((1, -1, 0), (1, 0, -1))


monomials = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(lambda v: v[0] == 1)


@given(st.lists(st.tuples(monomials, st.integers(1, 3), st.integers(1, 2)), max_size=4),
       st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_val_le_deg_and_mirror(factors, w):
    f = FactoredSchurElement(frozenset(), (0, 0, 0),
                             tuple(CycloFactor(tuple(m), deg, None, mult) for m, deg, mult in factors))
    val, deg = valuation_and_degree(f, w)
    assert val <= 0 <= deg
    assert valuation_and_degree(f, [-x for x in w]) == (-deg, -val)
