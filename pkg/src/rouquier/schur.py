"""
Factored generic Schur elements and their valuation and degree under a
cyclotomic specialization.

A Schur element is kept in the factored shape

    xi * N * prod_i Psi_i(M_i) ** n_i

where only the data used downstream is stored: the rational primes dividing
xi, the exponent vector of N, and for each factor the exponent vector of the
primitive monomial M_i, deg(Psi_i), the prime p with Psi_i(1) in a prime above
p (or None) and the multiplicity n_i.

Exponent vectors are integer tuples indexed by the algebra's variables. A
specialization sends variable i to y**weights[i]; `denominator` records how
many y's make a q (y**denominator == q), so that q-valuations are
`val_y / denominator`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "ExponentVector", "CycloFactor", "FactoredSchurElement",
    "pos_part", "neg_part", "specialize_monomial", "valuation_and_degree",
    "q_valuation_and_degree", "is_essential_for", "same_up_to_inversion",
]

ExponentVector = tuple[int, ...]


def pos_part(n: int) -> int:
    return n if n > 0 else 0


def neg_part(n: int) -> int:
    return n if n < 0 else 0


@dataclass(frozen=True)
class CycloFactor:
    monomial: ExponentVector
    degree: int = 1
    psi_prime: int | None = None
    multiplicity: int = 1

    def __post_init__(self):
        g = 0
        for x in self.monomial:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"monomial {self.monomial} is not primitive")
        if self.degree < 1 or self.multiplicity < 1:
            raise ValueError("degree and multiplicity must be positive")


@dataclass(frozen=True)
class FactoredSchurElement:
    leading_primes: frozenset[int]
    leading_monomial: ExponentVector
    factors: tuple[CycloFactor, ...] = ()
    denominator: int = 1

    def __post_init__(self):
        m = len(self.leading_monomial)
        if any(len(f.monomial) != m for f in self.factors):
            raise ValueError("factor monomials differ in length from the leading monomial")
        if self.denominator < 1:
            raise ValueError("denominator must be positive")


def specialize_monomial(monomial: Sequence[int], weights: Sequence[int]) -> int:
    if len(monomial) != len(weights):
        raise ValueError(
            f"monomial has {len(monomial)} exponents but the specialization has {len(weights)}"
        )
    return sum(a * n for a, n in zip(monomial, weights))


def valuation_and_degree(f: FactoredSchurElement, weights: Sequence[int]) -> tuple[int, int]:
    """
    (val_y, deg_y) of the specialized Schur element.

    >>> f = FactoredSchurElement(frozenset(), (0, 0), (CycloFactor((1, -1)),))
    >>> valuation_and_degree(f, (2, 5))
    (-3, 0)
    """
    lead = specialize_monomial(f.leading_monomial, weights)
    val = deg = pos_part(lead) + neg_part(lead)
    for fac in f.factors:
        x = specialize_monomial(fac.monomial, weights)
        val += fac.multiplicity * fac.degree * neg_part(x)
        deg += fac.multiplicity * fac.degree * pos_part(x)
    return val, deg


def q_valuation_and_degree(f: FactoredSchurElement, weights: Sequence[int]) -> tuple[Fraction, Fraction]:
    val, deg = valuation_and_degree(f, weights)
    return Fraction(val, f.denominator), Fraction(deg, f.denominator)


def same_up_to_inversion(m1: Sequence[int], m2: Sequence[int]) -> bool:
    m1, m2 = tuple(m1), tuple(m2)
    return m1 == m2 or m1 == tuple(-x for x in m2)


def is_essential_for(f: FactoredSchurElement, monomial: Sequence[int], p: int) -> bool:
    """True iff some factor Psi(M) of f has M = monomial^(+-1) and Psi(1) above p."""
    return any(
        fac.psi_prime == p and same_up_to_inversion(fac.monomial, monomial)
        for fac in f.factors
    )
