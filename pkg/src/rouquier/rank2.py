"""
The rank-2 groups G(2d,2,2): labels, generic Schur elements, essential
hyperplanes, Rouquier blocks and the a/A invariants.

Specializations are x_i -> (-1)^i q^a[i], y_j -> (-1)^j q^b[j],
z_k -> zeta_d^k q^c[k]. Schur elements are stored over the square-root
variables X_i, Y_j, Z_k (X_i^2 = x_i, ...) so that the half-monomials of the
degree-2 characters stay integral; their `denominator` is therefore 2.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from fractions import Fraction

from .blocks import BlockPartition
from .cyclotomic import is_essential_pair, prime_divisors_of_root_difference
from .schur import (
    CycloFactor, FactoredSchurElement, neg_part, q_valuation_and_degree,
    specialize_monomial,
)

__all__ = [
    "Lin", "Two", "Rank2Label", "AEq", "BEq", "CEq", "Quad", "Rank2Hyperplane",
    "Rank2Spec", "rank2_labels", "schur_element", "a_value", "A_value",
    "aA_sum", "a_from_schur", "rank2_hyperplanes", "hyperplane_monomial",
    "hyperplane_prime", "rank2_hyperplanes_containing",
    "rank2_blocks_for_hyperplane", "rank2_blocks", "format_label",
    "format_hyperplane",
]


class _Tagged:
    """Frozen record that unpacks like a tuple but never equals another type."""

    def __iter__(self):
        return iter(astuple(self))


@dataclass(frozen=True)
class Lin(_Tagged):
    """Linear character chi_{ijk}."""
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class Two(_Tagged):
    """Degree-2 character chi^{sup}_{kl}, normalized k < l."""
    k: int
    l: int
    sup: int


Rank2Label = Lin | Two


@dataclass(frozen=True)
class AEq(_Tagged):
    pass


@dataclass(frozen=True)
class BEq(_Tagged):
    pass


@dataclass(frozen=True)
class CEq(_Tagged):
    k: int
    l: int


@dataclass(frozen=True)
class Quad(_Tagged):
    """A_i - A_{1-i} + B_j - B_{1-j} + C_k - C_l = 0."""
    i: int
    j: int
    k: int
    l: int


Rank2Hyperplane = AEq | BEq | CEq | Quad


@dataclass(frozen=True)
class Rank2Spec:
    d: int
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if len(self.a) != 2:
            raise ValueError("a must have 2 entries")
        if len(self.b) != 2:
            raise ValueError("b must have 2 entries")
        if len(self.c) != self.d:
            raise ValueError(f"c has {len(self.c)} entries, expected d = {self.d}")

    @property
    def weights(self) -> tuple[int, ...]:
        """Specialization vector in variable order a0, a1, b0, b1, c0, ..."""
        return self.a + self.b + self.c


def rank2_labels(d: int) -> list[Rank2Label]:
    """Linear characters first, then degree-2 ones, each lexicographic."""
    lin = [Lin(i, j, k) for i in (0, 1) for j in (0, 1) for k in range(d)]
    two = [Two(k, l, s) for k in range(d) for l in range(k + 1, d) for s in (1, 2)]
    return lin + two


# -- monomials over a0, a1, b0, b1, c0..c_{d-1} -------------------------------

def _vec(d: int, *terms: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * (4 + d)
    for idx, coeff in terms:
        v[idx] += coeff
    return tuple(v)


def _a(i):
    return i


def _b(j):
    return 2 + j


def _c(k):
    return 4 + k


def _x_mono(d, i):
    return _vec(d, (_a(i), 1), (_a(1 - i), -1))


def _y_mono(d, j):
    return _vec(d, (_b(j), 1), (_b(1 - j), -1))


def _z_mono(d, k, l):
    return _vec(d, (_c(k), 1), (_c(l), -1))


def _quad_mono(d, i, j, k, l):
    return _vec(d, (_a(i), 1), (_a(1 - i), -1), (_b(j), 1), (_b(1 - j), -1),
                (_c(k), 1), (_c(l), -1))


def _z_prime(d, k, l):
    primes = prime_divisors_of_root_difference(d, k, l)
    return min(primes) if primes else None


def schur_element(lbl: Rank2Label, d: int) -> FactoredSchurElement:
    """
    Generic Schur element of `lbl`, over the variables X, Y, Z with X^2 = x.

    Factors Phi_1(x_i/x_{1-i}) etc. are monomials in the squares of the
    stored variables, so they appear with degree 2; the four half-monomial
    factors of a degree-2 character appear with degree 1.
    """
    zero = (0,) * (4 + d)
    factors = []
    if isinstance(lbl, Lin):
        i, j, k = lbl
        factors.append(CycloFactor(_x_mono(d, i), 2, 2))
        factors.append(CycloFactor(_y_mono(d, j), 2, 2))
        for l in range(d):
            if l == k:
                continue
            p = _z_prime(d, k, l)
            factors.append(CycloFactor(_z_mono(d, k, l), 2, p))
            factors.append(CycloFactor(_quad_mono(d, i, j, k, l), 2, p))
        return FactoredSchurElement(frozenset(), zero, tuple(factors), 2)
    k, l, _ = lbl
    for m in range(d):
        if m in (k, l):
            continue
        factors.append(CycloFactor(_z_mono(d, k, m), 2, _z_prime(d, k, m)))
        factors.append(CycloFactor(_z_mono(d, l, m), 2, _z_prime(d, l, m)))
    p = _z_prime(d, k, l)
    for h in (0, 1):
        # X_h X_{1-h}^-1 Y_h Y_{1-h}^-1 Z_k Z_l^-1 and X_h X_{1-h}^-1 Y_{1-h} Y_h^-1 Z_l Z_k^-1
        factors.append(CycloFactor(_quad_mono(d, h, h, k, l), 1, p))
        factors.append(CycloFactor(_quad_mono(d, h, 1 - h, l, k), 1, p))
    return FactoredSchurElement(frozenset((2,)), zero, tuple(factors), 2)


def a_from_schur(lbl: Rank2Label, spec: Rank2Spec) -> tuple[Fraction, Fraction]:
    """(a, A) from the generic Schur element via the valuation formula."""
    return q_valuation_and_degree(schur_element(lbl, spec.d), spec.weights)


def a_value(lbl: Rank2Label, spec: Rank2Spec) -> Fraction:
    """Closed-form q-valuation of the specialized Schur element."""
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    if isinstance(lbl, Lin):
        i, j, k = lbl
        da, db = a[i] - a[1 - i], b[j] - b[1 - j]
        total = neg_part(da) + neg_part(db)
        for m in range(d):
            if m != k:
                total += neg_part(c[k] - c[m]) + neg_part(da + db + c[k] - c[m])
        return Fraction(total)
    k, l, _ = lbl
    total = sum(
        neg_part(c[k] - c[m]) + neg_part(c[l] - c[m])
        for m in range(d) if m not in (k, l)
    )
    half = sum(
        neg_part(a[h] - a[1 - h] + b[h] - b[1 - h] + c[k] - c[l])
        + neg_part(a[h] - a[1 - h] + b[1 - h] - b[h] + c[l] - c[k])
        for h in (0, 1)
    )
    return total + Fraction(half, 2)


def aA_sum(lbl: Rank2Label, spec: Rank2Spec) -> int:
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    if isinstance(lbl, Lin):
        i, j, k = lbl
        return d * (a[i] - a[1 - i] + b[j] - b[1 - j] + 2 * c[k]) - 2 * sum(c)
    k, l, _ = lbl
    return d * (c[k] + c[l]) - 2 * sum(c)


def A_value(lbl: Rank2Label, spec: Rank2Spec) -> Fraction:
    return aA_sum(lbl, spec) - a_value(lbl, spec)


# -- hyperplanes ---------------------------------------------------------------

def rank2_hyperplanes(d: int) -> list[Rank2Hyperplane]:
    out: list[Rank2Hyperplane] = [AEq(), BEq()]
    pairs = [(k, l) for k in range(d) for l in range(k + 1, d) if is_essential_pair(d, k, l)]
    out.extend(CEq(k, l) for k, l in pairs)
    out.extend(Quad(i, j, k, l) for k, l in pairs for i in (0, 1) for j in (0, 1))
    return out


def hyperplane_monomial(h: Rank2Hyperplane, d: int) -> tuple[int, ...]:
    if isinstance(h, AEq):
        return _x_mono(d, 0)
    if isinstance(h, BEq):
        return _y_mono(d, 0)
    if isinstance(h, CEq):
        return _z_mono(d, h.k, h.l)
    return _quad_mono(d, *h)


def hyperplane_prime(h: Rank2Hyperplane, d: int) -> int | None:
    if isinstance(h, (AEq, BEq)):
        return 2
    return _z_prime(d, h.k, h.l)


def rank2_hyperplanes_containing(spec: Rank2Spec) -> list[Rank2Hyperplane]:
    w = spec.weights
    return [
        h for h in rank2_hyperplanes(spec.d)
        if specialize_monomial(hyperplane_monomial(h, spec.d), w) == 0
    ]


def _degree_two_pairs(d: int):
    return [(Two(k, l, 1), Two(k, l, 2)) for k in range(d) for l in range(k + 1, d)]


def rank2_blocks_for_hyperplane(h: Rank2Hyperplane | None, d: int) -> BlockPartition:
    """
    Rouquier blocks associated with the essential hyperplane `h` (None for
    no essential hyperplane), case by case for G(2d,2,2).
    """
    labels = rank2_labels(d)
    blocks: list[tuple] = []
    if h is None or isinstance(h, (AEq, BEq)):
        blocks.extend(_degree_two_pairs(d))
        if isinstance(h, AEq):
            blocks.extend((Lin(0, j, k), Lin(1, j, k)) for j in (0, 1) for k in range(d))
        elif isinstance(h, BEq):
            blocks.extend((Lin(i, 0, k), Lin(i, 1, k)) for i in (0, 1) for k in range(d))
    elif isinstance(h, CEq):
        k, l = h
        blocks.extend((Lin(i, j, k), Lin(i, j, l)) for i in (0, 1) for j in (0, 1))
        for m in range(d):
            if m in (k, l):
                continue
            km, lm = sorted((k, m)), sorted((l, m))
            blocks.append((Two(*km, 1), Two(*km, 2), Two(*lm, 1), Two(*lm, 2)))
        blocks.append((Two(k, l, 1), Two(k, l, 2)))
        blocks.extend(
            pair for pair in _degree_two_pairs(d)
            if pair[0].k not in (k, l) and pair[0].l not in (k, l)
        )
    else:
        i, j, k, l = h
        blocks.append((Lin(i, j, k), Lin(1 - i, 1 - j, l), Two(k, l, 1), Two(k, l, 2)))
        blocks.extend(pair for pair in _degree_two_pairs(d) if (pair[0].k, pair[0].l) != (k, l))
    return BlockPartition.from_blocks(labels, blocks)


def rank2_blocks(spec: Rank2Spec) -> BlockPartition:
    hyps = rank2_hyperplanes_containing(spec)
    labels = rank2_labels(spec.d)
    if not hyps:
        return rank2_blocks_for_hyperplane(None, spec.d)
    return BlockPartition.join_all(
        labels, (rank2_blocks_for_hyperplane(h, spec.d) for h in hyps)
    )


def format_label(lbl: Rank2Label) -> str:
    if isinstance(lbl, Lin):
        return f"chi[{lbl.i},{lbl.j},{lbl.k}]"
    return f"chi2[{lbl.k},{lbl.l},{lbl.sup}]"


def format_hyperplane(h: Rank2Hyperplane) -> str:
    if isinstance(h, AEq):
        return "A0=A1"
    if isinstance(h, BEq):
        return "B0=B1"
    if isinstance(h, CEq):
        return f"C{h.k}=C{h.l}"
    i, j, k, l = h
    return f"A{i}-A{1 - i}+B{j}-B{1 - j}+C{k}-C{l}=0"
