"""
When does zeta_d^s - zeta_d^t lie in a prime ideal of Z[zeta_d]?

Writing zeta^s - zeta^t = zeta^s (1 - zeta^(t-s)), the question is whether
1 - w is a unit for the root of unity w of order n = d / gcd(d, t - s). Its
norm is Phi_n(1), which is p when n is a power of the prime p and 1
otherwise. So the answer is at most one rational prime.

The second half of the module is an independent exact check of that fact:
the norm of 1 - zeta_d^j computed as the determinant of `1 - C^j` where C is
the companion matrix of the d-th cyclotomic polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

__all__ = [
    "prime_power_base", "prime_divisors_of_root_difference",
    "is_essential_pair", "cyclotomic_polynomial", "norm_one_minus_root",
    "prime_factors",
]


def prime_power_base(n: int) -> int | None:
    """Return p if n = p^a with a >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


def prime_divisors_of_root_difference(d: int, s: int, t: int) -> frozenset[int]:
    """
    Rational primes p such that zeta_d^s - zeta_d^t lies in a prime of
    Z[zeta_d] above p.

    >>> sorted(prime_divisors_of_root_difference(6, 0, 2))
    [3]
    >>> prime_divisors_of_root_difference(6, 0, 1)
    frozenset()
    """
    if d < 1:
        raise ValueError("d must be positive")
    if (s - t) % d == 0:
        raise ValueError(f"s and t coincide modulo {d}")
    order = d // gcd(d, (t - s) % d)
    p = prime_power_base(order)
    return frozenset() if p is None else frozenset((p,))


def is_essential_pair(d: int, s: int, t: int) -> bool:
    return bool(prime_divisors_of_root_difference(d, s, t))


# -- exact norm oracle -------------------------------------------------------

def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den is monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    return q, num[: len(den) - 1]


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, lowest degree first."""
    return list(_cyclotomic(n))


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for k in range(1, n):
        if n % k == 0:
            poly, rem = _poly_divmod(poly, list(_cyclotomic(k)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _det(rows: list[list[int]]) -> int:
    # Bareiss fraction-free elimination
    m = [list(row) for row in rows]
    n = len(m)
    sign, prev = 1, 1
    for c in range(n - 1):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) // prev
        prev = m[c][c]
    return sign * m[n - 1][n - 1] if n else 1


def norm_one_minus_root(d: int, j: int) -> int:
    """
    Field norm from Q(zeta_d) to Q of 1 - zeta_d^j, i.e. the resultant of
    Phi_d and 1 - x^j, computed as the determinant of multiplication by
    1 - x^j on Z[x]/Phi_d.
    """
    phi = cyclotomic_polynomial(d)
    n = len(phi) - 1
    h = [1] + [0] * (j % d)
    h[-1] -= 1
    cols = []
    for i in range(n):
        _, rem = _poly_divmod([0] * i + h, phi)
        rem += [0] * (n - len(rem))
        cols.append(rem)
    return _det([[cols[c][r] for c in range(n)] for r in range(n)])


def prime_factors(n: int) -> frozenset[int]:
    n = abs(n)
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return frozenset(out)
