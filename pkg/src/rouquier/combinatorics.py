"""
Partitions, multipartitions, beta-numbers and charged symbols.

Partitions are plain tuples of positive integers in weakly decreasing order,
and a d-partition (multipartition) is a tuple of d such tuples. Both are
hashable and can be used directly as character labels.

>>> beta_number((3, 2))
(4, 2)
>>> shift((4, 2), 1)
(5, 3, 0)
>>> charged_symbol(((2,), ()), (0, 1)).rows
((2,), (1, 0))
>>> contents_equal(((2,), ()), ((1,), (1,)), (0, 1))
True
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

__all__ = [
    "Partition", "MultiPartition",
    "is_partition", "validate_multipartition", "partitions",
    "multipartitions", "compositions", "size", "height", "beta_number",
    "partition_from_beta", "shift", "Symbol", "charged_height",
    "charged_symbol", "content", "contents_equal", "content_key",
]

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]


def is_partition(p) -> bool:
    return (
        all(isinstance(x, int) and x >= 1 for x in p)
        and all(p[i] >= p[i + 1] for i in range(len(p) - 1))
    )


def validate_multipartition(mp, d: int | None = None) -> MultiPartition:
    """Normalize `mp` to a tuple of tuples, raising ValueError if invalid."""
    mp = tuple(tuple(p) for p in mp)
    if d is not None and len(mp) != d:
        raise ValueError(f"expected {d} components, got {len(mp)}")
    for p in mp:
        if not is_partition(p):
            raise ValueError(f"not a partition: {p!r}")
    return mp


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order: (n), (n-1, 1), ..."""
    if n == 0:
        yield ()
        return
    if largest is None or largest > n:
        largest = n
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into `parts` non-negative parts, first part largest first."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def multipartitions(d: int, r: int) -> list[MultiPartition]:
    """
    All d-partitions of r.

    The order is lexicographic in the component index, each component being
    compared in reverse-lex order (so `((2,), ())` comes before
    `((1, 1), ())` which comes before `((1,), (1,))`).
    """
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for comp in compositions(r, d):
        out.extend(product(*(tuple(partitions(c)) for c in comp)))
    out.sort(reverse=True)
    return out


def size(mp: MultiPartition) -> int:
    return sum(sum(p) for p in mp)


def height(p: Partition) -> int:
    return len(p)


def beta_number(p: Partition) -> tuple[int, ...]:
    h = len(p)
    return tuple(h + part - i for i, part in enumerate(p, start=1))


def partition_from_beta(beta: Sequence[int]) -> Partition:
    """Inverse of `beta_number` (zero parts are dropped)."""
    h = len(beta)
    parts = sorted((b - (h - i) for i, b in enumerate(beta, start=1)), reverse=True)
    return tuple(x for x in parts if x > 0)


def shift(beta: Sequence[int], m: int) -> tuple[int, ...]:
    if m < 0:
        raise ValueError(f"shift must be non-negative, got {m}")
    return tuple(b + m for b in beta) + tuple(range(m - 1, -1, -1))


@dataclass(frozen=True)
class Symbol:
    """A charged standard symbol: one shifted beta-number per component."""
    rows: tuple[tuple[int, ...], ...]
    shift_base: int


def charged_height(mp: MultiPartition, weights: Sequence[int]) -> int:
    if len(weights) != len(mp):
        raise ValueError(f"weights has length {len(weights)}, expected {len(mp)}")
    return max(len(p) - w for p, w in zip(mp, weights))


def charged_symbol(
    mp: MultiPartition,
    weights: Sequence[int],
    floor: int | None = None,
) -> Symbol:
    """
    The `weights`-charged standard symbol of `mp`.

    Row a is the beta-number of component a shifted by `B - hc[a]` where
    `hc[a] = h[a] - weights[a]` and `B` is `floor` (default: the charged
    height `max(hc)`). All-zero weights give the ordinary symbol.
    """
    hc = charged_height(mp, weights)
    base = hc if floor is None else floor
    if base < hc:
        raise ValueError(f"floor {base} is below the charged height {hc}")
    rows = tuple(
        shift(beta_number(p), base - (len(p) - w))
        for p, w in zip(mp, weights)
    )
    return Symbol(rows, base)


def content(sym: Symbol) -> Counter:
    c: Counter = Counter()
    for row in sym.rows:
        c.update(row)
    return c


def content_key(mp: MultiPartition, weights: Sequence[int], floor: int) -> tuple[int, ...]:
    """Sorted content at a fixed floor; a hashable form of `content`."""
    return tuple(sorted(
        x for row in charged_symbol(mp, weights, floor).rows for x in row
    ))


def contents_equal(
    mp1: MultiPartition,
    mp2: MultiPartition,
    weights: Sequence[int],
) -> bool:
    """
    Compare the charged contents of two multipartitions of equal size.

    Both symbols are built at the common floor
    `max(charged_height(mp1), charged_height(mp2))`; symbols at different
    floors have different lengths and are never comparable directly.
    """
    if len(mp1) != len(mp2):
        raise ValueError("multipartitions have different numbers of components")
    if size(mp1) != size(mp2):
        raise ValueError("multipartitions have different sizes")
    floor = max(charged_height(mp1, weights), charged_height(mp2, weights))
    return (
        content(charged_symbol(mp1, weights, floor))
        == content(charged_symbol(mp2, weights, floor))
    )
