"""
Rouquier blocks of cyclotomic Ariki-Koike algebras, i.e. of G(d,1,r).

The specialization is u_j -> zeta_d^j q^m[j], x -> q^n. The essential
hyperplanes are N = 0 and k N + M_s - M_t = 0 for -r < k < r and s < t with
zeta_d^s - zeta_d^t non-invertible. Blocks for a given specialization are the
join of the per-hyperplane partitions over all hyperplanes it lies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .blocks import BlockPartition
from .combinatorics import (
    MultiPartition, charged_height, content_key, multipartitions,
)
from .cyclotomic import is_essential_pair

__all__ = [
    "NZero", "Linear", "AKHyperplane", "AKSpecialization",
    "enumerate_hyperplanes", "hyperplanes_containing", "contains",
    "blocks_for_hyperplane", "rouquier_blocks", "format_hyperplane",
]


@dataclass(frozen=True)
class NZero:
    """The hyperplane N = 0."""


@dataclass(frozen=True)
class Linear:
    """The hyperplane k N + M_s - M_t = 0 (s < t)."""
    k: int
    s: int
    t: int


AKHyperplane = NZero | Linear


@dataclass(frozen=True)
class AKSpecialization:
    d: int
    r: int
    m: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.d < 1 or self.r < 1:
            raise ValueError("d and r must be positive")
        object.__setattr__(self, "m", tuple(self.m))
        if len(self.m) != self.d:
            raise ValueError(f"m has {len(self.m)} entries, expected d = {self.d}")


def enumerate_hyperplanes(d: int, r: int) -> list[AKHyperplane]:
    out: list[AKHyperplane] = [NZero()]
    for s in range(d):
        for t in range(s + 1, d):
            if is_essential_pair(d, s, t):
                out.extend(Linear(k, s, t) for k in range(-r + 1, r))
    return out


def contains(h: AKHyperplane, m: Sequence[int], n: int) -> bool:
    if isinstance(h, NZero):
        return n == 0
    return h.k * n + m[h.s] - m[h.t] == 0


def hyperplanes_containing(spec: AKSpecialization) -> list[AKHyperplane]:
    return [h for h in enumerate_hyperplanes(spec.d, spec.r) if contains(h, spec.m, spec.n)]


def _linear_key(h: Linear, floor: int):
    weights = (0, h.k)

    def key(mp: MultiPartition):
        rest = tuple(p for a, p in enumerate(mp) if a not in (h.s, h.t))
        return rest, content_key((mp[h.s], mp[h.t]), weights, floor)
    return key


def blocks_for_hyperplane(h: AKHyperplane, d: int, r: int,
                          labels: Sequence[MultiPartition] | None = None) -> BlockPartition:
    """
    Rouquier blocks associated with the single essential hyperplane `h`.

    For N = 0 two labels are linked iff their component sizes agree. For
    k N + M_s - M_t = 0 they are linked iff they agree off {s, t} and the
    pairs of components at s, t have equal (0, k)-charged content.
    """
    if labels is None:
        labels = multipartitions(d, r)
    if isinstance(h, NZero):
        return BlockPartition.from_key(labels, lambda mp: tuple(sum(p) for p in mp))
    # contents are compared at one floor valid for every label
    floor = max(charged_height((mp[h.s], mp[h.t]), (0, h.k)) for mp in labels)
    return BlockPartition.from_key(labels, _linear_key(h, floor))


def rouquier_blocks(spec: AKSpecialization) -> BlockPartition:
    labels = multipartitions(spec.d, spec.r)
    hyps = hyperplanes_containing(spec)
    if not hyps:
        return BlockPartition.singletons(labels)
    return BlockPartition.join_all(
        labels, (blocks_for_hyperplane(h, spec.d, spec.r, labels) for h in hyps)
    )


def format_hyperplane(h: AKHyperplane) -> str:
    if isinstance(h, NZero):
        return "N=0"
    return f"{h.k}N+M{h.s}-M{h.t}=0"
