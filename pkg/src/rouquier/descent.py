"""
Clifford descent from G(de,1,r) to G(de,e,r), and from G(2pd,2,2) to
G(2pd,2p,2).

In both cases the Hecke algebra of the smaller group is the fixed part of a
cyclic-group grading on a cyclotomic Hecke algebra of the larger one,
specialized at a weight system repeated across the cyclic group. The dual
cyclic group acts on the parent characters; parent blocks are stable under it
and the child blocks are read off from orbits and stabilizers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, NamedTuple, Sequence

from .ariki_koike import AKSpecialization, hyperplanes_containing, rouquier_blocks
from .blocks import BlockPartition, InvariantError
from .combinatorics import MultiPartition
from .rank2 import Lin, Rank2Spec, Two, rank2_blocks, rank2_hyperplanes_containing

__all__ = [
    "Orbit", "DescLabel", "GroupParams", "GroupBlocks", "tau_d",
    "is_d_stuttering", "permute_components", "orbits", "descend_ak",
    "rank2_rotation", "descend_rank2", "ak_parent_spec", "rank2_parent_spec",
    "blocks_for_group",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Orbit:
    members: tuple
    stabilizer_order: int

    @property
    def id(self):
        return self.members[0]


class DescLabel(NamedTuple):
    """A character of the subalgebra: copy `copy` above the orbit whose least member is `orbit`."""
    orbit: Hashable
    copy: int


@dataclass(frozen=True)
class GroupParams:
    de: int
    e: int
    r: int

    def __post_init__(self):
        if self.de < 1 or self.e < 1:
            raise ValueError("de and e must be positive")
        if self.de % self.e:
            raise ValueError(f"e = {self.e} does not divide de = {self.de}")
        if self.r < 2:
            raise ValueError(f"r = {self.r} is out of range (r >= 2 required)")

    @property
    def d(self) -> int:
        return self.de // self.e


def tau_d(mp: MultiPartition, d: int) -> MultiPartition:
    """Cyclic permutation by d-packages: the last package moves to the front."""
    if d < 1 or len(mp) % d:
        raise ValueError(f"d = {d} does not divide the number of components {len(mp)}")
    return mp[-d:] + mp[:-d]


def is_d_stuttering(mp: MultiPartition, d: int, e: int) -> bool:
    if len(mp) != d * e:
        raise ValueError(f"expected {d * e} components, got {len(mp)}")
    return tau_d(mp, d) == mp


def permute_components(mp: MultiPartition, perm: Sequence[int]) -> MultiPartition:
    """`tau(nu) = (nu[tau(0)], nu[tau(1)], ...)` for a permutation given as a sequence."""
    return tuple(mp[perm[a]] for a in range(len(mp)))


def orbits(labels: Sequence, action: Callable, group_order: int) -> list[Orbit]:
    """
    Orbits of the cyclic group generated by `action`, in order of least member.

    Raises InvariantError if `action` does not return to the start within
    `group_order` steps or leaves the label set.
    """
    order = {lbl: i for i, lbl in enumerate(labels)}
    seen: set = set()
    out = []
    for lbl in labels:
        if lbl in seen:
            continue
        members = [lbl]
        x = action(lbl)
        while x != lbl:
            if x not in order:
                raise InvariantError(f"action maps into an unknown label {x!r}")
            members.append(x)
            if len(members) > group_order:
                raise InvariantError(f"action on {lbl!r} does not close within {group_order} steps")
            x = action(x)
        if group_order % len(members):
            raise InvariantError(f"orbit size {len(members)} does not divide {group_order}")
        seen.update(members)
        members.sort(key=order.__getitem__)
        out.append(Orbit(tuple(members), group_order // len(members)))
    return out


def _check_stable(blocks: BlockPartition, action: Callable, what: str) -> None:
    for block in blocks.blocks:
        if not all(blocks.same_block(block[0], action(x)) for x in block):
            raise InvariantError(f"parent blocks are not stable under {what}")


def descend_ak(parent: BlockPartition, d: int, e: int) -> BlockPartition:
    """
    Blocks of the G(de,e,r) subalgebra from the blocks of G(de,1,r) at the
    repeated weight system.

    A parent singleton {lambda} with lambda d-stuttering splits into e
    singletons; every other parent block gives one block made of all copies
    above the orbits it meets.
    """
    act = lambda mp: tau_d(mp, d)  # noqa: E731
    _check_stable(parent, act, "tau_d")
    orbs = orbits(parent.labels, act, e)
    orbit_of = {m: o for o in orbs for m in o.members}
    labels = [DescLabel(o.id, c) for o in orbs for c in range(o.stabilizer_order)]
    blocks = []
    for block in parent.blocks:
        if len(block) == 1 and is_d_stuttering(block[0], d, e):
            continue  # stays as e singletons
        touched = {orbit_of[x] for x in block}
        blocks.append([DescLabel(o.id, c) for o in touched for c in range(o.stabilizer_order)])
    return BlockPartition.from_blocks(labels, blocks)


def rank2_rotation(lbl, p: int, d: int):
    """
    The generator of the dual group of order p on Irr(G(2pd,2,2)): shift every
    z-index by d modulo pd.

    A degree-2 pair {k, k + pd/2} is mapped to itself as a set; for it the
    superscript is exchanged whenever the shift reverses the order of the
    indices, which makes every orbit have exactly p elements.
    """
    n = p * d
    if isinstance(lbl, Lin):
        return Lin(lbl.i, lbl.j, (lbl.k + d) % n)
    k, l = (lbl.k + d) % n, (lbl.l + d) % n
    sup = lbl.sup
    if k > l:
        k, l = l, k
        if p % 2 == 0 and (l - k) * 2 == n:
            sup = 3 - sup
    return Two(k, l, sup)


def descend_rank2(parent: BlockPartition, p: int, d: int) -> BlockPartition:
    """
    Blocks of G(2pd,2p,2) from those of G(2pd,2,2) at the p-fold repeated
    weights: each orbit of size p contributes one character and the blocks
    are the images of the parent blocks.
    """
    act = lambda lbl: rank2_rotation(lbl, p, d)  # noqa: E731
    _check_stable(parent, act, "the z-index rotation")
    orbs = orbits(parent.labels, act, p)
    for o in orbs:
        if o.stabilizer_order != 1:
            raise InvariantError(f"orbit of {o.id!r} has size {len(o.members)}, expected {p}")
    orbit_of = {m: o for o in orbs for m in o.members}
    labels = [DescLabel(o.id, 0) for o in orbs]
    blocks = [{DescLabel(orbit_of[x].id, 0) for x in block} for block in parent.blocks]
    # distinct parent blocks of one orbit-image coincide by stability
    unique = {frozenset(b) for b in blocks}
    return BlockPartition.from_blocks(labels, unique)


def ak_parent_spec(params: GroupParams, m: Sequence[int], n: int) -> AKSpecialization:
    """Ariki-Koike specialization of G(de,1,r) with weights m repeated e times and x -> q^(e n)."""
    return AKSpecialization(params.de, params.r, tuple(m) * params.e, params.e * n)


def rank2_parent_spec(p: int, d: int, a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> Rank2Spec:
    """G(2pd,2,2) specialization: a, b scaled by p, c repeated p times."""
    return Rank2Spec(
        p * d,
        tuple(p * x for x in a),
        tuple(p * x for x in b),
        tuple(c[k % d] for k in range(p * d)),
    )


@dataclass(frozen=True)
class GroupBlocks:
    """Result of `blocks_for_group`: the blocks plus how they were obtained."""
    params: GroupParams
    path: str  # "ariki-koike", "ak-descent", "rank2" or "rank2-descent"
    blocks: BlockPartition
    parent_blocks: BlockPartition
    parent_spec: AKSpecialization | Rank2Spec
    hyperplanes: tuple

    @property
    def labels(self):
        return self.blocks.labels


def blocks_for_group(
    params: GroupParams,
    m: Sequence[int],
    n: int,
    a: Sequence[int] | None = None,
    b: Sequence[int] | None = None,
) -> GroupBlocks:
    """
    Rouquier blocks of the cyclotomic Hecke algebra of G(de,e,r).

    `m` has d = de/e entries (exponents of the parameters of the generator of
    order d) and `n` is the exponent of the braid-reflection parameter. For
    r = 2 with e even the reflections fall into three classes; their exponents
    are `a` and `b` (default (n, 0) each) together with c = m.
    """
    m = tuple(m)
    if len(m) != params.d:
        raise ValueError(f"m has {len(m)} entries, expected d = de/e = {params.d}")
    de, e, r, d = params.de, params.e, params.r, params.d
    if r == 2 and e % 2 == 0:
        p = e // 2
        a = (n, 0) if a is None else tuple(a)
        b = (n, 0) if b is None else tuple(b)
        spec = rank2_parent_spec(p, d, a, b, m)
        parent = rank2_blocks(spec)
        hyps = tuple(rank2_hyperplanes_containing(spec))
        if p == 1:
            return GroupBlocks(params, "rank2", parent, parent, spec, hyps)
        log.debug("descending G(%d,2,2) -> G(%d,%d,2)", de, de, e)
        return GroupBlocks(params, "rank2-descent", descend_rank2(parent, p, d), parent, spec, hyps)
    if a is not None or b is not None:
        raise ValueError("a and b are only used for r = 2 with e even")
    spec = ak_parent_spec(params, m, n)
    parent = rouquier_blocks(spec)
    hyps = tuple(hyperplanes_containing(spec))
    if e == 1:
        return GroupBlocks(params, "ariki-koike", parent, parent, spec, hyps)
    return GroupBlocks(params, "ak-descent", descend_ak(parent, d, e), parent, spec, hyps)
