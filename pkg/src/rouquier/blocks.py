"""Set partitions of ordered label sets, and the union-find used to build them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

__all__ = ["UnionFind", "BlockPartition", "InvariantError"]


class InvariantError(RuntimeError):
    """An internal consistency check failed; signals a bug upstream."""


class UnionFind:
    """Union-find over 0..n-1 whose roots are always the least index of their class."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return rx

    def merge(self, xs: Iterable[int]) -> None:
        it = iter(xs)
        first = next(it, None)
        if first is None:
            return
        for x in it:
            self.union(first, x)

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return [groups[k] for k in sorted(groups)]


@dataclass(frozen=True)
class BlockPartition:
    """
    A partition of an ordered label set into blocks.

    `labels` fixes the order; each block lists its labels in that order and
    blocks are sorted by their least label. Two partitions built over the
    same ordered labels are equal iff they have the same blocks.
    """
    labels: tuple
    blocks: tuple[tuple, ...]

    @classmethod
    def from_index_classes(cls, labels: Sequence, classes: Iterable[Iterable[int]]) -> BlockPartition:
        labels = tuple(labels)
        normalized = sorted(tuple(sorted(c)) for c in classes)
        seen = [i for c in normalized for i in c]
        if sorted(seen) != list(range(len(labels))):
            raise ValueError("classes do not form a partition of the labels")
        return cls(labels, tuple(tuple(labels[i] for i in c) for c in normalized))

    @classmethod
    def from_union_find(cls, labels: Sequence, uf: UnionFind) -> BlockPartition:
        return cls.from_index_classes(labels, uf.classes())

    @classmethod
    def from_blocks(cls, labels: Sequence, blocks: Iterable[Iterable[Hashable]]) -> BlockPartition:
        """Build from blocks given as label collections; missing labels become singletons."""
        labels = tuple(labels)
        index = {lbl: i for i, lbl in enumerate(labels)}
        uf = UnionFind(len(labels))
        covered = set()
        for block in blocks:
            idx = [index[b] for b in block]
            if covered.intersection(idx):
                raise ValueError("blocks overlap")
            covered.update(idx)
            uf.merge(idx)
        return cls.from_union_find(labels, uf)

    @classmethod
    def singletons(cls, labels: Sequence) -> BlockPartition:
        labels = tuple(labels)
        return cls(labels, tuple((lbl,) for lbl in labels))

    @classmethod
    def from_key(cls, labels: Sequence, key: Callable[[Hashable], Hashable]) -> BlockPartition:
        """Blocks are the fibres of `key`."""
        labels = tuple(labels)
        groups: dict = {}
        for i, lbl in enumerate(labels):
            groups.setdefault(key(lbl), []).append(i)
        return cls.from_index_classes(labels, groups.values())

    @classmethod
    def join_all(cls, labels: Sequence, partitions: Iterable[BlockPartition]) -> BlockPartition:
        """Finest common coarsening (transitive closure) of `partitions`."""
        labels = tuple(labels)
        index = {lbl: i for i, lbl in enumerate(labels)}
        uf = UnionFind(len(labels))
        for part in partitions:
            for block in part.blocks:
                uf.merge(index[b] for b in block)
        return cls.from_union_find(labels, uf)

    def join(self, other: BlockPartition) -> BlockPartition:
        return BlockPartition.join_all(self.labels, (self, other))

    def block_of(self, label) -> tuple:
        return self._lookup()[label]

    def _lookup(self) -> dict:
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = {lbl: b for b in self.blocks for lbl in b}
            object.__setattr__(self, "_cache", cache)
        return cache

    def same_block(self, x, y) -> bool:
        return self.block_of(x) is self.block_of(y)

    def refines(self, other: BlockPartition) -> bool:
        """True iff every block of self lies inside a block of other."""
        return all(
            all(other.same_block(b[0], x) for x in b[1:])
            for b in self.blocks
        )

    def as_sets(self) -> frozenset[frozenset]:
        return frozenset(frozenset(b) for b in self.blocks)

    def map_labels(self, f: Callable) -> frozenset[frozenset]:
        """Image of the blocks under a relabelling, as a set of sets."""
        return frozenset(frozenset(f(x) for x in b) for b in self.blocks)

    def non_trivial(self) -> tuple[tuple, ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def __len__(self) -> int:
        return len(self.blocks)
