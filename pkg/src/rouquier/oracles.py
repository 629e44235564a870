"""
Slow, independent recomputations used to cross-check the fast paths.

Nothing here is used by the main pipeline.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import permutations, product

from .ariki_koike import AKSpecialization, NZero, hyperplanes_containing
from .blocks import BlockPartition, UnionFind
from .combinatorics import contents_equal, multipartitions
from .rank2 import (
    AEq, BEq, CEq, Rank2Spec, Two, aA_sum, hyperplane_monomial,
    hyperplane_prime, rank2_hyperplanes_containing, rank2_labels, schur_element,
)
from .schur import is_essential_for

__all__ = [
    "ak_linked", "bfs_blocks", "conjugacy_class_count", "rank2_spec_on",
    "rank2_blocks_from_schur",
]


def ak_linked(h, lam, mu) -> bool:
    """Direct pairwise relation of the per-hyperplane block criterion."""
    if isinstance(h, NZero):
        return all(sum(p) == sum(q) for p, q in zip(lam, mu))
    if any(lam[a] != mu[a] for a in range(len(lam)) if a not in (h.s, h.t)):
        return False
    return contents_equal((lam[h.s], lam[h.t]), (mu[h.s], mu[h.t]), (0, h.k))


def bfs_blocks(spec: AKSpecialization) -> BlockPartition:
    """Connected components of the graph of direct links, found by BFS."""
    labels = multipartitions(spec.d, spec.r)
    hyps = hyperplanes_containing(spec)
    n = len(labels)
    adj = [[] for _ in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            if any(ak_linked(h, labels[x], labels[y]) for h in hyps):
                adj[x].append(y)
                adj[y].append(x)
    comp = [-1] * n
    classes = []
    for start in range(n):
        if comp[start] >= 0:
            continue
        comp[start] = len(classes)
        members = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = comp[start]
                    members.append(y)
                    queue.append(y)
        classes.append(members)
    return BlockPartition.from_index_classes(labels, classes)


def conjugacy_class_count(de: int, e: int, r: int) -> int:
    """
    Number of conjugacy classes of G(de,e,r), by brute force.

    An element sends e_i to zeta^x[i] e_sigma(i); classes are the orbits of
    conjugation by a generating set.
    """
    def mul(g, h):
        s, x = g
        t, y = h
        return (tuple(s[t[i]] for i in range(r)),
                tuple((y[i] + x[t[i]]) % de for i in range(r)))

    def inv(g):
        s, x = g
        sinv = [0] * r
        for i in range(r):
            sinv[s[i]] = i
        return (tuple(sinv), tuple((-x[sinv[j]]) % de for j in range(r)))

    ident = tuple(range(r))
    elements = [
        (sigma, x)
        for sigma in permutations(range(r))
        for x in product(range(de), repeat=r)
        if sum(x) % e == 0
    ]
    index = {g: i for i, g in enumerate(elements)}
    zero = (0,) * r
    gens = []
    for i in range(r - 1):
        sw = list(ident)
        sw[i], sw[i + 1] = sw[i + 1], sw[i]
        gens.append((tuple(sw), zero))
    gens.append((ident, (e % de,) + zero[1:]))
    gens.append((ident, (1, de - 1) + zero[2:]))
    uf = UnionFind(len(elements))
    for g in gens:
        ginv = inv(g)
        for idx, h in enumerate(elements):
            uf.union(idx, index[mul(mul(g, h), ginv)])
    return len(uf.classes())


def rank2_spec_on(h, d: int, rng: random.Random, spread: int = 20, tries: int = 1000) -> Rank2Spec:
    """A random integer specialization lying on h (or on no hyperplane if h is None) and on no other."""
    for _ in range(tries):
        a = [rng.randint(-spread, spread) for _ in range(2)]
        b = [rng.randint(-spread, spread) for _ in range(2)]
        c = [rng.randint(-spread, spread) for _ in range(d)]
        if isinstance(h, AEq):
            a[1] = a[0]
        elif isinstance(h, BEq):
            b[1] = b[0]
        elif isinstance(h, CEq):
            c[h.l] = c[h.k]
        elif h is not None:
            c[h.l] = c[h.k] + a[h.i] - a[1 - h.i] + b[h.j] - b[1 - h.j]
        spec = Rank2Spec(d, a, b, c)
        if rank2_hyperplanes_containing(spec) == ([] if h is None else [h]):
            return spec
    raise RuntimeError(f"no generic point found on {h}")


def rank2_blocks_from_schur(h, d: int, rng: random.Random, samples: int = 5) -> BlockPartition:
    """
    Blocks associated with h re-derived from the Schur elements alone.

    A character for which h is not essential is a block by itself, except
    that the two degree-2 characters over one pair {k, l} always share a
    block (their Schur elements have leading coefficient -2). Among the
    characters for which h is essential, blocks are the classes of equal
    a + A at generic points of h.
    """
    labels = rank2_labels(d)
    points = [rank2_spec_on(h, d, rng) for _ in range(samples)]
    if h is None:
        essential = []
    else:
        mono, prime = hyperplane_monomial(h, d), hyperplane_prime(h, d)
        essential = [x for x in labels if is_essential_for(schur_element(x, d), mono, prime)]
    groups: dict = {}
    for x in essential:
        groups.setdefault(tuple(aA_sum(x, s) for s in points), []).append(x)
    index = {x: i for i, x in enumerate(labels)}
    uf = UnionFind(len(labels))
    for g in groups.values():
        uf.merge(index[x] for x in g)
    for x in labels:
        if isinstance(x, Two) and x.sup == 1:
            uf.union(index[x], index[Two(x.k, x.l, 2)])
    return BlockPartition.from_union_find(labels, uf)

