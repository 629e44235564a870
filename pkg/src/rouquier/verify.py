"""
Property suites, one per module, run at bounded sizes with a fixed seed.

Each check returns a `Check`; a suite is a list of them. The same checks back
both `rouquier verify` and the acceptance tests.
"""

from __future__ import annotations

import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .ariki_koike import (
    AKSpecialization, Linear, NZero, blocks_for_hyperplane,
    hyperplanes_containing, rouquier_blocks,
)
from .blocks import BlockPartition
from .combinatorics import (
    beta_number, charged_height, content_key, contents_equal, multipartitions,
    partition_from_beta, partitions, shift,
)
from .cyclotomic import (
    cyclotomic_polynomial, is_essential_pair, norm_one_minus_root,
    prime_divisors_of_root_difference, prime_factors,
)
from .descent import (
    GroupParams, ak_parent_spec, blocks_for_group, is_d_stuttering,
    orbits, permute_components, rank2_rotation, tau_d,
)
from .oracles import bfs_blocks, conjugacy_class_count, rank2_blocks_from_schur, rank2_spec_on
from .rank2 import (
    CEq, Lin, Rank2Spec, Two, A_value, a_from_schur, a_value, aA_sum,
    hyperplane_monomial, hyperplane_prime, rank2_blocks,
    rank2_blocks_for_hyperplane, rank2_hyperplanes, rank2_hyperplanes_containing,
    schur_element,
)
from .schur import CycloFactor, FactoredSchurElement, is_essential_for, valuation_and_degree

__all__ = ["Check", "SUITES", "run_suite", "run_all"]

log = logging.getLogger(__name__)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = field(default=0.0, compare=False)


def _timed(name: str, fn: Callable[[], str | None]) -> Check:
    t0 = time.perf_counter()
    try:
        failure = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        failure = f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    log.debug("%s: %.2fs", name, dt)
    return Check(name, failure is None, failure or "", dt)


# -- combinatorics -------------------------------------------------------------

def beta_roundtrip(max_size: int = 12) -> str | None:
    for n in range(max_size + 1):
        for p in partitions(n):
            beta = beta_number(p)
            if partition_from_beta(beta) != p:
                return f"beta round trip fails for {p}"
            for m in range(4):
                if partition_from_beta(shift(beta, m)) != p:
                    return f"shifted beta round trip fails for {p}, m={m}"
    return None


def _direct_content(mp, weights, floor):
    # row a: lambda_i - i + H over i = 1..H with H = floor + weights[a]
    out = Counter()
    for p, w in zip(mp, weights):
        h = floor + w
        out.update(p[i - 1] - i + h if i <= len(p) else h - i for i in range(1, h + 1))
    return out


def _pairs_by_size(max_size):
    for n in range(max_size + 1):
        yield n, multipartitions(2, n)


def contents_floor_stability(max_size: int = 6, max_k: int = 3) -> str | None:
    """Content comparison does not depend on the floor, and matches a direct count."""
    for n, mps in _pairs_by_size(max_size):
        for k in range(-max_k, max_k + 1):
            w = (0, k)
            top = max(charged_height(mp, w) for mp in mps)
            for mp in mps:
                base = content_key(mp, w, top)
                raised = content_key(mp, w, top + 1)
                expect = tuple(sorted([0, 0] + [x + 1 for x in base]))
                if raised != expect:
                    return f"raising the floor is not a +1 shift for {mp}, k={k}"
                if Counter(base) != _direct_content(mp, w, top):
                    return f"content of {mp} at k={k} disagrees with the direct count"
            for x, y in combinations(mps, 2):
                if contents_equal(x, y, w) != (content_key(x, w, top + 2) == content_key(y, w, top + 2)):
                    return f"contents_equal({x}, {y}, {w}) depends on the floor"
    return None


def contents_equivalence(max_size: int = 6, max_k: int = 3) -> str | None:
    """contents_equal is reflexive, symmetric and transitive."""
    for n, mps in _pairs_by_size(max_size):
        for k in range(-max_k, max_k + 1):
            w = (0, k)
            rel = {(x, y): contents_equal(x, y, w) for x in mps for y in mps}
            for x in mps:
                if not rel[x, x]:
                    return f"not reflexive at {x}"
            for x in mps:
                for y in mps:
                    if rel[x, y] != rel[y, x]:
                        return f"not symmetric at {x}, {y}"
                    if rel[x, y]:
                        for z in mps:
                            if rel[y, z] and not rel[x, z]:
                                return f"not transitive at {x}, {y}, {z}"
    return None


# -- cyclotomic ----------------------------------------------------------------

def cyclotomic_vs_norm(max_d: int = 24) -> str | None:
    for d in range(1, max_d + 1):
        for s in range(d):
            for t in range(s + 1, d):
                fast = prime_divisors_of_root_difference(d, s, t)
                norm = abs(norm_one_minus_root(d, t - s))
                if fast != prime_factors(norm):
                    return f"d={d}, s={s}, t={t}: criterion {sorted(fast)} vs norm {norm}"
                if is_essential_pair(d, s, t) != (norm != 1):
                    return f"d={d}, s={s}, t={t}: essential flag disagrees with norm {norm}"
    return None


def cyclotomic_product(max_d: int = 24) -> str | None:
    """prod over n | d of Phi_n equals x^d - 1."""
    for d in range(1, max_d + 1):
        prod = [1]
        for n in range(1, d + 1):
            if d % n == 0:
                phi = cyclotomic_polynomial(n)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
        if prod != [-1] + [0] * (d - 1) + [1]:
            return f"cyclotomic factors of x^{d} - 1 do not multiply back"
    return None


# -- schur ---------------------------------------------------------------------

def schur_inversion(seed: int = 0, trials: int = 300) -> str | None:
    """Negating the specialization swaps valuation and degree (up to sign)."""
    rng = random.Random(seed)
    for _ in range(trials):
        nvars = rng.randint(1, 5)
        facs = []
        for _ in range(rng.randint(0, 4)):
            mono = [rng.randint(-3, 3) for _ in range(nvars)]
            mono[rng.randrange(nvars)] = 1  # keeps it primitive
            facs.append(CycloFactor(tuple(mono), rng.randint(1, 3), None, rng.randint(1, 2)))
        f = FactoredSchurElement(frozenset(), (0,) * nvars, tuple(facs))
        w = [rng.randint(-5, 5) for _ in range(nvars)]
        val, deg = valuation_and_degree(f, w)
        nval, ndeg = valuation_and_degree(f, [-x for x in w])
        if val > deg or (nval, ndeg) != (-deg, -val):
            return f"inversion symmetry fails for {f} at {w}"
    return None


# -- ariki_koike ---------------------------------------------------------------

def _random_ak_spec(rng, max_d, max_r, spread=2, fixed=False):
    d, r = (max_d, max_r) if fixed else (rng.randint(1, max_d), rng.randint(1, max_r))
    return AKSpecialization(d, r, tuple(rng.randint(-spread, spread) for _ in range(d)),
                            rng.randint(-spread, spread))


def ak_oracle_equivalence(max_d: int = 3, max_r: int = 5, count: int = 100, seed: int = 0,
                          per_shape: bool = False) -> str | None:
    """Union-find blocks equal BFS components; `per_shape` draws `count` specs for every (d, r)."""
    rng = random.Random(seed)
    if per_shape:
        shapes = [(d, r) for d in range(1, max_d + 1) for r in range(1, max_r + 1)]
        specs = (_random_ak_spec(rng, d, r, fixed=True) for d, r in shapes for _ in range(count))
    else:
        specs = (_random_ak_spec(rng, max_d, max_r) for _ in range(count))
    for spec in specs:
        if rouquier_blocks(spec) != bfs_blocks(spec):
            return f"union-find and BFS disagree at {spec}"
    return None


def ak_structure(max_d: int = 3, max_r: int = 4, count: int = 60, seed: int = 0) -> str | None:
    """Blocks are unions of per-hyperplane blocks; Linear blocks agree off {s,t}; join order is irrelevant."""
    rng = random.Random(seed)
    for _ in range(count):
        spec = _random_ak_spec(rng, max_d, max_r)
        blocks = rouquier_blocks(spec)
        labels = blocks.labels
        hyps = hyperplanes_containing(spec)
        parts = [blocks_for_hyperplane(h, spec.d, spec.r, labels) for h in hyps]
        for h, part in zip(hyps, parts):
            if not part.refines(blocks):
                return f"blocks of {spec} are not unions of the blocks for {h}"
            if isinstance(h, Linear):
                for b in part.blocks:
                    off = {tuple(p for a, p in enumerate(mp) if a not in (h.s, h.t)) for mp in b}
                    if len(off) != 1:
                        return f"block for {h} mixes components off {{s,t}}"
        if parts and BlockPartition.join_all(labels, reversed(parts)) != blocks:
            return f"join order changes the blocks of {spec}"
    return None


def ak_swap_invariance(max_d: int = 4, max_r: int = 4, count: int = 40, seed: int = 0) -> str | None:
    """If m_s = m_t for an essential pair, swapping components s, t preserves the blocks."""
    rng = random.Random(seed)
    for _ in range(count):
        d = rng.randint(2, max_d)
        r = rng.randint(1, max_r)
        pairs = [(s, t) for s in range(d) for t in range(s + 1, d) if is_essential_pair(d, s, t)]
        s, t = rng.choice(pairs)
        m = [rng.randint(-2, 2) for _ in range(d)]
        m[t] = m[s]
        spec = AKSpecialization(d, r, tuple(m), rng.randint(-2, 2))
        blocks = rouquier_blocks(spec)
        perm = list(range(d))
        perm[s], perm[t] = t, s
        if blocks.map_labels(lambda mp: permute_components(mp, perm)) != blocks.as_sets():
            return f"blocks of {spec} not invariant under swapping {s}, {t}"
    return None


def ak_examples() -> str | None:
    lab = multipartitions(2, 2)
    e = {
        "nzero": blocks_for_hyperplane(NZero(), 2, 2).as_sets(),
        "lin001": blocks_for_hyperplane(Linear(0, 0, 1), 2, 2).as_sets(),
    }
    if e["nzero"] != BlockPartition.from_blocks(lab, [[((2,), ()), ((1, 1), ())], [((), (2,)), ((), (1, 1))]]).as_sets():
        return "N=0 example"
    if e["lin001"] != BlockPartition.from_blocks(lab, [[((2,), ()), ((), (2,))], [((1, 1), ()), ((), (1, 1))]]).as_sets():
        return "k=0 example"
    if not blocks_for_hyperplane(Linear(1, 0, 1), 2, 2).same_block(((2,), ()), ((), (1, 1))):
        return "k=1 example"
    for r in range(1, 6):
        if len(rouquier_blocks(AKSpecialization(1, r, (3,), 0))) != 1:
            return f"d=1, n=0, r={r} is not a single block"
    return None


# -- rank2 ---------------------------------------------------------------------

def rank2_golden(ds=(2, 3, 4), seed: int = 0) -> str | None:
    """The case list agrees with the blocks re-derived from Schur elements and a + A."""
    rng = random.Random(seed)
    for d in ds:
        for h in [None] + rank2_hyperplanes(d):
            if rank2_blocks_for_hyperplane(h, d) != rank2_blocks_from_schur(h, d, rng):
                return f"d={d}, h={h}: case list and Schur derivation differ"
    return None


def _random_rank2(rng, d, spread=5):
    return Rank2Spec(d, [rng.randint(-spread, spread) for _ in range(2)],
                     [rng.randint(-spread, spread) for _ in range(2)],
                     [rng.randint(-spread, spread) for _ in range(d)])


def rank2_aA_constancy(max_d: int = 5, count: int = 200, seed: int = 0) -> str | None:
    rng = random.Random(seed)
    for d in range(1, max_d + 1):
        for _ in range(count):
            spec = _random_rank2(rng, d)
            for b in rank2_blocks(spec).blocks:
                if len({aA_sum(x, spec) for x in b}) != 1:
                    return f"a+A not constant on {b} at {spec}"
        # per-hyperplane, at points on exactly that hyperplane
        for h in rank2_hyperplanes(d):
            spec = rank2_spec_on(h, d, rng, spread=5)
            for b in rank2_blocks_for_hyperplane(h, d).blocks:
                if len({aA_sum(x, spec) for x in b}) != 1:
                    return f"a+A not constant on {b} for {h} at {spec}"
    return None


def rank2_a_and_A(max_d: int = 5, count: int = 200, seed: int = 0) -> str | None:
    rng = random.Random(seed)
    for d in range(1, max_d + 1):
        for _ in range(count):
            spec = _random_rank2(rng, d)
            for b in rank2_blocks(spec).blocks:
                if len({a_value(x, spec) for x in b}) != 1:
                    return f"a not constant on {b} at {spec}"
                if len({A_value(x, spec) for x in b}) != 1:
                    return f"A not constant on {b} at {spec}"
            for x in rank2_blocks(spec).labels:
                a, A = a_value(x, spec), A_value(x, spec)
                if (2 * a).denominator != 1:
                    return f"a({x}) = {a} is not in (1/2)Z at {spec}"
                if (a, A) != a_from_schur(x, spec):
                    return f"closed form {(a, A)} vs Schur {a_from_schur(x, spec)} for {x} at {spec}"
    return None


def rank2_structure(max_d: int = 5, count: int = 50, seed: int = 0) -> str | None:
    """Degree-2 pairs always share a block; linear characters without an essential hyperplane are alone."""
    rng = random.Random(seed)
    for d in range(1, max_d + 1):
        for _ in range(count):
            spec = _random_rank2(rng, d, spread=2)
            blocks = rank2_blocks(spec)
            hyps = rank2_hyperplanes_containing(spec)
            for x in blocks.labels:
                if isinstance(x, Two) and not blocks.same_block(x, Two(x.k, x.l, 3 - x.sup)):
                    return f"{x} separated from its partner at {spec}"
                if isinstance(x, Lin):
                    f = schur_element(x, d)
                    ess = any(is_essential_for(f, hyperplane_monomial(h, d), hyperplane_prime(h, d)) for h in hyps)
                    if not ess and len(blocks.block_of(x)) != 1:
                        return f"{x} has no essential hyperplane but is not alone at {spec}"
    return None


def rank2_examples() -> str | None:
    if len(rank2_hyperplanes(1)) != 2 or len(rank2_hyperplanes(2)) != 7:
        return "hyperplane counts for d = 1, 2"
    s = Rank2Spec(2, (1, 0), (0, 0), (0, 0))
    x = Lin(0, 0, 0)
    if (aA_sum(x, s), a_value(x, s), A_value(x, s)) != (2, 0, 2):
        return "a/A example"
    if aA_sum(Two(0, 1, 1), Rank2Spec(2, (0, 0), (0, 0), (0, 0))) != 0:
        return "a+A example for a degree-2 character"
    if rank2_hyperplanes_containing(Rank2Spec(2, (0, 0), (1, 0), (0, 0))) != [rank2_hyperplanes(2)[0], CEq(0, 1)]:
        return "containment example"
    return None


# -- descent -------------------------------------------------------------------

def _groups(max_de, max_r):
    for de in range(1, max_de + 1):
        for e in range(1, de + 1):
            if de % e == 0:
                for r in range(2, max_r + 1):
                    yield GroupParams(de, e, r)


def _weight_grid(rng, d, count):
    yield (0,) * d, 0
    yield (0,) * d, 1
    for _ in range(count):
        yield tuple(rng.randint(-2, 2) for _ in range(d)), rng.randint(-2, 2)


def descent_stability(max_de: int = 4, max_r: int = 4, count: int = 8, seed: int = 0) -> str | None:
    """Repeated-weight parent blocks are stable under tau_d and every (j, j+kd) transposition."""
    rng = random.Random(seed)
    for g in _groups(max_de, max_r):
        de, d = g.de, g.d
        transpositions = []
        for j in range(de):
            for j2 in range(j + d, de, d):
                perm = list(range(de))
                perm[j], perm[j2] = j2, j
                transpositions.append(perm)
        for m, n in _weight_grid(rng, d, count):
            parent = rouquier_blocks(ak_parent_spec(g, m, n))
            sets = parent.as_sets()
            if parent.map_labels(lambda mp: tau_d(mp, d)) != sets:
                return f"G({de},{g.e},{g.r}), m={m}, n={n}: not tau_d-stable"
            for perm in transpositions:
                if parent.map_labels(lambda mp: permute_components(mp, perm)) != sets:
                    return f"G({de},{g.e},{g.r}), m={m}, n={n}: not stable under {perm}"
    return None


def descent_counts(max_de: int = 6, max_r: int = 4, count: int = 2, seed: int = 0) -> str | None:
    """Descended label counts match brute-force class counts; orbit bookkeeping is consistent."""
    rng = random.Random(seed)
    for de, e, want in ((2, 2, 4), (3, 3, 3), (4, 4, 5)):
        got = len(blocks_for_group(GroupParams(de, e, 2), (0,) * (de // e), 1).labels)
        if got != want:
            return f"G({de},{e},2) has {got} characters, expected {want}"
    for g in _groups(max_de, max_r):
        classes = conjugacy_class_count(g.de, g.e, g.r)
        for m, n in _weight_grid(rng, g.d, count):
            res = blocks_for_group(g, m, n)
            if len(res.labels) != classes:
                return f"G({g.de},{g.e},{g.r}): {len(res.labels)} characters vs {classes} classes"
            if res.path == "ak-descent":
                orbs = orbits(res.parent_blocks.labels, lambda mp: tau_d(mp, g.d), g.e)
                if sum(o.stabilizer_order for o in orbs) != len(res.labels):
                    return f"G({g.de},{g.e},{g.r}): sum of stabilizer orders mismatch"
                if any(len(o.members) * o.stabilizer_order != g.e for o in orbs):
                    return f"G({g.de},{g.e},{g.r}): orbit-stabilizer identity fails"
    return None


def stuttering_count(max_de: int = 6, max_r: int = 6) -> str | None:
    for de in range(1, max_de + 1):
        for e in range(1, de + 1):
            if de % e:
                continue
            d = de // e
            for r in range(0, max_r + 1):
                got = sum(is_d_stuttering(mp, d, e) for mp in multipartitions(de, r))
                want = len(multipartitions(d, r // e)) if r % e == 0 else 0
                if got != want:
                    return f"de={de}, e={e}, r={r}: {got} stuttering vs {want}"
    return None


def descent_stabilizer_coprime(max_de: int = 6, max_r: int = 4, count: int = 4, seed: int = 0) -> str | None:
    """Non-singleton parent blocks with a non-stuttering member contain, for each p | e, a member with stabilizer prime to p."""
    rng = random.Random(seed)
    for g in _groups(max_de, max_r):
        if g.e == 1 or (g.r == 2 and g.e % 2 == 0):
            continue
        for m, n in _weight_grid(rng, g.d, count):
            parent = rouquier_blocks(ak_parent_spec(g, m, n))
            stab = {x: o.stabilizer_order
                    for o in orbits(parent.labels, lambda mp: tau_d(mp, g.d), g.e) for x in o.members}
            for b in parent.blocks:
                if len(b) == 1 or all(is_d_stuttering(x, g.d, g.e) for x in b):
                    continue
                for p in prime_factors(g.e):
                    if all(stab[x] % p == 0 for x in b):
                        return f"G({g.de},{g.e},{g.r}), m={m}, n={n}: no member prime to {p}"
    return None


def three_hyperplanes(max_d: int = 6) -> str | None:
    """The C_k1=C_k3 partition refines the join of the C_k1=C_k2 and C_k2=C_k3 ones."""
    for d in range(3, max_d + 1):
        for k1, k2, k3 in combinations(range(d), 3):
            trio = [(k1, k2), (k2, k3), (k1, k3)]
            if not all(is_essential_pair(d, *p) for p in trio):
                continue
            for a, b, c in ((trio[0], trio[1], trio[2]), (trio[0], trio[2], trio[1]), (trio[1], trio[2], trio[0])):
                j = rank2_blocks_for_hyperplane(CEq(*a), d).join(rank2_blocks_for_hyperplane(CEq(*b), d))
                if not rank2_blocks_for_hyperplane(CEq(*c), d).refines(j):
                    return f"d={d}: {c} is not covered by {a} and {b}"
    return None


def rank2_descent_invariants(max_de: int = 8, count: int = 20, seed: int = 0) -> str | None:
    """Rotation orbits have size p, descended blocks carry constant a and A, and scaling weights changes nothing."""
    rng = random.Random(seed)
    for de in range(2, max_de + 1, 2):
        for e in range(4, de + 1, 2):
            if de % e:
                continue
            g, p, d = GroupParams(de, e, 2), e // 2, de // e
            for _ in range(count):
                m = tuple(rng.randint(-2, 2) for _ in range(d))
                a = (rng.randint(-2, 2), rng.randint(-2, 2))
                b = (rng.randint(-2, 2), rng.randint(-2, 2))
                res = blocks_for_group(g, m, 0, a, b)
                spec = res.parent_spec
                for o in orbits(res.parent_blocks.labels, lambda x: rank2_rotation(x, p, d), p):
                    if len(o.members) != p:
                        return f"G({de},{e},2): orbit of size {len(o.members)}"
                for blk in res.blocks.blocks:
                    above = [x for lbl in blk for x in _orbit_members(lbl.orbit, p, d)]
                    if len({(a_value(x, spec), A_value(x, spec)) for x in above}) != 1:
                        return f"G({de},{e},2): a/A not constant on descended block {blk}"
                scaled = Rank2Spec(spec.d, [3 * x for x in spec.a], [3 * x for x in spec.b], [3 * x for x in spec.c])
                if rank2_blocks(scaled) != res.parent_blocks:
                    return f"G({de},{e},2): scaling the weights changes the blocks"
    for _ in range(count):
        spec = _random_ak_spec(rng, 3, 4)
        scaled = AKSpecialization(spec.d, spec.r, tuple(2 * x for x in spec.m), 2 * spec.n)
        if rouquier_blocks(scaled) != rouquier_blocks(spec):
            return f"scaling {spec} changes its blocks"
    return None


def _orbit_members(x, p, d):
    out, y = [x], rank2_rotation(x, p, d)
    while y != x:
        out.append(y)
        y = rank2_rotation(y, p, d)
    return out


# -- suites --------------------------------------------------------------------

def _combinatorics(max_d, max_r, seed):
    return [
        _timed("beta round trip (|p| <= 12)", lambda: beta_roundtrip(12)),
        _timed("content floor stability", lambda: contents_floor_stability(min(6, max_r + 2), 3)),
        _timed("content equivalence relation", lambda: contents_equivalence(min(5, max_r + 1), 3)),
    ]


def _cyclotomic(max_d, max_r, seed):
    bound = max(6 * max_d, 2)
    return [
        _timed(f"criterion vs norm (d <= {bound})", lambda: cyclotomic_vs_norm(bound)),
        _timed("cyclotomic polynomials multiply to x^d - 1", lambda: cyclotomic_product(bound)),
    ]


def _schur(max_d, max_r, seed):
    return [_timed("inversion swaps valuation and degree", lambda: schur_inversion(seed))]


def _ariki_koike(max_d, max_r, seed):
    d, r = min(max_d, 3), min(max_r, 5)
    return [
        _timed("worked examples", ak_examples),
        _timed(f"union-find vs BFS (d <= {d}, r <= {r})", lambda: ak_oracle_equivalence(d, r, 100, seed)),
        _timed("blocks are unions of per-hyperplane blocks", lambda: ak_structure(d, min(r, 4), 60, seed)),
        _timed("swap invariance for equal essential weights", lambda: ak_swap_invariance(max(2, min(max_d, 4)), min(r, 4), 40, seed)),
    ]


def _rank2(max_d, max_r, seed):
    d = min(max_d, 5)
    return [
        _timed("examples", rank2_examples),
        _timed(f"case list vs Schur derivation (d <= {max(d, 2)})", lambda: rank2_golden(range(1, max(d, 2) + 1), seed)),
        _timed("a+A constant on blocks", lambda: rank2_aA_constancy(d, 200, seed)),
        _timed("a, A constant on blocks and equal to Schur valuation", lambda: rank2_a_and_A(d, 200, seed)),
        _timed("pairs together, non-essential linears alone", lambda: rank2_structure(d, 50, seed)),
    ]


def _descent(max_d, max_r, seed):
    de, r = max(max_d, 2), max(max_r, 2)
    return [
        _timed(f"tau_d and exchange stability (de <= {min(de, 4)}, r <= {min(r, 4)})",
               lambda: descent_stability(min(de, 4), min(r, 4), 8, seed)),
        _timed(f"character counts vs conjugacy classes (de <= {de}, r <= {min(r, 4)})",
               lambda: descent_counts(de, min(r, 4), 2, seed)),
        _timed(f"stuttering count (de <= {de}, r <= {r})", lambda: stuttering_count(de, r)),
        _timed("stabilizer prime to each p | e", lambda: descent_stabilizer_coprime(de, min(r, 4), 4, seed)),
        _timed("three-hyperplane closure", lambda: three_hyperplanes(max(de, 3))),
        _timed("rank-2 descent invariants", lambda: rank2_descent_invariants(max(2 * de, 4), 20, seed)),
    ]


SUITES: dict[str, Callable[[int, int, int], list[Check]]] = {
    "combinatorics": _combinatorics,
    "cyclotomic": _cyclotomic,
    "schur": _schur,
    "ariki_koike": _ariki_koike,
    "rank2": _rank2,
    "descent": _descent,
}


def run_suite(name: str, max_d: int = 4, max_r: int = 4, seed: int = 0) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_d, max_r, seed)


def run_all(max_d: int = 4, max_r: int = 4, seed: int = 0) -> dict[str, list[Check]]:
    return {name: run_suite(name, max_d, max_r, seed) for name in SUITES}

