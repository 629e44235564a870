import pytest
from hypothesis import given, strategies as st

from rouquier.blocks import BlockPartition, UnionFind

LABELS = list("abcdefg")


def test_union_find_least_root():
    uf = UnionFind(5)
    uf.union(3, 1)
    uf.union(4, 3)
    assert uf.find(4) == 1
    assert uf.classes() == [[0], [1, 3, 4], [2]]


def test_from_blocks_canonical():
    bp = BlockPartition.from_blocks(LABELS, [["e", "b"], ["g", "a"]])
    assert bp.blocks == (("a", "g"), ("b", "e"), ("c",), ("d",), ("f",))
    assert bp.same_block("g", "a")
    assert bp.block_of("c") == ("c",)
    assert len(bp) == 5
    assert bp.non_trivial() == (("a", "g"), ("b", "e"))


def test_from_blocks_rejects_overlap():
    with pytest.raises(ValueError):
        BlockPartition.from_blocks(LABELS, [["a", "b"], ["b", "c"]])


def test_refines_and_join():
    fine = BlockPartition.from_blocks(LABELS, [["a", "b"]])
    other = BlockPartition.from_blocks(LABELS, [["b", "c"], ["f", "g"]])
    j = fine.join(other)
    assert j.blocks[0] == ("a", "b", "c")
    assert fine.refines(j) and other.refines(j)
    assert not j.refines(fine)
    assert BlockPartition.singletons(LABELS).refines(fine)


partition_st = st.lists(st.integers(0, 3), min_size=len(LABELS), max_size=len(LABELS)).map(
    lambda keys: BlockPartition.from_key(LABELS, lambda x: keys[LABELS.index(x)])
)


@given(partition_st, partition_st, partition_st)
def test_join_is_commutative_associative(p, q, r):
    assert p.join(q) == q.join(p)
    assert p.join(q).join(r) == p.join(q.join(r))
    assert p.join(p) == p


@given(partition_st)
def test_map_labels_identity(p):
    assert p.map_labels(lambda x: x) == p.as_sets()
    assert sum(len(b) for b in p.blocks) == len(LABELS)
