import pytest
from hypothesis import given, settings, strategies as st

from rouquier.ariki_koike import AKSpecialization, rouquier_blocks
from rouquier.blocks import BlockPartition, InvariantError
from rouquier.combinatorics import multipartitions
from rouquier.descent import (
    DescLabel, GroupParams, Orbit, ak_parent_spec, blocks_for_group, descend_ak,
    descend_rank2, is_d_stuttering, orbits, permute_components, rank2_parent_spec,
    rank2_rotation, tau_d,
)
from rouquier.oracles import conjugacy_class_count
from rouquier.rank2 import Lin, Rank2Spec, Two, rank2_blocks, rank2_labels


def test_tau_examples():
    assert tau_d(((1,), ()), 1) == ((), (1,))
    assert tau_d(((2,), (), ()), 1) == ((), (2,), ())
    assert tau_d(((1,), (), (1,), ()), 2) == ((1,), (), (1,), ())
    with pytest.raises(ValueError):
        tau_d(((1,), (), ()), 2)


def test_stuttering_examples():
    assert is_d_stuttering(((1,), (1,)), 1, 2)
    assert not is_d_stuttering(((1,), ()), 1, 2)
    assert is_d_stuttering(((1,), (), (1,), ()), 2, 2)
    with pytest.raises(ValueError):
        is_d_stuttering(((1,), ()), 1, 3)


def test_permute_components():
    assert permute_components(((1,), (2,), ()), [2, 0, 1]) == ((), (1,), (2,))


def test_group_params():
    assert GroupParams(6, 3, 2).d == 2
    with pytest.raises(ValueError):
        GroupParams(6, 4, 2)
    with pytest.raises(ValueError):
        GroupParams(2, 2, 1)


def test_orbits_g222():
    labels = multipartitions(2, 2)
    orbs = orbits(labels, lambda mp: tau_d(mp, 1), 2)
    assert orbs == [
        Orbit((((2,), ()), ((), (2,))), 1),
        Orbit((((1, 1), ()), ((), (1, 1))), 1),
        Orbit((((1,), (1,)),), 2),
    ]
    assert orbs[0].id == ((2,), ())


def test_orbits_identity_and_errors():
    assert orbits(["x"], lambda x: x, 5) == [Orbit(("x",), 5)]
    with pytest.raises(InvariantError):
        orbits([0, 1, 2], lambda x: (x + 1) % 3, 2)
    with pytest.raises(InvariantError):
        orbits([0, 1], lambda x: x + 1, 4)


def test_rank2_lin_orbits_have_size_p():
    p, d = 3, 2
    orbs = orbits(rank2_labels(p * d), lambda x: rank2_rotation(x, p, d), p)
    assert all(len(o.members) == p for o in orbs)
    assert Orbit((Lin(0, 1, 0), Lin(0, 1, 2), Lin(0, 1, 4)), 1) in orbs


def test_rank2_rotation_special_pair():
    # G(4,2,2) with p = 2, d = 1: the pair {0, 1} is fixed, the superscript swaps
    assert rank2_rotation(Two(0, 1, 1), 2, 1) == Two(0, 1, 2)
    assert rank2_rotation(Lin(1, 0, 1), 2, 1) == Lin(1, 0, 0)


def test_descend_ak_g222():
    g = GroupParams(2, 2, 2)
    parent = rouquier_blocks(ak_parent_spec(g, (0,), 1))
    assert parent.as_sets() == BlockPartition.from_blocks(parent.labels, [
        [((2,), ()), ((), (2,))], [((1, 1), ()), ((), (1, 1))],
    ]).as_sets()
    child = descend_ak(parent, 1, 2)
    assert len(child.labels) == 4
    assert all(len(b) == 1 for b in child.blocks)
    assert DescLabel(((1,), (1,)), 1) in child.labels


def test_descend_ak_g222_n0():
    g = GroupParams(2, 2, 2)
    parent = rouquier_blocks(ak_parent_spec(g, (0,), 0))
    child = descend_ak(parent, 1, 2)
    assert len(child.labels) == 4
    # the stuttering label sits in a non-singleton parent block, so its copies stay together
    assert child.same_block(DescLabel(((1,), (1,)), 0), DescLabel(((1,), (1,)), 1))


def test_descend_ak_e1_is_identity():
    parent = rouquier_blocks(AKSpecialization(2, 3, (0, 1), 1))
    child = descend_ak(parent, 2, 1)
    assert child.map_labels(lambda x: x.orbit) == parent.as_sets()


def test_descend_rejects_unstable_parent():
    # tau_1 sends ((1),()) to ((),(1)), which lies in another block
    with pytest.raises(InvariantError):
        descend_ak(BlockPartition.singletons(multipartitions(2, 1)), 1, 2)
    with pytest.raises(InvariantError):
        descend_ak(BlockPartition.from_blocks(multipartitions(2, 2), [[((2,), ()), ((1,), (1,))]]), 1, 2)


def test_descend_rank2_identity_and_dihedral8():
    spec = Rank2Spec(1, (1, 0), (1, 0), (0,))
    parent = rank2_blocks(spec)
    assert descend_rank2(parent, 1, 1).map_labels(lambda x: x.orbit) == parent.as_sets()
    parent = rank2_blocks(rank2_parent_spec(2, 1, (1, 0), (1, 0), (0,)))
    assert len(descend_rank2(parent, 2, 1).labels) == 5


def test_rank2_parent_spec():
    s = rank2_parent_spec(3, 2, (1, 0), (0, 2), (5, 7))
    assert s == Rank2Spec(6, (3, 0), (0, 6), (5, 7, 5, 7, 5, 7))


@pytest.mark.parametrize("de, e, r, path, count", [
    (2, 1, 2, "ariki-koike", 5),
    (2, 2, 2, "rank2", 4),
    (3, 3, 2, "ak-descent", 3),
    (4, 4, 2, "rank2-descent", 5),
    (6, 6, 2, "rank2-descent", 6),
    (8, 8, 2, "rank2-descent", 7),
    (2, 2, 3, "ak-descent", 5),
    (4, 2, 3, "ak-descent", 20),
])
def test_dispatch(de, e, r, path, count):
    res = blocks_for_group(GroupParams(de, e, r), (0,) * (de // e), 1)
    assert res.path == path
    assert len(res.labels) == count


def test_dispatch_errors():
    with pytest.raises(ValueError):
        blocks_for_group(GroupParams(4, 2, 3), (0,), 1)
    with pytest.raises(ValueError):
        blocks_for_group(GroupParams(3, 3, 2), (0,), 1, a=(1, 0))


@pytest.mark.parametrize("de, e, r", [(2, 2, 2), (3, 3, 2), (4, 2, 2), (4, 4, 2), (4, 2, 3), (6, 3, 2), (6, 6, 2)])
def test_counts_match_conjugacy_classes(de, e, r):
    res = blocks_for_group(GroupParams(de, e, r), (0,) * (de // e), 1)
    assert len(res.labels) == conjugacy_class_count(de, e, r)


def test_known_class_counts():
    # S_3, Klein four, dihedral of order 8, S_4 (= G(1,1,4)), W(B_3)
    assert conjugacy_class_count(3, 3, 2) == 3
    assert conjugacy_class_count(2, 2, 2) == 4
    assert conjugacy_class_count(4, 4, 2) == 5
    assert conjugacy_class_count(1, 1, 4) == 5
    assert conjugacy_class_count(2, 1, 3) == 10


groups = st.sampled_from([(2, 2, 3), (3, 3, 3), (4, 2, 3), (4, 4, 3), (6, 3, 2), (6, 2, 3)])


@settings(max_examples=30, deadline=None)
@given(groups, st.data())
def test_parent_blocks_stable(group, data):
    g = GroupParams(*group)
    m = tuple(data.draw(st.lists(st.integers(-2, 2), min_size=g.d, max_size=g.d)))
    n = data.draw(st.integers(-2, 2))
    parent = rouquier_blocks(ak_parent_spec(g, m, n))
    assert parent.map_labels(lambda mp: tau_d(mp, g.d)) == parent.as_sets()
    res = blocks_for_group(g, m, n)
    assert len(res.labels) == sum(o.stabilizer_order for o in orbits(parent.labels, lambda mp: tau_d(mp, g.d), g.e))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(4, 4), (6, 6), (12, 4), (8, 4), (8, 8)]), st.data())
def test_rank2_descent_blocks_carry_constant_invariants(group, data):
    from rouquier.rank2 import A_value, a_value
    de, e = group
    g, d = GroupParams(de, e, 2), de // e
    ints = st.integers(-2, 2)
    m = tuple(data.draw(st.lists(ints, min_size=d, max_size=d)))
    a, b = data.draw(st.tuples(ints, ints)), data.draw(st.tuples(ints, ints))
    res = blocks_for_group(g, m, 0, a, b)
    for blk in res.blocks.blocks:
        vals = {(a_value(x.orbit, res.parent_spec), A_value(x.orbit, res.parent_spec)) for x in blk}
        assert len(vals) == 1
