import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tcell import finmon, moncell
from tcell.cellcore import Cell, verify_structure_axioms
from tcell.errors import NotAGroup, NotChained
from tcell.moncell import MonCellStructure, is_member, make_cell, mon_cells

from .conftest import M, ctx_of, emap, hom_oracle


def _oracle_cells(A, B):
    """(t, f) with t an arbitrary map and t + f a hom, t(0) = 0 not assumed."""
    out = set()
    for f in finmon.enumerate_homs(A, B):
        for img in itertools.product(range(B.size), repeat=A.size):
            s = tuple(B.table[img[a]][f.images[a]] for a in range(A.size))
            if hom_oracle(A, B, s):
                out.add((img, f.images))
    return out


@pytest.mark.parametrize("a,b", [("chain3", "chain3"), ("Z2", "Z2"), ("Z3", "Z3"), ("chain2", "chain3"),
                                 ("Z2", "Z3"), ("S3", "Z2"), ("Z2", "S3"), ("and2", "chain2")])
def test_cells_match_hom_oracle(a, b):
    A, B = M(a), M(b)
    got = {(c.t.images, c.dom.images) for c in mon_cells(A, B)}
    assert got == _oracle_cells(A, B)


def test_counts():
    assert len(mon_cells(M("trivial"), M("trivial"))) == 1
    assert len(mon_cells(M("chain3"), M("chain3"))) == 47


def test_chain3_contains_swap_cell_and_zeros():
    c = M("chain3")
    pairs = {(x.t.images, x.dom.images) for x in mon_cells(c, c)}
    assert ((0, 2, 1), (0, 1, 2)) in pairs
    for f in finmon.enumerate_homs(c, c):
        assert ((0, 0, 0), f.images) in pairs


def test_z2_cells_are_crossed_homs():
    z = M("Z2")
    pairs = [(x.t.images, x.dom.images) for x in mon_cells(z, z)]
    assert pairs == [((0, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (0, 1)), ((0, 1), (0, 1))]
    for x in mon_cells(z, z):
        assert moncell.is_crossed_hom(x.t, x.dom)


def test_cod_is_stored_sum():
    for x in mon_cells(M("chain3"), M("chain3")):
        assert x.cod == finmon.add_pointwise(x.t, x.dom)
        assert finmon.is_hom(x.src, x.tgt, x.cod)


def test_vcompose_examples():
    c = M("chain3")
    x1 = make_cell(emap(c, c, (0, 2, 1)), emap(c, c, (0, 1, 2)))
    x2 = make_cell(emap(c, c, (0, 0, 1)), emap(c, c, (0, 2, 2)))
    s = moncell.mon_vcompose(x2, x1)
    assert (s.t.images, s.dom.images) == ((0, 2, 1), (0, 1, 2))
    S = MonCellStructure()
    assert moncell.mon_vcompose(S.zero(x1.cod), x1) == x1
    assert moncell.mon_vcompose(x1, S.zero(x1.dom)) == x1
    with pytest.raises(NotChained):
        moncell.mon_vcompose(x1, x1)


def test_whisker_examples():
    c = M("chain3")
    one = finmon.identity_map(c)
    x = make_cell(emap(c, c, (0, 2, 1)), emap(c, c, (0, 1, 2)))
    assert moncell.mon_whisker(one, x, one) == x
    w = moncell.mon_whisker(emap(c, c, (0, 2, 2)), x, one)
    assert (w.t.images, w.dom.images) == ((0, 2, 2), (0, 2, 2))
    z = moncell.mon_whisker(finmon.zero_map(c, c), x, one)
    assert (z.t.images, z.dom.images) == ((0, 0, 0), (0, 0, 0))
    with pytest.raises(NotChained):
        moncell.mon_whisker(one, x, finmon.identity_map(M("Z2")))


@settings(max_examples=100)
@given(st.data())
def test_whisker_preserves_membership(data):
    a, b, a2, b2 = data.draw(st.sampled_from([
        ("chain3", "chain3", "chain3", "chain3"), ("chain2", "chain3", "chain3", "chain2"),
        ("Z2", "S3", "Z2", "S3"), ("Z3", "Z3", "trivial", "Z3")]))
    A, B, A2, B2 = M(a), M(b), M(a2), M(b2)
    x = data.draw(st.sampled_from(mon_cells(A, B)))
    u = data.draw(st.sampled_from(finmon.enumerate_homs(B, B2)))
    v = data.draw(st.sampled_from(finmon.enumerate_homs(A2, A)))
    w = moncell.mon_whisker(u, x, v)
    assert is_member(w.t, w.dom)
    assert w.dom == finmon.compose(u, finmon.compose(x.dom, v))


def test_crossed_hom_equiv():
    z = M("Z2")
    for f in finmon.enumerate_homs(z, z):
        for t in finmon.all_maps(z, z):
            assert moncell.crossed_hom_equiv(z, t, f)
        zero = finmon.zero_map(z, z)
        assert is_member(zero, f) and moncell.is_crossed_hom(zero, f)
    c = M("chain3")
    with pytest.raises(NotAGroup):
        moncell.crossed_hom_equiv(c, finmon.zero_map(c, c), finmon.identity_map(c))


@pytest.mark.parametrize("a,b,members", [("Z2", "Z4", 4), ("Z4", "Z4", 16), ("Z2", "S3", 16), ("Z3", "S3", 9),
                                         ("S3", "S3", 100), ("S3", "Z4", 4)])
def test_crossed_hom_table(a, b, members):
    row = moncell.crossed_hom_table(M(a), M(b))
    assert row["disagree"] == 0
    assert row["members"] == members
    assert row["members"] == len(mon_cells(M(a), M(b)))


def test_t_zero_reduction_is_not_a_constraint():
    # any t with t + f a hom already has t(0) = 0
    c = M("chain3")
    for t_img, _ in _oracle_cells(c, c):
        assert t_img[0] == 0


@pytest.mark.parametrize("objects", [("trivial",), ("chain2",), ("chain3",), ("Z2", "Z3")])
def test_structure_axioms(objects):
    ctx = ctx_of(*objects)
    assert verify_structure_axioms(MonCellStructure(ctx), ctx).ok


def test_cells_have_uniform_shape():
    x = mon_cells(M("Z2"), M("Z2"))[1]
    assert isinstance(x, Cell) and x.src is M("Z2")
