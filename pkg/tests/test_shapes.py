from math import comb

import pytest
from hypothesis import given, strategies as st

from sytmaj.shapes import (
    BlockShape,
    Partition,
    SkewShape,
    b_composition,
    b_statistic,
    block_coordinates,
    corners_and_notches,
    hook_lengths,
    hook_multiset,
    parse_blocks,
    parse_partition,
    partitions,
)

partition_st = st.builds(
    lambda xs: Partition(sorted(xs, reverse=True)),
    st.lists(st.integers(min_value=1, max_value=9), max_size=8),
)


def rows_of_hooks(p):
    hooks = hook_lengths(p)
    return [[hooks[(r, c)] for c in range(1, p.part(r) + 1)] for r in range(1, len(p) + 1)]


def test_partition_basics():
    p = Partition((4, 2))
    assert p.n == 6 and len(p) == 2
    assert Partition((3, 2, 0, 0)).parts == (3, 2)
    assert str(Partition()) == ""
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_parse_roundtrip():
    assert parse_partition("6,3,3").parts == (6, 3, 3)
    assert parse_partition("") == Partition()
    bs = parse_blocks("3,2|1,1|3")
    assert [b.parts for b in bs.blocks] == [(3, 2), (1, 1), (3,)]
    assert parse_blocks("|3,3").blocks[0] == Partition()
    assert str(parse_blocks("|3,3")) == "|3,3"


def test_hook_lengths_examples():
    assert rows_of_hooks(Partition((6, 3, 3))) == [[8, 7, 6, 3, 2, 1], [4, 3, 2], [3, 2, 1]]
    assert hook_multiset(Partition((7,))) == (1, 2, 3, 4, 5, 6, 7)
    assert hook_multiset(Partition((4, 2))) == (1, 1, 2, 2, 4, 5)


def test_b_statistic_examples():
    assert b_statistic(Partition((4, 2))) == 2
    assert b_statistic(Partition((4, 2, 1))) == 4
    assert b_statistic(Partition((9,))) == 0
    assert b_statistic(Partition()) == 0


def test_b_composition_examples():
    assert b_composition((2, 1, 1, 1)) == 6
    assert b_composition((0, 0, 0)) == 0
    with pytest.raises(ValueError):
        b_composition((1, -1))


@given(st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=8))
def test_b_composition_rotation_increment(alpha):
    # one right-rotation changes b by n - m * (last entry)
    alpha = tuple(alpha)
    m, n = len(alpha), sum(alpha)
    rotated = alpha[-1:] + alpha[:-1]
    assert b_composition(rotated) - b_composition(alpha) == n - m * alpha[-1]


def test_block_coordinates_examples():
    bs = BlockShape((Partition((3, 2)), Partition((1, 1)), Partition((3,))))
    skew = bs.as_skew()
    assert skew.outer.parts == (7, 6, 4, 4, 3)
    assert skew.inner.parts == (4, 4, 3, 3)
    assert parse_blocks("2|2|3").as_skew() == SkewShape(Partition((7, 5, 3)), Partition((5, 3)))
    single = BlockShape((Partition((4, 2)),))
    assert single.cells == Partition((4, 2)).cells
    coords = block_coordinates(bs)
    assert coords[1] == [(3, 4), (4, 4)]


def test_block_shape_with_empty_blocks():
    bs = parse_blocks("|3,3")
    assert bs.m == 2 and bs.n == 6
    assert bs.alpha() == (0, 6)
    assert bs.b_alpha() == 6
    assert bs.cells == Partition((3, 3)).cells


def test_corners_and_notches_examples():
    corners, notches = corners_and_notches(Partition((6, 3, 3)))
    assert set(corners) == {(3, 3), (1, 6)}
    assert set(notches) == {(2, 4)}
    corners, notches = corners_and_notches(Partition((5,)))
    assert corners == ((1, 5),) and notches == ()
    corners, notches = corners_and_notches(Partition((2, 2)))
    assert corners == ((2, 2),) and notches == ()


@given(partition_st)
def test_conjugate_involution(p):
    assert p.conjugate().conjugate() == p
    assert p.conjugate().n == p.n


def test_notches_equal_corner_count_minus_one():
    for n in range(1, 13):
        for p in partitions(n):
            hooks = list(hook_lengths(p).values())
            h1 = sum(1 for h in hooks if h == 1)
            _, notches = corners_and_notches(p)
            assert len(notches) == h1 - 1


def test_maxmaj_degree_identity():
    # C(n,2) - b(conj) = b + C(n+1,2) - sum of hooks
    for n in range(1, 13):
        for p in partitions(n):
            hooks = sum(hook_lengths(p).values())
            assert comb(n, 2) - b_statistic(p.conjugate()) == (
                b_statistic(p) + comb(n + 1, 2) - hooks
            )


def test_block_coordinates_give_valid_skew():
    from sytmaj.verify import block_shapes

    for n in range(0, 11):
        for m in range(1, 5):
            for bs in block_shapes(n, m):
                skew = bs.as_skew()  # SkewShape validates containment
                assert skew.n == bs.n
                assert len(bs.cells) == bs.n


def test_rotation_and_orbit():
    bs = parse_blocks("1|2|3,2|4|5|6,1")
    assert bs.rotate(3).blocks == bs.blocks[-3:] + bs.blocks[:-3]
    orb = parse_blocks("1|2|3,2|1|2|3,2").orbit(2)
    assert len(orb) == 1
    assert len(parse_blocks("2|3,1").orbit(2)) == 2
    with pytest.raises(ValueError):
        parse_blocks("1|2|3").orbit(2)


def test_skew_shape_stats():
    skew = SkewShape(Partition((4, 3, 1)), Partition((2, 1)))
    assert skew.n == 5
    assert skew.max_row_length() == 2
    assert skew.max_col_length() == 2
    with pytest.raises(ValueError):
        SkewShape(Partition((2,)), Partition((3,)))
