from math import comb

import pytest

from sytmaj.mutations import (
    ExceptionalTableau,
    block_rule,
    block_rule_all,
    build_poset,
    inverse_block_rule,
    inverse_transpose_block_covers,
    negative_rotations,
    phi,
    phi_move,
    positive_rotations,
    poset_ground,
    strong_covers,
    verify_ranked,
    weak_covers,
)
from sytmaj.shapes import Partition, b_statistic, partitions
from sytmaj.tableaux import (
    enumerate_tableaux,
    exceptional_set,
    from_rows,
    maxmaj_tableau,
    minmaj_tableau,
)


def oracle_rotations(t, sign):
    """Direct implementation of the rotation definition: apply the cycle and
    demand a single descent slide j-1 -> j."""
    out = []
    n = t.n
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            if sign > 0:
                perm = {v: v + 1 for v in range(i, k)}
                perm[k] = i
            else:
                perm = {v: v - 1 for v in range(i + 1, k + 1)}
                perm[i] = k
            y = t.relabel_unchecked(perm)
            if y is None:
                continue
            added = y.descent_set() - t.descent_set()
            removed = t.descent_set() - y.descent_set()
            if len(added) == 1 and len(removed) == 1:
                (j,) = added
                if removed == {j - 1}:
                    out.append(((i, k), j))
    return sorted(out)


def test_positive_rotation_example():
    t = from_rows([[1, 2, 6, 7, 9], [3, 4, 8, 13], [5, 11, 12, 15], [10, 14]])
    assert sorted(mv.interval for mv in positive_rotations(t)) == [
        (5, 6), (8, 9), (8, 10), (8, 11), (9, 13)]


def test_negative_rotation_example():
    t = from_rows([[1, 3, 8, 10, 15], [2, 4, 9, 11], [5, 7, 13, 14], [6, 12]])
    assert sorted(mv.interval for mv in negative_rotations(t)) == [(4, 6), (6, 7), (11, 12)]


def test_no_rotation_examples():
    for rows in (
        [[1, 2, 3, 4, 5], [6, 7, 8, 9], [10, 11, 12, 13], [14, 15]],
        [[1, 2, 3, 8, 12], [4, 6, 9, 13], [5, 7, 10, 14], [11, 15]],
    ):
        t = from_rows(rows)
        assert not positive_rotations(t) and not negative_rotations(t)


def test_extremes_admit_no_rotations():
    assert not positive_rotations(minmaj_tableau(Partition((3, 3))))
    assert not negative_rotations(maxmaj_tableau(Partition((4, 2))))
    row = minmaj_tableau(Partition((5,)))
    assert not positive_rotations(row) and not negative_rotations(row)


def test_rotations_match_definition_oracle():
    for n in range(1, 8):
        for p in partitions(n):
            for t in enumerate_tableaux(p):
                got_p = sorted((mv.interval, mv.descent) for mv in positive_rotations(t))
                got_n = sorted((mv.interval, mv.descent) for mv in negative_rotations(t))
                assert got_p == oracle_rotations(t, +1), (p, t.to_text())
                assert got_n == oracle_rotations(t, -1), (p, t.to_text())


def test_rotation_descent_slide():
    for n in range(2, 8):
        for p in partitions(n):
            for t in enumerate_tableaux(p):
                for mv in positive_rotations(t) + negative_rotations(t):
                    y = mv.apply(t)
                    assert y.descent_set() - t.descent_set() == {mv.descent}
                    assert t.descent_set() - y.descent_set() == {mv.descent - 1}
                    assert y.des() == t.des()


def test_rotations_on_skew_shapes():
    from sytmaj.shapes import SkewShape
    from sytmaj.tableaux import enumerate_tableaux as enum

    shapes = [
        SkewShape(Partition((3, 2)), Partition((1,))),
        SkewShape(Partition((4, 3, 1)), Partition((2, 1))),
        SkewShape(Partition((3, 3, 2)), Partition((2,))),
    ]
    for shape in shapes:
        for t in enum(shape):
            got_p = sorted((mv.interval, mv.descent) for mv in positive_rotations(t))
            got_n = sorted((mv.interval, mv.descent) for mv in negative_rotations(t))
            assert got_p == oracle_rotations(t, +1)
            assert got_n == oracle_rotations(t, -1)
    with pytest.raises(ValueError):
        block_rule(next(enum(shapes[0])))


def test_block_rule_small_known_cases():
    cases = [
        ([[1, 2, 3, 7], [4, 5, 6, 8]], "B1", [[1, 3, 4, 6], [2, 5, 7, 8]]),
        ([[1, 2, 3, 4], [5, 6, 7]], "B2", [[1, 3, 4, 7], [2, 5, 6]]),
        ([[1, 2, 3], [4, 6], [5, 7]], "B3", [[1, 3, 6], [2, 4], [5, 7]]),
        ([[1, 2, 7], [3, 5, 8], [4, 6, 9], [10]], "B4", [[1, 4, 8], [2, 5, 9], [3, 6, 10], [7]]),
        ([[1, 2], [3, 5], [4, 6], [7]], "B5", [[1, 5], [2, 6], [3, 7], [4]]),
    ]
    for rows, kind, want in cases:
        t = from_rows(rows)
        mv = block_rule(t)
        assert mv is not None and mv.kind == kind
        out = mv.apply(t)
        assert out.rows() == want
        assert out.maj() == t.maj() + 1


def test_block_rule_larger_known_cases():
    b1 = from_rows([[1, 2, 3, 4, 5, 16], [6, 7, 8, 9, 10, 17], [11, 12, 13, 14, 15]])
    mv = block_rule(b1)
    assert mv.kind == "B1" and mv.params == (5, 3, 15)
    assert mv.apply(b1).rows() == [
        [1, 3, 4, 5, 6, 15], [2, 7, 8, 9, 10, 17], [11, 12, 13, 14, 16]]
    b5 = from_rows([[1, 2], [3, 6], [4, 7], [5, 8], [9]])
    mv = block_rule(b5)
    assert mv.kind == "B5" and mv.params == (5,)
    assert mv.apply(b5).rows() == [[1, 6], [2, 7], [3, 8], [4, 9], [5]]


def test_block_rules_disjoint_and_raise_des():
    for n in range(2, 9):
        for p in partitions(n):
            for t in enumerate_tableaux(p):
                rules = block_rule_all(t)
                assert len(rules) <= 1, (p, t.to_text(), [r.kind for r in rules])
                for mv in rules:
                    y = mv.apply(t)
                    assert y.maj() == t.maj() + 1
                    assert y.des() == t.des() + 1


def test_inverse_block_rule():
    t = from_rows([[1, 2, 3, 7], [4, 5, 6, 8]])
    v = block_rule(t).apply(t)
    assert inverse_block_rule(v) == [t]
    assert inverse_block_rule(t) == []
    # transposed route raises maj by one and is tagged as inverse-transpose
    from sytmaj.mutations import inverse_transpose_block_moves

    tt = t.transpose()
    for mv in inverse_transpose_block_moves(tt):
        assert mv.kind.startswith("inv_transpose_B")
        assert mv.apply(tt).maj() == tt.maj() + 1
    assert [mv.apply(tt) for mv in inverse_transpose_block_moves(tt)] == \
        inverse_transpose_block_covers(tt)
    # the transpose of a block-rule image recovers the original via the move
    y = v.transpose()
    moves = inverse_transpose_block_moves(y)
    assert [mv.apply(y) for mv in moves] == [t.transpose()]


def test_phi_known_negative_rotation_cases():
    ta = from_rows([[1, 3, 6, 11], [2, 4, 7, 12], [5, 8], [9, 13], [10]])
    mva = phi_move(ta)
    assert mva.kind == "negative_rotation" and mva.interval == (8, 12) and mva.descent == 10
    assert phi(ta).rows() == [[1, 3, 6, 10], [2, 4, 7, 11], [5, 12], [8, 13], [9]]
    tb = from_rows([[1, 3, 6], [2, 4, 7], [5, 8, 11], [9], [10]])
    mvb = phi_move(tb)
    assert mvb.kind == "negative_rotation" and mvb.interval == (7, 10) and mvb.descent == 10
    assert phi(tb).rows() == [[1, 3, 6], [2, 4, 10], [5, 7, 11], [8], [9]]


def test_phi_rejects_exceptional():
    with pytest.raises(ExceptionalTableau):
        phi(maxmaj_tableau(Partition((3, 2))))
    with pytest.raises(ExceptionalTableau):
        phi(minmaj_tableau(Partition((3, 3))))


def test_phi_total_and_increments():
    for n in range(1, 9):
        for p in partitions(n):
            exc = exceptional_set(p)
            for t in enumerate_tableaux(p):
                if t in exc:
                    continue
                y = phi(t)
                assert y.shape == p and y.maj() == t.maj() + 1


def test_phi_iteration_spans_the_range():
    for n in range(1, 9):
        for p in partitions(n):
            if p.is_rectangle():
                continue
            steps = comb(n, 2) - b_statistic(p) - b_statistic(p.conjugate())
            t = minmaj_tableau(p)
            for _ in range(steps):
                t = phi(t)
            assert t == maxmaj_tableau(p)


def test_poset_ground_sets():
    assert len(poset_ground(Partition((2, 2)))) == 0
    assert len(poset_ground(Partition((3, 2, 1)))) == 16
    assert len(poset_ground(Partition((5, 5)))) == 42 - 2


def test_poset_structure_321():
    p = Partition((3, 2, 1))
    for flavor in ("strong", "weak"):
        poset = build_poset(p, flavor)
        report = verify_ranked(poset)
        assert report.ok(), report
        assert report.maj_max - report.maj_min == 7
    dot = build_poset(p, "weak").to_dot()
    assert dot.count("[maj=") == 16
    assert dot.startswith("digraph")
    adj = build_poset(p, "weak").to_json_adjacency()
    assert len(adj) == 16


def test_poset_42():
    poset = build_poset(Partition((4, 2)), "weak")
    report = verify_ranked(poset)
    assert report.size == 9 and report.ok()
    assert report.maj_min == 2 and report.maj_max == 8


def test_poset_55_excludes_extremes():
    poset = build_poset(Partition((5, 5)), "weak")
    report = verify_ranked(poset)
    assert report.ok()
    assert report.maj_min == b_statistic(Partition((5, 5))) + 2
    assert report.maj_max == comb(10, 2) - b_statistic(Partition((2,) * 5)) - 2


def test_all_small_posets_ranked():
    for n in range(1, 8):
        for p in partitions(n):
            for flavor in ("strong", "weak"):
                report = verify_ranked(build_poset(p, flavor))
                assert report.ok(), (p, flavor, report)


def test_weak_covers_inside_strong_covers():
    for n in range(1, 8):
        for p in partitions(n):
            strong = build_poset(p, "strong")
            weak = build_poset(p, "weak")
            assert weak.edge_pairs() <= strong.edge_pairs(), p


def test_cover_functions_match_posets():
    p = Partition((3, 2, 1))
    ground = poset_ground(p)
    strong = build_poset(p, "strong")
    weak = build_poset(p, "weak")
    index = {t: i for i, t in enumerate(ground)}
    for i, t in enumerate(ground):
        assert sorted(index[y] for y in strong_covers(t)) == list(strong.covers[i])
        assert sorted(index[y] for y in weak_covers(ground, t)) == list(weak.covers[i])


def test_majdes_behavior_of_phi():
    # rotations raise maj-des, block moves fix it; phi covers both
    for p in (Partition((3, 2)), Partition((2, 2, 1)), Partition((4, 3, 1))):
        exc = exceptional_set(p)
        for t in enumerate_tableaux(p):
            if t in exc:
                continue
            mv = phi_move(t)
            y = mv.apply(t)
            if mv.kind.startswith(("positive", "negative")):
                assert y.maj() - y.des() == t.maj() - t.des() + 1
            else:
                assert y.maj() - y.des() == t.maj() - t.des()
