import pytest
from hypothesis import given, strategies as st

from sytmaj.genfun import stanley, syt_count
from sytmaj.qpolys import (
    CycloProduct,
    NegativeExponent,
    NonzeroRemainder,
    QPoly,
    cyclotomic_polynomial,
    divide_exact,
    divide_exact_int,
    expand,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    shape_predicates,
    substitute_power,
)
from sytmaj.shapes import Partition, partitions

qpoly_st = st.builds(
    QPoly,
    st.integers(min_value=0, max_value=5),
    st.lists(st.integers(min_value=-6, max_value=6), max_size=7),
)
nonzero_qpoly_st = qpoly_st.filter(lambda p: not p.is_zero())


def compositions(n, max_parts):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        if max_parts >= 1:
            for rest in compositions(n - first, max_parts - 1):
                yield (first,) + rest


def test_canonical_form():
    assert QPoly(2, (0, 1, 0)).offset == 3
    assert QPoly(0, (0, 0)).is_zero()
    assert QPoly.zero().coeffs == ()
    assert QPoly(1, (2, 3)).degree == 2
    assert QPoly.monomial(4).support() == (4,)


def test_q_analogues():
    assert q_int(3) == QPoly(0, (1, 1, 1))
    assert q_int(0) == QPoly.zero()
    assert q_factorial(3) == QPoly(0, (1, 2, 2, 1))
    assert q_multinomial(2, (1, 1)) == QPoly(0, (1, 1))
    assert q_binomial(4, 2) == QPoly(0, (1, 1, 2, 1, 1))
    assert q_binomial(4, 5).is_zero()
    assert q_multinomial(3, (4, -1)).is_zero()
    with pytest.raises(ValueError):
        q_multinomial(3, (1, 1))


def test_multinomial_substituted_power():
    got = substitute_power(q_multinomial(5, (2, 1, 1, 1)), 4)
    want = QPoly.from_terms(
        {36: 1, 32: 3, 28: 6, 24: 9, 20: 11, 16: 11, 12: 9, 8: 6, 4: 3, 0: 1}
    )
    assert got == want


def test_substitute_power_basics():
    assert substitute_power(QPoly(0, (1, 1)), 2) == QPoly(0, (1, 0, 1))
    assert substitute_power(QPoly(2, (1, 1)), 3).offset == 6
    p = QPoly(1, (2, 0, 3))
    assert substitute_power(p, 1) == p
    with pytest.raises(ValueError):
        substitute_power(p, 0)


@given(qpoly_st, qpoly_st, st.integers(min_value=1, max_value=4))
def test_substitute_power_multiplicative(a, b, m):
    assert substitute_power(a * b, m) == substitute_power(a, m) * substitute_power(b, m)


@given(qpoly_st, qpoly_st, qpoly_st)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_divide_exact_examples():
    onepq = QPoly(0, (1, 1))
    assert divide_exact(onepq * onepq, onepq) == onepq
    with pytest.raises(NonzeroRemainder):
        divide_exact(QPoly(0, (1, 1, 1)), onepq)
    num = (QPoly.monomial(6) + QPoly.monomial(8)) * substitute_power(
        q_multinomial(5, (2, 1, 1, 1)), 4
    )
    got = divide_exact(num, QPoly.from_terms({0: 1, 10: 1}))
    assert got == QPoly.from_terms(
        {6: 1, 8: 1, 10: 3, 12: 3, 14: 6, 16: 5, 18: 8, 20: 6, 22: 8,
         24: 5, 26: 6, 28: 3, 30: 3, 32: 1, 34: 1}
    )


@given(nonzero_qpoly_st, nonzero_qpoly_st)
def test_divide_exact_inverts_mul(a, b):
    assert divide_exact(a * b, b) == a


def test_divide_exact_int():
    assert divide_exact_int(QPoly(1, (2, 4)), 2) == QPoly(1, (1, 2))
    with pytest.raises(NonzeroRemainder):
        divide_exact_int(QPoly(0, (3,)), 2)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == QPoly(0, (-1, 1))
    assert cyclotomic_polynomial(2) == QPoly(0, (1, 1))
    assert cyclotomic_polynomial(6) == QPoly(0, (1, -1, 1))
    for k in range(1, 13):
        prod = QPoly.one()
        for j in range(2, k + 1):
            if k % j == 0:
                prod = prod * cyclotomic_polynomial(j)
        assert prod == q_int(k)


def test_expand_examples():
    cp = stanley(Partition((4, 2)))
    assert cp.shift == 2
    assert cp.exponent_dict() == {3: 2, 6: 1}
    assert expand(cp) == QPoly(2, (1, 1, 2, 1, 2, 1, 1))
    assert expand(CycloProduct(0, {})) == QPoly.one()
    cp421 = stanley(Partition((4, 2, 1)))
    assert cp421.shift == 4
    assert expand(cp421) == q_int(7) * q_int(5) * QPoly.monomial(4)
    with pytest.raises(NegativeExponent):
        expand(CycloProduct(0, {2: -1}))


def test_expand_fast_matches_direct():
    for n in range(1, 11):
        for p in partitions(n):
            cp = stanley(p)
            assert expand(cp, "fast") == expand(cp, "direct")


def test_expand_q1_equals_hook_count_to_30():
    for n in range(1, 31):
        for p in partitions(n):
            assert expand(stanley(p)).eval_at_1() == syt_count(p)


def test_shape_predicates_examples():
    f42 = shape_predicates(expand(stanley(Partition((4, 2)))))
    assert f42.symmetric and not f42.unimodal and f42.internal_zeros == ()
    f421 = shape_predicates(expand(stanley(Partition((4, 2, 1)))))
    assert f421.symmetric and f421.unimodal
    f22 = shape_predicates(QPoly.from_terms({2: 1, 4: 1}))
    assert f22.internal_zeros == (3,)
    zero = shape_predicates(QPoly.zero())
    assert zero.symmetric and zero.unimodal and zero.parity_unimodal


def test_multinomials_symmetric_unimodal_no_zeros():
    for n in range(1, 9):
        for alpha in compositions(n, n):
            facts = shape_predicates(q_multinomial(n, alpha))
            assert facts.symmetric and facts.unimodal and not facts.internal_zeros


def test_json_roundtrip():
    p = QPoly(3, (10**30, -2, 0, 5))
    assert QPoly.from_json(p.to_json()) == p
    assert p.to_json()["coeffs"][0] == str(10**30)
    assert QPoly.from_json({"offset": 2, "coeffs": ["1", "1"]}) == QPoly(2, (1, 1))


def test_eval_int():
    p = QPoly(1, (1, 2, 1))
    assert p.eval_int(2) == 2 + 8 + 8
    assert p.eval_at_1() == 4
