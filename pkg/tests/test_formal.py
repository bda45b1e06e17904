import pytest
from hypothesis import given, strategies as st

from semicirc import dense
from semicirc.compositions import L_direct
from semicirc.formal import (
    FormalEntry,
    build_sequence,
    evaluate,
    hat,
    initial_entry,
    next_entry,
    render,
)
from semicirc.ring import IntegerRing

from conftest import Z8, Z12, elements

Z = IntegerRing()


def dense_first_row(R, row, k):
    n = len(row)
    M = [[row[j - i] if j >= i else R.zero for j in range(n)] for i in range(n)]
    return dense.power_naive(R, M, k)[0]


def test_initial_entry():
    e = initial_entry(Z)
    assert e == FormalEntry({0: 1})
    assert evaluate(Z, e, 5, 0) == 1
    assert evaluate(Z, e, 5, 3) == 125


def test_hat_examples():
    assert hat(FormalEntry({0: 1})) == FormalEntry({1: 1})
    assert hat(FormalEntry()) == FormalEntry()
    assert hat(FormalEntry({2: 4, 1: 1})) == FormalEntry({3: 4, 2: 1})


def test_next_entry_examples():
    assert next_entry(Z, [4], [FormalEntry({1: 1})]) == FormalEntry({1: 4})
    hats = [FormalEntry({1: 1}), FormalEntry({2: 1})]
    assert next_entry(Z, [4, 2], hats) == FormalEntry({2: 4, 1: 2})
    assert next_entry(Z8, [0, 0, 0], [FormalEntry({1: 1}), FormalEntry({2: 3}), FormalEntry()]) == FormalEntry()


def test_next_entry_prunes_zero_sums():
    # 4*2 = 0 mod 8 and 2*4 + 4*2 = 0 mod 8
    hats = [FormalEntry({1: 4}), FormalEntry({1: 2})]
    assert next_entry(Z8, [4, 2], hats) == FormalEntry()


def test_next_entry_rejects_short_row():
    with pytest.raises(ValueError):
        next_entry(Z, [1], [FormalEntry({1: 1}), FormalEntry({2: 1})])
    with pytest.raises(ValueError):
        next_entry(Z, [1], [])


def test_build_sequence_example_3():
    seq = build_sequence(Z, 5, (4, 3, 2, 1), 12)
    assert seq.entries[0] == FormalEntry({0: 1})
    assert seq.entries[1] == FormalEntry({1: 4})
    assert seq.entries[2] == FormalEntry({2: 16, 1: 3})
    # 4(16 C3 + 3 C2) + 3*4 C2 + 2 C1, coefficients read off the printed form
    assert seq.entries[3] == FormalEntry({3: 64, 2: 24, 1: 2})
    assert seq.evaluate(3) == [125, 300, 465, 574, 594, 504, 369, 234, 126, 56, 21, 6, 1]
    assert evaluate(Z, seq.entries[3], 5, 3) == 574


def test_build_sequence_example_1():
    seq = build_sequence(Z, 2, (4, 2, 3), 3)
    assert [e.terms for e in seq.entries] == [
        {0: 1}, {1: 4}, {2: 16, 1: 2}, {3: 64, 2: 16, 1: 3},
    ]
    # reduced mod 8 the degree-2 and degree-3 coefficients vanish
    seq8 = build_sequence(Z8, 2, (4, 2, 3), 3)
    assert [e.terms for e in seq8.entries] == [{0: 1}, {1: 4}, {1: 2}, {1: 3}]


def test_build_sequence_example_2():
    seq = build_sequence(Z, 0, (2, 1, 1, 0), 4)
    assert seq.entries[1] == FormalEntry({1: 2})
    assert seq.entries[2] == FormalEntry({2: 4, 1: 1})
    assert seq.entries[3] == FormalEntry({3: 8, 2: 4, 1: 1})
    assert seq.entries[4] == FormalEntry({4: 16, 3: 12, 2: 5})


def test_build_sequence_zero_tail():
    seq = build_sequence(Z12, 7, (0, 0, 0), 6)
    assert all(e == FormalEntry() for e in seq.entries[1:])
    with pytest.raises(ValueError):
        build_sequence(Z, 1, (), -1)


def test_evaluate_delta_convention_example_2():
    b4 = FormalEntry({4: Z8.from_integer(16), 3: Z8.from_integer(12), 2: 5})
    assert evaluate(Z8, b4, 0, 2) == 5


def test_evaluate_at_zero():
    assert evaluate(Z, FormalEntry({2: 4, 1: 3}), 5, 0) == 0
    assert evaluate(Z, FormalEntry({0: 9}), 5, 0) == 9
    with pytest.raises(ValueError):
        evaluate(Z, FormalEntry(), 1, -1)


def test_render():
    assert render(Z, FormalEntry({0: 1}), 2) == "2^k·C(k,0)"
    assert render(Z, FormalEntry()) == "0"
    assert render(Z, FormalEntry({1: 3, 2: 16})) == "16·a0^(k-2)·C(k,2) + 3·a0^(k-1)·C(k,1)"
    assert render(Z, FormalEntry({1: 4}), -1) == "4·(-1)^(k-1)·C(k,1)"
    # 64*2^(k-3) = 2^(k+3), 16*2^(k-2) = 2^(k+2)
    a3 = build_sequence(Z, 2, (4, 2, 3), 3).entries[3]
    assert render(Z, a3, 2) == "64·2^(k-3)·C(k,3) + 16·2^(k-2)·C(k,2) + 3·2^(k-1)·C(k,1)"


rows = st.tuples(
    st.sampled_from([Z, Z8, Z12]),
    st.lists(st.integers(-9, 9), min_size=1, max_size=5),
)


@given(rows)
def test_coefficients_equal_L_direct(case):
    R, values = case
    row = [R.from_integer(v) for v in values]
    tail = row[1:] + [R.zero] * (8 - len(row) + 1)
    seq = build_sequence(R, row[0], row[1:], 8)
    for m in range(1, 9):
        assert all(1 <= p <= m for p in seq.entries[m].terms)
        for p in range(1, m + 1):
            assert R.equals(seq.entries[m].coefficient(p, R), L_direct(R, tail, m, p))


@given(rows)
def test_evaluation_matches_dense_power(case):
    R, values = case
    row = [R.from_integer(v) for v in values] + [R.zero] * 4
    row = row[:9]
    seq = build_sequence(R, row[0], row[1:], len(row) - 1)
    for k in range(9):
        assert seq.evaluate(k) == dense_first_row(R, row, k)


@given(st.sampled_from([Z, Z8, Z12]), st.integers(1, 4), st.data())
def test_truncation_bound(R, p, data):
    row = data.draw(st.lists(elements(R), min_size=p + 1, max_size=p + 1))
    seq = build_sequence(R, row[0], row[1:], 14)
    for m in range(1, 15):
        keys = seq.entries[m].terms
        assert all(-(-m // p) <= key <= m for key in keys)
    for k in range(4):
        for m in range(k * p + 1, 15):
            assert R.is_zero(evaluate(R, seq.entries[m], row[0], k))


@given(st.sampled_from([Z, Z8, Z12]), st.data())
def test_zero_a0_keeps_only_matching_key(R, data):
    tail = data.draw(st.lists(elements(R), min_size=1, max_size=5))
    seq = build_sequence(R, R.zero, tail, 7)
    for e in seq.entries:
        for k in range(9):
            assert R.equals(evaluate(R, e, R.zero, k), e.coefficient(k, R))


def test_zero_entry_contributes_nothing():
    z = FormalEntry()
    assert hat(z) == z
    hats = [FormalEntry({1: 1}), z, FormalEntry({3: 5})]
    assert next_entry(Z, [2, 7, 3], hats) == next_entry(Z, [2, 0, 3], hats)
