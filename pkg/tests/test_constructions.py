"""Euclid ladder, quotient-ladder arrangement, word recursion, rotation tools."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from mechwords import (
    EuclidStep,
    arrange,
    canonical_rotation,
    cf_expansion,
    check_balance,
    euclid_trace,
    mechanical_word,
    recurrence_reconstruct,
    rotation_equivalent,
    smith_ladder,
    smith_to_mechanical,
    smith_word,
    symbol_stages,
    weight,
)

ARRANGE_23_10 = "ABBABABABABBABABABBABAB"
# 29-letter block of the (87, 36) arrangement, printed here with its
# grouping collapsed: ABBABAB ABBAB ABBAB ABBABAB ABBAB
BLOCK_87_36 = "ABBABAB" "ABBAB" "ABBAB" "ABBABAB" "ABBAB"
SMITH_1_3_3 = "BABABABBABABABBABABABBA"


def coprime_pairs(n_max):
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if math.gcd(n, k) == 1:
                yield n, k


def test_euclid_trace_23_10():
    trace = euclid_trace(23, 10)
    assert trace.steps == (EuclidStep(-1, 2, 3), EuclidStep(0, 3, 1),
                           EuclidStep(1, 3, 0))
    assert trace.quotients == [2, 3, 3]
    assert trace.remainders == [3, 1, 0]
    assert trace.terminal_index == 0
    assert trace.gcd == 1


def test_euclid_trace_87_36():
    trace = euclid_trace(87, 36)
    assert trace.quotients == [2, 2, 2, 2]
    assert trace.remainders == [15, 6, 3, 0]
    assert trace.terminal_index == 1
    assert trace.gcd == 3
    assert trace.quotient(2) == 2
    assert trace.remainder(-3) == 87 and trace.remainder(-2) == 36


def test_euclid_trace_divisible_and_short():
    trace = euclid_trace(6, 3)
    assert trace.steps == (EuclidStep(-1, 2, 0),)
    assert trace.terminal_index == -2
    assert trace.gcd == 3
    trace = euclid_trace(10, 4)
    assert trace.terminal_index == -1
    assert trace.gcd == 2


@pytest.mark.parametrize("n, k", [(5, 5), (5, 6), (5, 0), (0, 1), (-3, 1)])
def test_euclid_trace_rejects(n, k):
    with pytest.raises(ValueError):
        euclid_trace(n, k)


def test_euclid_trace_step_identities():
    for n in range(2, 121):
        for k in range(1, n):
            trace = euclid_trace(n, k)
            for step in trace.steps:
                j = step.index
                assert trace.remainder(j - 2) == (
                    step.quotient * trace.remainder(j - 1) + step.remainder)
                assert 0 <= step.remainder < trace.remainder(j - 1)
            assert trace.gcd == math.gcd(n, k)
            d = math.gcd(n, k)
            if k // d >= 1 and n // d > k // d:
                assert trace.quotients == cf_expansion(n // d, k // d)


def test_arrange_golden():
    assert arrange(23, 10) == ARRANGE_23_10
    assert arrange(87, 36) == BLOCK_87_36 * 3
    assert BLOCK_87_36.count("A") == 12
    assert arrange(6, 3) == "ABABAB"
    assert arrange(2, 1) == "AB"
    assert arrange(5, 4) == "ABAAA"


def test_arrange_length_and_weight():
    for n in range(2, 301):
        for k in range(1, n):
            word = arrange(n, k)
            assert len(word) == n
            assert weight(word) == k


@pytest.mark.parametrize("n, k", [(5, 5), (5, 0), (4, 6)])
def test_arrange_rejects(n, k):
    with pytest.raises(ValueError):
        arrange(n, k)


def test_symbol_stages_23_10():
    assert symbol_stages(23, 10) == ["+--", "+-++", "+---+--+--"]


def test_symbol_stages_87_36():
    stages = symbol_stages(87, 36)
    assert [len(s) for s in stages] == [6, 9, 15, 21, 36]
    assert stages[0] == "+-+-+-"
    assert stages[2] == "+--+-" * 3
    assert stages[4] == "+--+-+-+--+-" * 3


def test_symbol_stages_divisible_case_is_empty():
    assert symbol_stages(6, 3) == []
    assert symbol_stages(9, 1) == []


def test_cf_expansion():
    assert cf_expansion(23, 10) == [2, 3, 3]
    assert cf_expansion(7, 3) == [2, 3]
    assert cf_expansion(5, 1) == [5]
    with pytest.raises(ValueError):
        cf_expansion(6, 3)
    with pytest.raises(ValueError):
        cf_expansion(3, 7)
    with pytest.raises(ValueError):
        cf_expansion(3, 0)


def test_smith_word_golden():
    assert smith_word([1, 3, 3]) == SMITH_1_3_3
    assert smith_word([1]) == "BA"
    assert smith_word([2, 2]) == "BBABBAB"
    # a zero first quotient is what a leading decrement produces
    assert smith_word([0]) == "A"
    assert smith_word([0, 2]) == "AAB"


def test_smith_ladder():
    assert smith_ladder([1, 3, 3]) == ["BA", "BABABAB", SMITH_1_3_3]


def test_smith_word_rejects():
    with pytest.raises(ValueError):
        smith_word([])
    with pytest.raises(ValueError):
        smith_word([-1])
    with pytest.raises(ValueError):
        smith_word([1, 0])


def test_smith_length_and_weight():
    # on the continued-fraction quotients of coprime p/q the recursion builds
    # a word of length p + q and weight q
    for p, q in coprime_pairs(60):
        word = smith_word(cf_expansion(p, q))
        assert len(word) == p + q
        assert weight(word) == q


@pytest.mark.parametrize("word, expected", [
    ("BAB", ("ABB", 1)),
    ("ABAB", ("ABAB", 0)),
    ("BBBA", ("ABBB", 3)),
])
def test_canonical_rotation_golden(word, expected):
    assert canonical_rotation(word) == expected


def test_canonical_rotation_empty():
    with pytest.raises(ValueError):
        canonical_rotation("")


def test_canonical_rotation_matches_enumeration():
    for n in range(1, 11):
        for word in naive.all_words(n):
            canon, shift = canonical_rotation(word)
            assert (canon, shift) == naive.min_rotation(word)
            assert canon == word[shift:] + word[:shift]
            # idempotent
            assert canonical_rotation(canon) == (canon, 0)


@given(st.text(alphabet="AB", min_size=1, max_size=200))
def test_canonical_rotation_matches_enumeration_random(word):
    assert canonical_rotation(word) == naive.min_rotation(word)


def test_rotation_equivalent_examples():
    assert rotation_equivalent(SMITH_1_3_3, ARRANGE_23_10)
    assert rotation_equivalent("AB", "BA")
    assert not rotation_equivalent("AAB", "ABB")
    assert rotation_equivalent("", "")
    assert not rotation_equivalent("A", "AA")


def test_rotation_equivalent_matches_canonical_forms():
    words = [w for n in range(1, 7) for w in naive.all_words(n)]
    for w1 in words:
        for w2 in words:
            expected = (len(w1) == len(w2)
                        and canonical_rotation(w1)[0] == canonical_rotation(w2)[0])
            assert rotation_equivalent(w1, w2) == expected


@given(st.text(alphabet="AB", min_size=1, max_size=40),
       st.integers(0, 39), st.integers(0, 39))
def test_rotation_equivalent_is_equivalence(word, i, j):
    i, j = i % len(word), j % len(word)
    r1 = word[i:] + word[:i]
    r2 = word[j:] + word[:j]
    assert rotation_equivalent(word, word)
    assert rotation_equivalent(word, r1) and rotation_equivalent(r1, word)
    assert rotation_equivalent(r1, r2)


def test_smith_to_mechanical_golden():
    assert smith_to_mechanical(23, 10) == mechanical_word(23, 10)
    assert smith_to_mechanical(2, 1) == "AB"
    assert smith_to_mechanical(7, 3) == "ABABABB"


def test_smith_to_mechanical_rejects_non_coprime():
    with pytest.raises(ValueError, match="gcd 3"):
        smith_to_mechanical(6, 3)


def test_smith_to_mechanical_exact_identity():
    for n, k in coprime_pairs(60):
        assert smith_to_mechanical(n, k) == mechanical_word(n, k)


def test_three_way_equivalence():
    # full n <= 200 range runs in the acceptance suite
    for n, k in coprime_pairs(80):
        built = arrange(n, k)
        mu = cf_expansion(n, k)
        from_recursion = smith_word([mu[0] - 1] + mu[1:])
        mechanical = mechanical_word(n, k)
        assert rotation_equivalent(built, from_recursion)
        assert rotation_equivalent(built, mechanical)
        assert rotation_equivalent(from_recursion, mechanical)


def test_non_coprime_arrangement_is_periodic():
    for n in range(2, 81):
        for k in range(1, n):
            d = math.gcd(n, k)
            if d == 1:
                continue
            word = arrange(n, k)
            prefix = word[:n // d]
            assert word == prefix * d
            assert prefix == arrange(n // d, k // d)


def test_non_coprime_arrangement_is_balanced():
    for n in range(2, 41):
        for k in range(1, n):
            if math.gcd(n, k) == 1:
                continue
            word = arrange(n, k)
            for m in range(1, n + 1):
                assert check_balance(word, m)


def test_recurrence_reconstruct():
    assert recurrence_reconstruct([2, 3, 3]) == (23, 10)
    assert recurrence_reconstruct([2]) == (2, 1)
    assert recurrence_reconstruct([2, 3]) == (7, 3)
    with pytest.raises(ValueError):
        recurrence_reconstruct([])
    with pytest.raises(ValueError):
        recurrence_reconstruct([2, 0])


def test_recurrence_round_trip():
    # n <= 500 runs in the acceptance suite
    for n, k in coprime_pairs(200):
        assert recurrence_reconstruct(euclid_trace(n, k).quotients) == (n, k)
