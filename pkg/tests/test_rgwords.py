import itertools

import pytest
from hypothesis import given

from qtstirling.qtpoly import BiPoly, q, subst_t_with_one_plus_q, t
from qtstirling.rgwords import (
    RGWord,
    SetPartition,
    enumerate_allowable,
    enumerate_rg,
    inversion_positions,
    is_allowable,
    is_weakly_increasing,
    iter_rg,
    partition_to_word,
    stat_A,
    stat_B,
    word_to_partition,
    wt,
    wt_prime,
)
from strategies import allowable_words, rg_words


def brute_rg(n: int, k: int):
    """All sequences in {1..k}^n filtered by the growth condition."""
    out = []
    for seq in itertools.product(range(1, k + 1), repeat=n):
        m, ok = 0, True
        for x in seq:
            if x > m + 1:
                ok = False
                break
            m = max(m, x)
        if ok and m == k:
            out.append(seq)
    return out


def brute_stirling2(n: int, k: int) -> int:
    """Count surjections onto k labelled blocks, divided by k!."""
    from math import factorial

    surj = sum(1 for f in itertools.product(range(k), repeat=n) if len(set(f)) == k)
    return surj // factorial(k)


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_brute_force(n):
    for k in range(0, n + 1):
        got = list(iter_rg(n, k))
        assert got == brute_rg(n, k)  # also pins lexicographic order
        if n:
            assert len(got) == brute_stirling2(n, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_allowable_enumeration_is_a_filter(n):
    for k in range(1, n + 1):
        expected = [w for w in brute_rg(n, k) if is_allowable(w)]
        assert [w.letters for w in enumerate_allowable(n, k)] == expected


def test_empty_word():
    assert list(iter_rg(0, 0)) == [()]
    assert list(iter_rg(0, 1)) == []
    assert list(iter_rg(3, 0)) == []


def test_bound_is_enforced():
    with pytest.raises(ValueError):
        enumerate_rg(25, 2)
    assert len(enumerate_rg(3, 2, bound=3)) == 3


# The seven words of R(4,2) and their weights.
TABLE_1 = {
    "1/234": ("1222", 2),
    "12/34": ("1122", 1),
    "13/24": ("1212", 1),
    "14/23": ("1221", 1),
    "134/2": ("1211", 0),
    "124/3": ("1121", 0),
    "123/4": ("1112", 0),
}


def test_weight_table_for_four_two():
    words = {str(w) for w in enumerate_rg(4, 2)}
    assert words == {w for w, _ in TABLE_1.values()}
    total = BiPoly()
    for blocks, (word, exp) in TABLE_1.items():
        w = RGWord.parse(word)
        assert str(word_to_partition(w)) == blocks
        assert wt(w) == q**exp
        total = total + wt(w)
    assert total == q**2 + 3 * q + 3


# Allowable words for 1 <= k <= n <= 5 and wt' with t standing for 1+q.
TABLE_2 = {
    (1, 1): {"1": 1},
    (2, 1): {"11": 1}, (2, 2): {"12": 1},
    (3, 1): {"111": 1}, (3, 2): {"121": t, "112": 1}, (3, 3): {"123": 1},
    (4, 1): {"1111": 1},
    (4, 2): {"1211": t**2, "1121": t, "1112": 1},
    (4, 3): {"1213": t, "1231": t, "1233": q**2, "1123": 1},
    (4, 4): {"1234": 1},
    (5, 1): {"11111": 1},
    (5, 2): {"12111": t**3, "11211": t**2, "11121": t, "11112": 1},
    (5, 3): {"12311": t**2, "12131": t**2, "12113": t**2, "12133": t * q**2,
             "12313": t * q**2, "12331": q**2 * t, "12333": q**4, "11213": t,
             "11231": t, "11233": q**2, "11123": 1},
    (5, 4): {"12341": t, "12343": q**2 * t, "12134": t, "12314": t, "12334": q**2, "11234": 1},
    (5, 5): {"12345": 1},
}


@pytest.mark.parametrize("nk", sorted(TABLE_2))
def test_allowable_table(nk):
    n, k = nk
    got = {str(w): wt_prime(w.letters) for w in enumerate_allowable(n, k)}
    assert got == {w: BiPoly.const(v) if isinstance(v, int) else v for w, v in TABLE_2[nk].items()}


def test_statistics_on_examples():
    w = RGWord.parse("1213212")
    # non-record positions 3,5,6,7 carry letters 1,2,1,2
    assert stat_A(w) == 0 + 1 + 0 + 1
    # strictly below the running max: positions 3,5,6,7
    assert stat_B(w) == 4
    assert inversion_positions(w.letters) == [2, 4, 5, 6]


def test_wt_prime_rejects_non_allowable():
    with pytest.raises(ValueError):
        wt_prime((1, 2, 2))


@given(rg_words())
def test_partition_round_trip(w):
    p = word_to_partition(w)
    assert partition_to_word(p) == w
    assert SetPartition.parse(str(p)) == p
    assert len(p.blocks) == w.k


@given(rg_words())
def test_parse_round_trip(w):
    assert RGWord.parse(str(w)) == w


@given(rg_words())
def test_weight_degree_bounds(w):
    # A counts letters at non-record positions, each at most k-1
    assert 0 <= stat_A(w) <= (w.n - w.k) * (w.k - 1)
    assert stat_B(w) == len(inversion_positions(w.letters)) <= w.n - w.k


@given(allowable_words())
def test_wt_prime_specializes_consistently(w):
    assert is_allowable(w.letters)
    value = subst_t_with_one_plus_q(wt_prime(w.letters))
    assert value.subs_q(1) == 2 ** stat_B(w.letters)


@given(allowable_words())
def test_weakly_increasing_allowable_words_have_even_weight(w):
    # such words repeat only odd letters, each contributing an even exponent
    if is_weakly_increasing(w.letters):
        assert stat_B(w.letters) == 0
        assert stat_A(w.letters) % 2 == 0


@pytest.mark.parametrize("bad", [(2,), (1, 3), (0,), (1, 2, 4)])
def test_invalid_words_rejected(bad):
    with pytest.raises(ValueError):
        RGWord(bad)


def test_large_alphabet_uses_commas():
    w = RGWord(tuple(range(1, 11)))
    assert str(w) == "1,2,3,4,5,6,7,8,9,10"
    assert RGWord.parse(str(w)) == w


def test_partition_validation():
    with pytest.raises(ValueError):
        SetPartition(((2,), (1,)))
    with pytest.raises(ValueError):
        SetPartition(((1, 3),))
