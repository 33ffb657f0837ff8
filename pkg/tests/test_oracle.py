from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from footsort.core import canonicalize, delete_at, reduce_adjacent
from footsort.oracle import (
    AlphabetMismatch,
    GuardExceeded,
    check_with_order,
    is_stack_sortable_permutation,
    oracle_by_orders,
    oracle_by_simulation,
)

small_words = st.lists(st.integers(0, 4), max_size=10).map(tuple)


def naive_check(s, order):
    """Direct subsequence test over all position triples."""
    rank = {c: i for i, c in enumerate(order)}
    n = len(s)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                b, c, a = s[i], s[j], s[k]
                if rank[a] < rank[b] < rank[c]:
                    return False
    return True


@pytest.mark.parametrize("word, order, expected", [
    ("bca", (0, 1, 2), False),
    ("abc", (0, 1, 2), True),
    ("abcab", (2, 1, 0), True),
])
def test_check_with_order_examples(word, order, expected):
    assert check_with_order(word, order) is expected


def test_abcab_passing_orders():
    passing = {o for o in permutations(range(3)) if check_with_order("abcab", o)}
    assert passing == {(0, 2, 1), (2, 1, 0)}


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        check_with_order("abc", (0, 1))
    with pytest.raises(AlphabetMismatch):
        check_with_order("ab", (0, 2))


@settings(max_examples=200, deadline=None)
@given(small_words, st.randoms(use_true_random=False))
def test_check_with_order_matches_naive(w, r):
    order = sorted(set(w))
    r.shuffle(order)
    assert check_with_order(w, order) == naive_check(w, order)
    assert check_with_order(reduce_adjacent(w), order) == check_with_order(w, order)


def test_oracle_examples():
    assert oracle_by_orders("abab").sortable
    assert not oracle_by_orders("abcdbacd").sortable
    assert oracle_by_orders("abcab").certificate == (0, 2, 1)
    assert oracle_by_simulation("aabb")
    assert not oracle_by_simulation("abcdabd")
    assert oracle_by_simulation("abcab")
    assert oracle_by_orders("").certificate == ()
    assert oracle_by_simulation("")


def test_orders_returns_first_lexicographic_pass():
    for w in ["abcab", "abcacb", "abacbc", "abcdcbad"]:
        k = len(set(w))
        first = next(
            (o for o in permutations(range(k)) if check_with_order(w, o)), None
        )
        v = oracle_by_orders(w)
        assert (v.certificate if v.sortable else None) == first


def test_guards():
    with pytest.raises(GuardExceeded):
        oracle_by_orders(list(range(9)))
    with pytest.raises(GuardExceeded):
        oracle_by_simulation([0] * 25)


@settings(max_examples=300, deadline=None)
@given(small_words)
def test_oracles_agree(w):
    assert oracle_by_orders(w).sortable == oracle_by_simulation(w)


def test_oracles_agree_on_all_short_words():
    for n in range(8):
        for w in product(range(4), repeat=n):
            if canonicalize(w) != w:
                continue
            assert oracle_by_orders(w).sortable == oracle_by_simulation(w), w


@settings(max_examples=200, deadline=None)
@given(small_words)
def test_sortability_is_monotone_under_deletion(w):
    v = oracle_by_orders(w)
    if not v.sortable:
        return
    for i in range(len(w)):
        rest = delete_at(w, i)
        order = [c for c in v.certificate if c in set(rest)]
        assert check_with_order(rest, order)


def test_knuth_examples():
    assert not is_stack_sortable_permutation([2, 3, 1])
    assert is_stack_sortable_permutation([1, 2, 3])
    assert is_stack_sortable_permutation([0, 1, 2])
    assert sum(is_stack_sortable_permutation(p) for p in permutations(range(1, 6))) == 42


def test_not_a_permutation():
    with pytest.raises(ValueError):
        is_stack_sortable_permutation([1, 1, 2])
