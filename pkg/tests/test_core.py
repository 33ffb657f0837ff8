from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from footsort.core import (
    ParseError,
    SockOrdering,
    Verdict,
    canonicalize,
    contains_pattern,
    delete_at,
    format_colors,
    is_reduced,
    parse_ordering,
    reduce_adjacent,
    sorts_with_order,
)

words = st.lists(st.integers(0, 4), max_size=12).map(tuple)


def brute_contains(hay, needle):
    target = canonicalize(needle)
    return any(
        canonicalize([hay[i] for i in idx]) == target
        for idx in combinations(range(len(hay)), len(needle))
    )


def test_letters_map_to_ids():
    assert SockOrdering.of("abca").colors == (0, 1, 2, 0)
    assert SockOrdering.of("A0").colors == (0, 1)  # densified


def test_ids_out_of_range_are_rejected():
    with pytest.raises(ValueError):
        SockOrdering((0, 5))
    with pytest.raises(ParseError):
        SockOrdering.of([0, -1])


def test_two_bounded_flag():
    assert SockOrdering.of("abab").two_bounded
    assert not SockOrdering.of("ababa").two_bounded


def test_parse_letters_and_ids():
    s, names = parse_ordering("cac")
    assert s.colors == (1, 0, 1) and names == ["a", "c"]
    s, names = parse_ordering(" 10 2 10\n7 ")
    assert s.colors == (2, 0, 2, 1) and names == ["2", "7", "10"]
    assert parse_ordering("")[0].colors == ()


@pytest.mark.parametrize("bad", ["ab-c", "1 x 2", "1 -2"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_ordering(bad)


def test_format_roundtrip():
    for text in ["abcab", "10 2 10 7", "zZ9"]:
        s, names = parse_ordering(text)
        again, _ = parse_ordering(format_colors(s.colors, names))
        assert again == s


def test_reduce_and_canonicalize_examples():
    assert reduce_adjacent("aabbbaac") == (0, 1, 0, 2)
    assert canonicalize("cacb") == (0, 1, 0, 2)
    assert delete_at((0, 1, 2), 1) == (0, 2)


@given(words)
def test_reduce_is_idempotent_and_reduced(w):
    r = reduce_adjacent(w)
    assert is_reduced(r)
    assert reduce_adjacent(r) == r


@given(words)
def test_canonicalize_is_idempotent(w):
    c = canonicalize(w)
    assert canonicalize(c) == c
    assert len(set(c)) == len(set(w))


def test_containment_examples():
    emb = contains_pattern("xabxcab", "abcab")
    assert emb is not None
    assert emb.positions == (0, 1, 2, 3, 5)
    assert contains_pattern("abxcab", "abcab").positions == (0, 1, 2, 4, 5)
    assert contains_pattern("abcab", "aaa") is None
    assert contains_pattern("abcab", "abab") is not None
    assert contains_pattern("abcab", "abba") is None
    assert contains_pattern("aabb", "ab") is not None
    assert contains_pattern("", "").positions == ()


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 4), max_size=9).map(tuple),
       st.lists(st.integers(0, 3), max_size=5).map(tuple))
def test_containment_matches_brute_force(hay, needle):
    emb = contains_pattern(hay, needle)
    assert (emb is not None) == brute_contains(hay, needle)
    if emb is not None:
        assert list(emb.positions) == sorted(set(emb.positions))
        sub = [hay[i] for i in emb.positions]
        assert canonicalize(sub) == canonicalize(needle)


@settings(max_examples=100, deadline=None)
@given(words)
def test_containment_is_reflexive(w):
    assert contains_pattern(w, w) is not None


@settings(max_examples=100, deadline=None)
@given(words, st.data())
def test_containment_is_transitive_through_subsequences(w, data):
    keep1 = data.draw(st.lists(st.booleans(), min_size=len(w), max_size=len(w)))
    mid = tuple(c for c, k in zip(w, keep1) if k)
    keep2 = data.draw(st.lists(st.booleans(), min_size=len(mid), max_size=len(mid)))
    low = tuple(c for c, k in zip(mid, keep2) if k)
    assert contains_pattern(w, mid) is not None
    assert contains_pattern(mid, low) is not None
    assert contains_pattern(w, low) is not None


def test_verdict_rendering():
    assert str(Verdict((0,))) == "SORTABLE"
    assert str(Verdict.no()) == "NOT-SORTABLE"
    assert not Verdict.no().sortable


def test_sorts_with_order_examples():
    assert sorts_with_order("abc", (0, 1, 2))
    assert not sorts_with_order("bca", (0, 1, 2))
    assert sorts_with_order("abcab", (2, 1, 0))
    with pytest.raises(ValueError):
        sorts_with_order("abc", (0, 1))
