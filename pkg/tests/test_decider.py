import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from footsort.core import SockOrdering, canonicalize, reduce_adjacent, sorts_with_order
from footsort.decider import (
    NIL,
    decide,
    decide_with_report,
    extract_certificate,
    preprocess,
)
from footsort.oracle import check_with_order, oracle_by_orders

words = st.lists(st.integers(0, 5), max_size=14).map(tuple)


def state_summary(state):
    return (
        [(state.colors[p], p) for p in state.live_nodes()],
        list(state.lonely_pos),
        list(state.second_pos),
    )


def test_preprocess_collapses_runs():
    st_ = preprocess("aab", debug=True)
    assert state_summary(st_) == ([(0, 0), (1, 2)], [0, 2], [])


def test_preprocess_abab():
    st_ = preprocess("abab", debug=True)
    assert list(st_.second_pos) == [2, 3]
    assert list(st_.lonely_pos) == []
    assert st_.dist_min_pos == 0


def test_empty_input():
    st_ = preprocess("", debug=True)
    assert st_.live_nodes() == []
    assert decide("").certificate == ()


def test_delete_cascades():
    st_ = preprocess("aba", debug=True)
    st_.delete_node(1)
    assert st_.live_colors() == [0]
    assert list(st_.lonely_pos) == [0]


def test_delete_first_of_three_letter_word():
    st_ = preprocess("abcabc", debug=True)
    st_.delete_node(0)
    assert st_.live_colors() == [1, 2, 0, 1, 2]
    assert list(st_.lonely_pos) == [3]
    assert list(st_.second_pos) == [4, 5]


def test_delete_promotes_second_to_lonely():
    st_ = preprocess("abab", debug=True)
    st_.delete_node(0)
    assert list(st_.lonely_pos) == [2]
    assert list(st_.second_pos) == [3]


def test_delete_shifts_second_to_third():
    st_ = preprocess("ababa", debug=True)
    st_.delete_node(2)
    # b's merge: the list becomes a b a with a's second at 4
    assert st_.live_colors() == [0, 1, 0]
    assert list(st_.second_pos) == [4]


@pytest.mark.parametrize("word, color, live, dist", [
    ("aba", 0, [1], 2),
    ("abcabc", 0, [1, 2, 1, 2], 3),
    ("ab", 1, [0], 1),
])
def test_reduce_examples(word, color, live, dist):
    st_ = preprocess(word, debug=True)
    st_.reduce_color(color)
    assert st_.live_colors() == live
    assert st_.dist_min_pos == dist
    assert st_.trace.reduced_colors == [color]


def test_reduce_keeps_unlonely_status():
    st_ = preprocess("abcabc", debug=True)
    st_.reduce_color(0)
    assert list(st_.lonely_pos) == []


# a, z, x written as a, b, c
@pytest.mark.parametrize("word, d_pos, reduced", [
    ("ababcab", 0, 0),   # both after x, a first
    ("ababcba", 0, 1),   # both after x, z first
    ("ababcb", 0, 0),    # no a after x
    ("ababca", 0, 1),    # no z after x
    ("ababcab", 3, 1),   # a not minimal
    ("abab", 0, 0),      # x does not exist
])
def test_case2_exception_branches(word, d_pos, reduced):
    st_ = preprocess(word, debug=True)
    st_.case2_exception(0, d_pos)
    assert st_.trace.reduced_colors == [reduced]


# a, z, b, x written as a, b, c, d
@pytest.mark.parametrize("word, reduced", [
    ("abcaba", 2),   # z before a later a
    ("abcabd", 2),   # no z after x
    ("abcada", 2),   # no z after x, a repeats
    ("abcadb", 0),   # z after x, a done
    ("abca", 2),     # x does not exist
])
def test_case3_exception_branches(word, reduced):
    st_ = preprocess(word, debug=True)
    st_.case3_exception(0, 2)
    assert st_.trace.reduced_colors == [reduced]


@pytest.mark.parametrize("word", ["abcaba", "abcabd", "abcada", "abcadb", "ababcab", "ababcba"])
def test_exception_instances_match_oracle(word):
    assert decide(word, debug=True).sortable == oracle_by_orders(word).sortable


@pytest.mark.parametrize("word, sortable", [
    ("abcdbacd", False),
    ("abab", True),
    ("abcab", True),
    ("a", True),
    ("aaaa", True),
    ("abcdabd", False),
])
def test_decide_examples(word, sortable):
    v = decide(word, debug=True)
    assert v.sortable is sortable
    if sortable:
        assert check_with_order(word, v.certificate)


def test_certificate_uses_caller_ids():
    assert decide("cd").certificate == (3, 2)
    v = decide([9, 5, 9, 7])
    assert sorted(v.certificate) == [5, 7, 9]
    assert check_with_order([9, 5, 9, 7], v.certificate)
    assert decide(SockOrdering.of([9, 5, 9, 7])).certificate != v.certificate


def test_certificate_for_two_lonely_letters():
    assert decide("ab").certificate == (1, 0)


def test_extract_certificate_after_run():
    st_ = preprocess("abcab")
    assert st_.run()
    cert = extract_certificate(st_)
    assert check_with_order("abcab", cert)


@settings(max_examples=400, deadline=None)
@given(words)
def test_decide_matches_oracle_with_invariants(w):
    v = decide(w, debug=True)
    assert v.sortable == oracle_by_orders(w).sortable
    if v.sortable:
        assert check_with_order(w, v.certificate)


@settings(max_examples=200, deadline=None)
@given(words)
def test_decide_ignores_runs(w):
    assert decide(w).sortable == decide(reduce_adjacent(w)).sortable


def test_decide_exhaustive_small_covers_every_branch():
    seen = set()
    for n in range(10):
        for w in product(range(4), repeat=n):
            if canonicalize(w) != w or reduce_adjacent(w) != w:
                continue
            report = decide_with_report(w)
            assert report.verdict.sortable == oracle_by_orders(w).sortable, w
            seen.update(report.branches)
    assert seen == {
        "case1", "case2", "case2_fail_not_minimal", "case2_exception",
        "case3_a_not_minimal", "case3_b_adjacent", "case3_a_step",
        "case3_exception", "fail_not_partial_order",
    }


def test_linear_validator_matches_cubic_checker():
    rng = random.Random(5)
    for _ in range(2000):
        w = [rng.randrange(5) for _ in range(rng.randint(0, 12))]
        order = sorted(set(w))
        rng.shuffle(order)
        assert sorts_with_order(w, order) == check_with_order(w, order)


def test_report_fields():
    report = decide_with_report("abcab")
    d = report.as_dict()
    assert d["n"] == 5 and d["sortable"] and d["op_counter"] > 0
    assert d["reductions"] == report.reductions
    assert NIL == -1
