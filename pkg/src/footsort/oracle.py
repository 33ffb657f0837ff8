"""Brute-force deciders used as ground truth.

Two routes with nothing in common: enumerating every total order of the
colors against the forbidden ``b, c, a`` criterion, and searching every
push/pop schedule of an actual stack.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from typing import Sequence

from .core import OrderingLike, Verdict, colors_of

MAX_ORDER_ALPHABET = 8
MAX_SIMULATION_LENGTH = 24


class AlphabetMismatch(ValueError):
    pass


class GuardExceeded(ValueError):
    pass


def _occurrences(colors: Sequence[int]) -> dict[int, list[int]]:
    occ: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        occ.setdefault(c, []).append(i)
    return occ


def _has_bca(occ: dict[int, list[int]], b: int, c: int, a: int) -> bool:
    """Whether ``b, c, a`` occurs as a subsequence (leftmost matching)."""
    first_b = occ[b][0]
    cs = occ[c]
    k = bisect_right(cs, first_b)
    if k == len(cs):
        return False
    return occ[a][-1] > cs[k]


def check_with_order(value: OrderingLike, ascending: Sequence[int]) -> bool:
    """True iff no colors ``a < b < c`` (in ``ascending``) occur as ``b, c, a``."""
    colors = colors_of(value)
    order = colors_of(ascending)
    if len(set(order)) != len(order) or set(order) != set(colors):
        raise AlphabetMismatch(
            f"order {list(order)} does not cover the alphabet {sorted(set(colors))}"
        )
    occ = _occurrences(colors)
    k = len(order)
    for i in range(k):
        a = order[i]
        for j in range(i + 1, k):
            b = order[j]
            for l in range(j + 1, k):
                if _has_bca(occ, b, order[l], a):
                    return False
    return True


def oracle_by_orders(value: OrderingLike) -> Verdict:
    """Search the total orders of the alphabet in lexicographic order.

    Orders are built smallest color first; a prefix that already contains a
    forbidden triple is abandoned together with all its extensions, so the
    first order reached is the first passing permutation.
    """
    colors = colors_of(value)
    alphabet = sorted(set(colors))
    k = len(alphabet)
    if k > MAX_ORDER_ALPHABET:
        raise GuardExceeded(f"alphabet of size {k} exceeds {MAX_ORDER_ALPHABET}")
    occ = _occurrences(colors)
    last = {a: occ[a][-1] for a in alphabet}
    # reach[b][c]: index of the first c after the first b (b, c as a subsequence)
    never = len(colors)
    reach = {}
    for b in alphabet:
        row = {}
        for c in alphabet:
            cs = occ[c]
            t = bisect_right(cs, occ[b][0])
            row[c] = cs[t] if t < len(cs) else never
        reach[b] = row

    order: list[int] = []
    reach_below: list[int] = []  # latest last-occurrence among colors below order[j]
    placed = set()

    def extend() -> bool:
        if len(order) == k:
            return True
        for c in alphabet:
            if c in placed:
                continue
            if any(reach_below[j] > reach[order[j]][c] for j in range(len(order))):
                continue
            below = max(reach_below[-1], last[order[-1]]) if order else -1
            order.append(c)
            reach_below.append(below)
            placed.add(c)
            if extend():
                return True
            order.pop()
            reach_below.pop()
            placed.discard(c)
        return False

    return Verdict(tuple(order)) if extend() else Verdict.no()


def oracle_by_simulation(value: OrderingLike) -> bool:
    """Search every push/pop schedule of one stack.

    A schedule succeeds when the whole input has passed through the stack and
    every color left it as one contiguous block. Once output moves away from
    a color, that color is sealed; popping a sealed color is a dead end, and
    so is sealing a color that still has socks in the input or on the stack.
    """
    colors = colors_of(value)
    n = len(colors)
    if n > MAX_SIMULATION_LENGTH:
        raise GuardExceeded(f"length {n} exceeds {MAX_SIMULATION_LENGTH}")
    if n == 0:
        return True
    # suffix[i]: colors still waiting in the input at index i
    suffix = [frozenset(colors[i:]) for i in range(n + 1)]

    @lru_cache(maxsize=None)
    def run(i: int, stack: tuple[int, ...], current: int, closed: frozenset) -> bool:
        if i == n and not stack:
            return True
        if stack:
            top = stack[-1]
            if top == current:
                if run(i, stack[:-1], current, closed):
                    return True
            elif top not in closed:
                exhausted = current < 0 or (
                    current not in suffix[i] and current not in stack
                )
                if exhausted:
                    sealed = closed | {current} if current >= 0 else closed
                    if run(i, stack[:-1], top, sealed):
                        return True
        if i < n:
            if run(i + 1, stack + (colors[i],), current, closed):
                return True
        return False

    try:
        return run(0, (), -1, frozenset())
    finally:
        run.cache_clear()


def is_stack_sortable_permutation(p: Sequence[int]) -> bool:
    """Knuth's criterion: no ``b, c, a`` with ``a < b < c``."""
    values = list(p)
    if sorted(values) not in (list(range(len(values))), list(range(1, len(values) + 1))):
        raise ValueError(f"{values} is not a permutation")
    return check_with_order(values, sorted(values))
