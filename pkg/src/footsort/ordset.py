"""Ordered set of integer keys drawn from a fixed universe ``[0, n)``.

A Fenwick tree over presence flags gives insert, delete, rank, select,
successor and interval counts in ``O(log n)``. Every tree cell touched is
added to :attr:`KeySet.steps`, which the decider reports as its operation
count.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class KeySet:
    __slots__ = ("n", "_tree", "_present", "_len", "_top", "steps")

    def __init__(self, n: int, keys: Iterable[int] = ()) -> None:
        self.n = n
        self._present = bytearray(n)
        tree = [0] * (n + 1)
        count = 0
        for k in keys:
            if not self._present[k]:
                self._present[k] = 1
                tree[k + 1] = 1
                count += 1
        # linear-time bulk build
        for i in range(1, n + 1):
            j = i + (i & -i)
            if j <= n:
                tree[j] += tree[i]
        self._tree = tree
        self._len = count
        self._top = 1 << n.bit_length() if n else 0
        self.steps = n

    def __len__(self) -> int:
        return self._len

    def __bool__(self) -> bool:
        return self._len > 0

    def __contains__(self, key: int) -> bool:
        return 0 <= key < self.n and self._present[key] == 1

    def __iter__(self) -> Iterator[int]:
        present = self._present
        return (k for k in range(self.n) if present[k])

    def add(self, key: int) -> None:
        if self._present[key]:
            return
        self._present[key] = 1
        self._len += 1
        self._update(key + 1, 1)

    def remove(self, key: int) -> None:
        if not self._present[key]:
            raise KeyError(key)
        self._present[key] = 0
        self._len -= 1
        self._update(key + 1, -1)

    def discard(self, key: int) -> None:
        if self._present[key]:
            self.remove(key)

    def _update(self, i: int, delta: int) -> None:
        tree = self._tree
        n = self.n
        steps = 0
        while i <= n:
            tree[i] += delta
            i += i & -i
            steps += 1
        self.steps += steps

    def rank(self, key: int) -> int:
        """Number of keys strictly below ``key``."""
        if key <= 0:
            return 0
        i = min(key, self.n)
        tree = self._tree
        total = 0
        steps = 0
        while i:
            total += tree[i]
            i &= i - 1
            steps += 1
        self.steps += steps
        return total

    def select(self, r: int) -> int:
        """The key of rank ``r`` (0-based); caller guarantees ``r < len(self)``."""
        tree = self._tree
        n = self.n
        pos = 0
        step = self._top
        steps = 0
        while step:
            nxt = pos + step
            if nxt <= n and tree[nxt] <= r:
                pos = nxt
                r -= tree[nxt]
            step >>= 1
            steps += 1
        self.steps += steps
        return pos

    def first(self) -> int | None:
        return self.select(0) if self._len else None

    def last(self) -> int | None:
        return self.select(self._len - 1) if self._len else None

    def ceiling(self, key: int) -> int | None:
        """Smallest key ``>= key``, or None."""
        r = self.rank(key)
        return self.select(r) if r < self._len else None

    def higher(self, key: int) -> int | None:
        return self.ceiling(key + 1)

    def lower(self, key: int) -> int | None:
        r = self.rank(key)
        return self.select(r - 1) if r else None

    def floor(self, key: int) -> int | None:
        """Largest key ``<= key``, or None."""
        return self.lower(key + 1)

    def count_open(self, lo: int, hi: int) -> int:
        """Number of keys ``k`` with ``lo < k < hi``."""
        if hi <= lo + 1:
            return 0
        return self.rank(hi) - self.rank(lo + 1)
