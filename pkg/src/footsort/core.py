"""Sock orderings: parsing, canonical forms, reduction and pattern containment."""

from __future__ import annotations

import string
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

LETTERS = string.ascii_lowercase + string.ascii_uppercase + string.digits
_LETTER_ID = {ch: i for i, ch in enumerate(LETTERS)}

Colors = tuple[int, ...]
OrderingLike = Union["SockOrdering", str, Sequence[int]]


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class SockOrdering:
    """A sequence of sock colors with ids in ``[0, len(colors))``."""

    colors: Colors

    def __post_init__(self) -> None:
        n = len(self.colors)
        for c in self.colors:
            if not isinstance(c, int) or c < 0 or c >= n:
                raise ValueError(f"color id {c!r} outside [0, {n})")

    @classmethod
    def of(cls, value: OrderingLike) -> "SockOrdering":
        """Coerce letters, an id sequence or an ordering, densifying ids when needed."""
        if isinstance(value, SockOrdering):
            return value
        colors = colors_of(value)
        if colors and max(colors) >= len(colors):
            colors = densify(colors)
        return cls(colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, i):
        return self.colors[i]

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def two_bounded(self) -> bool:
        return is_two_bounded(self.colors)

    def __str__(self) -> str:
        return format_colors(self.colors)


def colors_of(value: OrderingLike) -> Colors:
    """Return the raw color tuple of letters, ids, or an ordering."""
    if isinstance(value, SockOrdering):
        return value.colors
    if isinstance(value, str):
        try:
            return tuple(_LETTER_ID[ch] for ch in value)
        except KeyError as exc:
            raise ParseError(f"unsupported sock letter {exc.args[0]!r}") from None
    out = tuple(value)
    for c in out:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ParseError(f"color ids must be non-negative integers, got {c!r}")
    return out


def densify(colors: Sequence[int]) -> Colors:
    """Relabel ids onto ``0..k-1`` preserving their relative order."""
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return tuple(rank[c] for c in colors)


def parse_ordering(text: str) -> tuple[SockOrdering, list[str]]:
    """Parse a letter string or whitespace separated decimal ids.

    Returns the ordering (dense ids) and the display name of every id.
    A single token is read as letters; several tokens as decimal ids.
    """
    tokens = text.split()
    if len(tokens) <= 1:
        word = tokens[0] if tokens else ""
        raw = colors_of(word)
        names_of = {_LETTER_ID[ch]: ch for ch in word}
    else:
        try:
            raw = tuple(int(t, 10) for t in tokens)
        except ValueError:
            raise ParseError(f"cannot parse {text!r} as ids") from None
        if any(c < 0 for c in raw):
            raise ParseError("color ids must be non-negative")
        names_of = {c: str(c) for c in raw}
    distinct = sorted(set(raw))
    rank = {c: i for i, c in enumerate(distinct)}
    names = [names_of[c] for c in distinct]
    return SockOrdering(tuple(rank[c] for c in raw)), names


def format_colors(colors: Iterable[int], names: Sequence[str] | None = None) -> str:
    colors = list(colors)
    if names is not None:
        labels = [names[c] for c in colors]
        return ("" if all(len(x) == 1 for x in labels) else " ").join(labels)
    if all(c < len(LETTERS) for c in colors):
        return "".join(LETTERS[c] for c in colors)
    return " ".join(map(str, colors))


def is_two_bounded(colors: Iterable[int]) -> bool:
    seen: dict[int, int] = {}
    for c in colors:
        seen[c] = seen.get(c, 0) + 1
        if seen[c] > 2:
            return False
    return True


def is_reduced(colors: Sequence[int]) -> bool:
    return all(colors[i] != colors[i + 1] for i in range(len(colors) - 1))


def reduce_adjacent(value: OrderingLike) -> Colors:
    """Collapse every maximal run of one color to a single sock."""
    out: list[int] = []
    for c in colors_of(value):
        if not out or out[-1] != c:
            out.append(c)
    return tuple(out)


def canonicalize(value: OrderingLike) -> Colors:
    """Relabel colors by order of first occurrence (restricted growth form)."""
    label: dict[int, int] = {}
    out = []
    for c in colors_of(value):
        if c not in label:
            label[c] = len(label)
        out.append(label[c])
    return tuple(out)


def delete_at(colors: Sequence[int], i: int) -> Colors:
    return tuple(colors[:i]) + tuple(colors[i + 1:])


@dataclass(frozen=True)
class Embedding:
    """Where a needle sits inside a haystack.

    ``positions[j]`` is the haystack index matched to needle index ``j``;
    ``mapping`` sends each needle color to its haystack color.
    """

    positions: tuple[int, ...]
    mapping: dict[int, int]


def contains_pattern(haystack: OrderingLike, needle: OrderingLike) -> Embedding | None:
    """Find a subsequence of ``haystack`` equal to ``needle`` up to a color bijection.

    Backtracks over the partial bijection. A mapped needle color always takes
    the next occurrence of its image (leftmost matching is optimal once the
    bijection is fixed), so branching happens only when a needle color is
    seen for the first time. Failed states are memoized on the colors that
    can still matter.
    """
    hay = colors_of(haystack)
    pat = colors_of(needle)
    n, m = len(hay), len(pat)
    if m == 0:
        return Embedding((), {})
    if m > n:
        return None

    occ: dict[int, list[int]] = {}
    for i, c in enumerate(hay):
        occ.setdefault(c, []).append(i)
    # suffix[c][j]: occurrences of needle color c at indices >= j
    suffix = {c: [0] * (m + 1) for c in set(pat)}
    for j in range(m - 1, -1, -1):
        for c, row in suffix.items():
            row[j] = row[j + 1] + (pat[j] == c)
    if max(row[0] for row in suffix.values()) > max(len(v) for v in occ.values()):
        return None

    def after(h: int, last: int) -> int:
        """Number of occurrences of hay color h strictly after index last."""
        lst = occ[h]
        return len(lst) - bisect_right(lst, last)

    fwd: dict[int, int] = {}
    used: dict[int, int] = {}  # hay color -> needle color
    positions: list[int] = []
    failed: set = set()

    def search(j: int, last: int) -> bool:
        if j == m:
            return True
        if m - j > n - 1 - last:
            return False
        live = []
        for h, c in used.items():
            left = after(h, last)
            need = suffix[c][j]
            if need:
                if left < need:
                    return False
                live.append((c, h))
            elif left:
                live.append((-1, h))
        key = (j, last, frozenset(live))
        if key in failed:
            return False
        c = pat[j]
        if c in fwd:
            lst = occ[fwd[c]]
            k = bisect_right(lst, last)
            positions.append(lst[k])
            if search(j + 1, lst[k]):
                return True
            positions.pop()
        else:
            need = suffix[c][j]
            tried: set[int] = set()
            for i in range(last + 1, n - (m - j) + 1):
                h = hay[i]
                if h in used or h in tried:
                    continue
                tried.add(h)
                if after(h, i - 1) < need:
                    continue
                fwd[c] = h
                used[h] = c
                positions.append(i)
                if search(j + 1, i):
                    return True
                positions.pop()
                del fwd[c]
                del used[h]
        failed.add(key)
        return False

    if search(0, -1):
        return Embedding(tuple(positions), dict(fwd))
    return None


@dataclass(frozen=True)
class Verdict:
    """Outcome of a foot-sortability decision.

    ``certificate`` lists the colors in ascending order of a total order that
    witnesses sortability; it is None exactly when the ordering is not sortable.
    """

    certificate: Colors | None

    @property
    def sortable(self) -> bool:
        return self.certificate is not None

    @classmethod
    def no(cls) -> "Verdict":
        return cls(None)

    def __str__(self) -> str:
        return "SORTABLE" if self.sortable else "NOT-SORTABLE"


def sorts_with_order(value: OrderingLike, ascending: Sequence[int]) -> bool:
    """Replay a greedy stack sort under a fixed color order in linear time.

    Before pushing a sock every strictly smaller sock is popped; the run
    succeeds iff the output is non-decreasing in the order. Equivalent to the
    absence of a ``b, c, a`` subsequence with ``a < b < c``.
    """
    colors = colors_of(value)
    rank = {c: i for i, c in enumerate(ascending)}
    if len(rank) != len(ascending) or set(colors) != set(rank):
        raise ValueError("order must list each color of the ordering exactly once")
    stack: list[int] = []
    out_last = -1
    for c in colors:
        r = rank[c]
        while stack and stack[-1] < r:
            top = stack.pop()
            if top < out_last:
                return False
            out_last = top
        stack.append(r)
    while stack:
        top = stack.pop()
        if top < out_last:
            return False
        out_last = top
    return True
