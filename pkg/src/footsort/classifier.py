"""Minimal non-foot-sortable 2-bounded orderings: the known list and its check.

The list has 14 sporadic orderings and four infinite families (A, B, B', C).
:func:`verify_classification` enumerates every reduced 2-bounded ordering up
to a length, keeps the minimal non-sortable ones, and compares that set with
the list instantiated at the same length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import (
    Colors,
    Embedding,
    OrderingLike,
    Verdict,
    canonicalize,
    colors_of,
    contains_pattern,
    delete_at,
    format_colors,
    is_two_bounded,
    reduce_adjacent,
)
from .decider import decide

SPORADIC: dict[str, tuple[str, ...]] = {
    "I": ("abcdbacd", "abcdedabc"),
    "I'": ("abcadbdc", "abcbdadc", "abcdbadc", "abcdcadb", "abcdceaeb", "abcdedacb"),
    "II": ("abcdbcad", "abcdcbad", "abcdedbac"),
    "III": ("abcabdedc", "abcbadedc", "abcdcaefeb"),
}
# Commonly printed as "abcdadedc", which is sortable; "abcbadedc" is the
# relabeling of the derived candidate "ampmaxyxp".
MISPRINTED_SPORADIC = {"abcbadedc": "abcdadedc"}
SPORADIC_LIST: list[tuple[str, str]] = [
    (f"Type {kind} #{i + 1}", word)
    for kind, words in SPORADIC.items()
    for i, word in enumerate(words)
]

FAMILIES = ("A", "B", "B'", "C")
FAMILY_MIN_N = {"A": 2, "B": 3, "B'": 3, "C": 3}
FAMILY_EXTRA = {"A": 3, "B": 4, "B'": 4, "C": 5}  # length is 2n + extra
DEFAULT_MAX_LENGTH = 13


class ClassifierError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyTemplate:
    """A family member before canonical relabeling.

    Colors ``0..n-1`` are ``a_0..a_{n-1}``; ``x``, ``y`` and ``z`` follow.
    """

    family: str
    n: int
    colors: Colors

    @property
    def x(self) -> int:
        return self.n

    @property
    def y(self) -> int:
        return self.n + 1

    @property
    def z(self) -> int:
        return self.n + 2


def family_template(family: str, n: int) -> FamilyTemplate:
    if family not in FAMILY_MIN_N:
        raise ClassifierError(f"unknown family {family!r}")
    if n < FAMILY_MIN_N[family]:
        raise ClassifierError(f"family {family} needs n >= {FAMILY_MIN_N[family]}")
    x, y, z = n, n + 1, n + 2
    top = n - 1
    head = {
        "A": [x, 0, y, top, x],
        "B": [0, x, y, top, x, y],
        "B'": [0, y, x, top, x, y],
        "C": [0, x, top, y, z, y, x],
    }[family]
    tail = []
    for i in range(n - 2, -1, -1):
        tail.extend((i, i + 1))
    return FamilyTemplate(family, n, tuple(head + tail))


def generate_family(family: str, n: int) -> Colors:
    """Canonical form of the family member with parameter ``n``."""
    return canonicalize(family_template(family, n).colors)


def family_length(family: str, n: int) -> int:
    return 2 * n + FAMILY_EXTRA[family]


def family_deletion_certificates(
    family: str, n: int, printed: bool = False
) -> list[tuple[int, tuple[int, ...]]]:
    """For every sock, an ascending total order certifying the ordering without it.

    Orders are stated on the template's colors and include every color; the
    caller drops colors that vanish with the deleted sock. With ``printed``
    the type A pair orders are returned as commonly printed, with ``x`` and
    ``y`` swapped (``y < ... < a_{i+1} < x < a_i ...``), which does not certify.
    """
    t = family_template(family, n)
    x, y, z = t.x, t.y, t.z
    down = list(range(n - 1, -1, -1))  # a_{n-1} < ... < a_0

    def split(i: int, mid: list[int]) -> list[int]:
        # a_{n-1} < ... < a_{i+1} < mid < a_i < ... < a_0
        return list(range(n - 1, i, -1)) + mid + list(range(i, -1, -1))

    out: list[tuple[int, tuple[int, ...]]] = []
    if family == "A":
        head = {0: [y, x] + down, 1: [y, x] + down, 2: [x] + down + [y],
                3: [x, y] + down, 4: [x, y] + down}
        head_len = 5
        if printed:
            pair = lambda i: [y] + split(i, [x])
        else:
            pair = lambda i: [x] + split(i, [y])
    elif family in ("B", "B'"):
        first_y, first_x = (2, 1) if family == "B" else (1, 2)
        head = {0: [x] + down + [y]}
        head[first_y] = [x, y] + down
        head[4] = [x, y] + down  # second x
        head[5] = [y, x] + down  # second y
        head[first_x] = [y, x] + down
        head[3] = [y, x] + down  # first a_{n-1}
        head_len = 6
        pair = lambda i: [x] + split(i, [y])
    else:
        head = {0: [z, y] + down + [x],
                1: [z, y, x] + down, 2: [z, y, x] + down,
                3: [x, y, z] + down, 4: [x, y, z] + down,
                5: [x, z, y] + down, 6: [x, z, y] + down}
        head_len = 7
        pair = lambda i: [z, y] + split(i, [x])
    for pos in range(head_len):
        out.append((pos, tuple(head[pos])))
    # the group (a_i a_{i+1}) occupies two positions per step after the head
    for step, i in enumerate(range(n - 2, -1, -1)):
        for pos in (head_len + 2 * step, head_len + 2 * step + 1):
            out.append((pos, tuple(pair(i))))
    assert len(out) == len(t.colors)
    return out


def _is_sortable(result) -> bool:
    return result.sortable if isinstance(result, Verdict) else bool(result)


def is_minimal_nonsortable(
    value: OrderingLike, decider_fn: Callable = decide
) -> bool:
    """Not sortable, while every single-sock deletion is sortable."""
    colors = colors_of(value)
    if _is_sortable(decider_fn(colors)):
        return False
    for i in range(len(colors)):
        smaller = reduce_adjacent(canonicalize(delete_at(colors, i)))
        if not _is_sortable(decider_fn(smaller)):
            return False
    return True


@dataclass(frozen=True)
class PatternMatch:
    name: str  # e.g. "Type I #1" or "Type A"
    family: str | None
    n: int | None
    pattern: Colors
    embedding: Embedding

    def describe(self) -> str:
        label = self.name if self.n is None else f"{self.name} (n={self.n})"
        return f"{label}: {format_colors(self.pattern)}"


def _candidate_patterns(max_len: int) -> Iterator[tuple[str, str | None, int | None, Colors]]:
    for name, word in SPORADIC_LIST:
        if len(word) <= max_len:
            yield name, None, None, canonicalize(word)
    n = 2
    while family_length("A", n) <= max_len:
        for family in FAMILIES:
            if n >= FAMILY_MIN_N[family] and family_length(family, n) <= max_len:
                yield f"Type {family}", family, n, generate_family(family, n)
        n += 1


def match_minimal_pattern(value: OrderingLike) -> PatternMatch | None:
    """First listed minimal pattern contained in a 2-bounded ordering, if any."""
    colors = colors_of(value)
    if not is_two_bounded(colors):
        raise ClassifierError("ordering is not 2-bounded")
    hay = reduce_adjacent(colors)
    for name, family, n, pattern in _candidate_patterns(len(hay)):
        emb = contains_pattern(hay, pattern)
        if emb is not None:
            # lift positions from the run-collapsed string back to the input
            starts = [i for i in range(len(colors)) if i == 0 or colors[i] != colors[i - 1]]
            lifted = Embedding(tuple(starts[p] for p in emb.positions), emb.mapping)
            return PatternMatch(name, family, n, pattern, lifted)
    return None


def enumerate_canonical(
    length: int,
    two_bounded: bool = True,
    max_alphabet: int | None = None,
    bound: int = DEFAULT_MAX_LENGTH,
) -> Iterator[Colors]:
    """Reduced restricted-growth sequences of a given length, lexicographically."""
    if length > bound:
        raise ClassifierError(f"length {length} exceeds the enumeration bound {bound}")
    if length <= 0:
        if length == 0:
            yield ()
        return
    cap = max_alphabet if max_alphabet is not None else length
    seq: list[int] = []
    used = [0] * (length + 1)

    def extend(k: int) -> Iterator[Colors]:
        if len(seq) == length:
            yield tuple(seq)
            return
        for c in range(min(k + 1, cap)):
            if seq and seq[-1] == c:
                continue
            if two_bounded and used[c] == 2:
                continue
            seq.append(c)
            used[c] += 1
            yield from extend(max(k, c + 1))
            seq.pop()
            used[c] -= 1

    yield from extend(0)


def expected_minimal_set(max_length: int) -> dict[Colors, str]:
    """Canonical forms of the listed orderings of length at most ``max_length``."""
    out: dict[Colors, str] = {}
    for name, family, n, pattern in _candidate_patterns(max_length):
        label = name if n is None else f"{name} n={n}"
        if pattern in out:
            raise ClassifierError(f"{label} duplicates {out[pattern]}")
        out[pattern] = label
    return out


@dataclass
class ClassificationReport:
    max_length: int
    counts: dict[int, dict[str, int]] = field(default_factory=dict)
    found: dict[Colors, str] = field(default_factory=dict)
    expected: dict[Colors, str] = field(default_factory=dict)

    @property
    def missing(self) -> list[Colors]:
        return sorted(set(self.expected) - set(self.found))

    @property
    def unexpected(self) -> list[Colors]:
        return sorted(set(self.found) - set(self.expected))

    @property
    def passed(self) -> bool:
        return set(self.found) == set(self.expected)

    def lines(self) -> list[str]:
        out = [f"max_length {self.max_length}"]
        for length, c in sorted(self.counts.items()):
            out.append(
                f"length {length}: enumerated {c['enumerated']} "
                f"not_sortable {c['not_sortable']} minimal {c['minimal']}"
            )
        for pattern in sorted(self.found, key=lambda p: (len(p), p)):
            out.append(f"minimal {format_colors(pattern)} {self.found[pattern]}")
        for pattern in self.missing:
            out.append(f"missing {format_colors(pattern)} {self.expected[pattern]}")
        for pattern in self.unexpected:
            out.append(f"unexpected {format_colors(pattern)}")
        out.append(f"total {len(self.found)} expected {len(self.expected)}")
        out.append("PASS" if self.passed else "FAIL")
        return out

    def as_dict(self) -> dict:
        return {
            "max_length": self.max_length,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "minimal": [
                {"ordering": format_colors(p), "label": lbl}
                for p, lbl in sorted(self.found.items(), key=lambda kv: (len(kv[0]), kv[0]))
            ],
            "missing": [format_colors(p) for p in self.missing],
            "unexpected": [format_colors(p) for p in self.unexpected],
            "total": len(self.found),
            "expected_total": len(self.expected),
            "passed": self.passed,
        }


def _scan(lengths: list[int], shard: int, shards: int, decider_fn=decide):
    counts: dict[int, dict[str, int]] = {}
    found: list[Colors] = []
    index = 0
    for length in lengths:
        c = counts.setdefault(length, {"enumerated": 0, "not_sortable": 0, "minimal": 0})
        for s in enumerate_canonical(length, two_bounded=True):
            index += 1
            if index % shards != shard:
                continue
            c["enumerated"] += 1
            if _is_sortable(decider_fn(s)):
                continue
            c["not_sortable"] += 1
            if is_minimal_nonsortable(s, decider_fn):
                c["minimal"] += 1
                found.append(s)
    return counts, found


def _scan_star(args):
    return _scan(*args)


def verify_classification(max_length: int, shards: int = 1) -> ClassificationReport:
    """Compare enumerated minimal non-sortable orderings with the known list."""
    if max_length > DEFAULT_MAX_LENGTH:
        raise ClassifierError(f"max_length {max_length} exceeds {DEFAULT_MAX_LENGTH}")
    lengths = list(range(1, max_length + 1))
    if shards <= 1:
        parts = [_scan(lengths, 0, 1)]
    else:
        from multiprocessing import Pool

        with Pool(shards) as pool:
            parts = pool.map(_scan_star, [(lengths, i, shards) for i in range(shards)])
    report = ClassificationReport(max_length, expected=expected_minimal_set(max_length))
    for counts, found in parts:
        for length, c in counts.items():
            total = report.counts.setdefault(length, dict.fromkeys(c, 0))
            for key, value in c.items():
                total[key] += value
        for s in found:
            report.found[s] = report.expected.get(s, "unlisted")
    return report
