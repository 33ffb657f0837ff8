"""O(N log N) foot-sortability decider.

The decider repeatedly picks a color that may be assumed to be the next
minimum of a certifying total order, removes all of its socks, and tracks
the resulting order constraints as a single prefix position: every two
colors seen in order inside the prefix ending at ``dist_min_pos`` are
forced to be decreasing. It fails as soon as some color has its second live
occurrence inside that prefix.

Node handles are original positions. Each live sock sits on a doubly linked
list (the reduced string) and on a per-color occurrence chain; three key
sets over positions index all live socks, the socks of lonely colors, and
the second occurrence of every color that still has two or more socks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import OrderingLike, SockOrdering, Verdict, colors_of, sorts_with_order
from .ordset import KeySet

NIL = -1


class CertificateError(RuntimeError):
    """A constructed certificate failed validation (an implementation defect)."""


@dataclass
class ReductionTrace:
    reduced_colors: list[int] = field(default_factory=list)
    sortable: bool | None = None


class SortingState:
    """Live structures of one decision run; see :func:`preprocess`."""

    def __init__(self, colors: tuple[int, ...], debug: bool = False) -> None:
        n = len(colors)
        k = max(colors) + 1 if colors else 0
        self.colors = colors
        self.n = n
        self.debug = debug
        self.prev = [NIL] * n
        self.next = [NIL] * n
        self.head = NIL
        # per-color occurrence chains (the Pos maps)
        self.first_of = [NIL] * k
        self.last_of = [NIL] * k
        self.count_of = [0] * k
        self.next_same = [NIL] * n
        self.prev_same = [NIL] * n
        self.dist_min_pos = 0
        self.link_ops = 0
        self.trace = ReductionTrace()
        self.branches: Counter[str] = Counter()

        kept = []
        last_color = NIL
        tail = NIL
        prev, nxt = self.prev, self.next
        first_of, last_of, count_of = self.first_of, self.last_of, self.count_of
        next_same, prev_same = self.next_same, self.prev_same
        for i, c in enumerate(colors):
            if c == last_color:
                continue
            last_color = c
            kept.append(i)
            if tail == NIL:
                self.head = i
            else:
                nxt[tail] = i
                prev[i] = tail
            tail = i
            if count_of[c]:
                prev_same[i] = last_of[c]
                next_same[last_of[c]] = i
            else:
                first_of[c] = i
            last_of[c] = i
            count_of[c] += 1
        self.link_ops += 2 * len(kept)

        lonely = [i for i in kept if count_of[colors[i]] == 1]
        second = [
            i for i in kept
            if prev_same[i] != NIL and prev_same[prev_same[i]] == NIL
        ]
        self.all_pos = KeySet(n, kept)
        self.lonely_pos = KeySet(n, lonely)
        self.second_pos = KeySet(n, second)

    @property
    def op_counter(self) -> int:
        return (
            self.link_ops
            + self.all_pos.steps
            + self.lonely_pos.steps
            + self.second_pos.steps
        )

    def live_nodes(self) -> list[int]:
        out = []
        p = self.head
        while p != NIL:
            out.append(p)
            p = self.next[p]
        return out

    def live_colors(self) -> list[int]:
        return [self.colors[p] for p in self.live_nodes()]

    def positions_of(self, c: int) -> list[int]:
        out = []
        p = self.first_of[c] if c < len(self.first_of) else NIL
        while p != NIL:
            out.append(p)
            p = self.next_same[p]
        return out

    def first_after(self, start: int, key: int) -> int:
        """First node of ``start``'s color after position ``key``, walking its chain."""
        p = start
        next_same = self.next_same
        while p != NIL and p <= key:
            p = next_same[p]
            self.link_ops += 1
        return p

    def delete_node(self, p: int) -> None:
        """Remove a live sock, keeping every index consistent and the list reduced."""
        colors = self.colors
        while p != NIL:
            c = colors[p]
            size = self.count_of[c]
            if size == 1:
                self.lonely_pos.remove(p)
            else:
                h = self.first_of[c]
                second = self.next_same[h]
                if p == h or p == second:
                    self.second_pos.remove(second)
                    if size >= 3:
                        self.second_pos.add(self.next_same[second])
                    else:
                        self.lonely_pos.add(second if p == h else h)
            # occurrence chain
            ps, ns = self.prev_same[p], self.next_same[p]
            if ps == NIL:
                self.first_of[c] = ns
            else:
                self.next_same[ps] = ns
            if ns == NIL:
                self.last_of[c] = ps
            else:
                self.prev_same[ns] = ps
            self.count_of[c] = size - 1
            self.all_pos.remove(p)
            # reduced string
            prv, nxt = self.prev[p], self.next[p]
            if prv == NIL:
                self.head = nxt
            else:
                self.next[prv] = nxt
            if nxt != NIL:
                self.prev[nxt] = prv
            self.prev[p] = self.next[p] = NIL
            self.link_ops += 4
            if prv != NIL and nxt != NIL and colors[prv] == colors[nxt]:
                p = nxt
            else:
                p = NIL
        if self.debug:
            self.check_invariants()

    def reduce_color(self, a: int) -> None:
        """Make ``a`` the next minimum: move the prefix to its last sock and drop it."""
        self.dist_min_pos = self.last_of[a]
        self.trace.reduced_colors.append(a)
        while self.count_of[a]:
            self.delete_node(self.first_of[a])

    def check_invariants(self) -> None:
        """Recompute every index from the linked list and compare (debug aid)."""
        nodes = self.live_nodes()
        cols = [self.colors[p] for p in nodes]
        assert nodes == sorted(nodes), "list out of position order"
        assert all(cols[i] != cols[i + 1] for i in range(len(cols) - 1)), "not reduced"
        assert list(self.all_pos) == nodes
        by_color: dict[int, list[int]] = {}
        for p, c in zip(nodes, cols):
            by_color.setdefault(c, []).append(p)
        for c in range(len(self.count_of)):
            assert self.positions_of(c) == by_color.get(c, []), f"chain of {c}"
            assert self.count_of[c] == len(by_color.get(c, []))
        lonely = sorted(ps[0] for ps in by_color.values() if len(ps) == 1)
        second = sorted(ps[1] for ps in by_color.values() if len(ps) >= 2)
        assert list(self.lonely_pos) == lonely, "lonely index"
        assert list(self.second_pos) == second, "second-occurrence index"

    # -- the main loop -------------------------------------------------

    def run(self) -> bool:
        colors = self.colors
        second_pos, lonely_pos, all_pos = self.second_pos, self.lonely_pos, self.all_pos
        branches = self.branches
        a_sec = second_pos.first()
        while a_sec is not None:
            a = colors[a_sec]
            a_first = self.first_of[a]
            # the distinguished minimal letter is the last live sock of the
            # prefix; an emptied prefix leaves every color minimal
            d_pos = all_pos.floor(self.dist_min_pos)
            if d_pos is None:
                d_pos = NIL
            b_pos = lonely_pos.ceiling(d_pos)
            between = all_pos.count_open(a_first, a_sec)
            lonely_between = lonely_pos.count_open(a_first, a_sec)

            if b_pos is not None and b_pos < a_first:
                branches["case1"] += 1
                self.reduce_color(colors[b_pos])
            elif b_pos is None or b_pos > a_sec:
                if between != 1:
                    branches["case2"] += 1
                    if d_pos > a_first:
                        branches["case2_fail_not_minimal"] += 1
                        return False
                    self.reduce_color(a)
                else:
                    branches["case2_exception"] += 1
                    self.case2_exception(a, d_pos)
            else:
                b = colors[b_pos]
                if d_pos > a_first:
                    branches["case3_a_not_minimal"] += 1
                    self.reduce_color(b)
                elif self.next[a_first] == b_pos:
                    branches["case3_b_adjacent"] += 1
                    self.reduce_color(b)
                elif between != lonely_between + 1:
                    branches["case3_a_step"] += 1
                    self.reduce_color(a)
                else:
                    branches["case3_exception"] += 1
                    self.case3_exception(a, b)

            a_sec = second_pos.first()
            if a_sec is not None and a_sec <= self.dist_min_pos:
                branches["fail_not_partial_order"] += 1
                return False
        return True

    def case2_exception(self, a: int, d_pos: int) -> None:
        """Exactly one sock ``z`` sits between the first two ``a``'s."""
        a_first = self.first_of[a]
        a_sec = self.next_same[a_first]
        z_node = self.next[a_first]
        z = self.colors[z_node]
        if d_pos > a_first:
            self.reduce_color(z)
            return
        # socks of a or z right after the second a would vanish in either reduction
        x = self.next[a_sec]
        while x != NIL and self.colors[x] in (a, z):
            self.delete_node(x)
            x = self.next[a_sec]
        if x == NIL:
            self.reduce_color(a)
            return
        a_pos = self.first_after(a_sec, x)
        z_pos = self.first_after(z_node, x)
        if a_pos == NIL:
            self.reduce_color(a)
        elif z_pos == NIL:
            self.reduce_color(z)
        elif a_pos < z_pos:
            self.reduce_color(a)
        else:
            self.reduce_color(z)

    def case3_exception(self, a: int, b: int) -> None:
        """The only unlonely sock between the first two ``a``'s is ``z``, right after the first."""
        a_first = self.first_of[a]
        a_sec = self.next_same[a_first]
        z_node = self.next[a_first]
        a_last = self.last_of[a] if self.count_of[a] >= 3 else NIL
        z_pos = self.first_after(z_node, a_sec)
        if a_last != NIL and z_pos != NIL and z_pos < a_last:
            self.reduce_color(b)
            return
        z = self.colors[z_node]
        x = self.next[a_sec]
        if x != NIL and self.colors[x] == z:
            x = self.next[x]
        if x == NIL or self.first_after(z_node, x) == NIL:
            self.reduce_color(b)
        else:
            self.reduce_color(a)


def preprocess(value: OrderingLike, debug: bool = False) -> SortingState:
    """Build the decider state for an ordering (adjacent repeats are skipped)."""
    state = SortingState(SockOrdering.of(value).colors, debug=debug)
    if debug:
        state.check_invariants()
    return state


def extract_certificate(state: SortingState) -> tuple[int, ...]:
    """Reduced colors in reduction order, then the leftovers in reverse appearance.

    Leftover colors are all lonely; making later ones smaller agrees with the
    prefix constraints and cannot create a forbidden triple among themselves.
    """
    leftovers = state.live_colors()
    cert = tuple(state.trace.reduced_colors) + tuple(reversed(leftovers))
    if not sorts_with_order(state.colors, cert):
        raise CertificateError(f"certificate {cert} rejected for {state.colors}")
    return cert


@dataclass
class DecideReport:
    n: int
    verdict: Verdict
    op_counter: int
    reductions: int
    branches: dict[str, int]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "sortable": self.verdict.sortable,
            "certificate": list(self.verdict.certificate)
            if self.verdict.sortable else None,
            "op_counter": self.op_counter,
            "reductions": self.reductions,
            "branches": dict(sorted(self.branches.items())),
        }


def decide_with_report(value: OrderingLike, debug: bool = False) -> DecideReport:
    """Decide and report instrumentation; certificates use the caller's color ids."""
    raw = colors_of(value)
    ordering = SockOrdering.of(raw)
    state = preprocess(ordering, debug=debug)
    sortable = state.run()
    state.trace.sortable = sortable
    if sortable:
        cert = extract_certificate(state)
        if ordering.colors != raw:
            original = dict(zip(ordering.colors, raw))
            cert = tuple(original[c] for c in cert)
        verdict = Verdict(cert)
    else:
        verdict = Verdict.no()
    return DecideReport(
        n=state.n,
        verdict=verdict,
        op_counter=state.op_counter,
        reductions=len(state.trace.reduced_colors),
        branches=dict(state.branches),
    )


def decide(value: OrderingLike, debug: bool = False) -> Verdict:
    """Decide foot-sortability; a sortable verdict carries a validated certificate."""
    return decide_with_report(value, debug=debug).verdict
