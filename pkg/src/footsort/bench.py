"""Instance generators and the scaling benchmark."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, asdict

from .decider import decide_with_report

KINDS = ("random", "sortable", "adversarial")


def random_two_bounded(n: int, rng: random.Random) -> list[int]:
    """Uniformly shuffled socks, each color used once or twice."""
    socks: list[int] = []
    color = 0
    while len(socks) < n:
        socks.extend([color] * min(rng.choice((1, 2)), n - len(socks)))
        color += 1
    rng.shuffle(socks)
    return socks


def random_sortable(n: int, rng: random.Random, max_block: int = 2) -> list[int]:
    """A random sortable ordering from a random push/pop schedule.

    Pops emit ranks 0, 1, 2, ... so the stack output is sorted; consecutive
    ranks are then grouped into colors of at most ``max_block`` socks and the
    color ids are shuffled.
    """
    stack: list[int] = []
    emitted = 0
    pushed = 0
    popped_rank: dict[int, int] = {}
    while emitted < n:
        if pushed < n and (not stack or rng.random() < 0.5):
            stack.append(pushed)
            pushed += 1
        else:
            popped_rank[stack.pop()] = emitted
            emitted += 1
    ranks = [popped_rank[i] for i in range(n)]
    block_of = []
    color = 0
    while len(block_of) < n:
        block_of.extend([color] * rng.randint(1, max_block))
        color += 1
    ids = list(range(color))
    rng.shuffle(ids)
    return [ids[block_of[r]] for r in ranks]


def chain(m: int) -> list[int]:
    """``a0 a1 a0 a2 a1 a3 a2 ...`` over colors ``0..m``."""
    out = [0]
    for i in range(1, m + 1):
        out.extend((i, i - 1))
    return out


def adversarial(n: int, rng: random.Random) -> list[int]:
    """A chain over half the input, then one large family member on fresh colors.

    The chain keeps the decider busy with Case 2/3 exceptions; the family
    member at the end is only rejected after a long run of reductions.
    """
    from .classifier import FAMILIES, FAMILY_EXTRA, FAMILY_MIN_N, family_template

    out = chain(max(0, (n // 2 - 1) // 2))
    family = rng.choice(FAMILIES)
    param = (n - len(out) - FAMILY_EXTRA[family]) // 2
    if param >= FAMILY_MIN_N[family]:
        base = max(out) + 1
        out.extend(base + c for c in family_template(family, param).colors)
    fresh = max(out) + 1 if out else 0
    while len(out) < n:
        out.append(fresh)
        fresh += 1
    return out[:n]


def make_instance(kind: str, n: int, rng: random.Random) -> list[int]:
    if kind == "random":
        return random_two_bounded(n, rng)
    if kind == "sortable":
        return random_sortable(n, rng)
    if kind == "adversarial":
        return adversarial(n, rng)
    raise ValueError(f"unknown instance kind {kind!r}")


@dataclass
class BenchRow:
    kind: str
    n: int
    sortable: bool
    seconds: float
    op_counter: int
    ratio: float  # op_counter / (n * log2(n + 2))
    reductions: int


def bench(sizes, seed: int = 0, kinds=KINDS) -> list[BenchRow]:
    rows = []
    for kind in kinds:
        for n in sizes:
            rng = random.Random(f"{seed}:{kind}:{n}")
            inst = make_instance(kind, n, rng)
            t0 = time.perf_counter()
            report = decide_with_report(inst)
            dt = time.perf_counter() - t0
            rows.append(BenchRow(
                kind=kind,
                n=n,
                sortable=report.verdict.sortable,
                seconds=dt,
                op_counter=report.op_counter,
                ratio=report.op_counter / (n * math.log2(n + 2)) if n else 0.0,
                reductions=report.reductions,
            ))
    return rows


def rows_as_dicts(rows: list[BenchRow]) -> list[dict]:
    return [asdict(r) for r in rows]
