"""Command line front end: ``footsort decide|oracle|verify|enumerate|bench``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bench import KINDS, bench, rows_as_dicts
from .classifier import (
    DEFAULT_MAX_LENGTH,
    ClassifierError,
    enumerate_canonical,
    match_minimal_pattern,
    verify_classification,
)
from .core import ParseError, format_colors, parse_ordering
from .decider import decide
from .oracle import GuardExceeded, oracle_by_orders, oracle_by_simulation

EXIT_SORTABLE = 0
EXIT_NOT_SORTABLE = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3
MODES = ("orders", "simulate", "both")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    text: str | None = None
    fmt: str = "text"
    mode: str = "both"
    max_length: int = 11
    max_alphabet: int | None = None
    two_bounded: bool = True
    limit: int | None = None
    sizes: tuple[int, ...] = (1000, 10000, 100000)
    kinds: tuple[str, ...] = KINDS
    seed: int = 0
    shards: int = 1


def _read_input(words: list[str], path: str | None) -> str:
    if path is not None:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    if words:
        return " ".join(words)
    if not sys.stdin.isatty():
        return sys.stdin.read()
    raise UsageError("no ordering given (argument, --file, or standard input)")


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_decide(cfg: RunConfig) -> int:
    ordering, names = parse_ordering(cfg.text or "")
    verdict = decide(ordering)
    text_in = format_colors(ordering.colors, names)
    payload: dict = {"input": text_in, "sortable": verdict.sortable}
    if verdict.sortable:
        cert = [names[c] for c in verdict.certificate]
        payload["certificate"] = cert
        lines = ["SORTABLE", "certificate: " + "<".join(cert)]
        _emit(cfg, payload, lines)
        return EXIT_SORTABLE
    lines = ["NOT-SORTABLE"]
    payload["witness"] = None
    if ordering.two_bounded:
        match = match_minimal_pattern(ordering)
        if match is not None:
            payload["witness"] = {
                "pattern": match.name,
                "family": match.family,
                "n": match.n,
                "ordering": format_colors(match.pattern),
                "positions": list(match.embedding.positions),
                "colors": format_colors(
                    [ordering.colors[p] for p in match.embedding.positions], names
                ),
            }
            lines.append(f"witness {match.describe()}")
            lines.append(
                "embedding: positions "
                + " ".join(map(str, match.embedding.positions))
                + " -> " + payload["witness"]["colors"]
            )
    _emit(cfg, payload, lines)
    return EXIT_NOT_SORTABLE


def cmd_oracle(cfg: RunConfig) -> int:
    ordering, names = parse_ordering(cfg.text or "")
    payload: dict = {"input": format_colors(ordering.colors, names), "mode": cfg.mode}
    lines = []
    results = {}
    if cfg.mode in ("orders", "both"):
        verdict = oracle_by_orders(ordering)
        results["orders"] = verdict.sortable
        payload["orders"] = {
            "sortable": verdict.sortable,
            "certificate": [names[c] for c in verdict.certificate]
            if verdict.sortable else None,
        }
        line = f"orders: {verdict}"
        if verdict.sortable:
            line += " " + "<".join(names[c] for c in verdict.certificate)
        lines.append(line)
    if cfg.mode in ("simulate", "both"):
        ok = oracle_by_simulation(ordering)
        results["simulate"] = ok
        payload["simulate"] = {"sortable": ok}
        lines.append(f"simulate: {'SORTABLE' if ok else 'NOT-SORTABLE'}")
    verdicts = set(results.values())
    if len(verdicts) > 1:
        payload["agree"] = False
        lines.append("DISAGREE")
        _emit(cfg, payload, lines)
        return EXIT_DISAGREE
    sortable = verdicts.pop()
    if cfg.mode == "both":
        payload["agree"] = True
        lines.append(f"agree: {'SORTABLE' if sortable else 'NOT-SORTABLE'}")
    _emit(cfg, payload, lines)
    return EXIT_SORTABLE if sortable else EXIT_NOT_SORTABLE


def cmd_verify(cfg: RunConfig) -> int:
    report = verify_classification(cfg.max_length, shards=cfg.shards)
    _emit(cfg, report.as_dict(), report.lines())
    return 0 if report.passed else 1


def cmd_enumerate(cfg: RunConfig) -> int:
    words = []
    for i, s in enumerate(enumerate_canonical(
        cfg.max_length, two_bounded=cfg.two_bounded, max_alphabet=cfg.max_alphabet
    )):
        if cfg.limit is not None and i >= cfg.limit:
            break
        words.append(format_colors(s))
    _emit(cfg, {"length": cfg.max_length, "count": len(words), "orderings": words},
          words + [f"count {len(words)}"])
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    rows = bench(cfg.sizes, seed=cfg.seed, kinds=cfg.kinds)
    lines = [f"{'kind':<12}{'n':>10}{'verdict':>14}{'seconds':>10}{'ops':>12}{'ops/(n lg n)':>14}"]
    for r in rows:
        lines.append(
            f"{r.kind:<12}{r.n:>10}{'SORTABLE' if r.sortable else 'NOT-SORTABLE':>14}"
            f"{r.seconds:>10.3f}{r.op_counter:>12}{r.ratio:>14.3f}"
        )
    _emit(cfg, {"seed": cfg.seed, "rows": rows_as_dicts(rows)}, lines)
    return 0


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(float(t)) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="footsort", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide one ordering")
    p.add_argument("ordering", nargs="*", help="letters, or decimal ids")
    p.add_argument("--file", help="read the ordering from a file ('-' for stdin)")

    p = sub.add_parser("oracle", parents=[common], help="run the brute-force oracles")
    p.add_argument("ordering", nargs="*", help="[orders|simulate|both] ORDERING")
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--file")

    p = sub.add_parser("verify", parents=[common], help="check the classification")
    p.add_argument("length", nargs="?", type=int)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--shards", type=int, default=1)

    p = sub.add_parser("enumerate", parents=[common], help="list canonical orderings")
    p.add_argument("length", nargs="?", type=int)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--all", action="store_true", help="do not require 2-boundedness")
    p.add_argument("--max-alphabet", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("bench", parents=[common], help="operation counts vs. size")
    p.add_argument("--sizes", type=_sizes, default=(1000, 10000, 100000))
    p.add_argument("--kinds", default=",".join(KINDS))
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.format)
    if args.command in ("decide", "oracle"):
        words = list(args.ordering)
        if args.command == "oracle":
            if len(words) >= 2 and words[0] in MODES:
                if args.mode is not None and args.mode != words[0]:
                    raise UsageError("conflicting oracle modes")
                cfg.mode = words.pop(0)
            elif args.mode is not None:
                cfg.mode = args.mode
        if args.file is None and args.ordering == [""]:
            cfg.text = ""
        else:
            cfg.text = _read_input(words, args.file)
    elif args.command in ("verify", "enumerate"):
        if args.length is not None and args.max_length is not None:
            raise UsageError("give the length once")
        length = args.length if args.length is not None else args.max_length
        if length is None:
            raise UsageError("a length is required")
        if not 0 <= length <= DEFAULT_MAX_LENGTH:
            raise UsageError(f"length must be within 0..{DEFAULT_MAX_LENGTH}")
        cfg.max_length = length
        if args.command == "verify":
            if args.shards < 1:
                raise UsageError("--shards must be positive")
            cfg.shards = args.shards
        else:
            cfg.two_bounded = not args.all
            cfg.max_alphabet = args.max_alphabet
            cfg.limit = args.limit
    elif args.command == "bench":
        cfg.sizes = args.sizes
        cfg.seed = args.seed
        kinds = tuple(k for k in args.kinds.split(",") if k)
        unknown = set(kinds) - set(KINDS)
        if unknown:
            raise UsageError(f"unknown kinds {sorted(unknown)}")
        cfg.kinds = kinds
    return cfg


COMMANDS = {
    "decide": cmd_decide,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, ParseError, GuardExceeded, ClassifierError, OSError) as exc:
        print(f"footsort: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
