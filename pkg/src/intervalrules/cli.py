"""Command-line driver: ``intervalrules {mine,oracle,gen,verify,bench}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .datagen import GenParams, generate
from .formats import REL_MODES, FormatError, parse_rules, read_database, write_database, write_rules
from .mining import MiningConfig, mine
from .model import DataError, as_fraction
from .oracle import OracleLimitError, oracle_mine


class CliError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _add_thresholds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="interval database file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--minutil", type=int, help="absolute utility threshold")
    group.add_argument("--minutil-pct", type=_fraction, help="threshold as percent of total utility")
    p.add_argument("--minconf", type=_fraction, default=Fraction(0))
    p.add_argument("--output", help="rule file (default: stdout)")
    p.add_argument("--rel-format", choices=REL_MODES, default="code")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intervalrules", description="High-utility interval rule mining")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine rules with the pruned search")
    _add_thresholds(p)
    p.add_argument("--stats", help="write search statistics as JSON")
    p.add_argument("--no-complement-pruning", action="store_true")
    p.add_argument("--no-encoded-relations", action="store_true")
    p.add_argument("--max-rule-size", type=int)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("oracle", help="mine rules by exhaustive enumeration (small inputs only)")
    _add_thresholds(p)
    p.add_argument("--max-size", type=int, default=6)

    p = sub.add_parser("gen", help="generate a synthetic database")
    defaults = GenParams()
    p.add_argument("--output", help="database file (default: stdout)")
    p.add_argument("--sequences", type=int, default=defaults.num_sequences)
    p.add_argument("--alphabet", type=int, default=defaults.alphabet_size)
    p.add_argument("--mean-length", type=int, default=defaults.mean_seq_len)
    p.add_argument("--horizon", type=int, default=defaults.time_horizon)
    p.add_argument("--mean-duration", type=int, default=defaults.mean_duration)
    p.add_argument("--sd-duration", type=int, default=defaults.sd_duration)
    p.add_argument("--mean-utility", type=float, default=defaults.mean_utility)
    p.add_argument("--sd-utility", type=float, default=defaults.sd_utility)
    p.add_argument("--seed", type=int, default=defaults.seed)

    p = sub.add_parser("verify", help="compare two rule files as sets")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("bench", help="benchmark report: TSV table plus PNG figures")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--sequences", type=int, default=2000)
    p.add_argument("--pcts", default="0.5,0.3,0.2", help="comma-separated minutil percentages")
    p.add_argument("--scales", default="", help="comma-separated sequence counts for the scaling plot")
    p.add_argument("--scale-pct", type=_fraction, default=Fraction(1))
    p.add_argument("--seed", type=int, default=defaults.seed)
    return parser


def _config(args, **extra) -> MiningConfig:
    try:
        return MiningConfig(
            minutil=args.minutil,
            minutil_pct=args.minutil_pct,
            minconf=args.minconf,
            **extra,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_mine(args) -> int:
    cfg = _config(
        args,
        enable_complement_pruning=not args.no_complement_pruning,
        enable_encoded_relations=not args.no_encoded_relations,
        max_rule_size=args.max_rule_size,
        threads=args.threads,
    )
    db = read_database(args.input)
    rules, stats = mine(db, cfg)
    _emit(write_rules(rules, args.rel_format), args.output)
    if args.stats:
        record = {
            "input": str(args.input),
            "sequences": len(db.sequences),
            "events": sum(len(s) for s in db.sequences),
            "total_utility": db.total_utility,
            "minutil": cfg.resolve_minutil(db.total_utility),
            "minconf": str(cfg.minconf),
            "complement_pruning": cfg.enable_complement_pruning,
            "encoded_relations": cfg.enable_encoded_relations,
            "threads": cfg.threads,
            **stats.as_dict(),
        }
        Path(args.stats).write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")
    return 0


def cmd_oracle(args) -> int:
    cfg = _config(args)
    db = read_database(args.input)
    rules = oracle_mine(db, cfg.resolve_minutil(db.total_utility), cfg.minconf, args.max_size)
    _emit(write_rules(rules, args.rel_format), args.output)
    return 0


def cmd_gen(args) -> int:
    try:
        params = GenParams(
            num_sequences=args.sequences,
            alphabet_size=args.alphabet,
            mean_seq_len=args.mean_length,
            time_horizon=args.horizon,
            mean_duration=args.mean_duration,
            sd_duration=args.sd_duration,
            mean_utility=args.mean_utility,
            sd_utility=args.sd_utility,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit(write_database(generate(params)), args.output)
    return 0


def rule_set(path) -> set:
    """Order- and rendering-insensitive view of a rule file."""
    text = Path(path).read_text(encoding="utf-8")
    return {
        (r.antecedent, r.consequent, r.digits, r.utility, r.conf, r.support)
        for r in parse_rules(text)
    }


def cmd_verify(args) -> int:
    a, b = rule_set(args.a), rule_set(args.b)
    if a == b:
        print(f"equal: {len(a)} rules")
        return 0
    print(f"differ: {len(a - b)} only in {args.a}, {len(b - a)} only in {args.b}")
    return 1


def cmd_bench(args) -> int:
    from .report import run_bench

    try:
        pcts = [as_fraction(x) for x in args.pcts.split(",") if x.strip()]
        scales = [int(x) for x in args.scales.split(",") if x.strip()]
    except ValueError as exc:
        raise CliError(f"bad list: {exc}") from None
    paths = run_bench(
        Path(args.out_dir),
        sequences=args.sequences,
        pcts=pcts,
        scales=scales,
        scale_pct=args.scale_pct,
        seed=args.seed,
    )
    for p in paths:
        print(p)
    return 0


COMMANDS = {
    "mine": cmd_mine,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CliError, FormatError, DataError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
