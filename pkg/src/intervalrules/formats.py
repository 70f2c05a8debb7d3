"""Text formats for interval databases and mined rules.

Database: one sequence per line of whitespace-separated ``label,st,ft,utility``
items; ``#`` lines are comments, blank lines are skipped.

Rules: one per line, e.g.::

    {A} -> {B,D} | rel=0,2 | util=36 | conf=0.6667 | sup=2

The ``rel`` field comes in three renderings.  ``code`` lists each
interval's base-7 relation code with leading zeros dropped; ``letters``
lists every pairwise relation as ``X r Y``; ``matrix`` writes the full
upper-triangular letter matrix row by row (rows joined by ``;``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .model import DataError, IntervalDatabase, IntervalEvent, IntervalRule, MinedRule
from .relations import LETTER_TO_RELATION, LETTERS, RelationCode

REL_MODES = ("code", "letters", "matrix")


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + msg)


def parse_database(text: str) -> IntervalDatabase:
    sequences = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        events = []
        for m in re.finditer(r"\S+", line):
            col = m.start() + 1
            parts = m.group().split(",")
            if len(parts) != 4:
                raise FormatError(f"expected label,st,ft,utility but got {m.group()!r}", lineno, col)
            label, *nums = parts
            try:
                st, ft, u = (int(x) for x in nums)
            except ValueError:
                raise FormatError(f"non-integer field in {m.group()!r}", lineno, col) from None
            if st >= ft:
                raise FormatError(f"st >= ft in {m.group()!r}", lineno, col)
            try:
                events.append(IntervalEvent(label, st, ft, u))
            except DataError as exc:
                raise FormatError(str(exc), lineno, col) from None
        sequences.append(events)
    try:
        return IntervalDatabase.from_sequences(sequences)
    except DataError as exc:
        raise FormatError(str(exc)) from None


def read_database(path) -> IntervalDatabase:
    with open(path, encoding="utf-8") as fh:
        return parse_database(fh.read())


def write_database(db: IntervalDatabase) -> str:
    lines = [
        " ".join(f"{e.label},{e.st},{e.ft},{e.utility}" for e in seq.events)
        for seq in db.sequences
    ]
    return "".join(line + "\n" for line in lines)


def format_conf(conf: Fraction) -> str:
    """Exact rational rounded half-even to four decimals."""
    scaled = Fraction(conf) * 10000
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r > scaled.denominator or (2 * r == scaled.denominator and q % 2):
        q += 1
    return f"{q // 10000}.{q % 10000:04d}"


def render_relations(rule: IntervalRule, mode: str = "code") -> str:
    if mode == "code":
        return ",".join(c.base7() for c in rule.relations)
    labels = rule.labels
    digits = rule.digits
    if mode == "letters":
        return "; ".join(
            f"{labels[i]} {LETTERS[digits[j - 1][i]]} {labels[j]}"
            for j in range(1, len(labels))
            for i in range(j)
        )
    if mode == "matrix":
        n = len(labels)
        return ";".join(
            " ".join(LETTERS[digits[j - 1][i]] for j in range(i + 1, n)) for i in range(n - 1)
        )
    raise ValueError(f"unknown relation mode {mode!r}")


def format_rule(mined: MinedRule, mode: str = "code") -> str:
    rule = mined.rule
    return "{%s} -> {%s} | rel=%s | util=%d | conf=%s | sup=%d" % (
        ",".join(rule.antecedent),
        ",".join(rule.consequent),
        render_relations(rule, mode),
        mined.utility,
        format_conf(mined.confidence),
        mined.seq_count,
    )


def write_rules(rules: Iterable[MinedRule], mode: str = "code") -> str:
    return "".join(format_rule(r, mode) + "\n" for r in rules)


@dataclass(frozen=True)
class RuleRecord:
    """A rule line read back from disk: enough to compare two rule files."""

    antecedent: tuple[str, ...]
    consequent: tuple[str, ...]
    digits: tuple[tuple[int, ...], ...]
    utility: int
    conf: str
    support: int


_RULE_RE = re.compile(
    r"^\{(?P<ant>[^}]*)\} -> \{(?P<cons>[^}]*)\} \| rel=(?P<rel>.*) \| util=(?P<util>-?\d+)"
    r" \| conf=(?P<conf>[0-9.]+) \| sup=(?P<sup>\d+)$"
)


def _parse_rel(rel: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Digit rows from any of the three renderings, told apart by shape."""
    if n < 2:
        raise ValueError("rule needs at least two intervals")
    rel = rel.strip()
    if rel[:1].isdigit():
        parts = rel.split(",")
        if len(parts) != n - 1:
            raise ValueError(f"expected {n - 1} relation codes")
        return tuple(RelationCode.from_base7(p, j).digits for j, p in enumerate(parts, start=1))
    groups = [g.split() for g in rel.split(";")]
    digits = [[0] * j for j in range(1, n)]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if len(groups) == len(pairs) and all(len(g) == 3 for g in groups):
        for (i, j), (_, ch, _) in zip(pairs, groups):
            digits[j - 1][i] = int(LETTER_TO_RELATION[ch])
    elif len(groups) == n - 1 and all(len(g) == n - 1 - i for i, g in enumerate(groups)):
        for i, row in enumerate(groups):
            for off, ch in enumerate(row):
                digits[i + off][i] = int(LETTER_TO_RELATION[ch])
    else:
        raise ValueError("unrecognised relation field")
    return tuple(tuple(d) for d in digits)


def parse_rules(text: str) -> list[RuleRecord]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        m = _RULE_RE.match(line)
        if not m:
            raise FormatError("malformed rule line", lineno)
        ant = tuple(x for x in m["ant"].split(",") if x)
        cons = tuple(x for x in m["cons"].split(",") if x)
        try:
            digits = _parse_rel(m["rel"], len(ant) + len(cons))
        except (ValueError, KeyError) as exc:
            raise FormatError(f"bad relations: {exc}", lineno) from None
        out.append(RuleRecord(ant, cons, digits, int(m["util"]), m["conf"], int(m["sup"])))
    return out
