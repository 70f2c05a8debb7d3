"""Interval events, sequences, databases and interval rules."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .relations import SAME_START, RelationCode, classify_times, encode_digits

LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
INT64_MAX = 2**63 - 1


class DataError(ValueError):
    """Raised for events or sequences that violate the data model."""


@dataclass(frozen=True)
class IntervalEvent:
    label: str
    st: int
    ft: int
    utility: int

    def __post_init__(self):
        if not isinstance(self.label, str) or not LABEL_RE.match(self.label):
            raise DataError(f"invalid label {self.label!r}")
        for name in ("st", "ft", "utility"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DataError(f"{name} must be an integer, got {v!r}")
            if not -INT64_MAX - 1 <= v <= INT64_MAX:
                raise DataError(f"{name} outside the 64-bit range: {v}")
        if self.st < 0:
            raise DataError(f"negative start time {self.st}")
        if self.st >= self.ft:
            raise DataError(
                f"zero-length or reversed interval {self.label}[{self.st},{self.ft}]"
            )
        if self.utility < 1:
            raise DataError(f"utility must be >= 1, got {self.utility}")

    @property
    def sort_key(self) -> tuple[int, int, str]:
        return (self.st, self.ft, self.label)


@dataclass(frozen=True)
class ESequence:
    """Canonically ordered interval events; ``sid`` is 1-based."""

    sid: int
    events: tuple[IntervalEvent, ...]

    def __post_init__(self):
        keys = [e.sort_key for e in self.events]
        if keys != sorted(keys):
            raise DataError(f"sequence {self.sid} is not canonically ordered")

    @classmethod
    def from_events(cls, sid: int, events: Iterable[IntervalEvent]) -> "ESequence":
        # sorted() is stable, so identical events keep their input order
        return cls(sid, tuple(sorted(events, key=lambda e: e.sort_key)))

    @property
    def size(self) -> int:
        return len(self.events)

    @property
    def utility(self) -> int:
        return sum(e.utility for e in self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[IntervalEvent]:
        return iter(self.events)


@dataclass(frozen=True)
class IntervalDatabase:
    sequences: tuple[ESequence, ...] = ()
    total_utility: int = field(default=0)

    def __post_init__(self):
        for i, s in enumerate(self.sequences, start=1):
            if s.sid != i:
                raise DataError(f"sequence ids must be 1..n, found {s.sid} at {i}")
        total = sum(s.utility for s in self.sequences)
        if total > INT64_MAX:
            raise DataError("total utility overflows 64 bits")
        if self.total_utility != total:
            raise DataError(f"total utility {self.total_utility} != recomputed {total}")

    @classmethod
    def from_sequences(cls, sequences: Iterable[Iterable[IntervalEvent]]) -> "IntervalDatabase":
        seqs = tuple(ESequence.from_events(i, evs) for i, evs in enumerate(sequences, start=1))
        return cls(seqs, sum(s.utility for s in seqs))

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self) -> Iterator[ESequence]:
        return iter(self.sequences)

    def labels(self) -> list[str]:
        return sorted({e.label for s in self.sequences for e in s.events})


def load_validate(raw_sequences: Iterable[Iterable]) -> IntervalDatabase:
    """Build a database from raw sequences of events or ``(label, st, ft, u)`` tuples.

    Events are sorted canonically and sids assigned in input order.  Empty
    sequences are rejected.
    """
    seqs = []
    for n, raw in enumerate(raw_sequences, start=1):
        events = [e if isinstance(e, IntervalEvent) else IntervalEvent(*e) for e in raw]
        if not events:
            raise DataError(f"sequence {n} is empty")
        seqs.append(events)
    return IntervalDatabase.from_sequences(seqs)


@dataclass(frozen=True)
class IntervalRule:
    """Antecedent -> consequent with one relation code per interval after the first.

    Intervals are numbered in rule order (antecedent then consequent);
    ``relations[j - 1]`` encodes the relations of interval j to intervals
    0..j-1.
    """

    antecedent: tuple[str, ...]
    consequent: tuple[str, ...]
    relations: tuple[RelationCode, ...]

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "consequent", tuple(self.consequent))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.antecedent or not self.consequent:
            raise ValueError("antecedent and consequent must be non-empty")
        if len(self.relations) != self.size - 1:
            raise ValueError(
                f"expected {self.size - 1} relation codes, got {len(self.relations)}"
            )
        for j, code in enumerate(self.relations, start=1):
            if code.arity != j:
                raise ValueError(f"relation code of interval {j} must have arity {j}")
        k = len(self.antecedent)
        for j in range(k, self.size):
            digits = self.relations[j - 1].digits
            if any(digits[i] in SAME_START for i in range(k)):
                raise ValueError("antecedent and consequent intervals cannot share a start time")

    @classmethod
    def from_digits(
        cls,
        antecedent: Sequence[str],
        consequent: Sequence[str],
        digits: Sequence[Sequence[int]],
    ) -> "IntervalRule":
        return cls(tuple(antecedent), tuple(consequent), tuple(encode_digits(d) for d in digits))

    @classmethod
    def _trusted(cls, antecedent: tuple, consequent: tuple, relations: tuple) -> "IntervalRule":
        # skips validation; only for rules the search built from real occurrences
        rule = object.__new__(cls)
        object.__setattr__(rule, "antecedent", antecedent)
        object.__setattr__(rule, "consequent", consequent)
        object.__setattr__(rule, "relations", relations)
        return rule

    @property
    def labels(self) -> tuple[str, ...]:
        return self.antecedent + self.consequent

    @property
    def size(self) -> int:
        return len(self.antecedent) + len(self.consequent)

    @property
    def digits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.digits for c in self.relations)

    def antecedent_rule_digits(self) -> tuple[tuple[int, ...], ...]:
        return self.digits[: len(self.antecedent) - 1]

    def sort_key(self) -> tuple:
        return (self.antecedent, self.consequent, tuple(c.value for c in self.relations))

    def __str__(self) -> str:
        return "{%s} -> {%s}" % (",".join(self.antecedent), ",".join(self.consequent))


@dataclass(frozen=True)
class RuleOccurrence:
    sid: int
    positions: tuple[int, ...]
    utility: int


def _match(
    labels: Sequence[str],
    digits: Sequence[Sequence[int]],
    split: int | None,
    events: Sequence[IntervalEvent],
) -> Iterator[tuple[int, ...]]:
    """All position vectors realising ``labels``/``digits`` in ``events``, in lexicographic order.

    ``split`` is the antecedent size; the interval at index ``split`` must
    start strictly after the one before it.
    """
    n = len(labels)
    m = len(events)
    chosen: list[int] = []

    def rec(t: int, start: int):
        if t == n:
            yield tuple(chosen)
            return
        # leave room for the remaining n - t - 1 intervals
        for p in range(start, m - (n - t - 1)):
            ev = events[p]
            if ev.label != labels[t]:
                continue
            if t == split and events[chosen[-1]].st >= ev.st:
                continue
            if t:
                want = digits[t - 1]
                ok = True
                for i, q in enumerate(chosen):
                    e = events[q]
                    if classify_times(e.st, e.ft, ev.st, ev.ft) != want[i]:
                        ok = False
                        break
                if not ok:
                    continue
            chosen.append(p)
            yield from rec(t + 1, p + 1)
            chosen.pop()

    yield from rec(0, 0)


def find_occurrences(rule: IntervalRule, seq: ESequence) -> list[RuleOccurrence]:
    events = seq.events
    return [
        RuleOccurrence(seq.sid, pos, sum(events[p].utility for p in pos))
        for pos in _match(rule.labels, rule.digits, len(rule.antecedent), events)
    ]


def find_best_occurrence(rule: IntervalRule, seq: ESequence) -> RuleOccurrence | None:
    """Maximum-utility occurrence, ties to the lexicographically smallest positions."""
    best = None
    for occ in find_occurrences(rule, seq):
        if best is None or occ.utility > best.utility:
            best = occ
    return best


def find_earliest_occurrence(rule: IntervalRule, seq: ESequence) -> RuleOccurrence | None:
    """Lexicographically smallest occurrence; its first position anchors bound windows."""
    for pos in _match(rule.labels, rule.digits, len(rule.antecedent), seq.events):
        return RuleOccurrence(seq.sid, pos, sum(seq.events[p].utility for p in pos))
    return None


def antecedent_occurs(rule: IntervalRule, seq: ESequence) -> bool:
    for _ in _match(rule.antecedent, rule.antecedent_rule_digits(), None, seq.events):
        return True
    return False


@dataclass(frozen=True)
class MinedRule:
    rule: IntervalRule
    utility: int
    confidence: Fraction
    support: Fraction
    seq_count: int

    def sort_key(self) -> tuple:
        return (-self.utility,) + self.rule.sort_key()


def sort_rules(rules: Iterable[MinedRule]) -> list[MinedRule]:
    """Utility descending, then antecedent, consequent and relation codes."""
    return sorted(rules, key=MinedRule.sort_key)


def as_fraction(value) -> Fraction:
    """Exact rational from a Fraction, int, decimal string or float (via its repr)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        value = repr(value)
    return Fraction(value)
