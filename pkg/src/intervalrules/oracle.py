"""Exhaustive reference miner for small databases.

Every index subsequence of every sequence is materialised, relations are
re-derived pair by pair from the endpoint predicates, and every valid
antecedent/consequent split is recorded.  Nothing here is shared with the
pruned search in :mod:`intervalrules.mining`.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations

from .model import IntervalDatabase, IntervalRule, MinedRule, as_fraction, sort_rules
from .relations import RelationCode

MAX_EVENTS = 200
MAX_SIZE = 6


class OracleLimitError(ValueError):
    pass


def _relation(a, b) -> int:
    # endpoint predicates checked independently of relations.classify
    preds = [
        a.ft < b.st,
        a.ft == b.st,
        a.st < b.st < a.ft < b.ft,
        a.st == b.st and a.ft < b.ft,
        a.st < b.st and b.ft < a.ft,
        a.st < b.st and a.ft == b.ft,
        a.st == b.st and a.ft == b.ft,
    ]
    hits = [i for i, p in enumerate(preds) if p]
    assert len(hits) == 1, (a, b, hits)
    return hits[0]


def _code(digits: tuple[int, ...]) -> RelationCode:
    v = 0
    for d in digits:
        v = 7 * v + d
    return RelationCode(v, len(digits))


def enumerate_rules(db: IntervalDatabase, max_size: int = MAX_SIZE) -> list[MinedRule]:
    """Every rule with at least one occurrence, up to ``max_size`` intervals."""
    if sum(len(s) for s in db.sequences) > MAX_EVENTS:
        raise OracleLimitError(f"oracle accepts at most {MAX_EVENTS} events in total")
    if max_size > MAX_SIZE:
        raise OracleLimitError(f"oracle accepts max_size <= {MAX_SIZE}")

    # pattern (labels, digits) -> sids where it occurs as a plain subsequence
    pattern_sids: dict[tuple, set[int]] = defaultdict(set)
    # (labels, digits, split) -> sid -> best utility
    rule_best: dict[tuple, dict[int, int]] = defaultdict(dict)

    for seq in db.sequences:
        events = seq.events
        for size in range(1, min(max_size, len(events)) + 1):
            for idx in combinations(range(len(events)), size):
                evs = [events[i] for i in idx]
                labels = tuple(e.label for e in evs)
                digits = tuple(
                    tuple(_relation(evs[i], evs[j]) for i in range(j)) for j in range(1, size)
                )
                pattern_sids[(labels, digits)].add(seq.sid)
                util = sum(e.utility for e in evs)
                for split in range(1, size):
                    if evs[split - 1].st < evs[split].st:
                        best = rule_best[(labels, digits, split)]
                        if util > best.get(seq.sid, 0):
                            best[seq.sid] = util

    n = len(db.sequences)
    out = []
    for (labels, digits, split), best in rule_best.items():
        ant_key = (labels[:split], digits[: split - 1])
        ant = len(pattern_sids[ant_key])
        rule = IntervalRule(labels[:split], labels[split:], tuple(_code(d) for d in digits))
        out.append(
            MinedRule(
                rule=rule,
                utility=sum(best.values()),
                confidence=Fraction(len(best), ant),
                support=Fraction(len(best), n),
                seq_count=len(best),
            )
        )
    return sort_rules(out)


def oracle_mine(
    db: IntervalDatabase, minutil: int, minconf: Fraction | float | str, max_size: int = MAX_SIZE
) -> list[MinedRule]:
    minconf = as_fraction(minconf)
    return [
        r
        for r in enumerate_rules(db, max_size)
        if r.utility >= minutil and r.confidence >= minconf
    ]
