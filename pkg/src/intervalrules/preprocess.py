"""Sequence estimated utility, unpromising-interval removal and sequence arrays."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .model import ESequence, IntervalDatabase


def compute_seu(db: IntervalDatabase) -> dict[str, int]:
    """Per label: summed total utility of the sequences containing it."""
    seu: dict[str, int] = defaultdict(int)
    for seq in db.sequences:
        total = seq.utility
        for label in {e.label for e in seq.events}:
            seu[label] += total
    return dict(seu)


def _prune_rounds(sequences: list[list], minutil: int) -> tuple[list[list], int]:
    """Fixpoint of label removal on raw event lists.  Returns (kept, events removed)."""
    removed = 0
    while True:
        seu: dict[str, int] = defaultdict(int)
        for events in sequences:
            total = sum(e.utility for e in events)
            for label in {e.label for e in events}:
                seu[label] += total
        bad = {label for label, v in seu.items() if v < minutil}
        if not bad:
            return sequences, removed
        nxt = []
        for events in sequences:
            kept = [e for e in events if e.label not in bad]
            removed += len(events) - len(kept)
            nxt.append(kept)
        sequences = nxt


def prune_unpromising(db: IntervalDatabase, minutil: int) -> IntervalDatabase:
    """Drop every label whose SEU is below ``minutil``, recomputing until stable.

    Sequences left empty are dropped and the survivors renumbered 1..n.
    """
    if minutil < 0:
        raise ValueError("minutil must be non-negative")
    kept, _ = _prune_rounds([list(s.events) for s in db.sequences], minutil)
    return IntervalDatabase.from_sequences(evs for evs in kept if evs)


@dataclass
class ESequenceArray:
    """Column layout of one sequence: labels, st, ft, utility, ru, sstp (0-based)."""

    sid: int
    labels: list[str]
    st: list[int]
    ft: list[int]
    utility: list[int]
    ru: list[int]
    sstp: list[int]
    # nst[i]: first index whose start time is strictly greater than st[i]
    nst: list[int]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def total(self) -> int:
        return self.ru[0] + self.utility[0] if self.labels else 0

    def window_sum(self, lo: int, hi: int) -> int:
        """Utility of positions lo..hi-1."""
        if hi <= lo:
            return 0
        return self.ru[lo] + self.utility[lo] - self.ru[hi - 1]


def build_array(seq: ESequence) -> ESequenceArray:
    events = seq.events
    n = len(events)
    st = [e.st for e in events]
    ru = [0] * n
    acc = 0
    for i in range(n - 1, -1, -1):
        ru[i] = acc
        acc += events[i].utility
    sstp = [0] * n
    for i in range(1, n):
        sstp[i] = sstp[i - 1] if st[i] == st[i - 1] else i
    nst = [n] * n
    for i in range(n - 2, -1, -1):
        nst[i] = nst[i + 1] if st[i] == st[i + 1] else i + 1
    return ESequenceArray(
        sid=seq.sid,
        labels=[e.label for e in events],
        st=st,
        ft=[e.ft for e in events],
        utility=[e.utility for e in events],
        ru=ru,
        sstp=sstp,
        nst=nst,
    )
