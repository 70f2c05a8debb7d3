"""Allen relations between ordered intervals and their base-7 encoding.

Each interval of an ordered sequence (or rule) carries one digit per
earlier interval.  Reading those digits most-significant first as a base-7
number gives a compact code in which leading ``before`` relations vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence


class Relation(IntEnum):
    BEFORE = 0
    MEETS = 1
    OVERLAPS = 2
    STARTS = 3
    CONTAINS = 4
    FINISHED_BY = 5
    EQUALS = 6

    @property
    def letter(self) -> str:
        return LETTERS[self]


LETTERS = "bmoscfe"
LETTER_TO_RELATION = {ch: Relation(i) for i, ch in enumerate(LETTERS)}

# Digits that can never link an antecedent interval to a consequent one:
# both need equal start times.
SAME_START = frozenset({Relation.STARTS, Relation.EQUALS})


def classify_times(st1: int, ft1: int, st2: int, ft2: int) -> int:
    """Relation digit of (st1, ft1) to (st2, ft2); the first must not follow the second."""
    if ft1 < st2:
        return 0
    if ft1 == st2:
        return 1
    if st1 == st2:
        if ft1 == ft2:
            return 6
        if ft1 < ft2:
            return 3
    elif st1 < st2:
        if ft2 < ft1:
            return 4
        if ft2 == ft1:
            return 5
        return 2
    raise ValueError(
        f"intervals not in canonical order: [{st1},{ft1}] then [{st2},{ft2}]"
    )


def classify(e1, e2) -> Relation:
    """Allen relation of ``e1`` to ``e2``, where ``e1`` precedes ``e2``.

    Raises ValueError when the pair is out of canonical order.
    """
    return Relation(classify_times(e1.st, e1.ft, e2.st, e2.ft))


@dataclass(frozen=True, order=True)
class RelationCode:
    """Base-7 number holding one interval's relations to its predecessors.

    Digit k (most significant first) is the relation of the k-th earlier
    interval to this one.  Python integers do not overflow, so no separate
    wide representation is needed for long rules.
    """

    value: int
    arity: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if not 0 <= self.value < 7**self.arity:
            raise ValueError(f"code {self.value} does not fit in {self.arity} base-7 digits")

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(decode_code(self))

    def base7(self) -> str:
        """Minimal base-7 string, e.g. ``"2"`` for digits (0, 0, 2)."""
        return to_base7(self.value)

    @classmethod
    def from_base7(cls, text: str, arity: int) -> "RelationCode":
        return cls(int(text, 7), arity)


def to_base7(value: int) -> str:
    if value == 0:
        return "0"
    out = []
    while value:
        value, r = divmod(value, 7)
        out.append("0123456"[r])
    return "".join(reversed(out))


def encode_digits(digits: Sequence[int]) -> RelationCode:
    if not digits:
        raise ValueError("cannot encode an empty digit list")
    value = 0
    for d in digits:
        if not 0 <= d <= 6:
            raise ValueError(f"relation digit out of range: {d}")
        value = value * 7 + int(d)
    return RelationCode(value, len(digits))


def decode_code(code: RelationCode) -> list[Relation]:
    value = code.value
    if value >= 7**code.arity or value < 0:
        raise ValueError(f"code {value} does not fit in {code.arity} base-7 digits")
    out = [Relation.BEFORE] * code.arity
    i = code.arity - 1
    while value:
        value, r = divmod(value, 7)
        out[i] = Relation(r)
        i -= 1
    return out


def sequence_digits(events: Sequence, skip_zero: bool = True) -> list[tuple[int, ...]]:
    """Relation digits of every event (from the second on) to all earlier events.

    With ``skip_zero`` the digits of event j are copied as 0 wherever event
    j-1 is already preceded by a ``before``: E_i.ft < E_{j-1}.st <= E_j.st.
    Only the remaining positions and event j-1 itself are compared.
    """
    st = [e.st for e in events]
    ft = [e.ft for e in events]
    out: list[tuple[int, ...]] = []
    prev: tuple[int, ...] = ()
    for j in range(1, len(events)):
        sj, fj = st[j], ft[j]
        cur = []
        for i, d in enumerate(prev):
            if skip_zero and d == 0:
                cur.append(0)
            else:
                cur.append(classify_times(st[i], ft[i], sj, fj))
        cur.append(classify_times(st[j - 1], ft[j - 1], sj, fj))
        prev = tuple(cur)
        out.append(prev)
    return out


def sequence_relations(seq) -> list[RelationCode]:
    """Encoded relations of each event of ``seq`` (from the second on)."""
    events = getattr(seq, "events", seq)
    return [encode_digits(d) for d in sequence_digits(events, skip_zero=True)]


def relation_matrix(seq) -> dict[tuple[int, int], Relation]:
    """Upper-triangular relation matrix keyed by position pairs ``(i, j)``, i < j."""
    events = getattr(seq, "events", seq)
    n = len(events)
    return {
        (i, j): classify(events[i], events[j])
        for i in range(n)
        for j in range(i + 1, n)
    }
