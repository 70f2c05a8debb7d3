import random

from hypothesis import given, settings
from hypothesis import strategies as st

from intervalrules.model import ESequence, IntervalDatabase, IntervalEvent, load_validate
from intervalrules.preprocess import build_array, compute_seu, prune_unpromising

from conftest import S4, random_db


def test_seu_of_s4():
    assert compute_seu(load_validate([S4])) == {"A": 34, "B": 34, "C": 34, "D": 34}


def test_seu_of_empty_database():
    assert compute_seu(IntervalDatabase()) == {}


def test_seu_sums_whole_sequences():
    db = load_validate([[("X", 0, 1, 4), ("Y", 0, 1, 6)], [("X", 0, 1, 20)], [("Y", 0, 1, 3)]])
    assert compute_seu(db) == {"X": 30, "Y": 13}


def test_seu_counts_a_sequence_once_per_label():
    db = load_validate([[("X", 0, 1, 4), ("X", 2, 3, 6)]])
    assert compute_seu(db) == {"X": 10}


def test_prune_keeps_s4_at_its_total():
    db = load_validate([S4])
    assert prune_unpromising(db, 34) == db


def test_prune_cascades_to_empty():
    assert len(prune_unpromising(load_validate([S4]), 35)) == 0


def test_prune_fixpoint_example():
    db = load_validate([[("X", 0, 1, 1)], [("Y", 0, 1, 10), ("Z", 0, 1, 2)]])
    out = prune_unpromising(db, 10)
    assert [[e.label for e in s] for s in out] == [["Y", "Z"]]
    assert out.total_utility == 12
    assert out.sequences[0].sid == 1


def test_prune_needs_a_second_round():
    # dropping W shrinks sequence 1 so that V falls below the threshold too
    db = load_validate([[("V", 0, 1, 3), ("W", 0, 1, 5)], [("W", 0, 1, 1)], [("U", 0, 1, 9)]])
    out = prune_unpromising(db, 9)
    assert [[e.label for e in s] for s in out] == [["U"]]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 60))
def test_prune_reaches_a_fixpoint(seed, minutil):
    db = random_db(random.Random(seed))
    out = prune_unpromising(db, minutil)
    seu = compute_seu(out)
    assert all(v >= minutil for v in seu.values())
    # pruning again changes nothing
    assert prune_unpromising(out, minutil) == out
    assert out.total_utility == sum(s.utility for s in out)


def test_array_of_s4(s4_seq):
    arr = build_array(s4_seq)
    assert arr.ru == [26, 16, 9, 0]
    assert arr.sstp == [0, 1, 2, 2]
    assert [i + 1 for i in arr.sstp] == [1, 2, 3, 3]
    assert arr.labels == ["A", "B", "C", "D"]
    assert arr.st == [2, 9, 14, 14]
    assert arr.ft == [8, 15, 20, 22]
    assert arr.utility == [8, 10, 7, 9]
    assert arr.total == 34


def test_array_single_event():
    arr = build_array(ESequence.from_events(1, [IntervalEvent("X", 0, 1, 5)]))
    assert arr.ru == [0]
    assert arr.sstp == [0]


def test_array_same_start():
    seq = ESequence.from_events(1, [IntervalEvent(x, 7, 9 + i, 1) for i, x in enumerate("ABC")])
    arr = build_array(seq)
    assert arr.sstp == [0, 0, 0]
    assert arr.nst == [3, 3, 3]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_array_invariants(seed):
    db = random_db(random.Random(seed), max_events=15)
    for seq in db:
        arr = build_array(seq)
        n = len(arr)
        assert all(len(a) == n for a in (arr.labels, arr.st, arr.ft, arr.utility, arr.ru, arr.sstp))
        assert arr.ru[-1] == 0
        for i in range(1, n):
            assert arr.ru[i] + arr.utility[i] == arr.ru[i - 1]
        for i in range(n):
            s = arr.sstp[i]
            assert s <= i and arr.st[s] == arr.st[i]
            assert s == 0 or arr.st[s - 1] < arr.st[i]
            assert arr.nst[i] == n or arr.st[arr.nst[i]] > arr.st[i]
            assert arr.st[arr.nst[i] - 1] == arr.st[i]
        for lo in range(n + 1):
            for hi in range(lo, n + 1):
                assert arr.window_sum(lo, hi) == sum(arr.utility[lo:hi])
