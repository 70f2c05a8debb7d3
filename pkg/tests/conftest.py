import random

import pytest

from intervalrules.model import ESequence, IntervalEvent, load_validate

# three sequences over A..D; S1 runs A, C, B, D
RUNNING_EXAMPLE = [
    [("A", 1, 3, 8), ("C", 4, 8, 10), ("B", 6, 10, 7), ("D", 9, 12, 9)],
    [("A", 1, 3, 2), ("C", 4, 5, 2), ("B", 6, 10, 4), ("D", 9, 12, 6)],
    [("A", 1, 3, 2), ("B", 4, 6, 4), ("C", 7, 9, 2), ("D", 10, 12, 6)],
]

RUNNING_EXAMPLE_TEXT = "".join(
    " ".join(f"{lab},{st},{ft},{u}" for lab, st, ft, u in seq) + "\n" for seq in RUNNING_EXAMPLE
)

S4 = [("A", 2, 8, 8), ("B", 9, 15, 10), ("C", 14, 20, 7), ("D", 14, 22, 9)]


@pytest.fixture
def running_db():
    return load_validate(RUNNING_EXAMPLE)


@pytest.fixture
def s4_seq():
    return ESequence.from_events(1, [IntervalEvent(*e) for e in S4])


def random_db(rng: random.Random, max_seqs=8, max_events=10, alphabet=5, horizon=12, max_len=5):
    """Small random database; utilities 1..9."""
    letters = "ABCDE"[:alphabet]
    seqs = []
    for _ in range(rng.randint(1, max_seqs)):
        seq = []
        for _ in range(rng.randint(1, max_events)):
            st = rng.randint(0, horizon)
            seq.append((rng.choice(letters), st, st + rng.randint(1, max_len), rng.randint(1, 9)))
        seqs.append(seq)
    return load_validate(seqs)


def random_db_varied(rng: random.Random):
    """Random database with varied density: alphabet 1..5, tight or loose horizons."""
    return random_db(
        rng,
        max_events=rng.choice([6, 10]),
        alphabet=rng.randint(1, 5),
        horizon=rng.choice([5, 12, 30]),
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
