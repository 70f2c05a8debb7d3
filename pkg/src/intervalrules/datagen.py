"""Seeded synthetic interval databases.

Random numbers come from NumPy's PCG64 bit generator.  Sequence ``sid``
draws from its own stream, seeded with ``SeedSequence(seed, spawn_key=(sid,))``,
so sequences can be generated independently and in any order.
``tests/test_datagen.py`` pins the first values of the seed-42 stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ESequence, IntervalDatabase, IntervalEvent


@dataclass(frozen=True)
class GenParams:
    num_sequences: int = 10_000
    alphabet_size: int = 200
    mean_seq_len: int = 32
    time_horizon: int = 200
    mean_duration: int = 10
    sd_duration: int = 5
    mean_utility: float = 5.0
    sd_utility: float = 2.0
    seed: int = 42

    def __post_init__(self):
        for name in ("num_sequences", "alphabet_size", "mean_seq_len", "time_horizon", "mean_duration"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.sd_duration < 0 or self.sd_utility < 0:
            raise ValueError("standard deviations must be >= 0")
        if self.mean_utility <= 0:
            raise ValueError("mean_utility must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def symbol_names(alphabet_size: int) -> list[str]:
    width = len(str(alphabet_size - 1))
    return [f"E{i:0{width}d}" for i in range(alphabet_size)]


def sequence_rng(seed: int, sid: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(sid,))))


def generate_sequence(p: GenParams, sid: int, names: list[str] | None = None) -> ESequence:
    names = names or symbol_names(p.alphabet_size)
    rng = sequence_rng(p.seed, sid)
    n = max(1, int(rng.poisson(p.mean_seq_len)))
    labels = rng.integers(0, p.alphabet_size, size=n)
    starts = rng.integers(0, p.time_horizon, size=n)
    durations = np.maximum(1, np.rint(rng.normal(p.mean_duration, p.sd_duration, size=n))).astype(np.int64)
    rates = rng.normal(p.mean_utility, p.sd_utility, size=n)
    utils = np.maximum(1, np.rint(durations * rates)).astype(np.int64)
    events = [
        IntervalEvent(names[int(labels[i])], int(starts[i]), int(starts[i] + durations[i]), int(utils[i]))
        for i in range(n)
    ]
    return ESequence.from_events(sid, events)


def generate(p: GenParams) -> IntervalDatabase:
    """Database of ``p.num_sequences`` sequences; identical for identical params."""
    names = symbol_names(p.alphabet_size)
    seqs = tuple(generate_sequence(p, sid, names) for sid in range(1, p.num_sequences + 1))
    return IntervalDatabase(seqs, sum(s.utility for s in seqs))
