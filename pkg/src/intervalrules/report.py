"""Benchmark report: a TSV table of search statistics and PNG figures.

Three experiments on generated data:

* pruning: candidates and runtime per minutil, complement pruning on and off;
* storage: rule-file bytes in code and matrix rendering per minutil;
* scaling: runtime against database size at a fixed percentage threshold.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .datagen import GenParams, generate
from .formats import write_rules
from .mining import MiningConfig, mine

plt.rcParams.update(
    {
        "figure.figsize": (6, 4),
        "axes.grid": True,
        "grid.alpha": 0.3,
        "lines.linewidth": 1.5,
        "lines.markersize": 5,
        "legend.fontsize": 9,
        "savefig.dpi": 120,
    }
)

TSV_FIELDS = [
    "experiment",
    "sequences",
    "minutil_pct",
    "minutil",
    "complement_pruning",
    "rules",
    "candidates",
    "pruned_by_complement",
    "wall_time",
    "code_bytes",
    "matrix_bytes",
]


@dataclass
class BenchRow:
    experiment: str
    sequences: int
    minutil_pct: Fraction
    minutil: int
    complement_pruning: bool
    rules: int
    candidates: int
    pruned_by_complement: int
    wall_time: float
    code_bytes: int = 0
    matrix_bytes: int = 0

    def as_tsv(self) -> dict:
        row = {k: getattr(self, k) for k in TSV_FIELDS}
        row["minutil_pct"] = f"{float(self.minutil_pct):g}"
        row["wall_time"] = f"{self.wall_time:.3f}"
        return row


def _run(db, experiment: str, pct: Fraction, complement: bool) -> BenchRow:
    cfg = MiningConfig(minutil_pct=pct, enable_complement_pruning=complement)
    rules, stats = mine(db, cfg)
    return BenchRow(
        experiment,
        len(db.sequences),
        pct,
        cfg.resolve_minutil(db.total_utility),
        complement,
        len(rules),
        stats.candidates_generated,
        stats.pruned_by_complement,
        stats.wall_time,
        len(write_rules(rules, "code").encode()),
        len(write_rules(rules, "matrix").encode()),
    )


def collect(sequences: int, pcts, scales, scale_pct: Fraction, seed: int) -> list[BenchRow]:
    rows = []
    db = generate(GenParams(num_sequences=sequences, seed=seed))
    for pct in sorted(pcts, reverse=True):
        for complement in (True, False):
            rows.append(_run(db, "pruning", pct, complement))
    for n in sorted(scales):
        rows.append(_run(generate(GenParams(num_sequences=n, seed=seed)), "scaling", scale_pct, True))
    return rows


def write_tsv(rows: list[BenchRow], path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=TSV_FIELDS, delimiter="\t", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r.as_tsv())


def plot_pruning(rows: list[BenchRow], path: Path) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for complement, style in ((True, "o-"), (False, "s--")):
        sel = sorted((r for r in rows if r.complement_pruning == complement), key=lambda r: r.minutil)
        label = "complement pruning" if complement else "no complement pruning"
        ax1.plot([r.minutil for r in sel], [r.candidates for r in sel], style, label=label)
        ax2.plot([r.minutil for r in sel], [r.wall_time for r in sel], style, label=label)
    ax1.set_xlabel("minutil")
    ax1.set_ylabel("candidates generated")
    ax2.set_xlabel("minutil")
    ax2.set_ylabel("runtime (s)")
    ax1.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_storage(rows: list[BenchRow], path: Path) -> None:
    sel = sorted(rows, key=lambda r: r.minutil)
    fig, ax = plt.subplots()
    ax.plot([r.minutil for r in sel], [r.code_bytes / 1024 for r in sel], "o-", label="code")
    ax.plot([r.minutil for r in sel], [r.matrix_bytes / 1024 for r in sel], "s--", label="matrix")
    ax.set_xlabel("minutil")
    ax.set_ylabel("rule file size (KiB)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_scaling(rows: list[BenchRow], path: Path) -> None:
    sel = sorted(rows, key=lambda r: r.sequences)
    fig, ax = plt.subplots()
    ax.plot([r.sequences for r in sel], [r.wall_time for r in sel], "o-")
    ax.set_xlabel("sequences")
    ax.set_ylabel("runtime (s)")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def run_bench(out_dir: Path, sequences: int, pcts, scales, scale_pct: Fraction, seed: int) -> list[Path]:
    """Run the experiments and write ``bench.tsv`` plus one PNG per experiment."""
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = collect(sequences, pcts, scales, scale_pct, seed)
    written = [out_dir / "bench.tsv"]
    write_tsv(rows, written[0])
    pruning = [r for r in rows if r.experiment == "pruning"]
    if pruning:
        plot_pruning(pruning, out_dir / "pruning.png")
        plot_storage([r for r in pruning if r.complement_pruning], out_dir / "storage.png")
        written += [out_dir / "pruning.png", out_dir / "storage.png"]
    scaling = [r for r in rows if r.experiment == "scaling"]
    if scaling:
        plot_scaling(scaling, out_dir / "scaling.png")
        written.append(out_dir / "scaling.png")
    return written
