import csv

from intervalrules.cli import main


def test_bench_writes_table_and_figures(tmp_path):
    out = tmp_path / "bench"
    code = main(
        ["bench", "--out-dir", str(out), "--sequences", "150", "--pcts", "20,10",
         "--scales", "100,150", "--scale-pct", "20"]
    )
    assert code == 0
    for name in ("bench.tsv", "pruning.png", "storage.png", "scaling.png"):
        assert (out / name).stat().st_size > 0
    with open(out / "bench.tsv", newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="\t"))
    assert [r["experiment"] for r in rows] == ["pruning"] * 4 + ["scaling"] * 2
    on = [r for r in rows if r["experiment"] == "pruning" and r["complement_pruning"] == "True"]
    off = [r for r in rows if r["experiment"] == "pruning" and r["complement_pruning"] == "False"]
    assert [r["rules"] for r in on] == [r["rules"] for r in off]
    assert (out / "pruning.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
