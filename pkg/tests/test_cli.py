import subprocess
import sys

import pytest

from invlist.benchkit import golden
from invlist.benchkit.bench import HEADER
from invlist.benchkit.cli import main


@pytest.fixture
def corpus(tmp_path):
    coll = tmp_path / "c.bin"
    queries = tmp_path / "q.txt"
    assert main(["synth", "--lists", "12", "--universe", "50000", "--density", "0.02",
                 "--clustering", "0.5", "--seed", "3", "-o", str(coll)]) == 0
    assert main(["queries", "--collection", str(coll), "--per-size", "4", "--seed", "1",
                 "-o", str(queries)]) == 0
    return coll, queries


def test_synth_same_seed_same_bytes(tmp_path):
    paths = [tmp_path / "a.bin", tmp_path / "b.bin"]
    for p in paths:
        main(["synth", "--lists", "3", "--universe", "1000", "--density", "0.1", "--seed", "4", "-o", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_synth_infeasible_is_usage_error(tmp_path, capsys):
    assert main(["synth", "--lists", "3", "--universe", "10", "--density", "0.01", "-o",
                 str(tmp_path / "x")]) == 2
    assert "density" in capsys.readouterr().err


def test_stats_tsv(corpus, capsys):
    assert main(["stats", str(corpus[0])]) == 0
    rows = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert rows["lists"] == "12" and rows["universe"] == "50000" and rows["integers"] == "12000"
    buckets = [float(v) for k, v in rows.items() if k.startswith("bucket_")]
    assert abs(sum(buckets) - 100) < 0.1


def test_stats_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.bin"
    bad.write_bytes(b"\x01\x00\x00\x00\x0a\x00\x00\x00\x02\x00\x00\x00\x05\x00\x00\x00\x03\x00\x00\x00")
    assert main(["stats", str(bad)]) == 2
    assert "not strictly increasing" in capsys.readouterr().err
    assert main(["stats", str(tmp_path / "missing.bin")]) == 2


def test_bench_verify_all_ops(corpus, capsys):
    coll, queries = corpus
    code = main(["bench", "--codec", "ef", "--codec", "bic", "--collection", str(coll),
                 "--queries", str(queries), "--op", "all", "--verify", "--reps", "2"])
    out = capsys.readouterr()
    assert code == 0
    lines = out.out.splitlines()
    assert tuple(lines[0].split("\t")) == HEADER
    rows = [line.split("\t") for line in lines[1:]]
    assert all(len(r) == len(HEADER) for r in rows)
    assert {(r[0], r[1]) for r in rows} >= {("ef", "decode"), ("bic", "and"), ("bic", "or")}
    assert all(float(r[5]) > 0 and float(r[7]) >= 0 for r in rows)
    assert "formula1\tef" in out.err and "\tok" in out.err
    assert "verify ok ef" in out.err


def test_bench_deterministic_space(corpus, capsys):
    coll, _ = corpus
    cols = []
    for _ in range(2):
        main(["bench", "--codec", "pef", "--collection", str(coll), "--reps", "1"])
        cols.append([line.split("\t")[:5] for line in capsys.readouterr().out.splitlines()])
    assert cols[0] == cols[1]


def test_bench_usage_errors(corpus, capsys):
    coll, _ = corpus
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--codec", "zip", "--collection", str(coll)])
    assert exc.value.code == 2
    assert main(["bench", "--codec", "ef", "--collection", str(coll), "--op", "and"]) == 2


def test_bench_verification_failure(corpus, monkeypatch, capsys):
    from invlist.benchkit import bench
    coll, queries = corpus
    real = bench.verify
    monkeypatch.setattr(bench, "verify", lambda *a: real(*a) + ["decode list 0"])
    assert main(["bench", "--codec", "vbyte", "--collection", str(coll), "--verify"]) == 1
    assert "verify FAIL" in capsys.readouterr().err


def test_golden_passes_and_is_idempotent(capsys):
    assert main(["golden"]) == 0
    first = capsys.readouterr().out
    assert main(["golden"]) == 0
    assert capsys.readouterr().out == first
    assert "FAIL" not in first


def test_golden_names_a_corrupted_vector(monkeypatch, capsys):
    vecs = golden.vectors()
    broken = []
    for v in vecs:
        if v.name == "Table 2 gamma(1..8)":
            v = golden.Vector(v.name, ["1"] + v.expected[1:], v.compute)
        broken.append(v)
    monkeypatch.setattr(golden, "vectors", lambda: broken)
    assert main(["golden"]) == 1
    out = capsys.readouterr().out
    failed = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(failed) == 1 and "Table 2 gamma(1..8)" in failed[0]
    assert "expected=['1', '100'" in failed[0] and "got=['0', '100'" in failed[0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "invlist", "golden"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
