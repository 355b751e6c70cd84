import numpy as np
import pytest

from invlist.benchkit.collection import (Collection, CollectionError, from_bytes, read_collection,
                                         read_queries, synth, synth_queries, to_bytes,
                                         write_collection, write_queries)


def raw(*values):
    return np.array(values, dtype="<u4").tobytes()


def test_roundtrip(tmp_path):
    coll = Collection(100, [np.array([1, 5, 99]), np.array([0])])
    path = tmp_path / "c.bin"
    write_collection(coll, path)
    assert path.read_bytes() == raw(1, 100, 3, 1, 5, 99, 1, 0)
    back = read_collection(path)
    assert back.universe == 100
    assert [s.tolist() for s in back.lists] == [[1, 5, 99], [0]]


@pytest.mark.parametrize("data,needle", [
    (raw(1, 100, 3, 1, 5, 5), "record 1 at word 2 is not strictly increasing at position 2"),
    (raw(1, 100, 2, 1, 5, 2, 7, 100), "record 2 at word 5 holds 100 at position 1"),
    (raw(1, 100, 0), "record 1 at word 2 has length 0"),
    (raw(1, 100, 4, 1, 2), "declares 4 values but only 2 remain"),
    (raw(2, 100), "record 0 must be [1][U]"),
    (raw(1, 100)[:-1], "not a multiple of 4"),
])
def test_precise_diagnostics(data, needle):
    with pytest.raises(CollectionError) as err:
        from_bytes(data, "f.bin")
    assert needle in str(err.value)
    assert str(err.value).startswith("f.bin")


def test_queries(tmp_path):
    path = tmp_path / "q.txt"
    write_queries([[0, 1], [2, 0, 1]], path)
    assert read_queries(path, 3) == [[0, 1], [2, 0, 1]]
    path.write_text("0 1\n\n0 7\n")
    with pytest.raises(CollectionError, match=r"q.txt:3: term 7"):
        read_queries(path, 3)
    path.write_text("0 x\n")
    with pytest.raises(CollectionError, match=r":1:"):
        read_queries(path)


def test_synth_deterministic():
    a, b = synth(5, 50_000, 0.05, 0.5, 9), synth(5, 50_000, 0.05, 0.5, 9)
    assert to_bytes(a) == to_bytes(b)
    assert to_bytes(a) != to_bytes(synth(5, 50_000, 0.05, 0.5, 10))


def test_synth_lists_are_valid():
    coll = synth(10, 30_000, 0.2, 0.6, 1)
    for s in coll.lists:
        assert s.size == 6000
        assert np.all(np.diff(s) > 0) and s[0] >= 0 and s[-1] < 30_000


def test_full_clustering_is_mostly_runs():
    gaps = np.concatenate([np.diff(s) for s in synth(10, 10**6, 0.02, 1.0, 2).lists])
    assert np.mean(gaps == 1) >= 0.9


@pytest.mark.parametrize("args", [(1, 100, 0.001, 0.5, 0), (1, 100, 0.5, 1.5, 0), (1, 100, 2.0, 0.5, 0)])
def test_synth_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        synth(*args)


def test_synth_queries():
    qs = synth_queries(10, per_size=5, sizes=(2, 5), seed=1, lengths=[1] * 3 + [100] * 7, min_size=10)
    assert len(qs) == 10
    assert all(len(set(q)) == len(q) and min(q) >= 3 for q in qs)
    assert qs == synth_queries(10, per_size=5, sizes=(2, 5), seed=1, lengths=[1] * 3 + [100] * 7, min_size=10)


def test_filtered_min_size():
    coll = Collection(100, [np.arange(3), np.arange(10)])
    assert len(coll.filtered(5).lists) == 1
