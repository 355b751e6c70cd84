import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from invlist.errors import CodecError
from invlist.universepart import (RoaringSet, SlicedSet, gallop_intersect, merge_intersect,
                                  merge_union, set_intersect, set_union, sorted_intersect)


def mixed_set(rng, U=1 << 20):
    """Spans of every density: scattered, half full, runs, completely full."""
    parts = [np.sort(rng.choice(1 << 16, int(rng.integers(1, 200)), replace=False))]
    parts.append((1 << 16) + np.sort(rng.choice(1 << 16, int(rng.integers(4000, 40000)), replace=False)))
    start = int(rng.integers(0, 60000))
    parts.append((2 << 16) + np.arange(start, start + int(rng.integers(1, 5000))))
    parts.append((3 << 16) + np.arange(1 << 16))
    keep = rng.random(4) < 0.8
    S = np.concatenate([p for p, k in zip(parts, keep) if k] or [parts[0]])
    return np.unique(S[S < U]).astype(np.int64)


def test_roaring_threshold():
    assert RoaringSet(np.arange(0, 8190, 2)).kinds() == ["array"]
    assert RoaringSet(np.arange(0, 8192, 2)).kinds() == ["bitmap"]
    assert RoaringSet(np.arange(100, 9000)).kinds() == ["runs"]


def test_slicing_kinds():
    assert SlicedSet(np.arange(1 << 16)).kinds() == ["full"]
    assert SlicedSet(np.arange(0, 1 << 16, 2)).kinds() == ["dense"]
    assert SlicedSet(np.arange(0, 5000, 7)).kinds() == ["sparse"]


@pytest.mark.parametrize("cls", [RoaringSet, SlicedSet])
def test_roundtrip_nextgeq_filter_and_wire(cls):
    rng = np.random.default_rng(7)
    for _ in range(20):
        S = mixed_set(rng)
        U = 1 << 20
        s = cls(S, U)
        assert np.array_equal(s.decode(), S)
        xs = rng.integers(0, U, 300)
        idx = np.searchsorted(S, xs)
        want = np.where(idx < S.size, S[np.minimum(idx, S.size - 1)], U)
        assert [s.nextgeq(int(x)) for x in xs] == want.tolist()
        cands = np.sort(rng.choice(U, 5000, replace=False))
        assert np.array_equal(s.filter(cands), cands[np.isin(cands, S)])
        again = cls.from_bytes(s.to_bytes(), U)
        assert np.array_equal(again.decode(), S)


@pytest.mark.parametrize("cls", [RoaringSet, SlicedSet])
def test_native_set_algebra(cls):
    rng = np.random.default_rng(8)
    for _ in range(25):
        a, b = mixed_set(rng), mixed_set(rng)
        A, B = cls(a), cls(b)
        assert np.array_equal(set_intersect(A, B), np.intersect1d(a, b))
        assert np.array_equal(set_union(A, B), np.union1d(a, b))


def test_mixed_structures_rejected():
    with pytest.raises(TypeError):
        set_intersect(RoaringSet([1, 2]), SlicedSet([1, 2]))


@given(st.lists(st.integers(0, 10**6), unique=True), st.lists(st.integers(0, 10**6), unique=True))
def test_sorted_kernels(a, b):
    a = np.array(sorted(a), dtype=np.int64)
    b = np.array(sorted(b), dtype=np.int64)
    want = np.intersect1d(a, b)
    assert np.array_equal(sorted_intersect(a, b), want)
    assert np.array_equal(merge_intersect(a, b), want)
    if a.size:
        assert np.array_equal(gallop_intersect(a, b), want)
    assert np.array_equal(merge_union(a, b), np.union1d(a, b))


@pytest.mark.parametrize("cls", [RoaringSet, SlicedSet])
def test_corrupt_wire(cls):
    data = bytearray(cls(np.arange(0, 300, 3)).to_bytes())
    data[4 + 2] = 9  # unknown container kind
    with pytest.raises(CodecError):
        cls.from_bytes(bytes(data))
    with pytest.raises(CodecError):
        cls.from_bytes(cls(np.arange(0, 300, 3)).to_bytes()[:-2])


def test_space_is_charged():
    s = RoaringSet(np.arange(0, 8192, 2))
    assert s.payload_bits() == 8 * (7 + 8192)
