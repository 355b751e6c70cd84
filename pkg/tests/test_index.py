import math

import numpy as np
import pytest

from invlist.benchkit.collection import synth
from invlist.index import (REGISTRY, InvertedIndex, build_index, compute_stats, gap_entropy,
                           gap_histogram, geometric_entropy, pooled_gaps)

import suites


@pytest.fixture(scope="module")
def small_lists():
    rng = np.random.default_rng(0)
    return [suites.random_list(rng, n_max=5000, U_max=100_000)[0] for _ in range(10)]


@pytest.mark.parametrize("codec", REGISTRY)
def test_every_codec_answers_like_the_oracle(codec, small_lists):
    U = 100_000
    index = InvertedIndex(small_lists, U, codec)
    rng = np.random.default_rng(1)
    for t, S in enumerate(small_lists):
        assert np.array_equal(index.decode(t), S)
    for _ in range(30):
        q = rng.choice(len(small_lists), int(rng.integers(2, 6)), replace=False).tolist()
        want_and, want_or = suites.and_oracle(small_lists, q), suites.or_oracle(small_lists, q)
        for m in ("auto", "nextgeq", "merge"):
            assert np.array_equal(index.and_query(q, m), want_and)
        for m in ("auto", "heap"):
            assert np.array_equal(index.or_query(q, m), want_or)


def test_nextgeq_equivalence_every_codec():
    cases, bad = suites.nextgeq_equivalence(seed=41, queries=8000)
    assert not bad, bad[:3]


def test_codec_pairs_differential():
    cases, bad = suites.query_equivalence(seed=42, per_codec=15)
    assert not bad, bad[:3]


def test_single_term_and_duplicates(small_lists):
    index = InvertedIndex(small_lists, 100_000, "ef")
    assert np.array_equal(index.and_query([3]), small_lists[3])
    assert np.array_equal(index.and_query([3, 3]), small_lists[3])
    with pytest.raises(KeyError):
        index.and_query([3, 99])
    with pytest.raises(ValueError):
        index.and_query([])


def test_unknown_codec_and_out_of_universe():
    with pytest.raises(ValueError):
        InvertedIndex([np.array([1, 2])], 10, "zip")
    with pytest.raises(ValueError):
        InvertedIndex([np.array([1, 20])], 10, "ef")


def test_histogram_example():
    h = gap_histogram(np.array([1, 1, 2, 3, 9000]))
    assert h["1"] == 40 and h["2"] == 20 and h["4"] == 20 and h["+"] == 20
    assert math.isclose(sum(h.values()), 100)


def test_constant_gap_entropy_zero():
    lists = [np.arange(4, 4000, 5)]  # first gap from -1 is also 5
    gaps = pooled_gaps(lists)
    assert set(gaps.tolist()) == {5}
    assert gap_entropy(gaps) == 0


def test_toy_stats_by_hand():
    class Toy:
        universe = 10
        lists = [np.array([0, 1, 5]), np.array([2, 9])]
    st = compute_stats(Toy)
    # gaps 1,1,4 and 3,7
    assert (st.lists, st.universe, st.integers) == (2, 10, 5)
    p = np.array([2, 1, 1, 1]) / 5
    assert math.isclose(st.entropy, float(-(p * np.log2(p)).sum()))
    assert math.isclose(st.mean_log_gap, (0 + 0 + 2 + 2 + 3) / 5)


def test_clustered_entropy_below_uniform_log_gap():
    uniform = compute_stats(synth(20, 200_000, 0.02, 0.0, 3))
    clustered = compute_stats(synth(20, 200_000, 0.02, 0.8, 3))
    assert clustered.entropy < uniform.mean_log_gap
    assert clustered.entropy < uniform.entropy


def test_uniform_gaps_look_geometric():
    coll = synth(50, 200_000, 0.05, 0.0, 5)
    gaps = pooled_gaps(coll.lists)
    # chi-square over the first 40 gap values against Geom(0.05), loose
    obs = np.bincount(gaps, minlength=42)[1:41]
    pmf = 0.05 * 0.95 ** np.arange(40)
    exp = pmf * gaps.size
    chi2 = float(((obs - exp) ** 2 / exp).sum())
    assert chi2 < 120  # 39 dof; the 0.1% critical value is about 73, allow slack
    st = compute_stats(coll)
    assert abs(st.entropy - geometric_entropy(0.05)) / geometric_entropy(0.05) < 0.05


def test_build_index_from_collection():
    coll = synth(5, 10_000, 0.1, 0.5, 1)
    index = build_index(coll, "pef")
    assert index.integers == coll.integers
    assert 0 < index.bits_per_int() < 32
