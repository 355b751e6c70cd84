import numpy as np
import pytest
from hypothesis import given, settings

from invlist.eliasfano import EliasFano, PartitionedEF, fixed_chunk_cost, formula1_bound, pef_chunk_cost
from invlist.errors import MalformedStreamError

import suites
from conftest import increasing_lists


def test_table5_bits(table5):
    ef = EliasFano(*table5)
    assert ef.ell == 3
    assert ef.high_bits() == "11101110101011001010"
    assert ef.low_bits() == "011100111101110111101001100110110110"


def test_table5_access_and_select(table5):
    ef = EliasFano(*table5)
    assert (ef.access(1), ef.access(4), ef.access(12)) == (3, 13, 62)
    h = ef.high_vector()
    assert h.select1(4) == 5
    assert h.select0(3) == 10


def test_table5_nextgeq(table5):
    ef = EliasFano(*table5)
    assert ef.bucket_bounds(30) == (8, 9)
    assert ef.nextgeq(30) == 36
    assert ef.nextgeq(63) == 64  # exhausted
    assert ef.nextgeq(0) == 3


def test_formula1_on_random_pairs():
    cases, bad = suites.formula1_pairs(seed=31, pairs=1000)
    assert cases == 1000 and not bad, bad[:3]


def test_formula1_bound_helper():
    assert formula1_bound(12, 64) == 12 * 3 + 24
    assert formula1_bound(10, 5) == 20


@settings(max_examples=200)
@given(increasing_lists(max_n=2000))
def test_ef_roundtrip_and_wire(data):
    S, U = data
    ef = EliasFano(S, U)
    assert np.array_equal(ef.decode(), S)
    assert ef.payload_bits() <= formula1_bound(S.size, U)
    again = EliasFano.from_bytes(ef.to_bytes())
    assert np.array_equal(again.decode(), S)


def test_ef_wire_rejects_bad_lengths(table5):
    data = bytearray(EliasFano(*table5).to_bytes())
    data[0] = 13  # claim 13 elements
    with pytest.raises(MalformedStreamError):
        EliasFano.from_bytes(bytes(data))


def test_pef_chunk_costs():
    assert pef_chunk_cost(5, 40) == ("ef", 25)
    assert pef_chunk_cost(30, 40) == ("bitmap", 40)
    assert pef_chunk_cost(40, 40) == ("full", 0)


def test_pef_within_epsilon_of_exact():
    cases, bad = suites.pef_bounds(seed=32, count=120)
    assert not bad, bad[:3]


@settings(max_examples=150)
@given(increasing_lists(max_n=3000, max_u=10**6))
def test_pef_roundtrip_and_payload(data):
    S, U = data
    pef = PartitionedEF(S, U)
    assert np.array_equal(pef.decode(), S)
    ef = EliasFano(S, U)
    assert pef.payload_bits() <= ef.payload_bits()
    assert pef.total_bits() <= ef.payload_bits() + pef.first_level_bits()
    for x in (0, int(S[0]) + 1, int(S[-1]), U - 1):
        i = np.searchsorted(S, x)
        assert pef.nextgeq(x) == (S[i] if i < S.size else U)
    i = len(S) // 2 + 1
    assert pef.access(i) == S[i - 1]


def test_pef_uses_several_chunk_kinds():
    rng = np.random.default_rng(2)
    dense = np.arange(10_000, 20_000)
    sparse = np.sort(rng.choice(np.arange(100_000, 10**7), 3000, replace=False))
    half = np.arange(20_000, 60_000, 2)
    S = np.concatenate([dense, half, sparse])
    pef = PartitionedEF(S, 10**7)
    kinds = {k for k, _, _ in pef.chunk_summary()}
    assert kinds == {"ef", "bitmap", "full"}
    assert pef.total_bits() < EliasFano(S, 10**7).payload_bits()


def test_fixed_cost_is_a_few_dozen_bits():
    assert 10 < fixed_chunk_cost(50_000, 10**6) < 64


def test_ef_wire_rejects_truncation(table5):
    from invlist.errors import EndOfStreamError
    data = EliasFano(*table5).to_bytes()
    for cut in (8, 30, len(data) - 1):
        with pytest.raises(EndOfStreamError):
            EliasFano.from_bytes(data[:cut])
