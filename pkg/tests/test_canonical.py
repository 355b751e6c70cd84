from fractions import Fraction

import numpy as np
import pytest

from invlist import canonical as cc
from invlist.bitstream import BitBuffer

import suites

LENGTHS = [1, 3, 3, 5, 5, 5, 5, 7]


def test_table_1a_codewords():
    code = cc.build(LENGTHS)
    assert [code.codeword(x) for x in range(1, 9)] == [
        "0", "100", "101", "11000", "11001", "11010", "11011", "1110000"]


def test_table_1b_rows():
    code = cc.build(LENGTHS)
    assert code.first_row() == [1, 2, 2, 4, 4, 8, 8]
    assert code.values_row() == [0, 64, 64, 96, 96, 112, 112]


@pytest.mark.parametrize("strategy", cc.STRATEGIES)
def test_decode_1010100(strategy):
    code = cc.build(LENGTHS, strategy)
    src = BitBuffer.from_bitstring("1010100").reader()
    assert cc.decode(code, src) == 3
    assert src.tell() == 3


def test_encode_examples():
    code = cc.build(LENGTHS)
    assert code.codeword(4) == "11000"
    assert code.codeword(6) == "11010"


def test_lexicographic_assignment():
    assert cc.assign_lexicographic([2, 3, 4, 4, 5, 5, 5, 6]) == [
        "00", "010", "0110", "0111", "10000", "10001", "10010", "100110"]


def test_kraft_violation_rejected():
    assert cc.kraft_sum([1, 1, 1]) == Fraction(3, 2)
    with pytest.raises(ValueError):
        cc.build([1, 1, 1])


@pytest.mark.parametrize("strategy", cc.STRATEGIES)
def test_strategies_agree(strategy):
    rng = np.random.default_rng(9)
    for _ in range(50):
        lengths = suites.random_lengths(rng)
        if max(lengths) > cc.DIRECT_TABLE_MAX_M and strategy == "direct":
            continue
        code = cc.build(lengths, strategy)
        syms = rng.integers(1, len(lengths) + 1, 30).tolist()
        buf = BitBuffer()
        for s in syms:
            cc.encode(code, s, buf)
        assert cc.decode_many(code, buf.reader(), len(syms)) == syms


def test_random_canonical_codes_kraft_and_roundtrip():
    cases, bad = suites.canonical_codes(seed=12, count=1500)
    assert not bad, bad[:5]


def test_codewords_are_canonical_prefix_free():
    rng = np.random.default_rng(3)
    for _ in range(100):
        lengths = suites.random_lengths(rng)
        code = cc.build(lengths)
        cws = sorted(code.codeword(x) for x in range(1, len(lengths) + 1))
        assert all(not b.startswith(a) for a, b in zip(cws, cws[1:]))
