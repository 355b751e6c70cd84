import numpy as np
import pytest
from hypothesis import given, strategies as st

from invlist.bitstream import BitBuffer
from invlist.interpolative import (bic_bits, bic_decode, bic_encode, bic_list_decode,
                                   bic_list_encode, bic_trace)

from conftest import increasing_lists

FIG2 = [3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54]


def test_fig2_trace():
    values, widths = bic_trace(FIG2, 0, 62, "plain")
    assert values == [10, 5, 3, 0, 5, 18, 5, 3, 1, 15]
    assert widths == [6, 4, 3, 2, 3, 6, 5, 4, 5, 5]
    assert bic_bits(FIG2, 0, 62, "plain") == 43


def test_full_range_costs_nothing():
    assert bic_bits([14], 14, 14, "plain") == 0
    assert bic_bits(list(range(20, 40)), 20, 39, "leftmost") == 0


@pytest.mark.parametrize("mode", ["plain", "leftmost", "centered"])
@given(data=increasing_lists(max_n=500, max_u=10**6))
def test_range_roundtrip(mode, data):
    S, U = data
    buf = BitBuffer()
    bic_encode(S, 0, U - 1, mode, buf)
    assert len(buf) == bic_bits(S, 0, U - 1, mode)
    assert np.array_equal(bic_decode(S.size, 0, U - 1, mode, buf.reader()), S)


@given(data=increasing_lists(max_n=500, max_u=10**6))
def test_minimal_modes_never_larger(data):
    S, U = data
    plain = bic_bits(S, 0, U - 1, "plain")
    assert bic_bits(S, 0, U - 1, "leftmost") <= plain
    assert bic_bits(S, 0, U - 1, "centered") <= plain


@given(data=increasing_lists(max_n=500, max_u=10**6), mode=st.sampled_from(["leftmost", "centered"]))
def test_list_roundtrip(data, mode):
    S, _ = data
    buf = bic_list_encode(S, mode)
    assert np.array_equal(bic_list_decode(buf.reader(), mode), S)


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        bic_bits([1, 5], 2, 10)
