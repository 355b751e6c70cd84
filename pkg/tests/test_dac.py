import numpy as np
import pytest
from hypothesis import given, strategies as st

from invlist.dac import DacVector, chunk_count
from invlist.errors import EndOfStreamError, MalformedStreamError

EXAMPLE = [2, 7, 12, 5, 13, 142, 61, 129]


def test_example_levels():
    v = DacVector(EXAMPLE, 3)
    assert v.levels == 3
    assert v.control_bitstring(1) == "00101111"
    assert v.control_bitstring(3) == "00"
    assert v.access(5) == 13
    assert [v.access(i) for i in range(1, 9)] == EXAMPLE


def test_chunk_count():
    assert chunk_count(0, 3) == 1
    assert chunk_count(7, 3) == 1
    assert chunk_count(8, 3) == 2
    assert chunk_count(142, 3) == 3


@given(st.lists(st.integers(0, 2**40), max_size=400), st.integers(1, 16))
def test_roundtrip(values, b):
    v = DacVector(values, b)
    assert v.decode().tolist() == values
    if values:
        i = len(values) // 2
        assert v[i] == values[i]
    assert v.levels == max([chunk_count(x, b) for x in values], default=1)
    again = DacVector.from_bytes(v.to_bytes())
    assert again.decode().tolist() == values


def test_size_counts_chunks_and_controls():
    v = DacVector(EXAMPLE, 3)
    chunks = sum(chunk_count(x, 3) for x in EXAMPLE)
    assert v.size_bits() == 4 * chunks


def test_wire_errors():
    data = DacVector(EXAMPLE, 3).to_bytes()
    with pytest.raises(EndOfStreamError):
        DacVector.from_bytes(data[:4])
    with pytest.raises((EndOfStreamError, MalformedStreamError)):
        DacVector.from_bytes(data[:-3])


def test_bad_width():
    with pytest.raises(ValueError):
        DacVector([1], 0)
