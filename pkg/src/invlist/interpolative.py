"""Binary Interpolative Coding.

The middle element of a sorted run is written relative to the bounds it is
known to lie in, then both halves are coded recursively with the tightened
bounds.  A sub-run that exactly fills its bounds costs nothing.

Modes: ``plain`` writes each middle value in ``ceil(log2(r + 1))`` bits,
``leftmost`` and ``centered`` use minimal binary over the ``r + 1`` possible
values.  Traversal is pre-order with an explicit stack.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .bitstream import (
    BitBuffer,
    CENTERED,
    LEFTMOST,
    bit_length,
    read_checked,
    read_minbin,
    write_bits,
    write_minbin,
)
from .errors import MalformedStreamError
from .pointcodes import DELTA, decode_one, delta_length, encode_one

PLAIN, MIN_LEFTMOST, MIN_CENTERED = 0, 1, 2
MODES = {"plain": PLAIN, "leftmost": MIN_LEFTMOST, "centered": MIN_CENTERED}


def mode_id(mode) -> int:
    if isinstance(mode, str):
        try:
            return MODES[mode]
        except KeyError:
            raise ValueError(f"unknown interpolative mode {mode!r}") from None
    if mode in (PLAIN, MIN_LEFTMOST, MIN_CENTERED):
        return int(mode)
    raise ValueError(f"unknown interpolative mode {mode!r}")


@njit(cache=True)
def _put(words, pos, v, r, mode):
    if mode == PLAIN:
        return write_bits(words, pos, v, bit_length(r))
    return write_minbin(words, pos, v, r + 1, LEFTMOST if mode == MIN_LEFTMOST else CENTERED)


@njit(cache=True)
def _get(words, pos, nbits, r, mode):
    if mode == PLAIN:
        w = bit_length(r)
        v = read_checked(words, pos, nbits, w)
        if v > r:
            raise MalformedStreamError("interpolative value outside its range")
        return v, pos + w
    return read_minbin(words, pos, nbits, r + 1, LEFTMOST if mode == MIN_LEFTMOST else CENTERED)


@njit(cache=True)
def encode_range(words, pos, S, lo, n, l, h, mode, trace_v, trace_w):
    """Encode ``S[lo:lo+n]`` within ``[l, h]``; optional traces get per-node values/widths."""
    if n == 0:
        return pos, 0
    stack = np.empty((2 * (bit_length(n) + 2), 4), dtype=np.int64)
    top = 0
    stack[0, 0] = lo
    stack[0, 1] = n
    stack[0, 2] = l
    stack[0, 3] = h
    top = 1
    t = 0
    while top > 0:
        top -= 1
        a = stack[top, 0]
        m = stack[top, 1]
        lo_v = stack[top, 2]
        hi_v = stack[top, 3]
        r = hi_v - lo_v - m + 1
        if r == 0:
            continue
        mid = (m - 1) >> 1
        x = S[a + mid]
        v = x - lo_v - mid
        start = pos
        pos = _put(words, pos, v, r, mode)
        if t < trace_v.shape[0]:
            trace_v[t] = v
            trace_w[t] = pos - start
        t += 1
        if m - mid - 1 > 0:
            stack[top, 0] = a + mid + 1
            stack[top, 1] = m - mid - 1
            stack[top, 2] = x + 1
            stack[top, 3] = hi_v
            top += 1
        if mid > 0:
            stack[top, 0] = a
            stack[top, 1] = mid
            stack[top, 2] = lo_v
            stack[top, 3] = x - 1
            top += 1
    return pos, t


@njit(cache=True)
def decode_range(words, pos, nbits, out, lo, n, l, h, mode):
    if n == 0:
        return pos
    if h - l + 1 < n:
        raise MalformedStreamError("interpolative range smaller than element count")
    stack = np.empty((2 * (bit_length(n) + 2), 4), dtype=np.int64)
    stack[0, 0] = lo
    stack[0, 1] = n
    stack[0, 2] = l
    stack[0, 3] = h
    top = 1
    while top > 0:
        top -= 1
        a = stack[top, 0]
        m = stack[top, 1]
        lo_v = stack[top, 2]
        hi_v = stack[top, 3]
        r = hi_v - lo_v - m + 1
        if r == 0:
            for j in range(m):
                out[a + j] = lo_v + j
            continue
        mid = (m - 1) >> 1
        v, pos = _get(words, pos, nbits, r, mode)
        x = v + lo_v + mid
        out[a + mid] = x
        if m - mid - 1 > 0:
            stack[top, 0] = a + mid + 1
            stack[top, 1] = m - mid - 1
            stack[top, 2] = x + 1
            stack[top, 3] = hi_v
            top += 1
        if mid > 0:
            stack[top, 0] = a
            stack[top, 1] = mid
            stack[top, 2] = lo_v
            stack[top, 3] = x - 1
            top += 1
    return pos


@njit(cache=True)
def range_bits(S, lo, n, l, h, mode):
    """Bits ``encode_range`` would emit, without writing."""
    if n == 0:
        return 0
    words = np.zeros(2, dtype=np.uint64)
    total = 0
    stack = np.empty((2 * (bit_length(n) + 2), 4), dtype=np.int64)
    stack[0, 0] = lo
    stack[0, 1] = n
    stack[0, 2] = l
    stack[0, 3] = h
    top = 1
    while top > 0:
        top -= 1
        a = stack[top, 0]
        m = stack[top, 1]
        lo_v = stack[top, 2]
        hi_v = stack[top, 3]
        r = hi_v - lo_v - m + 1
        if r == 0:
            continue
        mid = (m - 1) >> 1
        x = S[a + mid]
        words[0] = 0
        words[1] = 0
        total += _put(words, 0, x - lo_v - mid, r, mode)
        if m - mid - 1 > 0:
            stack[top, 0] = a + mid + 1
            stack[top, 1] = m - mid - 1
            stack[top, 2] = x + 1
            stack[top, 3] = hi_v
            top += 1
        if mid > 0:
            stack[top, 0] = a
            stack[top, 1] = mid
            stack[top, 2] = lo_v
            stack[top, 3] = x - 1
            top += 1
    return total


_NO_TRACE = np.zeros(0, dtype=np.int64)


def _check(S, l: int, h: int) -> np.ndarray:
    S = np.ascontiguousarray(S, dtype=np.int64)
    if S.size:
        if np.any(np.diff(S) <= 0):
            raise ValueError("sequence must be strictly increasing")
        if S[0] < l or S[-1] > h:
            raise ValueError(f"values must lie in [{l}, {h}]")
    if h - l + 1 < S.size:
        raise ValueError("range too small for the sequence")
    return S


def bic_encode(S, l: int, h: int, mode, sink: BitBuffer) -> None:
    S = _check(S, l, h)
    m = mode_id(mode)
    sink.reserve(64 * S.size + 128)
    pos, _ = encode_range(sink.words, sink.length, S, 0, S.size, l, h, m, _NO_TRACE, _NO_TRACE)
    sink._advance(pos)


def bic_decode(n: int, l: int, h: int, mode, source: BitBuffer) -> np.ndarray:
    out = np.empty(n, dtype=np.int64)
    pos = decode_range(source.words, source.cursor, source.length, out, 0, n, l, h, mode_id(mode))
    source.cursor = int(pos)
    return out


def bic_trace(S, l: int, h: int, mode="plain") -> tuple[list[int], list[int]]:
    """Values and bit widths written, in pre-order (run sub-trees omitted)."""
    S = _check(S, l, h)
    tv = np.zeros(max(1, S.size), dtype=np.int64)
    tw = np.zeros(max(1, S.size), dtype=np.int64)
    words = np.zeros(S.size + 4, dtype=np.uint64)
    _, t = encode_range(words, 0, S, 0, S.size, l, h, mode_id(mode), tv, tw)
    return [int(v) for v in tv[:t]], [int(w) for w in tw[:t]]


def bic_bits(S, l: int, h: int, mode="plain") -> int:
    S = _check(S, l, h)
    return int(range_bits(S, 0, S.size, l, h, mode_id(mode)))


# Self-contained record: delta(n), delta(S[n] - n + 2), then the first n - 1
# elements within [0, S[n] - 1].  The +2 keeps the header argument >= 1 even
# when S[n] = n - 1 (the list is 0..n-1).

@njit(cache=True)
def _list_encode(S, mode):
    n = S.shape[0]
    words = np.zeros(n + 8, dtype=np.uint64)
    pos = encode_one(words, 0, n, DELTA, 0, 0)
    last = S[n - 1]
    pos = encode_one(words, pos, last - n + 2, DELTA, 0, 0)
    none = np.zeros(0, dtype=np.int64)
    pos, _ = encode_range(words, pos, S, 0, n - 1, 0, last - 1, mode, none, none)
    return words, pos


def bic_list_encode(S, mode="leftmost") -> BitBuffer:
    S = np.ascontiguousarray(S, dtype=np.int64)
    if S.size == 0:
        raise ValueError("cannot encode an empty list")
    _check(S, 0, int(S[-1]))
    words, pos = _list_encode(S, mode_id(mode))
    return BitBuffer.from_words(words, int(pos))


def bic_list_decode(source: BitBuffer, mode="leftmost") -> np.ndarray:
    n, pos = decode_one(source.words, source.cursor, source.length, DELTA, 0, 0, source.unary_cap)
    t, pos = decode_one(source.words, pos, source.length, DELTA, 0, 0, source.unary_cap)
    last = t + n - 2
    if last < n - 1:
        raise MalformedStreamError("interpolative header is inconsistent")
    out = np.empty(n, dtype=np.int64)
    out[n - 1] = last
    pos = decode_range(source.words, pos, source.length, out, 0, n - 1, 0, last - 1, mode_id(mode))
    source.cursor = int(pos)
    return out


def bic_list_header_bits(S) -> int:
    return delta_length(len(S)) + delta_length(int(S[-1]) - len(S) + 2)

