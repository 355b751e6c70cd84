"""Gap transform and block-based list codecs.

A list is cut into blocks of 128 docIDs.  Each block is stored as the gaps
``g`` from the previous element (the first gap of a block is taken against
the last docID of the previous block, or against -1 for the first block),
so every block decodes on its own.  Most formats code ``v = g - 1 >= 0`` so
runs of consecutive docIDs become runs of zeros.

Per-block skip data (last docID and payload bit offset) sits outside the
payload and drives ``nextgeq``.
"""

from __future__ import annotations

import math
import struct

import numpy as np
from numba import njit

from . import interpolative as bic
from .bitstream import (
    BitBuffer,
    LEFTMOST,
    bit_length,
    grow,
    minbin_length,
    read_bits,
    read_checked,
    write_bits,
)
from .errors import CodecOverflowError, EndOfStreamError, MalformedStreamError
from .pointcodes import (
    DELTA,
    FIB,
    FIB_TABLE,
    GAMMA,
    GOLOMB,
    RICE_G,
    SCDENSE,
    VBYTE,
    ZETA,
    _fib_decode,
    _fib_encode,
    decode_one,
    encode_one,
    length_one,
)

BLOCK = 128

(F_VBYTE, F_GAMMA, F_DELTA, F_RICE, F_GOLOMB, F_ZETA, F_FIB, F_SCDENSE,
 F_S9, F_S16, F_S8B, F_PFOR, F_OPTPFOR, F_FOR, F_BIC) = range(15)

FORMATS = {
    "vbyte": F_VBYTE,
    "gamma128": F_GAMMA,
    "delta128": F_DELTA,
    "rice128": F_RICE,
    "golomb128": F_GOLOMB,
    "zeta128": F_ZETA,
    "fib128": F_FIB,
    "scdense128": F_SCDENSE,
    "simple9": F_S9,
    "simple16": F_S16,
    "simple8b": F_S8B,
    "pfor": F_PFOR,
    "optpfor": F_OPTPFOR,
    "bp128": F_FOR,
    "bic": F_BIC,
}

_UNARY_CAP = np.int64(1) << 32


# --- gap transform ----------------------------------------------------------

def to_gaps(S) -> np.ndarray:
    S = np.asarray(S, dtype=np.int64)
    if S.size == 0:
        return S.copy()
    if S[0] < 0:
        raise ValueError("docIDs must be non-negative")
    g = np.diff(S, prepend=-1)
    if np.any(g < 1):
        raise ValueError("sequence must be strictly increasing")
    return g


def from_gaps(gaps) -> np.ndarray:
    gaps = np.asarray(gaps, dtype=np.int64)
    if np.any(gaps < 1):
        raise ValueError("gaps must be >= 1")
    return np.cumsum(gaps) - 1


# --- Simple family tables ---------------------------------------------------

def _uniform(rows):
    return [[w] * c for c, w in rows]


SIMPLE9_ROWS = _uniform([(28, 1), (14, 2), (9, 3), (7, 4), (5, 5), (4, 7), (3, 9), (2, 14), (1, 28)])

SIMPLE16_ROWS = [
    [1] * 28,
    [2] * 7 + [1] * 14,
    [1] * 7 + [2] * 7 + [1] * 7,
    [1] * 14 + [2] * 7,
    [2] * 14,
    [4] + [3] * 8,
    [3] + [4] * 4 + [3] * 3,
    [4] * 7,
    [5] * 4 + [4] * 2,
    [4] * 2 + [5] * 4,
    [6] * 3 + [5] * 2,
    [5] * 2 + [6] * 3,
    [7] * 4,
    [10] + [9] * 2,
    [14] * 2,
    [28],
]

SIMPLE8B_ROWS = _uniform([(60, 1), (30, 2), (20, 3), (15, 4), (12, 5), (10, 6), (8, 7), (7, 8),
                          (6, 10), (5, 12), (4, 15), (3, 20), (2, 30), (1, 60)])


def _table(rows):
    width = max(len(r) for r in rows)
    w = np.zeros((len(rows), width), dtype=np.int64)
    counts = np.zeros(len(rows), dtype=np.int64)
    for i, r in enumerate(rows):
        w[i, :len(r)] = r
        counts[i] = len(r)
    return w, counts


S9_W, S9_N = _table(SIMPLE9_ROWS)
S16_W, S16_N = _table(SIMPLE16_ROWS)
S8B_W, S8B_N = _table(SIMPLE8B_ROWS)


def simple_table(family: str):
    """Rows of (integers, bits per integer, wasted bits) for display and checks."""
    rows, data = {"simple9": (SIMPLE9_ROWS, 28), "simple16": (SIMPLE16_ROWS, 28),
                  "simple8b": (SIMPLE8B_ROWS, 60)}[family]
    out = []
    for sel, r in enumerate(rows):
        out.append({"selector": sel, "integers": len(r), "widths": tuple(r), "wasted": data - sum(r)})
    return out


@njit(cache=True)
def _simple_row(vals, i, end, W, N):
    """Row consuming the most values starting at ``i``; -1 if none fits."""
    best = -1
    best_m = 0
    for row in range(N.shape[0]):
        m = min(N[row], end - i)
        ok = True
        for j in range(m):
            if vals[i + j] >> W[row, j]:
                ok = False
                break
        if ok and m > best_m:
            best = row
            best_m = m
    return best


@njit(cache=True)
def simple_pack(words, pos, vals, start, end, W, N, data_bits):
    """Pack ``vals[start:end]``; returns (pos, ok) with ok False on overflow."""
    i = start
    while i < end:
        row = _simple_row(vals, i, end, W, N)
        if row < 0:
            return pos, False
        pos = write_bits(words, pos, row, 4)
        used = 0
        for j in range(N[row]):
            v = vals[i + j] if i + j < end else 0
            pos = write_bits(words, pos, v, W[row, j])
            used += W[row, j]
        pos += data_bits - used
        i += min(N[row], end - i)
    return pos, True


@njit(cache=True)
def simple_unpack(words, pos, nbits, n, out, W, N, data_bits):
    i = 0
    while i < n:
        row = read_checked(words, pos, nbits, 4)
        pos += 4
        if row >= N.shape[0]:
            raise MalformedStreamError("invalid simple selector")
        if pos + data_bits > nbits:
            raise EndOfStreamError("simple word truncated")
        used = 0
        for j in range(N[row]):
            v = read_bits(words, pos, W[row, j])
            pos += W[row, j]
            used += W[row, j]
            if i < n:
                out[i] = v
                i += 1
        pos += data_bits - used
    return pos


def simple_pack_words(values, family: str = "simple9") -> list[int]:
    """Stand-alone packing into 32-bit (or 64-bit) words, greedily."""
    W, N, data = {"simple9": (S9_W, S9_N, 28), "simple16": (S16_W, S16_N, 28),
                  "simple8b": (S8B_W, S8B_N, 60)}[family]
    vals = np.ascontiguousarray(values, dtype=np.int64)
    if vals.size and vals.min() < 0:
        raise ValueError("values must be non-negative")
    words = np.zeros(vals.size + 2, dtype=np.uint64)
    pos, ok = simple_pack(words, 0, vals, 0, vals.size, W, N, data)
    if not ok:
        raise CodecOverflowError(f"a value exceeds the widest {family} field")
    buf = BitBuffer.from_words(words, int(pos))
    size = data + 4
    return [buf.read_bits(size) for _ in range(int(pos) // size)]


def simple_unpack_words(packed, n: int, family: str = "simple9") -> list[int]:
    W, N, data = {"simple9": (S9_W, S9_N, 28), "simple16": (S16_W, S16_N, 28),
                  "simple8b": (S8B_W, S8B_N, 60)}[family]
    buf = BitBuffer()
    for w in packed:
        buf.write_bits(int(w), data + 4)
    out = np.empty(n, dtype=np.int64)
    simple_unpack(buf.words, 0, len(buf), n, out, W, N, data)
    return [int(v) for v in out]


# --- FOR and PFor ------------------------------------------------------------

@njit(cache=True)
def for_write(words, pos, vals, start, end):
    b = 0
    for i in range(start, end):
        b = max(b, bit_length(vals[i]))
    pos = write_bits(words, pos, b, 6)
    for i in range(start, end):
        pos = write_bits(words, pos, vals[i], b)
    return pos


@njit(cache=True)
def for_read(words, pos, nbits, n, out):
    b = read_checked(words, pos, nbits, 6)
    pos += 6
    if pos + n * b > nbits:
        raise EndOfStreamError("packed block truncated")
    for i in range(n):
        out[i] = read_bits(words, pos, b)
        pos += b
    return pos


def for_pack(block) -> BitBuffer:
    vals = np.ascontiguousarray(block, dtype=np.int64)
    if vals.size == 0 or vals.min() < 0:
        raise ValueError("need a non-empty block of non-negative integers")
    words = np.zeros(vals.size + 4, dtype=np.uint64)
    return BitBuffer.from_words(words, int(for_write(words, 0, vals, 0, vals.size)))


def for_unpack(buf: BitBuffer, n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int64)
    buf.cursor = int(for_read(buf.words, buf.cursor, len(buf), n, out))
    return out


@njit(cache=True)
def _in_range(v, b, k):
    # 2^k - 1 is the escape, and 2^k - 2 is also left unused (see notes)
    return v >= b and v - b <= (np.int64(1) << k) - 3


@njit(cache=True)
def _vbyte_bits(v):
    n = bit_length(v)
    return 8 if n == 0 else 8 * ((n + 6) // 7)


@njit(cache=True)
def pfor_bits(vals, start, end, b, k):
    bits = 6 + 2 * bit_length(b + 1) - 1 + (end - start) * k
    for i in range(start, end):
        if not _in_range(vals[i], b, k):
            bits += _vbyte_bits(vals[i])
    return bits


@njit(cache=True)
def pfor_write(words, pos, vals, start, end, b, k):
    pos = write_bits(words, pos, k, 6)
    pos = encode_one(words, pos, b + 1, GAMMA, 0, 0)
    esc = (np.int64(1) << k) - 1
    for i in range(start, end):
        v = vals[i]
        pos = write_bits(words, pos, v - b if _in_range(v, b, k) else esc, k)
    for i in range(start, end):
        if not _in_range(vals[i], b, k):
            pos = encode_one(words, pos, vals[i], VBYTE, 0, 0)
    return pos


@njit(cache=True)
def pfor_read(words, pos, nbits, n, out):
    k = read_checked(words, pos, nbits, 6)
    pos += 6
    if k < 1 or k > 32:
        raise MalformedStreamError("invalid pfor slot width")
    b1, pos = decode_one(words, pos, nbits, GAMMA, 0, 0, _UNARY_CAP)
    b = b1 - 1
    esc = (np.int64(1) << k) - 1
    if pos + n * k > nbits:
        raise EndOfStreamError("pfor slots truncated")
    for i in range(n):
        out[i] = read_bits(words, pos, k)
        pos += k
    for i in range(n):
        if out[i] == esc:
            out[i], pos = decode_one(words, pos, nbits, VBYTE, 0, 0, _UNARY_CAP)
        else:
            out[i] += b
    return pos


@njit(cache=True)
def pfor_choose(vals, start, end):
    """Base = block minimum, width = smallest k leaving <= 10% exceptions."""
    b = vals[start]
    for i in range(start, end):
        b = min(b, vals[i])
    n = end - start
    need = n - n // 10
    for k in range(2, 33):
        inside = 0
        for i in range(start, end):
            if _in_range(vals[i], b, k):
                inside += 1
        if inside >= need:
            return b, k
    return b, 32


@njit(cache=True)
def optpfor_choose(vals, start, end):
    """Exhaustive (b, k) over k in 1..32 and b in {0, min}; ties -> smaller k, then b."""
    n = end - start
    s = np.sort(vals[start:end])
    vb = np.zeros(n + 1, dtype=np.int64)  # vb[i] = vbyte bits of s[i:]
    for i in range(n - 1, -1, -1):
        vb[i] = vb[i + 1] + _vbyte_bits(s[i])
    mn = s[0]
    best_b = 0
    best_k = 0
    best = np.int64(-1)
    for k in range(1, 33):
        for t in range(2):
            if t == 1 and mn == 0:
                break
            b = np.int64(0) if t == 0 else mn
            top = (np.int64(1) << k) - 3
            # values with v - b > top are exceptions (v >= b always holds here)
            cut = np.searchsorted(s, b + top, side="right") if top >= 0 else 0
            bits = 6 + 2 * bit_length(b + 1) - 1 + n * k + vb[cut]
            if best < 0 or bits < best:
                best = bits
                best_b = b
                best_k = k
    return best_b, best_k


def pfor_encode(block, b: int, k: int) -> BitBuffer:
    vals = np.ascontiguousarray(block, dtype=np.int64)
    if not 1 <= k <= 32 or b < 0:
        raise ValueError("need 1 <= k <= 32 and b >= 0")
    if vals.size == 0 or vals.min() < 0:
        raise ValueError("need a non-empty block of non-negative integers")
    words = np.zeros(2 * vals.size + 8, dtype=np.uint64)
    return BitBuffer.from_words(words, int(pfor_write(words, 0, vals, 0, vals.size, b, k)))


def pfor_decode(buf: BitBuffer, n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int64)
    buf.cursor = int(pfor_read(buf.words, buf.cursor, len(buf), n, out))
    return out


def pfor_layout(block, b: int, k: int) -> tuple[list, list]:
    """Slot values (``'ESC'`` for exceptions) and the exception array."""
    esc = (1 << k) - 1
    slots, exc = [], []
    for v in block:
        v = int(v)
        if _in_range(v, b, k):
            slots.append(v - b)
        else:
            slots.append("ESC")
            exc.append(v)
    assert all(s == "ESC" or s < esc for s in slots)
    return slots, exc


def pfor_size(block, b: int, k: int) -> int:
    vals = np.ascontiguousarray(block, dtype=np.int64)
    return int(pfor_bits(vals, 0, vals.size, b, k))


def optpfor_choose_block(block) -> tuple[int, int]:
    vals = np.ascontiguousarray(block, dtype=np.int64)
    if vals.size == 0:
        raise ValueError("empty block")
    b, k = optpfor_choose(vals, 0, vals.size)
    return int(b), int(k)


def pfor_choose_block(block) -> tuple[int, int]:
    vals = np.ascontiguousarray(block, dtype=np.int64)
    b, k = pfor_choose(vals, 0, vals.size)
    return int(b), int(k)


# --- per-block parameter choice ---------------------------------------------

@njit(cache=True)
def _sc_cost(s_sorted, s):
    """Units needed for every x = v + 1 under (s, 256 - s)-dense coding."""
    n = s_sorted.shape[0]
    c = 256 - s
    units = n
    t = np.int64(s)
    span = np.int64(s)
    top = s_sorted[n - 1] + 1
    while t < top:
        units += n - np.searchsorted(s_sorted, t, side="left")  # values with x > t
        span *= c
        t += span
    return units


@njit(cache=True)
def _golomb_param(vals, start, end):
    n = end - start
    total = 0
    for i in range(start, end):
        total += vals[i] + 1
    p = n / total
    if p >= 0.999:
        return 2
    b = math.ceil(-math.log2(2.0 - p) / math.log2(1.0 - p))
    return max(2, b)


@njit(cache=True)
def choose(vals, start, end, fmt):
    """(p1, p2, upper bound on bits) for one block."""
    n = end - start
    if fmt == F_RICE:
        best = np.int64(-1)
        bk = 1
        for k in range(1, 17):
            bits = 4
            for i in range(start, end):
                bits += 2 * bit_length((vals[i] >> k) + 1) - 1 + k
            if best < 0 or bits < best:
                best = bits
                bk = k
        return bk, 0, best
    if fmt == F_GOLOMB:
        b = _golomb_param(vals, start, end)
        bits = 2 * bit_length(b) - 1
        for i in range(start, end):
            bits += length_one(vals[i] + 1, GOLOMB, b, 0)
        return b, 0, bits
    if fmt == F_ZETA:
        best = np.int64(-1)
        bk = 1
        for k in range(1, 5):
            bits = 2
            for i in range(start, end):
                bits += length_one(vals[i] + 1, ZETA, k, 0)
            if best < 0 or bits < best:
                best = bits
                bk = k
        return bk, 0, best
    if fmt == F_SCDENSE:
        srt = np.sort(vals[start:end])
        best = np.int64(-1)
        bs = 1
        for s in range(1, 256):
            u = _sc_cost(srt, s)
            if best < 0 or u < best:
                best = u
                bs = s
        return bs, 0, 8 + 8 * best
    if fmt == F_PFOR:
        b, k = pfor_choose(vals, start, end)
        return b, k, pfor_bits(vals, start, end, b, k)
    if fmt == F_OPTPFOR:
        b, k = optpfor_choose(vals, start, end)
        return b, k, pfor_bits(vals, start, end, b, k)
    return 0, 0, n * 140 + 256


@njit(cache=True)
def write_block(words, pos, vals, start, end, fmt, p1, p2):
    if fmt == F_VBYTE:
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i], VBYTE, 0, 0)
        return pos
    if fmt == F_GAMMA or fmt == F_DELTA:
        code = GAMMA if fmt == F_GAMMA else DELTA
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i] + 1, code, 0, 0)
        return pos
    if fmt == F_FIB:
        for i in range(start, end):
            pos = _fib_encode(words, pos, vals[i] + 1, FIB_TABLE)
        return pos
    if fmt == F_RICE:
        pos = write_bits(words, pos, p1 - 1, 4)
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i] + 1, RICE_G, p1, 0)
        return pos
    if fmt == F_GOLOMB:
        pos = encode_one(words, pos, p1, GAMMA, 0, 0)
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i] + 1, GOLOMB, p1, 0)
        return pos
    if fmt == F_ZETA:
        pos = write_bits(words, pos, p1 - 1, 2)
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i] + 1, ZETA, p1, 0)
        return pos
    if fmt == F_SCDENSE:
        pos = write_bits(words, pos, p1 - 1, 8)
        for i in range(start, end):
            pos = encode_one(words, pos, vals[i] + 1, SCDENSE, p1, 8)
        return pos
    if fmt == F_S9 or fmt == F_S16:
        W = S9_W if fmt == F_S9 else S16_W
        N = S9_N if fmt == F_S9 else S16_N
        big = False
        for i in range(start, end):
            if vals[i] >> 28:
                big = True
        if big:
            pos = write_bits(words, pos, 1, 1)
            return for_write(words, pos, vals, start, end)
        pos, ok = simple_pack(words, pos + 1, vals, start, end, W, N, 28)
        return pos
    if fmt == F_S8B:
        pos, ok = simple_pack(words, pos, vals, start, end, S8B_W, S8B_N, 60)
        if not ok:
            raise CodecOverflowError("value exceeds 60 bits")
        return pos
    if fmt == F_PFOR or fmt == F_OPTPFOR:
        return pfor_write(words, pos, vals, start, end, p1, p2)
    if fmt == F_FOR:
        return for_write(words, pos, vals, start, end)
    if fmt == F_BIC:
        n = end - start
        a = np.empty(n, dtype=np.int64)
        acc = 0
        for i in range(n):
            acc += vals[start + i] + 1
            a[i] = acc
        pos = encode_one(words, pos, acc, GAMMA, 0, 0)
        none = np.zeros(0, dtype=np.int64)
        pos, _ = bic.encode_range(words, pos, a, 0, n - 1, 1, acc - 1, p1, none, none)
        return pos
    raise ValueError("unknown block format")


@njit(cache=True)
def read_block(words, pos, nbits, n, fmt, out, mode=bic.MIN_LEFTMOST):
    """Decode ``n`` values ``v = gap - 1`` into ``out[:n]``."""
    if fmt == F_VBYTE:
        for i in range(n):
            out[i], pos = decode_one(words, pos, nbits, VBYTE, 0, 0, _UNARY_CAP)
        return pos
    if fmt == F_GAMMA or fmt == F_DELTA:
        code = GAMMA if fmt == F_GAMMA else DELTA
        for i in range(n):
            x, pos = decode_one(words, pos, nbits, code, 0, 0, _UNARY_CAP)
            out[i] = x - 1
        return pos
    if fmt == F_FIB:
        for i in range(n):
            x, pos = _fib_decode(words, pos, nbits, FIB_TABLE)
            out[i] = x - 1
        return pos
    if fmt == F_RICE or fmt == F_ZETA or fmt == F_SCDENSE:
        hb = 4 if fmt == F_RICE else (2 if fmt == F_ZETA else 8)
        p = read_checked(words, pos, nbits, hb) + 1
        pos += hb
        code = RICE_G if fmt == F_RICE else (ZETA if fmt == F_ZETA else SCDENSE)
        p2 = 8 if fmt == F_SCDENSE else 0
        for i in range(n):
            x, pos = decode_one(words, pos, nbits, code, p, p2, _UNARY_CAP)
            out[i] = x - 1
        return pos
    if fmt == F_GOLOMB:
        b, pos = decode_one(words, pos, nbits, GAMMA, 0, 0, _UNARY_CAP)
        if b < 2:
            raise MalformedStreamError("golomb parameter below 2")
        for i in range(n):
            x, pos = decode_one(words, pos, nbits, GOLOMB, b, 0, _UNARY_CAP)
            out[i] = x - 1
        return pos
    if fmt == F_S9 or fmt == F_S16:
        flag = read_checked(words, pos, nbits, 1)
        if flag:
            return for_read(words, pos + 1, nbits, n, out)
        if fmt == F_S9:
            return simple_unpack(words, pos + 1, nbits, n, out, S9_W, S9_N, 28)
        return simple_unpack(words, pos + 1, nbits, n, out, S16_W, S16_N, 28)
    if fmt == F_S8B:
        return simple_unpack(words, pos, nbits, n, out, S8B_W, S8B_N, 60)
    if fmt == F_PFOR or fmt == F_OPTPFOR:
        return pfor_read(words, pos, nbits, n, out)
    if fmt == F_FOR:
        return for_read(words, pos, nbits, n, out)
    if fmt == F_BIC:
        last, pos = decode_one(words, pos, nbits, GAMMA, 0, 0, _UNARY_CAP)
        if last < n:
            raise MalformedStreamError("interpolative block header too small")
        out[n - 1] = last
        pos = bic.decode_range(words, pos, nbits, out, 0, n - 1, 1, last - 1, mode)
        prev = 0
        for i in range(n):
            a = out[i]
            out[i] = a - prev - 1
            prev = a
        return pos
    raise ValueError("unknown block format")


@njit(cache=True)
def encode_list(S, fmt, block, mode):
    n = S.shape[0]
    nblocks = (n + block - 1) // block
    lasts = np.empty(nblocks, dtype=np.int64)
    offsets = np.empty(nblocks + 1, dtype=np.int64)
    vals = np.empty(n, dtype=np.int64)
    prev = -1
    for i in range(n):
        vals[i] = S[i] - prev - 1
        prev = S[i]
    words = np.zeros(n // 8 + 16, dtype=np.uint64)
    pos = 0
    for j in range(nblocks):
        start = j * block
        end = min(n, start + block)
        p1, p2, bound = choose(vals, start, end, fmt)
        if fmt == F_BIC:
            p1 = mode
        words = grow(words, pos + bound + 1024)
        offsets[j] = pos
        pos = write_block(words, pos, vals, start, end, fmt, p1, p2)
        lasts[j] = S[end - 1]
    offsets[nblocks] = pos
    return words, pos, lasts, offsets


@njit(cache=True)
def decode_block_abs(words, nbits, lasts, offsets, n, block, fmt, mode, j, out):
    """Absolute docIDs of block ``j`` into ``out``; returns its length."""
    start = j * block
    m = min(n, start + block) - start
    read_block(words, offsets[j], nbits, m, fmt, out, mode)
    acc = lasts[j - 1] if j > 0 else -1
    for i in range(m):
        acc += out[i] + 1
        out[i] = acc
    return m


@njit(cache=True)
def decode_list(words, nbits, lasts, offsets, n, block, fmt, mode):
    out = np.empty(n, dtype=np.int64)
    tmp = np.empty(block, dtype=np.int64)
    nblocks = lasts.shape[0]
    for j in range(nblocks):
        m = decode_block_abs(words, nbits, lasts, offsets, n, block, fmt, mode, j, tmp)
        out[j * block:j * block + m] = tmp[:m]
    return out


@njit(cache=True)
def filter_list(words, nbits, lasts, offsets, n, block, fmt, mode, cands):
    """Members of sorted ``cands`` that occur in the list (nextgeq-driven)."""
    out = np.empty(cands.shape[0], dtype=np.int64)
    tmp = np.empty(block, dtype=np.int64)
    k = 0
    cur = -1
    m = 0
    nblocks = lasts.shape[0]
    j = 0
    for x in cands:
        while j < nblocks and lasts[j] < x:
            j += 1
        if j == nblocks:
            break
        if cur != j:
            m = decode_block_abs(words, nbits, lasts, offsets, n, block, fmt, mode, j, tmp)
            cur = j
        p = np.searchsorted(tmp[:m], x)
        if tmp[p] == x:
            out[k] = x
            k += 1
    return out[:k]


class BlockedList:
    """Strictly increasing docIDs stored as independently decodable blocks."""

    def __init__(self, n, fmt, block, lasts, offsets, payload: BitBuffer, universe=None, mode="leftmost"):
        self.n = int(n)
        self.format = fmt
        self.fmt = FORMATS[fmt]
        self.block = int(block)
        self.lasts = lasts
        self.offsets = offsets
        self.payload = payload
        self.universe = universe
        self.mode = bic.mode_id(mode)
        self._scratch = np.empty(self.block, dtype=np.int64)
        self._cached = -1
        self._cached_len = 0

    @property
    def exhausted(self) -> int:
        return self.universe if self.universe is not None else int(self.lasts[-1]) + 1 if self.n else 0

    def __len__(self) -> int:
        return self.n

    def payload_bits(self) -> int:
        return len(self.payload)

    def skip_bits(self) -> int:
        return 96 * len(self.lasts)

    def decode(self) -> np.ndarray:
        if self.n == 0:
            return np.zeros(0, dtype=np.int64)
        p = self.payload
        return decode_list(p.words, len(p), self.lasts, self.offsets, self.n, self.block, self.fmt, self.mode)

    def _load(self, j: int) -> np.ndarray:
        if self._cached != j:
            p = self.payload
            self._cached_len = decode_block_abs(p.words, len(p), self.lasts, self.offsets,
                                                self.n, self.block, self.fmt, self.mode, j, self._scratch)
            self._cached = j
        return self._scratch[:self._cached_len]

    def nextgeq(self, x: int) -> int:
        """Smallest element >= x, or the exhausted sentinel."""
        j = int(np.searchsorted(self.lasts, x))
        if j >= len(self.lasts):
            return self.exhausted
        blk = self._load(j)
        return int(blk[np.searchsorted(blk, x)])

    def filter(self, cands: np.ndarray) -> np.ndarray:
        p = self.payload
        return filter_list(p.words, len(p), self.lasts, self.offsets, self.n, self.block, self.fmt, self.mode,
                           np.ascontiguousarray(cands, dtype=np.int64))

    def to_bytes(self) -> bytes:
        parts = [struct.pack("<II", self.n, len(self.lasts))]
        for last, off in zip(self.lasts, self.offsets[:-1]):
            parts.append(struct.pack("<IQ", int(last), int(off)))
        parts.append(self.payload.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes, fmt: str, block: int = BLOCK, universe=None,
                   mode="leftmost") -> "BlockedList":
        if len(data) < 8:
            raise EndOfStreamError("truncated list header")
        n, nb = struct.unpack_from("<II", data, 0)
        off = 8
        if len(data) < off + 12 * nb:
            raise EndOfStreamError("truncated skip table")
        lasts = np.empty(nb, dtype=np.int64)
        offsets = np.empty(nb + 1, dtype=np.int64)
        for j in range(nb):
            lasts[j], offsets[j] = struct.unpack_from("<IQ", data, off)
            off += 12
        payload, _ = BitBuffer.unpack_from(data, off)
        offsets[nb] = len(payload)
        if nb != (n + block - 1) // block:
            raise MalformedStreamError("block count does not match n")
        return cls(n, fmt, block, lasts, offsets, payload, universe, mode)


def list_encode(S, fmt: str, block: int = BLOCK, universe=None, mode="leftmost") -> BlockedList:
    """Encode in blocks of ``block`` gaps; ``mode`` only affects the bic format."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown block format {fmt!r}")
    if block < 1:
        raise ValueError("block length must be >= 1")
    S = np.ascontiguousarray(S, dtype=np.int64)
    if S.size:
        if S[0] < 0:
            raise ValueError("docIDs must be non-negative")
        if S.size > 1 and np.any(S[1:] <= S[:-1]):
            raise ValueError("sequence must be strictly increasing")
        if FORMATS[fmt] == F_S8B and np.any(np.diff(S, prepend=-1) - 1 >= 1 << 60):
            raise CodecOverflowError("gap exceeds simple8b's 60-bit field")
    words, pos, lasts, offsets = encode_list(S, FORMATS[fmt], block, bic.mode_id(mode))
    payload = BitBuffer.from_words(words, int(pos)).seal()
    return BlockedList(S.size, fmt, block, lasts, offsets, payload, universe, mode)


def list_decode(lst: BlockedList) -> np.ndarray:
    return lst.decode()


def list_nextgeq(lst: BlockedList, x: int) -> int:
    return lst.nextgeq(x)
