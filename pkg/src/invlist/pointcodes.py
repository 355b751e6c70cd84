"""Point-wise integer codes: one integer, one codeword.

Every bit-aligned code has a compiled ``encode_one`` / ``decode_one`` branch
selected by an integer code id, which is what the block codecs call in their
inner loops.  The module-level ``*_encode`` / ``*_decode`` / ``*_length``
functions are the friendly per-value API on top of :class:`BitBuffer`.

Values handled by the compiled kernels must stay below 2**63.  The byte
oriented Variable-Byte API also has a pure Python path that accepts anything
below 2**64.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .bitstream import (
    BitBuffer,
    DEFAULT_UNARY_CAP,
    LEFTMOST,
    bit_length,
    get_bit,
    grow,
    minbin_length,
    read_bits,
    read_checked,
    read_minbin,
    read_unary,
    write_bits,
    write_minbin,
    write_unary,
)
from .errors import CodecOverflowError, EndOfStreamError, MalformedStreamError

UNARY, BINARY, GAMMA, DELTA, GOLOMB, RICE, RICE_G, EXPG, ZETA, FIB, VBYTE, NIBBLE, SCDENSE = range(13)

CODE_IDS = {
    "unary": UNARY,
    "binary": BINARY,
    "gamma": GAMMA,
    "delta": DELTA,
    "golomb": GOLOMB,
    "rice": RICE,
    "rice_gamma": RICE_G,
    "expgolomb": EXPG,
    "zeta": ZETA,
    "fibonacci": FIB,
    "vbyte": VBYTE,
    "nibble": NIBBLE,
    "scdense": SCDENSE,
}

MAX_VALUE = (1 << 63) - 1


def _fib_table():
    f = [1, 2]
    while f[-1] <= MAX_VALUE:
        f.append(f[-1] + f[-2])
    return np.array([v for v in f if v <= MAX_VALUE], dtype=np.int64)


FIB_TABLE = _fib_table()
_FIB_MAX_BITS = FIB_TABLE.shape[0] + 1


# --- compiled kernels -------------------------------------------------------

@njit(cache=True)
def _fib_encode(words, pos, x, fib):
    k = 0
    while k + 1 < fib.shape[0] and fib[k + 1] <= x:
        k += 1
    # bits for F1..F(k+1), low index first, then the control bit
    mask = np.zeros(k + 1, dtype=np.int64)
    rem = x
    j = k
    while rem > 0:
        if fib[j] <= rem:
            mask[j] = 1
            rem -= fib[j]
            j -= 2
        else:
            j -= 1
    for i in range(k + 1):
        pos = write_bits(words, pos, mask[i], 1)
    return write_bits(words, pos, 1, 1)


@njit(cache=True)
def _fib_length(x, fib):
    k = 0
    while k + 1 < fib.shape[0] and fib[k + 1] <= x:
        k += 1
    return k + 2


@njit(cache=True)
def _fib_decode(words, pos, nbits, fib):
    x = 0
    prev = 0
    i = 0
    while True:
        if pos >= nbits:
            raise EndOfStreamError("fibonacci codeword runs past end of stream")
        bit = get_bit(words, pos)
        pos += 1
        if bit == 1 and prev == 1:
            return x, pos
        if bit == 1:
            if i >= fib.shape[0]:
                raise MalformedStreamError("fibonacci codeword too long")
            x += fib[i]
        prev = bit
        i += 1
        if i > fib.shape[0]:
            raise MalformedStreamError("fibonacci codeword too long")


@njit(cache=True)
def _sc_units(x, s, c, out):
    """Fill ``out`` with SC-dense units (first emitted first); returns count."""
    i = x - 1
    stopper = i % s
    q = i // s
    k = 0
    while q > 0:
        q -= 1
        out[k] = s + q % c
        q //= c
        k += 1
    # continuers were produced innermost first
    for a in range(k // 2):
        t = out[a]
        out[a] = out[k - 1 - a]
        out[k - 1 - a] = t
    out[k] = stopper
    return k + 1


@njit(cache=True)
def encode_one(words, pos, x, code, p1, p2):
    if code == GAMMA:
        n = bit_length(x)
        pos = write_unary(words, pos, n)
        return write_bits(words, pos, x & ((np.int64(1) << (n - 1)) - 1), n - 1)
    if code == DELTA:
        n = bit_length(x)
        m = bit_length(n)
        pos = write_unary(words, pos, m)
        pos = write_bits(words, pos, n & ((np.int64(1) << (m - 1)) - 1), m - 1)
        return write_bits(words, pos, x & ((np.int64(1) << (n - 1)) - 1), n - 1)
    if code == GOLOMB:
        q = (x - 1) // p1
        pos = write_unary(words, pos, q + 1)
        return write_minbin(words, pos, x - 1 - q * p1, p1, LEFTMOST)
    if code == RICE:
        q = (x - 1) >> p1
        pos = write_unary(words, pos, q + 1)
        return write_bits(words, pos, (x - 1) & ((np.int64(1) << p1) - 1), p1)
    if code == RICE_G:
        q = (x - 1) >> p1
        n = bit_length(q + 1)
        pos = write_unary(words, pos, n)
        pos = write_bits(words, pos, (q + 1) & ((np.int64(1) << (n - 1)) - 1), n - 1)
        return write_bits(words, pos, (x - 1) & ((np.int64(1) << p1) - 1), p1)
    if code == EXPG:
        y = x - 1
        h = bit_length((y >> p1) + 1)
        off = y - (((np.int64(1) << (h - 1)) - 1) << p1)
        pos = write_unary(words, pos, h)
        return write_bits(words, pos, off, p1 + h - 1)
    if code == ZETA:
        h = (bit_length(x) - 1) // p1 + 1
        low = np.int64(1) << ((h - 1) * p1)
        off = x - low
        pos = write_unary(words, pos, h)
        # leftmost minimal binary over [0, 2^(hk) - 2^((h-1)k)): short range = low
        if off < low:
            return write_bits(words, pos, off, h * p1 - 1)
        return write_bits(words, pos, off + low, h * p1)
    if code == UNARY:
        return write_unary(words, pos, x)
    if code == BINARY:
        return write_bits(words, pos, x, p1)
    if code == VBYTE or code == NIBBLE:
        g = 7 if code == VBYTE else 3
        mask = (np.int64(1) << g) - 1
        while x > mask:
            pos = write_bits(words, pos, (np.int64(1) << g) | (x & mask), g + 1)
            x >>= g
        return write_bits(words, pos, x, g + 1)
    if code == SCDENSE:
        units = np.empty(64, dtype=np.int64)
        k = _sc_units(x, p1, (np.int64(1) << p2) - p1, units)
        for i in range(k):
            pos = write_bits(words, pos, units[i], p2)
        return pos
    raise ValueError("unknown code id")


@njit(cache=True)
def length_one(x, code, p1, p2):
    if code == GAMMA:
        return 2 * bit_length(x) - 1
    if code == DELTA:
        n = bit_length(x)
        return 2 * bit_length(n) - 1 + n - 1
    if code == GOLOMB:
        q = (x - 1) // p1
        return q + 1 + minbin_length(x - 1 - q * p1, p1, LEFTMOST)
    if code == RICE:
        return ((x - 1) >> p1) + 1 + p1
    if code == RICE_G:
        return 2 * bit_length(((x - 1) >> p1) + 1) - 1 + p1
    if code == EXPG:
        h = bit_length(((x - 1) >> p1) + 1)
        return h + p1 + h - 1
    if code == ZETA:
        h = (bit_length(x) - 1) // p1 + 1
        low = np.int64(1) << ((h - 1) * p1)
        return h + (h * p1 - 1 if x - low < low else h * p1)
    if code == UNARY:
        return x
    if code == BINARY:
        return p1
    if code == VBYTE or code == NIBBLE:
        g = 7 if code == VBYTE else 3
        n = bit_length(x)
        groups = 1 if n == 0 else (n + g - 1) // g
        return groups * (g + 1)
    if code == SCDENSE:
        s = p1
        c = (np.int64(1) << p2) - s
        q = (x - 1) // s
        k = 1
        while q > 0:
            q = (q - 1) // c
            k += 1
        return k * p2
    raise ValueError("unknown code id")


@njit(cache=True)
def decode_one(words, pos, nbits, code, p1, p2, cap):
    if code == GAMMA:
        n, pos = read_unary(words, pos, nbits, cap)
        if n > 63:
            raise MalformedStreamError("gamma length prefix exceeds 63")
        low = read_checked(words, pos, nbits, n - 1)
        return (np.int64(1) << (n - 1)) | low, pos + n - 1
    if code == DELTA:
        m, pos = read_unary(words, pos, nbits, cap)
        if m > 6:
            raise MalformedStreamError("delta length prefix too large")
        n = (np.int64(1) << (m - 1)) | read_checked(words, pos, nbits, m - 1)
        pos += m - 1
        if n > 63:
            raise MalformedStreamError("delta length exceeds 63")
        low = read_checked(words, pos, nbits, n - 1)
        return (np.int64(1) << (n - 1)) | low, pos + n - 1
    if code == GOLOMB:
        q, pos = read_unary(words, pos, nbits, cap)
        r, pos = read_minbin(words, pos, nbits, p1, LEFTMOST)
        return (q - 1) * p1 + r + 1, pos
    if code == RICE:
        q, pos = read_unary(words, pos, nbits, cap)
        r = read_checked(words, pos, nbits, p1)
        return ((q - 1) << p1) + r + 1, pos + p1
    if code == RICE_G:
        n, pos = read_unary(words, pos, nbits, cap)
        if n > 63:
            raise MalformedStreamError("gamma length prefix exceeds 63")
        q1 = (np.int64(1) << (n - 1)) | read_checked(words, pos, nbits, n - 1)
        pos += n - 1
        r = read_checked(words, pos, nbits, p1)
        return ((q1 - 1) << p1) + r + 1, pos + p1
    if code == EXPG:
        h, pos = read_unary(words, pos, nbits, cap)
        if h + p1 - 1 > 63:
            raise MalformedStreamError("exp-golomb bucket too large")
        off = read_checked(words, pos, nbits, p1 + h - 1)
        return (((np.int64(1) << (h - 1)) - 1) << p1) + off + 1, pos + p1 + h - 1
    if code == ZETA:
        h, pos = read_unary(words, pos, nbits, cap)
        if h * p1 > 63:
            raise MalformedStreamError("zeta bucket too large")
        low = np.int64(1) << ((h - 1) * p1)
        v = read_checked(words, pos, nbits, h * p1 - 1)
        pos += h * p1 - 1
        if v >= low:
            v = ((v << 1) | read_checked(words, pos, nbits, 1)) - low
            pos += 1
        return low + v, pos
    if code == UNARY:
        return read_unary(words, pos, nbits, cap)
    if code == BINARY:
        return read_checked(words, pos, nbits, p1), pos + p1
    if code == VBYTE or code == NIBBLE:
        g = 7 if code == VBYTE else 3
        x = np.int64(0)
        shift = 0
        while True:
            if pos + g + 1 > nbits:
                raise MalformedStreamError("stream ends inside a variable-byte value")
            u = read_bits(words, pos, g + 1)
            pos += g + 1
            part = u & ((np.int64(1) << g) - 1)
            if shift >= 63 or (shift > 0 and part >> (63 - shift)):
                raise CodecOverflowError("variable-byte value exceeds 63 bits")
            x |= part << shift
            shift += g
            if u >> g == 0:
                return x, pos
    if code == SCDENSE:
        s = p1
        c = (np.int64(1) << p2) - s
        q = np.int64(0)
        k = 0
        while True:
            u = read_checked(words, pos, nbits, p2)
            pos += p2
            if u < s:
                return q * s + u + 1, pos
            q = q * c + (u - s) + 1
            k += 1
            if k > 64:
                raise MalformedStreamError("too many sc-dense continuers")
    raise ValueError("unknown code id")


@njit(cache=True)
def encode_many(xs, code, p1, p2):
    words = np.zeros(max(2, xs.shape[0] // 4 + 2), dtype=np.uint64)
    pos = 0
    for x in xs:
        words = grow(words, pos + length_one(x, code, p1, p2) + 64)
        pos = encode_one(words, pos, x, code, p1, p2)
    return words, pos


@njit(cache=True)
def decode_many(words, pos, nbits, n, code, p1, p2, cap):
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i], pos = decode_one(words, pos, nbits, code, p1, p2, cap)
    return out, pos


@njit(cache=True)
def lengths_many(xs, code, p1, p2):
    out = np.empty(xs.shape[0], dtype=np.int64)
    for i in range(xs.shape[0]):
        out[i] = length_one(xs[i], code, p1, p2)
    return out


# --- parameter checks and the per-value API ---------------------------------

def _check_positive(x) -> int:
    x = int(x)
    if x < 1:
        raise ValueError(f"code needs x >= 1, got {x}")
    if x > MAX_VALUE:
        raise CodecOverflowError(f"{x} exceeds the 63-bit kernel domain")
    return x


def _params(code: int, p1: int = 0, p2: int = 0):
    if code == GOLOMB and p1 < 2:
        raise ValueError(f"golomb needs b >= 2, got {p1}")
    if code in (RICE, RICE_G) and not 1 <= p1 <= 62:
        raise ValueError(f"rice needs 1 <= k <= 62, got {p1}")
    if code == EXPG and not 0 <= p1 <= 62:
        raise ValueError(f"exp-golomb needs 0 <= k <= 62, got {p1}")
    if code == ZETA and not 1 <= p1 <= 62:
        raise ValueError(f"zeta needs 1 <= k <= 62, got {p1}")
    if code == SCDENSE:
        if not 2 <= p2 <= 16:
            raise ValueError(f"sc-dense unit width must be 2..16 bits, got {p2}")
        if not 1 <= p1 < (1 << p2):
            raise ValueError(f"sc-dense needs 1 <= s < {1 << p2}, got {p1}")
    return code, int(p1), int(p2)


def _zeta_fits(x: int, k: int) -> None:
    h = (x.bit_length() - 1) // k + 1
    if h * k > 63:
        raise CodecOverflowError(f"zeta_{k}({x}) needs a {h * k}-bit field")


def _encode(buf: BitBuffer, x: int, code: int, p1: int = 0, p2: int = 0) -> None:
    buf.reserve(int(length_one(x, code, p1, p2)) + 64)
    buf._advance(encode_one(buf.words, buf.length, x, code, p1, p2))


def _decode(buf: BitBuffer, code: int, p1: int = 0, p2: int = 0) -> int:
    x, pos = decode_one(buf.words, buf.cursor, buf.length, code, p1, p2, buf.unary_cap)
    buf.cursor = int(pos)
    return int(x)


def unary_encode(x, sink: BitBuffer) -> None:
    sink.write_unary(_check_positive(x))


def unary_decode(source: BitBuffer) -> int:
    return source.read_unary()


def unary_length(x) -> int:
    return _check_positive(x)


def gamma_encode(x, sink: BitBuffer) -> None:
    _encode(sink, _check_positive(x), GAMMA)


def gamma_decode(source: BitBuffer) -> int:
    return _decode(source, GAMMA)


def gamma_length(x) -> int:
    return 2 * _check_positive(x).bit_length() - 1


def delta_encode(x, sink: BitBuffer) -> None:
    _encode(sink, _check_positive(x), DELTA)


def delta_decode(source: BitBuffer) -> int:
    return _decode(source, DELTA)


def delta_length(x) -> int:
    n = _check_positive(x).bit_length()
    return 2 * n.bit_length() - 1 + n - 1


def _golomb_guard(x: int, b: int) -> None:
    if (x - 1) // b > DEFAULT_UNARY_CAP:
        raise CodecOverflowError(f"golomb quotient of {x} with b={b} exceeds the unary cap")


def golomb_encode(x, b: int, sink: BitBuffer) -> None:
    x = _check_positive(x)
    _params(GOLOMB, b)
    _golomb_guard(x, b)
    _encode(sink, x, GOLOMB, b)


def golomb_decode(b: int, source: BitBuffer) -> int:
    _params(GOLOMB, b)
    return _decode(source, GOLOMB, b)


def golomb_length(x, b: int) -> int:
    _params(GOLOMB, b)
    return int(length_one(_check_positive(x), GOLOMB, b, 0))


def golomb_optimal_b(p: float) -> int:
    """Gallager-van Voorhis parameter for geometric gaps with success rate ``p``."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must be in (0, 1), got {p}")
    return max(1, math.ceil(-math.log2(2.0 - p) / math.log2(1.0 - p)))


def _rice_code(quotient_mode: str) -> int:
    if quotient_mode == "unary":
        return RICE
    if quotient_mode == "gamma":
        return RICE_G
    raise ValueError(f"quotient_mode must be 'unary' or 'gamma', got {quotient_mode!r}")


def rice_encode(x, k: int, sink: BitBuffer, quotient_mode: str = "unary") -> None:
    code = _rice_code(quotient_mode)
    x = _check_positive(x)
    _params(code, k)
    if code == RICE:
        _golomb_guard(x, 1 << k)
    _encode(sink, x, code, k)


def rice_decode(k: int, source: BitBuffer, quotient_mode: str = "unary") -> int:
    code = _rice_code(quotient_mode)
    _params(code, k)
    return _decode(source, code, k)


def rice_length(x, k: int, quotient_mode: str = "unary") -> int:
    code = _rice_code(quotient_mode)
    _params(code, k)
    return int(length_one(_check_positive(x), code, k, 0))


def expgolomb_encode(x, k: int, sink: BitBuffer) -> None:
    _params(EXPG, k)
    _encode(sink, _check_positive(x), EXPG, k)


def expgolomb_decode(k: int, source: BitBuffer) -> int:
    _params(EXPG, k)
    return _decode(source, EXPG, k)


def expgolomb_length(x, k: int) -> int:
    _params(EXPG, k)
    return int(length_one(_check_positive(x), EXPG, k, 0))


def zeta_encode(x, k: int, sink: BitBuffer) -> None:
    _params(ZETA, k)
    x = _check_positive(x)
    _zeta_fits(x, k)
    _encode(sink, x, ZETA, k)


def zeta_decode(k: int, source: BitBuffer) -> int:
    _params(ZETA, k)
    return _decode(source, ZETA, k)


def zeta_length(x, k: int) -> int:
    _params(ZETA, k)
    x = _check_positive(x)
    _zeta_fits(x, k)
    return int(length_one(x, ZETA, k, 0))


def fibonacci_encode(x, sink: BitBuffer) -> None:
    x = _check_positive(x)
    sink.reserve(_FIB_MAX_BITS + 64)
    sink._advance(_fib_encode(sink.words, sink.length, x, FIB_TABLE))


def fibonacci_decode(source: BitBuffer) -> int:
    x, pos = _fib_decode(source.words, source.cursor, source.length, FIB_TABLE)
    source.cursor = int(pos)
    return int(x)


def fibonacci_length(x) -> int:
    return int(_fib_length(_check_positive(x), FIB_TABLE))


def fibonacci_lengths(x_max: int) -> list[int]:
    if x_max < 1:
        raise ValueError(f"x_max must be >= 1, got {x_max}")
    return [fibonacci_length(x) for x in range(1, x_max + 1)]


# Variable-Byte and Nibble.  The bytes API is pure Python so it can take the
# full unsigned 64-bit range; the BitBuffer API writes the same units as
# 8-bit (or 4-bit) fields.

_U64_LIMIT = 1 << 64


def _varint_groups(x: int, g: int) -> list[int]:
    x = int(x)
    if x < 0:
        raise ValueError(f"variable-byte codes need x >= 0, got {x}")
    if x >= _U64_LIMIT:
        raise CodecOverflowError(f"{x} exceeds the 64-bit group budget")
    mask = (1 << g) - 1
    units = []
    while x > mask:
        units.append((1 << g) | (x & mask))
        x >>= g
    units.append(x)
    return units


def _varint_value(units, g: int) -> int:
    x = 0
    shift = 0
    for u in units:
        x |= (u & ((1 << g) - 1)) << shift
        shift += g
        if x >= _U64_LIMIT:
            raise CodecOverflowError("variable-byte value exceeds 64 bits")
    return x


def vbyte_bytes(x) -> bytes:
    """Variable-Byte codeword of ``x`` as raw bytes, low 7-bit group first."""
    return bytes(_varint_groups(x, 7))


def vbyte_from_bytes(data: bytes, offset: int = 0) -> tuple[int, int]:
    """Decode one value at ``offset``; returns ``(value, next_offset)``."""
    units = []
    i = offset
    while True:
        if i >= len(data):
            raise MalformedStreamError("stream ends with a continuation byte")
        u = data[i]
        units.append(u)
        i += 1
        if not u & 0x80:
            return _varint_value(units, 7), i
        if len(units) > 10:
            raise CodecOverflowError("variable-byte value exceeds 64 bits")


def vbyte_encode(x, sink) -> None:
    """Append ``x`` to a ``bytearray`` or a :class:`BitBuffer`."""
    units = _varint_groups(x, 7)
    if isinstance(sink, BitBuffer):
        for u in units:
            sink.write_bits(u, 8)
    else:
        sink.extend(units)


def vbyte_decode(source) -> int:
    if not isinstance(source, BitBuffer):
        raise TypeError("use vbyte_from_bytes for byte strings")
    units = []
    while True:
        if source.remaining() < 8:
            raise MalformedStreamError("stream ends with a continuation byte")
        u = source.read_bits(8)
        units.append(u)
        if not u & 0x80:
            return _varint_value(units, 7)
        if len(units) > 10:
            raise CodecOverflowError("variable-byte value exceeds 64 bits")


def vbyte_length(x) -> int:
    return 8 * len(_varint_groups(x, 7))


def nibble_encode(x, sink: BitBuffer) -> None:
    for u in _varint_groups(x, 3):
        sink.write_bits(u, 4)


def nibble_decode(source: BitBuffer) -> int:
    units = []
    while True:
        if source.remaining() < 4:
            raise MalformedStreamError("stream ends with a continuation nibble")
        u = source.read_bits(4)
        units.append(u)
        if not u & 0x8:
            return _varint_value(units, 3)
        if len(units) > 22:
            raise CodecOverflowError("nibble value exceeds 64 bits")


def nibble_length(x) -> int:
    return 4 * len(_varint_groups(x, 3))


def scdense_units(x, s: int, c: int) -> list[int]:
    """The (s, c)-dense unit sequence for ``x``: continuers then one stopper."""
    if s < 1 or c < 1:
        raise ValueError(f"need s >= 1 and c >= 1, got s={s} c={c}")
    out = np.empty(64, dtype=np.int64)
    k = _sc_units(_check_positive(x), s, c, out)
    return [int(u) for u in out[:k]]


def _sc_width(s: int, c: int) -> int:
    w = (s + c).bit_length() - 1
    if s < 1 or c < 1 or (1 << w) != s + c:
        raise ValueError(f"s + c must be a power of two with s, c >= 1 (got {s}, {c})")
    return w


def scdense_encode(x, s: int, c: int, sink: BitBuffer) -> None:
    w = _sc_width(s, c)
    _params(SCDENSE, s, w)
    _encode(sink, _check_positive(x), SCDENSE, s, w)


def scdense_decode(s: int, c: int, source: BitBuffer) -> int:
    w = _sc_width(s, c)
    _params(SCDENSE, s, w)
    return _decode(source, SCDENSE, s, w)


def scdense_length(x, s: int, c: int) -> int:
    w = _sc_width(s, c)
    return int(length_one(_check_positive(x), SCDENSE, s, w))


# --- bulk helpers -----------------------------------------------------------

def resolve(name: str, **params) -> tuple[int, int, int]:
    """Map a code name plus keyword parameters to ``(code, p1, p2)``."""
    try:
        code = CODE_IDS[name]
    except KeyError:
        raise ValueError(f"unknown code {name!r}") from None
    if code == GOLOMB:
        return _params(code, params.get("b", 2))
    if code in (RICE, RICE_G, EXPG, ZETA):
        return _params(code, params.get("k", 1 if code != EXPG else 0))
    if code == BINARY:
        return code, int(params["width"]), 0
    if code == SCDENSE:
        s, c = params.get("s", 128), params.get("c", 128)
        return _params(code, s, _sc_width(s, c))
    return code, 0, 0


def encode_array(values, name: str, **params) -> BitBuffer:
    """Encode many values back to back under one code."""
    code, p1, p2 = resolve(name, **params)
    xs = np.ascontiguousarray(values, dtype=np.int64)
    lo = 0 if code in (VBYTE, NIBBLE, BINARY) else 1
    if xs.size and xs.min() < lo:
        raise ValueError(f"{name} needs values >= {lo}")
    if code == ZETA and xs.size:
        _zeta_fits(int(xs.max()), p1)
    if code in (GOLOMB, RICE, UNARY) and xs.size:
        b = p1 if code == GOLOMB else (1 << p1 if code == RICE else 1)
        _golomb_guard(int(xs.max()), b)
    if code == FIB:
        buf = BitBuffer(64 * xs.size + 64)
        for x in xs:
            fibonacci_encode(int(x), buf)
        return buf
    words, pos = encode_many(xs, code, p1, p2)
    return BitBuffer.from_words(words, int(pos))


def decode_array(source: BitBuffer, n: int, name: str, **params) -> np.ndarray:
    code, p1, p2 = resolve(name, **params)
    if code == FIB:
        return np.array([fibonacci_decode(source) for _ in range(n)], dtype=np.int64)
    out, pos = decode_many(source.words, source.cursor, source.length, n, code, p1, p2, source.unary_cap)
    source.cursor = int(pos)
    return out


def length_array(values, name: str, **params) -> np.ndarray:
    code, p1, p2 = resolve(name, **params)
    xs = np.ascontiguousarray(values, dtype=np.int64)
    if code == FIB:
        return np.array([fibonacci_length(int(x)) for x in xs], dtype=np.int64)
    return lengths_many(xs, code, p1, p2)


def codeword(name: str, x: int, **params) -> str:
    """Bit string of a single codeword; handy for tables and golden checks."""
    buf = BitBuffer()
    code, p1, p2 = resolve(name, **params)
    if code == VBYTE:
        vbyte_encode(x, buf)
    elif code == NIBBLE:
        nibble_encode(x, buf)
    elif code == FIB:
        fibonacci_encode(x, buf)
    else:
        return encode_array([x], name, **params).to_bitstring()
    return buf.to_bitstring()
