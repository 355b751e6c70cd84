"""MSB-first bit buffer and the word-level kernels every bit-aligned codec uses.

Bits live in a ``uint64`` array; bit ``p`` of the logical stream is bit
``63 - (p % 64)`` of word ``p // 64``.  The ``njit`` kernels below take
``(words, pos, ...)`` and return the new position so that bulk encoders can
run entirely inside compiled loops.  Kernels assume the area past ``pos`` is
zero-filled and never clear bits.
"""

from __future__ import annotations

import struct

import numpy as np
from numba import njit
from numba.cpython.unsafe.numbers import leading_zeros

from .errors import EndOfStreamError, MalformedStreamError

LEFTMOST = 0
CENTERED = 1
_MODES = {"leftmost": LEFTMOST, "centered": CENTERED}

DEFAULT_UNARY_CAP = 1 << 32

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True)
def bit_length(x):
    """Bits needed for a non-negative int64 (0 -> 0)."""
    if x == 0:
        return 0
    return 64 - leading_zeros(np.uint64(x))


@njit(cache=True)
def word_bit_length(w):
    if w == _U0:
        return 0
    return 64 - leading_zeros(w)


@njit(cache=True)
def popcount(w):
    w = w - ((w >> np.uint64(1)) & _M1)
    w = (w & _M2) + ((w >> np.uint64(2)) & _M2)
    w = (w + (w >> np.uint64(4))) & _M4
    return np.int64((w * _H01) >> np.uint64(56))


@njit(cache=True)
def ceil_log2(x):
    """Smallest c with 2**c >= x, for x >= 1."""
    return bit_length(x - 1)


@njit(cache=True)
def write_bits(words, pos, value, width):
    if width == 0:
        return pos
    v = np.uint64(value)
    w = pos >> 6
    room = 64 - (pos & 63)
    if width <= room:
        words[w] |= v << np.uint64(room - width)
    else:
        rest = width - room
        words[w] |= v >> np.uint64(rest)
        words[w + 1] |= v << np.uint64(64 - rest)
    return pos + width


@njit(cache=True)
def read_bits(words, pos, width):
    """Read ``width`` <= 63 bits at ``pos``; caller checks bounds."""
    if width == 0:
        return np.int64(0)
    w = pos >> 6
    off = pos & 63
    x = (words[w] << np.uint64(off)) >> np.uint64(64 - width)
    if off + width > 64:
        rest = off + width - 64
        x |= words[w + 1] >> np.uint64(64 - rest)
    return np.int64(x)


@njit(cache=True)
def get_bit(words, pos):
    return np.int64((words[pos >> 6] >> np.uint64(63 - (pos & 63))) & _U1)


@njit(cache=True)
def set_bit(words, pos):
    words[pos >> 6] |= _U1 << np.uint64(63 - (pos & 63))


@njit(cache=True)
def read_checked(words, pos, nbits, width):
    if pos + width > nbits:
        raise EndOfStreamError("read past end of bit stream")
    return read_bits(words, pos, width)


@njit(cache=True)
def write_unary(words, pos, x):
    k = x - 1
    while k > 0:
        t = 62 if k > 62 else k
        pos = write_bits(words, pos, (np.int64(1) << t) - 1, t)
        k -= t
    return pos + 1


@njit(cache=True)
def read_unary(words, pos, nbits, cap):
    """Decode ``1^(x-1) 0``; returns (x, new_pos)."""
    start = pos
    while True:
        if pos >= nbits:
            raise EndOfStreamError("unary run reaches end of stream")
        off = pos & 63
        inv = (~words[pos >> 6]) << np.uint64(off)
        if inv != _U0:
            pos += 64 - word_bit_length(inv)
            break
        pos += 64 - off
        if pos - start > cap:
            raise MalformedStreamError("unary run exceeds cap")
    if pos >= nbits:
        raise EndOfStreamError("unary terminator missing")
    if pos - start > cap:
        raise MalformedStreamError("unary run exceeds cap")
    return pos - start + 1, pos + 1


@njit(cache=True)
def _centered_shift(b):
    r = b - 1
    c = bit_length(r)
    short = (np.int64(1) << c) - b
    if r % 2 == 0:
        return r // 2 - short // 2 - 1
    return r // 2 - short // 2


@njit(cache=True)
def minbin_length(x, b, mode):
    if b <= 1:
        return 0
    c = bit_length(b - 1)
    short = (np.int64(1) << c) - b
    if mode == CENTERED:
        x = (x - _centered_shift(b) - 1) % b
    return c - 1 if x < short else c


@njit(cache=True)
def write_minbin(words, pos, x, b, mode):
    if b <= 1:
        return pos
    c = bit_length(b - 1)
    short = (np.int64(1) << c) - b
    if mode == CENTERED:
        x = (x - _centered_shift(b) - 1) % b
    if x < short:
        return write_bits(words, pos, x, c - 1)
    return write_bits(words, pos, x + short, c)


@njit(cache=True)
def read_minbin(words, pos, nbits, b, mode):
    if b <= 1:
        return np.int64(0), pos
    c = bit_length(b - 1)
    short = (np.int64(1) << c) - b
    x = read_checked(words, pos, nbits, c - 1)
    pos += c - 1
    if x >= short:
        x = (x << 1) | read_checked(words, pos, nbits, 1)
        pos += 1
        x -= short
    if mode == CENTERED:
        x = (x + _centered_shift(b) + 1) % b
    return x, pos


@njit(cache=True)
def pack_fixed(values, width):
    """Pack non-negative ints as consecutive ``width``-bit fields."""
    nbits = values.shape[0] * width
    words = np.zeros((nbits + 63) // 64 + 1, dtype=np.uint64)
    pos = 0
    for v in values:
        pos = write_bits(words, pos, v, width)
    return words


@njit(cache=True)
def unpack_fixed(words, pos, n, width, out):
    for i in range(n):
        out[i] = read_bits(words, pos, width)
        pos += width
    return pos


@njit(cache=True)
def grow(words, need_bits):
    """Return ``words`` or a zero-extended copy holding at least ``need_bits``."""
    need = (need_bits >> 6) + 2
    if need <= words.shape[0]:
        return words
    cap = words.shape[0] * 2
    if cap < need:
        cap = need
    out = np.zeros(cap, dtype=np.uint64)
    out[: words.shape[0]] = words
    return out


def mode_id(mode) -> int:
    if isinstance(mode, str):
        try:
            return _MODES[mode]
        except KeyError:
            raise ValueError(f"unknown minimal binary mode {mode!r}") from None
    if mode in (LEFTMOST, CENTERED):
        return int(mode)
    raise ValueError(f"unknown minimal binary mode {mode!r}")


class BitBuffer:
    """Growable bit string with a private read cursor.

    Writes append at the end; reads consume from ``cursor``.  A sealed buffer
    rejects writes, and :meth:`reader` hands out independent cursors over the
    same words.
    """

    def __init__(self, capacity_bits: int = 256):
        self._words = np.zeros(max(2, (capacity_bits >> 6) + 2), dtype=np.uint64)
        self._length = 0
        self.cursor = 0
        self.sealed = False
        self.unary_cap = DEFAULT_UNARY_CAP

    @classmethod
    def from_words(cls, words: np.ndarray, length: int) -> "BitBuffer":
        words = np.asarray(words, dtype=np.uint64)
        if length > words.shape[0] * 64:
            raise ValueError("length exceeds the supplied words")
        buf = cls.__new__(cls)
        need = (length >> 6) + 2
        if words.shape[0] < need:
            words = np.concatenate([words, np.zeros(need - words.shape[0], dtype=np.uint64)])
        buf._words = words
        buf._length = int(length)
        buf.cursor = 0
        buf.sealed = False
        buf.unary_cap = DEFAULT_UNARY_CAP
        return buf

    @classmethod
    def from_bitstring(cls, bits: str) -> "BitBuffer":
        bits = bits.replace(".", "").replace(" ", "")
        buf = cls(len(bits))
        for i in range(0, len(bits), 60):
            chunk = bits[i:i + 60]
            buf.write_bits(int(chunk, 2), len(chunk))
        return buf

    @classmethod
    def from_bytes(cls, data: bytes, offset: int = 0) -> "BitBuffer":
        buf, _ = cls.unpack_from(data, offset)
        return buf

    @classmethod
    def unpack_from(cls, data: bytes, offset: int = 0):
        """Parse one serialized buffer; returns ``(buffer, next_offset)``."""
        if len(data) - offset < 8:
            raise EndOfStreamError("truncated bit buffer header")
        (length,) = struct.unpack_from("<Q", data, offset)
        nwords = (length + 63) // 64
        end = offset + 8 + 8 * nwords
        if end > len(data):
            raise EndOfStreamError("truncated bit buffer payload")
        words = np.frombuffer(data, dtype="<u8", count=nwords, offset=offset + 8).astype(np.uint64)
        return cls.from_words(words, length), end

    def to_bytes(self) -> bytes:
        nwords = (self._length + 63) // 64
        return struct.pack("<Q", self._length) + self._words[:nwords].astype("<u8").tobytes()

    def __len__(self) -> int:
        return self._length

    @property
    def length(self) -> int:
        return self._length

    @property
    def words(self) -> np.ndarray:
        return self._words

    def remaining(self) -> int:
        return self._length - self.cursor

    def seek(self, pos: int) -> None:
        if not 0 <= pos <= self._length:
            raise ValueError(f"cursor {pos} outside [0, {self._length}]")
        self.cursor = pos

    def tell(self) -> int:
        return self.cursor

    def seal(self) -> "BitBuffer":
        self.sealed = True
        return self

    def reader(self) -> "BitBuffer":
        """A sealed view over the same words with its own cursor at 0."""
        view = BitBuffer.__new__(BitBuffer)
        view._words = self._words
        view._length = self._length
        view.cursor = 0
        view.sealed = True
        view.unary_cap = self.unary_cap
        self.sealed = True
        return view

    def reserve(self, nbits: int) -> None:
        if self.sealed:
            raise ValueError("buffer is sealed")
        self._words = grow(self._words, self._length + nbits)

    def _advance(self, end: int) -> None:
        self._length = int(end)

    def write_bits(self, value: int, width: int) -> None:
        if not 0 <= width <= 64:
            raise ValueError(f"width {width} outside 0..64")
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        self.reserve(width)
        if width > 62:
            hi, lo = value >> 32, value & 0xFFFFFFFF
            pos = write_bits(self._words, self._length, hi, width - 32)
            self._advance(write_bits(self._words, pos, lo, 32))
        else:
            self._advance(write_bits(self._words, self._length, value, width))

    def read_bits(self, width: int) -> int:
        if not 0 <= width <= 64:
            raise ValueError(f"width {width} outside 0..64")
        if self.cursor + width > self._length:
            raise EndOfStreamError(f"reading {width} bits at {self.cursor} of {self._length}")
        if width > 62:
            hi = int(read_bits(self._words, self.cursor, width - 32))
            lo = int(read_bits(self._words, self.cursor + width - 32, 32))
            value = (hi << 32) | lo
        else:
            value = int(read_bits(self._words, self.cursor, width))
        self.cursor += width
        return value

    def peek_bits(self, width: int) -> int:
        """Next ``width`` bits without moving the cursor, zero-padded at the end."""
        avail = min(width, self._length - self.cursor)
        if avail <= 0:
            return 0
        value = int(read_bits(self._words, self.cursor, avail)) if avail <= 62 else None
        if value is None:
            save = self.cursor
            value = self.read_bits(avail)
            self.cursor = save
        return value << (width - avail)

    def write_unary(self, x: int) -> None:
        if x < 1:
            raise ValueError(f"unary needs x >= 1, got {x}")
        self.reserve(x)
        self._advance(write_unary(self._words, self._length, x))

    def read_unary(self) -> int:
        x, pos = read_unary(self._words, self.cursor, self._length, self.unary_cap)
        self.cursor = int(pos)
        return int(x)

    def write_minimal_binary(self, x: int, b: int, mode="leftmost") -> None:
        m = mode_id(mode)
        if b < 1 or not 0 <= x < b:
            raise ValueError(f"minimal binary needs 0 <= x < b, got x={x} b={b}")
        self.reserve(64)
        self._advance(write_minbin(self._words, self._length, x, b, m))

    def read_minimal_binary(self, b: int, mode="leftmost") -> int:
        if b < 1:
            raise ValueError(f"range size must be >= 1, got {b}")
        x, pos = read_minbin(self._words, self.cursor, self._length, b, mode_id(mode))
        self.cursor = int(pos)
        return int(x)

    def extend(self, other: "BitBuffer") -> None:
        pos = 0
        self.reserve(len(other))
        while pos < len(other):
            w = min(60, len(other) - pos)
            self._advance(write_bits(self._words, self._length, read_bits(other._words, pos, w), w))
            pos += w

    def to_bitstring(self, start: int = 0, stop: int | None = None) -> str:
        stop = self._length if stop is None else stop
        out = []
        pos = start
        while pos < stop:
            w = min(60, stop - pos)
            out.append(format(int(read_bits(self._words, pos, w)), f"0{w}b"))
            pos += w
        return "".join(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitBuffer) or len(self) != len(other):
            return NotImplemented if not isinstance(other, BitBuffer) else False
        n = (self._length + 63) // 64
        return bool(np.array_equal(self._words[:n], other._words[:n]))

    def __repr__(self) -> str:
        preview = self.to_bitstring(0, min(self._length, 64))
        more = "..." if self._length > 64 else ""
        return f"BitBuffer({self._length} bits: {preview}{more})"


def minimal_binary_length(x: int, b: int, mode="leftmost") -> int:
    if b < 1 or not 0 <= x < b:
        raise ValueError(f"minimal binary needs 0 <= x < b, got x={x} b={b}")
    return int(minbin_length(x, b, mode_id(mode)))
