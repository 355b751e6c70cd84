"""Canonical prefix-free codes driven by two compact tables.

Given non-decreasing codeword lengths for symbols ``1..u`` the codewords are
assigned in lexicographic order, so the whole code is captured by
``first[l]`` (first symbol of length ``l``) and ``values[l]`` (its codeword
left-justified to ``M`` bits).  Lengths that no symbol uses borrow the entry
of the next used length, and row ``M + 1`` holds the sentinels.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bitstream import BitBuffer
from .errors import MalformedStreamError

DIRECT_TABLE_MAX_M = 16
STRATEGIES = ("linear", "binary", "direct")


def _check_lengths(lengths) -> list[int]:
    lengths = [int(v) for v in lengths]
    if not lengths:
        raise ValueError("need at least one codeword length")
    if any(v < 1 for v in lengths):
        raise ValueError("codeword lengths must be >= 1")
    if any(a > b for a, b in zip(lengths, lengths[1:])):
        raise ValueError("codeword lengths must be non-decreasing")
    return lengths


def kraft_sum(lengths) -> Fraction:
    return sum((Fraction(1, 1 << v) for v in lengths), Fraction(0))


def assign_lexicographic(lengths) -> list[str]:
    """Lexicographically increasing prefix-free codewords with the given lengths."""
    lengths = _check_lengths(lengths)
    M = lengths[-1]
    # integer Kraft check: sum 2^(M - l) <= 2^M
    if sum(1 << (M - v) for v in lengths) > 1 << M:
        raise ValueError("lengths violate the Kraft inequality")
    out = []
    code = 0
    prev = lengths[0]
    for i, v in enumerate(lengths):
        if i:
            code = (code + 1) << (v - prev)
        out.append(format(code, f"0{v}b"))
        prev = v
    return out


@dataclass(frozen=True)
class CanonicalCode:
    M: int
    lengths: tuple
    first: tuple  # index 0 unused, 1..M, M+1 sentinel
    values: tuple
    strategy: str = "binary"
    _table: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def u(self) -> int:
        return len(self.lengths)

    def first_row(self) -> list[int]:
        """``first[1..M]`` as printed in the compact table (no sentinel)."""
        return list(self.first[1:self.M + 1])

    def values_row(self) -> list[int]:
        return list(self.values[1:self.M + 1])

    def codeword(self, x: int) -> str:
        buf = BitBuffer()
        encode(self, x, buf)
        return buf.to_bitstring()

    def with_strategy(self, strategy: str) -> "CanonicalCode":
        return build(self.lengths, strategy=strategy)


def build(lengths, strategy: str = "binary") -> CanonicalCode:
    lengths = _check_lengths(lengths)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown search strategy {strategy!r}")
    codes = assign_lexicographic(lengths)
    M = lengths[-1]
    u = len(lengths)
    first = [0] * (M + 2)
    values = [0] * (M + 2)
    used = [False] * (M + 2)
    for sym in range(u, 0, -1):
        v = lengths[sym - 1]
        first[v] = sym
        values[v] = int(codes[sym - 1], 2) << (M - v)
        used[v] = True
    first[M + 1] = u + 1
    values[M + 1] = (1 << M) - 1
    for v in range(M, 0, -1):
        if not used[v]:
            first[v] = first[v + 1]
            values[v] = values[v + 1]
    if strategy == "direct" and M > DIRECT_TABLE_MAX_M:
        strategy = "binary"
    code = CanonicalCode(M, tuple(lengths), tuple(first), tuple(values), strategy)
    if strategy == "direct":
        object.__setattr__(code, "_table", _direct_table(code))
    return code


def search_strategy(code: CanonicalCode) -> str:
    return code.strategy


def _direct_table(code: CanonicalCode) -> np.ndarray:
    M = code.M
    table = np.zeros(1 << M, dtype=np.int32)
    for buffer in range(1 << M):
        table[buffer] = _level_binary(code, buffer)
    return table


def _level_linear(code: CanonicalCode, buffer: int) -> int:
    M = code.M
    level = 0
    for v in range(1, M + 1):
        if code.values[v] <= buffer and code.first[v] < code.first[v + 1]:
            level = v
        elif code.values[v] > buffer:
            break
    return level


def _level_binary(code: CanonicalCode, buffer: int) -> int:
    # rows 1..M are non-decreasing; take the last used row with values <= buffer
    v = bisect.bisect_right(code.values, buffer, 1, code.M + 1) - 1
    while v >= 1 and code.first[v] == code.first[v + 1]:
        v -= 1
    return v


def encode(code: CanonicalCode, x: int, sink: BitBuffer) -> None:
    if not 1 <= x <= code.u:
        raise ValueError(f"symbol {x} outside 1..{code.u}")
    M = code.M
    v = bisect.bisect_right(code.first, x, 1, M + 1) - 1
    word = code.values[v] + ((x - code.first[v]) << (M - v))
    sink.write_bits(word >> (M - v), v)


def decode(code: CanonicalCode, source: BitBuffer) -> int:
    M = code.M
    buffer = source.peek_bits(M)
    if code.strategy == "direct":
        v = int(code._table[buffer])
    elif code.strategy == "linear":
        v = _level_linear(code, buffer)
    else:
        v = _level_binary(code, buffer)
    if v < 1:
        raise MalformedStreamError(f"buffer {buffer:0{M}b} below the first codeword")
    sym = code.first[v] + ((buffer - code.values[v]) >> (M - v))
    if sym >= code.first[v + 1]:
        raise MalformedStreamError(f"buffer {buffer:0{M}b} matches no codeword")
    if source.remaining() < v:
        raise MalformedStreamError("stream ends inside a codeword")
    source.cursor += v
    return sym


def decode_many(code: CanonicalCode, source: BitBuffer, count: int) -> list[int]:
    return [decode(code, source) for _ in range(count)]
