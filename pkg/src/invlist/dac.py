"""Directly addressable codes.

Each value is cut into ``b``-bit chunks, least significant first.  Level k
stores the k-th chunk of every value that has one (``C_k``) together with a
bitmap ``B_k`` flagging the values that continue to level k + 1.  Random
access walks the levels with one rank per extra chunk.
"""

from __future__ import annotations

import struct

import numpy as np

from .bitstream import BitBuffer, pack_fixed, read_bits, unpack_fixed
from .bitvector import BitVectorRS
from .errors import EndOfStreamError, MalformedStreamError


def chunk_count(x: int, b: int) -> int:
    return max(1, -(-int(x).bit_length() // b))


class DacVector:
    def __init__(self, values, b: int):
        if b < 1 or b > 62:
            raise ValueError(f"chunk width must be 1..62, got {b}")
        vals = np.ascontiguousarray(values, dtype=np.int64)
        if vals.size and vals.min() < 0:
            raise ValueError("values must be non-negative")
        self.n = int(vals.size)
        self.b = int(b)
        self.C = []  # (words, count)
        self.B = []
        mask = (1 << b) - 1
        cur = vals
        while True:
            chunks = cur & mask
            rest = cur >> b
            more = rest > 0
            self.C.append((pack_fixed(chunks, b), int(chunks.size)))
            self.B.append(BitVectorRS.from_bools(more))
            if not more.any():
                break
            cur = rest[more]

    @property
    def levels(self) -> int:
        return len(self.C)

    def __len__(self) -> int:
        return self.n

    def chunk(self, level: int, i: int) -> int:
        """C_level[i] with 1-based level and index."""
        words, count = self.C[level - 1]
        if not 1 <= i <= count:
            raise IndexError(f"chunk index {i} outside 1..{count}")
        return int(read_bits(words, (i - 1) * self.b, self.b))

    def chunks_bitstring(self, level: int) -> str:
        words, count = self.C[level - 1]
        return BitBuffer.from_words(words, count * self.b).to_bitstring()

    def control_bitstring(self, level: int) -> str:
        return self.B[level - 1].to_bitstring()

    def access(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"access({i}) outside 1..{self.n}")
        value = 0
        shift = 0
        for level in range(1, self.levels + 1):
            value |= self.chunk(level, i) << shift
            bv = self.B[level - 1]
            if not bv[i - 1]:
                return value
            i = bv.rank1(i)
            shift += self.b
        raise MalformedStreamError("control bits point past the last level")

    def __getitem__(self, i: int) -> int:
        return self.access(i + 1)

    def decode(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        idx = np.arange(self.n)
        shift = 0
        for level in range(self.levels):
            words, count = self.C[level]
            vals = np.empty(count, dtype=np.int64)
            unpack_fixed(words, 0, count, self.b, vals)
            out[idx] |= vals << shift
            idx = idx[self.B[level].to_bools()]
            shift += self.b
        return out

    def size_bits(self) -> int:
        return sum(c * self.b for _, c in self.C) + sum(len(bv) for bv in self.B)

    def to_bytes(self) -> bytes:
        parts = [struct.pack("<IBB", self.n, self.b, self.levels)]
        for (words, count), bv in zip(self.C, self.B):
            parts.append(BitBuffer.from_words(words, count * self.b).to_bytes())
            parts.append(bv.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes) -> "DacVector":
        if len(data) < 6:
            raise EndOfStreamError("truncated DAC header")
        n, b, levels = struct.unpack_from("<IBB", data, 0)
        off = 6
        self = cls.__new__(cls)
        self.n, self.b = n, b
        self.C, self.B = [], []
        expect = n
        for _ in range(levels):
            c, off = BitBuffer.unpack_from(data, off)
            bv, off = BitVectorRS.unpack_from(data, off)
            if len(c) != expect * b or len(bv) != expect:
                raise MalformedStreamError("DAC level sizes are inconsistent")
            self.C.append((c.words, expect))
            self.B.append(bv)
            expect = bv.ones
        if expect:
            raise MalformedStreamError("last DAC level still has continuation bits")
        return self


def rank1(bitmap: BitVectorRS, i: int) -> int:
    return bitmap.rank1(i)


def rank0(bitmap: BitVectorRS, i: int) -> int:
    return bitmap.rank0(i)


def dac_build(values, b: int) -> DacVector:
    return DacVector(values, b)


def dac_access(v: DacVector, i: int) -> int:
    return v.access(i)
