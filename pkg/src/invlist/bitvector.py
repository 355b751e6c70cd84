"""Bitvector with sampled rank/select support.

Rank uses absolute one-counts every 512 bits (8 words).  Select uses the
position of every 1024th set (resp. unset) bit as a starting hint, then a
binary search over the rank samples and a word scan.  The kernels work on
0-based positions and ranks; :class:`BitVectorRS` exposes the 1-based
convention used in the docs (``select1(i)`` is the position of the i-th one,
counting positions from 1).
"""

from __future__ import annotations

import struct

import numpy as np
from numba import njit

from .bitstream import BitBuffer, popcount, word_bit_length
from .errors import EndOfStreamError

RANK_BLOCK = 512
SELECT_SAMPLE = 1024


@njit(cache=True)
def build_rank(words, nbits):
    nwords = (nbits + 63) >> 6
    nblocks = (nwords + 7) >> 3
    rank = np.zeros(nblocks + 1, dtype=np.int64)
    acc = 0
    for w in range(nwords):
        if (w & 7) == 0:
            rank[w >> 3] = acc
        acc += popcount(words[w])
    rank[nblocks] = acc
    return rank


@njit(cache=True)
def _ones_in(words, w, nbits):
    """Popcount of word ``w`` restricted to the first ``nbits`` stream bits."""
    x = words[w]
    end = nbits - (w << 6)
    if end < 64:
        if end <= 0:
            return 0
        x &= ~np.uint64(0) << np.uint64(64 - end)
    return popcount(x)


@njit(cache=True)
def build_select(words, nbits, want_ones):
    nwords = (nbits + 63) >> 6
    total = 0
    for w in range(nwords):
        c = _ones_in(words, w, nbits)
        total += c if want_ones else min(64, nbits - (w << 6)) - c
    samples = np.zeros(total // SELECT_SAMPLE + 1, dtype=np.int64)
    seen = 0
    k = 0
    for w in range(nwords):
        width = min(64, nbits - (w << 6))
        c = _ones_in(words, w, nbits)
        c = c if want_ones else width - c
        while seen + c > k * SELECT_SAMPLE and k < samples.shape[0]:
            # locate the (k*1024 - seen)-th matching bit inside this word
            target = k * SELECT_SAMPLE - seen
            x = words[w] if want_ones else ~words[w]
            if width < 64:
                x &= ~np.uint64(0) << np.uint64(64 - width)
            for _ in range(target):
                x &= ~(np.uint64(1) << np.uint64(word_bit_length(x) - 1))
            samples[k] = (w << 6) + 64 - word_bit_length(x)
            k += 1
        seen += c
    return samples, total


@njit(cache=True)
def rank1(words, nbits, rank, p):
    """Ones in positions ``[0, p)``."""
    if p <= 0:
        return 0
    if p >= nbits:
        p = nbits
    w = p >> 6
    r = rank[w >> 3]
    for j in range((w >> 3) << 3, w):
        r += popcount(words[j])
    off = p & 63
    if off:
        r += popcount(words[w] >> np.uint64(64 - off))
    return r


@njit(cache=True)
def _select_in_word(x, k):
    """Position (from the MSB) of the k-th (0-based) set bit of ``x``."""
    for _ in range(k):
        x &= ~(np.uint64(1) << np.uint64(word_bit_length(x) - 1))
    return 64 - word_bit_length(x)


@njit(cache=True)
def select(words, nbits, rank, samples, k, ones):
    """Position of the k-th (0-based) one (or zero); caller checks range."""
    s = samples[k // SELECT_SAMPLE]
    lo = s >> 9
    # upper bound from the next sample, if any
    nb = rank.shape[0] - 1
    hi = nb - 1
    if k // SELECT_SAMPLE + 1 < samples.shape[0]:
        hi = samples[k // SELECT_SAMPLE + 1] >> 9
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        before = rank[mid] if ones else (mid << 9) - rank[mid]
        if before <= k:
            lo = mid
        else:
            hi = mid - 1
    done = rank[lo] if ones else (lo << 9) - rank[lo]
    w = lo << 3
    while True:
        x = words[w] if ones else ~words[w]
        c = popcount(x)
        if done + c > k:
            return (w << 6) + _select_in_word(x, k - done)
        done += c
        w += 1


class BitVectorRS:
    """Immutable bitvector with rank/select acceleration."""

    def __init__(self, words: np.ndarray, nbits: int):
        nwords = (nbits + 63) >> 6
        w = np.zeros(nwords + 1, dtype=np.uint64)
        w[:nwords] = np.asarray(words, dtype=np.uint64)[:nwords]
        if nbits & 63 and nwords:
            w[nwords - 1] &= np.uint64(((1 << 64) - 1) ^ ((1 << (64 - (nbits & 63))) - 1))
        self.words = w
        self.nbits = int(nbits)
        self.rank_samples = build_rank(w, self.nbits)
        self.sel1, self.ones = build_select(w, self.nbits, True)
        self.sel0, self.zeros = build_select(w, self.nbits, False)
        self.ones = int(self.ones)
        self.zeros = int(self.zeros)

    @classmethod
    def from_buffer(cls, buf: BitBuffer) -> "BitVectorRS":
        return cls(buf.words, len(buf))

    @classmethod
    def from_bitstring(cls, bits: str) -> "BitVectorRS":
        return cls.from_buffer(BitBuffer.from_bitstring(bits))

    @classmethod
    def from_bools(cls, flags) -> "BitVectorRS":
        flags = np.asarray(flags, dtype=bool)
        n = flags.size
        padded = np.zeros(((n + 63) >> 6) * 64, dtype=np.uint8)
        padded[:n] = flags
        packed = np.packbits(padded)  # big-endian bit order within bytes
        words = packed.view(">u8").astype(np.uint64) if packed.size else np.zeros(0, dtype=np.uint64)
        return cls(words, n)

    def __len__(self) -> int:
        return self.nbits

    def __getitem__(self, i: int) -> int:
        """0-based bit access."""
        if not 0 <= i < self.nbits:
            raise IndexError(i)
        return int((int(self.words[i >> 6]) >> (63 - (i & 63))) & 1)

    def to_bitstring(self) -> str:
        return BitBuffer.from_words(self.words, self.nbits).to_bitstring()

    def to_bools(self) -> np.ndarray:
        raw = self.words.astype(">u8").view(np.uint8)
        return np.unpackbits(raw)[: self.nbits].astype(bool)

    def rank1(self, i: int) -> int:
        """Ones among the first ``i`` bits (1-based prefix ``B[1..i]``)."""
        if not 0 <= i <= self.nbits:
            raise IndexError(f"rank position {i} outside 0..{self.nbits}")
        return int(rank1(self.words, self.nbits, self.rank_samples, i))

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def select1(self, i: int) -> int:
        """1-based position of the i-th one."""
        if not 1 <= i <= self.ones:
            raise IndexError(f"select1({i}) with {self.ones} ones")
        return int(select(self.words, self.nbits, self.rank_samples, self.sel1, i - 1, True)) + 1

    def select0(self, i: int) -> int:
        if not 1 <= i <= self.zeros:
            raise IndexError(f"select0({i}) with {self.zeros} zeros")
        return int(select(self.words, self.nbits, self.rank_samples, self.sel0, i - 1, False)) + 1

    def overhead_bits(self) -> int:
        return 64 * (self.rank_samples.size + self.sel1.size + self.sel0.size)

    def to_bytes(self) -> bytes:
        body = BitBuffer.from_words(self.words, self.nbits).to_bytes()
        samples = self.rank_samples.astype("<i8").tobytes()
        return body + struct.pack("<Q", self.rank_samples.size) + samples

    @classmethod
    def unpack_from(cls, data: bytes, offset: int = 0):
        """Parse bits plus rank samples; select samples are rebuilt."""
        buf, offset = BitBuffer.unpack_from(data, offset)
        if len(data) - offset < 8:
            raise EndOfStreamError("truncated rank sample count")
        (count,) = struct.unpack_from("<Q", data, offset)
        offset += 8 + 8 * count
        if offset > len(data):
            raise EndOfStreamError("truncated rank samples")
        bv = cls.from_buffer(buf)
        return bv, offset
