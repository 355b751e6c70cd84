"""Elias-Fano and partitioned Elias-Fano sequences.

Every element ``x`` of a chunk with universe ``M`` is split into ``ell`` low
bits, stored verbatim in ``L``, and a high part ``x >> ell`` stored in the
unary-bucketed bitvector ``H`` (bit ``high + i`` set for the i-th element).
``ell`` is the smallest value with ``b * 2**ell >= M`` and ``H`` has
``b + ((M - 1) >> ell) + 1`` bits, one terminating zero per bucket.

Plain EF is a single chunk.  Partitioned EF concatenates the second-level
chunks into one word array; a single rank/select index over that array
serves every chunk, since the k-th one after position ``p`` is globally the
``rank1(p) + k``-th one.
"""

from __future__ import annotations

import math
import struct

import numpy as np
from numba import njit

from .bitstream import BitBuffer, bit_length, read_bits, set_bit, write_bits
from .bitvector import BitVectorRS, rank1, select
from .errors import EndOfStreamError, MalformedStreamError

TAG_EF, TAG_BITMAP, TAG_FULL = 0, 1, 2
TAG_NAMES = {TAG_EF: "ef", TAG_BITMAP: "bitmap", TAG_FULL: "full"}


# --- single-chunk kernels -------------------------------------------------------

@njit(cache=True)
def ef_ell(b, M):
    # smallest ell with b * 2^ell >= M
    if M <= b:
        return 0
    ell = bit_length(M - 1) - bit_length(b)
    if ell < 0:
        ell = 0
    if (b << ell) < M:
        ell += 1
    return ell


@njit(cache=True)
def ef_bits(b, M):
    ell = ef_ell(b, M)
    return b * ell + b + ((M - 1) >> ell) + 1


@njit(cache=True)
def chunk_cost(b, M):
    """(tag, bits) of the cheapest chunk encoding."""
    if b == M:
        return TAG_FULL, 0
    e = ef_bits(b, M)
    if e > M:
        return TAG_BITMAP, M
    return TAG_EF, e


@njit(cache=True)
def ef_write(words, pos, S, start, end, base, M):
    """Write ``S[start:end] - base`` (values in ``[0, M)``) as L then H."""
    b = end - start
    ell = ef_ell(b, M)
    for i in range(start, end):
        pos = write_bits(words, pos, (S[i] - base) & ((np.int64(1) << ell) - 1), ell)
    hs = pos
    for i in range(start, end):
        set_bit(words, hs + ((S[i] - base) >> ell) + (i - start))
    return hs + b + ((M - 1) >> ell) + 1


@njit(cache=True)
def bitmap_write(words, pos, S, start, end, base, M):
    for i in range(start, end):
        set_bit(words, pos + S[i] - base)
    return pos + M


@njit(cache=True)
def chunk_access(words, nbits, rank, sel1, off, tag, b, M, i):
    """Local value of the i-th (0-based) element of a chunk."""
    if tag == TAG_FULL:
        return i
    if tag == TAG_BITMAP:
        return select(words, nbits, rank, sel1, rank1(words, nbits, rank, off) + i, True) - off
    ell = ef_ell(b, M)
    low = read_bits(words, off + i * ell, ell)
    hs = off + b * ell
    p = select(words, nbits, rank, sel1, rank1(words, nbits, rank, hs) + i, True) - hs
    return ((p - i) << ell) | low


@njit(cache=True)
def ef_bucket(words, nbits, rank, sel0, hs, h):
    """Element index range ``[lo, hi)`` holding high part ``h``."""
    z0 = hs - rank1(words, nbits, rank, hs)  # zeros before H
    lo = 0
    if h > 0:
        lo = select(words, nbits, rank, sel0, z0 + h - 1, False) - hs - h + 1
    hi = select(words, nbits, rank, sel0, z0 + h, False) - hs - h
    return lo, hi


@njit(cache=True)
def chunk_nextgeq(words, nbits, rank, sel1, sel0, off, tag, b, M, x):
    """Index of the first element >= local ``x`` (``b`` if none); requires 0 <= x."""
    if x >= M:
        return b
    if tag == TAG_FULL:
        return x
    if tag == TAG_BITMAP:
        return rank1(words, nbits, rank, off + x) - rank1(words, nbits, rank, off)
    ell = ef_ell(b, M)
    hs = off + b * ell
    h = x >> ell
    lo, hi = ef_bucket(words, nbits, rank, sel0, hs, h)
    want = x & ((np.int64(1) << ell) - 1)
    while lo < hi:
        mid = (lo + hi) >> 1
        if read_bits(words, off + mid * ell, ell) < want:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True)
def chunk_decode(words, off, tag, b, M, out, o, base):
    """Append the chunk's values plus ``base`` into ``out[o:o+b]``."""
    if tag == TAG_FULL:
        for i in range(b):
            out[o + i] = base + i
        return
    if tag == TAG_BITMAP:
        k = 0
        for p in range(off, off + M):
            if (words[p >> 6] >> np.uint64(63 - (p & 63))) & np.uint64(1):
                out[o + k] = base + p - off
                k += 1
        return
    ell = ef_ell(b, M)
    hs = off + b * ell
    high = 0
    p = hs
    for i in range(b):
        while (words[p >> 6] >> np.uint64(63 - (p & 63))) & np.uint64(1) == 0:
            high += 1
            p += 1
        p += 1
        out[o + i] = base + ((high << ell) | read_bits(words, off + i * ell, ell))


# --- plain Elias-Fano -------------------------------------------------------

def _check_sorted(S, U) -> np.ndarray:
    S = np.ascontiguousarray(S, dtype=np.int64)
    if S.size == 0:
        raise ValueError("sequence must be non-empty")
    if S[0] < 0:
        raise ValueError("values must be non-negative")
    if S.size > 1 and np.any(S[1:] <= S[:-1]):
        raise ValueError("sequence must be strictly increasing")
    if S[-1] >= U:
        raise ValueError(f"last value {S[-1]} must be below the universe {U}")
    return S


class EliasFano:
    """Plain EF over ``[0, U)``: L at bit 0, H right after it."""

    def __init__(self, S, U: int):
        S = _check_sorted(S, U)
        self.n = int(S.size)
        self.U = int(U)
        self.ell = int(ef_ell(self.n, self.U))
        self.nbits = int(ef_bits(self.n, self.U))
        words = np.zeros((self.nbits >> 6) + 2, dtype=np.uint64)
        ef_write(words, 0, S, 0, self.n, 0, self.U)
        self._index(words)

    def _index(self, words):
        bv = BitVectorRS(words, self.nbits)
        self.words, self.rank, self.sel1, self.sel0 = bv.words, bv.rank_samples, bv.sel1, bv.sel0

    @property
    def h_start(self) -> int:
        return self.n * self.ell

    def __len__(self) -> int:
        return self.n

    @property
    def exhausted(self) -> int:
        """What ``nextgeq`` returns past the last element."""
        return self.U

    def low_bits(self) -> str:
        return BitBuffer.from_words(self.words, self.nbits).to_bitstring(0, self.h_start)

    def high_bits(self) -> str:
        return BitBuffer.from_words(self.words, self.nbits).to_bitstring(self.h_start, self.nbits)

    def high_vector(self) -> BitVectorRS:
        return BitVectorRS.from_bitstring(self.high_bits())

    def payload_bits(self) -> int:
        """Bits of H plus L, the quantity bounded by n*ceil(log2(U/n)) + 2n."""
        return self.nbits

    def overhead_bits(self) -> int:
        return 64 * (self.rank.size + self.sel1.size + self.sel0.size)

    def access(self, i: int) -> int:
        """S[i] with 1-based ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"access({i}) outside 1..{self.n}")
        return int(chunk_access(self.words, self.nbits, self.rank, self.sel1, 0, TAG_EF,
                                self.n, self.U, i - 1))

    def __getitem__(self, i: int) -> int:
        return self.access(i + 1)

    def bucket_bounds(self, x: int) -> tuple[int, int]:
        """The 1-based ``(i, j)`` search range for ``nextgeq(x)`` as in the worked example.

        ``i`` is one past the number of elements whose high part is below
        ``h_x`` (0 when ``h_x`` is 0) and ``j`` the 1-based position of the
        first element whose high part exceeds ``h_x``.
        """
        h = x >> self.ell
        hv = self.high_vector()
        i = 0 if h == 0 else hv.select0(h) - h + 1
        j = hv.select0(h + 1) - h
        return i, j

    def nextgeq_index(self, x: int) -> int:
        """0-based index of the first element >= x (``n`` when exhausted)."""
        if x <= 0:
            return 0
        return int(chunk_nextgeq(self.words, self.nbits, self.rank, self.sel1, self.sel0, 0, TAG_EF,
                                 self.n, self.U, x))

    def nextgeq(self, x: int) -> int:
        k = self.nextgeq_index(x)
        return self.U if k >= self.n else self.access(k + 1)

    def decode(self) -> np.ndarray:
        out = np.empty(self.n, dtype=np.int64)
        chunk_decode(self.words, 0, TAG_EF, self.n, self.U, out, 0, 0)
        return out

    def filter(self, cands) -> np.ndarray:
        return ef_filter(self.words, self.nbits, self.rank, self.sel1, self.sel0, self.n, self.U,
                         np.ascontiguousarray(cands, dtype=np.int64))

    def to_bytes(self) -> bytes:
        buf = BitBuffer.from_words(self.words, self.nbits)
        low = BitBuffer.from_words(_slice_words(buf, 0, self.h_start), self.h_start)
        high = BitBuffer.from_words(_slice_words(buf, self.h_start, self.nbits), self.nbits - self.h_start)
        parts = [struct.pack("<QQ", self.n, self.U), low.to_bytes(), high.to_bytes()]
        for arr in (self.rank, self.sel1, self.sel0):
            parts.append(struct.pack("<Q", arr.size) + arr.astype("<i8").tobytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes) -> "EliasFano":
        if len(data) < 16:
            raise EndOfStreamError("truncated Elias-Fano header")
        n, U = struct.unpack_from("<QQ", data, 0)
        low, off = BitBuffer.unpack_from(data, 16)
        high, off = BitBuffer.unpack_from(data, off)
        self = cls.__new__(cls)
        self.n, self.U = int(n), int(U)
        self.ell = int(ef_ell(self.n, self.U))
        self.nbits = int(ef_bits(self.n, self.U))
        if len(low) != self.n * self.ell or len(low) + len(high) != self.nbits:
            raise MalformedStreamError("Elias-Fano part lengths disagree with n and U")
        joined = BitBuffer(self.nbits)
        joined.extend(low)
        joined.extend(high)
        self._index(joined.words)
        for _ in range(3):  # sampling tables are rebuilt; skip the stored copies
            if len(data) - off < 8:
                raise EndOfStreamError("truncated Elias-Fano sampling tables")
            (count,) = struct.unpack_from("<Q", data, off)
            off += 8 + 8 * count
        if off > len(data):
            raise EndOfStreamError("truncated Elias-Fano sampling tables")
        return self


def _slice_words(buf: BitBuffer, start: int, stop: int) -> np.ndarray:
    out = BitBuffer(stop - start)
    pos = start
    while pos < stop:
        w = min(60, stop - pos)
        out.write_bits(int(read_bits(buf.words, pos, w)), w)
        pos += w
    return out.words


@njit(cache=True)
def ef_filter(words, nbits, rank, sel1, sel0, n, U, cands):
    out = np.empty(cands.shape[0], dtype=np.int64)
    k = 0
    for x in cands:
        if x >= U:
            break
        j = chunk_nextgeq(words, nbits, rank, sel1, sel0, 0, TAG_EF, n, U, x)
        if j >= n:
            break
        if chunk_access(words, nbits, rank, sel1, 0, TAG_EF, n, U, j) == x:
            out[k] = x
            k += 1
    return out[:k]


def ef_build(S, U: int) -> EliasFano:
    return EliasFano(S, U)


def ef_access(seq: EliasFano, i: int) -> int:
    return seq.access(i)


def ef_nextgeq(seq: EliasFano, x: int) -> int:
    return seq.nextgeq(x)


def formula1_bound(n: int, U: int) -> int:
    """n * ceil(log2(U / n)) + 2n, with the log term floored at zero."""
    ell = 0
    while (n << ell) < U:
        ell += 1
    return n * ell + 2 * n


# --- partitioning -----------------------------------------------------------

def fixed_chunk_cost(n: int, U: int) -> int:
    """Per-chunk first-level overhead used by the partitioner.

    Two bits of tag plus one element in each of the two first-level EF
    sequences, whose per-element cost is ``ceil(log2(universe / k)) + 2`` for
    ``k`` chunks.  ``k`` is not known before partitioning, so it is
    estimated as ``ceil(n / 128)``.
    """
    k = max(1, -(-n // 128))
    return 2 + (2 + max(0, math.ceil(math.log2(max(U, 1) / k)))) + (2 + max(0, math.ceil(math.log2(max(n + 1, 1) / k))))


@njit(cache=True)
def _window_cost(S, i, e, F):
    base = S[i - 1] if i > 0 else -1
    _, c = chunk_cost(e - i, S[e - 1] - base)
    return F + c


@njit(cache=True)
def optimal_partition(S, F):
    """Exact O(n^2) shortest path; returns (ends, cost)."""
    n = S.shape[0]
    best = np.full(n + 1, np.int64(1) << 62)
    prev = np.zeros(n + 1, dtype=np.int64)
    best[0] = 0
    for e in range(1, n + 1):
        for i in range(e):
            c = best[i] + _window_cost(S, i, e, F)
            if c < best[e]:
                best[e] = c
                prev[e] = i
    return _path(prev, n), best[n]


@njit(cache=True)
def _path(prev, n):
    k = 0
    e = n
    while e > 0:
        e = prev[e]
        k += 1
    ends = np.empty(k, dtype=np.int64)
    e = n
    while e > 0:
        k -= 1
        ends[k] = e
        e = prev[e]
    return ends


@njit(cache=True)
def _bits_only(b, M):
    """Bits of ``chunk_cost(b, M)`` written with selects instead of branches."""
    d = max(bit_length(M - 1) - bit_length(b), 0)
    ell = d + ((b << d) < M)
    return min(b * ell + b + ((M - 1) >> ell) + 1, M) * (b != M)


@njit(cache=True)
def approx_partition(S, F, eps1, eps2):
    """Pruned shortest path over windows with cost bounds F, F(1+eps2), ... up to F/eps1.

    For every start ``i`` each window keeps the first end whose chunk costs
    at least the window's bound.  All window ends are relaxed, and every end
    passed while a window grows is relaxed too.
    """
    n = S.shape[0]
    best = np.empty(n + 1, dtype=np.int64)
    prev = np.zeros(n + 1, dtype=np.int64)
    best[0] = 0
    for e in range(1, n + 1):
        best[e] = F + _bits_only(e, S[e - 1] + 1)
    single = best[n]
    nw = 1
    bound = float(F)
    while bound < single and bound < F / eps1:
        bound *= 1.0 + eps2
        nw += 1
    # bounds on the second-level bits, i.e. without the fixed cost F
    bounds = np.empty(nw, dtype=np.int64)
    bound = float(F)
    for w in range(nw):
        bounds[w] = np.int64(math.ceil(bound)) - F
        bound *= 1.0 + eps2
    ends = np.ones(nw, dtype=np.int64)
    top = np.full(nw, S[0])  # S[ends[w] - 1], kept so the next loop needs no gather
    cost = np.empty(nw, dtype=np.int64)
    for i in range(n):
        base = S[i - 1] if i > 0 else -1
        bi = best[i] + F
        si = S[i]
        lo = i + 1
        # straight-line pass over contiguous arrays (vectorizes)
        for w in range(nw):
            behind = ends[w] < lo
            e = lo if behind else ends[w]
            t = si if behind else top[w]
            ends[w] = e
            top[w] = t
            cost[w] = _bits_only(e - i, t - base)
        for w in range(nw):
            e = ends[w]
            v = bi + cost[w]
            if v < best[e]:
                best[e] = v
                prev[e] = i
        # grow the windows that fell below their bound
        for w in range(nw):
            if cost[w] >= bounds[w]:
                continue
            e = ends[w]
            if w > 0 and e < ends[w - 1]:
                e = ends[w - 1]
            while e < n:
                e += 1
                c = _bits_only(e - i, S[e - 1] - base)
                v = bi + c
                if v < best[e]:
                    best[e] = v
                    prev[e] = i
                if c >= bounds[w]:
                    break
            ends[w] = e
            top[w] = S[e - 1]
    return _path(prev, n), best[n]


@njit(cache=True)
def partition_cost(S, ends, F):
    total = 0
    i = 0
    for e in ends:
        total += _window_cost(S, i, e, F)
        i = e
    return total


@njit(cache=True)
def pef_encode(S, ends):
    k = ends.shape[0]
    tags = np.empty(k, dtype=np.int64)
    offs = np.empty(k + 1, dtype=np.int64)
    ubs = np.empty(k, dtype=np.int64)
    pos = 0
    i = 0
    total = 0
    for j in range(k):
        e = ends[j]
        base = S[i - 1] if i > 0 else -1
        t, c = chunk_cost(e - i, S[e - 1] - base)
        total += c
        i = e
    words = np.zeros((total >> 6) + 2, dtype=np.uint64)
    i = 0
    for j in range(k):
        e = ends[j]
        base = S[i - 1] if i > 0 else -1
        M = S[e - 1] - base
        t, c = chunk_cost(e - i, M)
        tags[j] = t
        offs[j] = pos
        ubs[j] = S[e - 1]
        if t == TAG_EF:
            pos = ef_write(words, pos, S, i, e, base + 1, M)
        elif t == TAG_BITMAP:
            pos = bitmap_write(words, pos, S, i, e, base + 1, M)
        i = e
    offs[k] = pos
    return words, pos, tags, offs, ubs


@njit(cache=True)
def _ef_seq_nextgeq(words, nbits, rank, sel1, sel0, n, U, x):
    if x >= U:
        return n
    if x <= 0:
        return 0
    return chunk_nextgeq(words, nbits, rank, sel1, sel0, 0, TAG_EF, n, U, x)


@njit(cache=True)
def _pef_nextgeq(w, nb, rk, s1, s0, tags, offs, ubs, starts,
                uw, unb, urk, us1, us0, k, U, x):
    """(global index, value) of the first element >= x; index n when exhausted."""
    n = starts[k]
    j = _ef_seq_nextgeq(uw, unb, urk, us1, us0, k, U, x)
    if j >= k:
        return n, U
    base = ubs[j - 1] + 1 if j > 0 else 0
    b = starts[j + 1] - starts[j]
    M = ubs[j] - base + 1
    lx = x - base
    if lx < 0:
        lx = 0
    t = chunk_nextgeq(w, nb, rk, s1, s0, offs[j], tags[j], b, M, lx)
    return starts[j] + t, base + chunk_access(w, nb, rk, s1, offs[j], tags[j], b, M, t)


@njit(cache=True)
def pef_filter(w, nb, rk, s1, s0, tags, offs, ubs, starts, uw, unb, urk, us1, us0, k, U, cands):
    out = np.empty(cands.shape[0], dtype=np.int64)
    m = 0
    for x in cands:
        idx, v = _pef_nextgeq(w, nb, rk, s1, s0, tags, offs, ubs, starts, uw, unb, urk, us1, us0, k, U, x)
        if v >= U:
            break
        if v == x:
            out[m] = x
            m += 1
    return out[:m]


@njit(cache=True)
def pef_decode(w, tags, offs, ubs, starts, k):
    out = np.empty(starts[k], dtype=np.int64)
    for j in range(k):
        base = ubs[j - 1] + 1 if j > 0 else 0
        b = starts[j + 1] - starts[j]
        chunk_decode(w, offs[j], tags[j], b, ubs[j] - base + 1, out, starts[j], base)
    return out


class PartitionedEF:
    """Two-level EF: chunk upper bounds and end positions on top, chunks below."""

    def __init__(self, S, U: int, epsilon: float = 0.03, eps1: float | None = None,
                 eps2: float | None = None, exact: bool = False):
        S = _check_sorted(S, U)
        if not 0 < epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        # the pruned graph loses at most a (1 + eps1)(1 + eps2) factor
        split = math.sqrt(1.0 + epsilon) - 1.0
        self.eps1 = split if eps1 is None else eps1
        self.eps2 = split if eps2 is None else eps2
        self.n = int(S.size)
        self.U = int(U)
        self.epsilon = epsilon
        self.F = fixed_chunk_cost(self.n, self.U)
        if exact:
            ends, cost = optimal_partition(S, self.F)
        else:
            ends, cost = approx_partition(S, self.F, self.eps1, self.eps2)
            single = np.array([self.n], dtype=np.int64)
            # keep the one-chunk partition if it is not worse in second-level bits
            if _second_level_bits(S, single) <= _second_level_bits(S, ends):
                ends, cost = single, partition_cost(S, single, self.F)
        self.model_cost = int(cost)
        self._build(S, ends)

    def _build(self, S, ends):
        words, pos, tags, offs, ubs = pef_encode(S, ends)
        self.tags, self.offs, self.ubs = tags, offs, ubs
        self.k = int(tags.size)
        self.starts = np.concatenate([[0], ends]).astype(np.int64)
        self.nbits = int(pos)
        bv = BitVectorRS(words, self.nbits)
        self.words, self.rank, self.sel1, self.sel0 = bv.words, bv.rank_samples, bv.sel1, bv.sel0
        self.upper = EliasFano(ubs, self.U)
        self.sizes = EliasFano(ends, self.n + 1)

    def __len__(self) -> int:
        return self.n

    @property
    def exhausted(self) -> int:
        """What ``nextgeq`` returns past the last element."""
        return self.U

    @property
    def ends(self) -> np.ndarray:
        return self.starts[1:]

    def payload_bits(self) -> int:
        """Second-level chunk bits."""
        return self.nbits

    def first_level_bits(self) -> int:
        return self.upper.payload_bits() + self.sizes.payload_bits() + 2 * self.k

    def total_bits(self) -> int:
        return self.payload_bits() + self.first_level_bits()

    def chunk_summary(self) -> list[tuple[str, int, int]]:
        """(tag, size, universe) per chunk."""
        out = []
        for j in range(self.k):
            base = int(self.ubs[j - 1]) + 1 if j else 0
            out.append((TAG_NAMES[int(self.tags[j])], int(self.starts[j + 1] - self.starts[j]),
                        int(self.ubs[j]) - base + 1))
        return out

    def _args(self):
        u = self.upper
        return (self.words, self.nbits, self.rank, self.sel1, self.sel0, self.tags, self.offs, self.ubs,
                self.starts, u.words, u.nbits, u.rank, u.sel1, u.sel0, self.k, self.U)

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"access({i}) outside 1..{self.n}")
        j = self.sizes.nextgeq_index(i)
        base = int(self.ubs[j - 1]) + 1 if j else 0
        b = int(self.starts[j + 1] - self.starts[j])
        M = int(self.ubs[j]) - base + 1
        return base + int(chunk_access(self.words, self.nbits, self.rank, self.sel1, int(self.offs[j]),
                                       int(self.tags[j]), b, M, i - 1 - int(self.starts[j])))

    def __getitem__(self, i: int) -> int:
        return self.access(i + 1)

    def nextgeq(self, x: int) -> int:
        _, v = _pef_nextgeq(*self._args(), max(0, int(x)))
        return int(v)

    def decode(self) -> np.ndarray:
        return pef_decode(self.words, self.tags, self.offs, self.ubs, self.starts, self.k)

    def filter(self, cands) -> np.ndarray:
        return pef_filter(*self._args(), np.ascontiguousarray(cands, dtype=np.int64))

    def to_bytes(self) -> bytes:
        tags = BitBuffer(2 * self.k)
        for t in self.tags:
            tags.write_bits(int(t), 2)
        second = BitBuffer.from_words(self.words, self.nbits)
        return b"".join([struct.pack("<QQ", self.n, self.U), self.upper.to_bytes(), self.sizes.to_bytes(),
                         tags.to_bytes(), second.to_bytes()])


@njit(cache=True)
def _second_level_bits(S, ends):
    total = 0
    i = 0
    for e in ends:
        base = S[i - 1] if i > 0 else -1
        _, c = chunk_cost(e - i, S[e - 1] - base)
        total += c
        i = e
    return total


def pef_chunk_cost(b: int, M: int) -> tuple[str, int]:
    if not 1 <= b <= M:
        raise ValueError("need 1 <= b <= M")
    t, c = chunk_cost(b, M)
    return TAG_NAMES[int(t)], int(c)


def pef_build(S, U: int, epsilon: float = 0.03, **kw) -> PartitionedEF:
    return PartitionedEF(S, U, epsilon, **kw)


def pef_access(seq: PartitionedEF, i: int) -> int:
    return seq.access(i)


def pef_nextgeq(seq: PartitionedEF, x: int) -> int:
    return seq.nextgeq(x)
