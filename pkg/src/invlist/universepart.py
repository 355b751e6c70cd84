"""Universe-partitioned sets: Roaring containers and two-level Slicing.

Both split the docID universe into spans of 2^16 values keyed by the high
16 bits.  Roaring stores each non-empty span as a sorted array, a 2^16-bit
bitmap or a list of runs, whichever is smallest.  Slicing keeps a span as a
full marker, a dense bitmap, or a sparse slice made of 2^8-value sub-blocks
that are either 8-bit arrays or 256-bit bitmaps.

Intersection and union work span by span on the native containers and never
go through NextGEQ.  Results are plain sorted int64 arrays.
"""

from __future__ import annotations

import struct

import numpy as np
from numba import njit

from .errors import EndOfStreamError, MalformedStreamError

SPAN = 1 << 16
ARRAY_MAX = 4096
BITMAP_BYTES = SPAN // 8
GALLOP_RATIO = 32

ARRAY, BITMAP, RUNS = 0, 1, 2
FULL, DENSE, SPARSE = 0, 1, 2
SUB_ARRAY, SUB_BITMAP = 0, 1
SUB_SPAN = 256
SUB_ARRAY_MAX = 32
DENSE_MIN = SPAN // 4

ROARING_KINDS = {ARRAY: "array", BITMAP: "bitmap", RUNS: "runs"}
SLICE_KINDS = {FULL: "full", DENSE: "dense", SPARSE: "sparse"}


# -- merge kernels ---------------------------------------------------------

@njit(cache=True)
def merge_intersect(a, b):
    out = np.empty(min(a.shape[0], b.shape[0]), dtype=np.int64)
    i = j = k = 0
    while i < a.shape[0] and j < b.shape[0]:
        if a[i] < b[j]:
            i += 1
        elif a[i] > b[j]:
            j += 1
        else:
            out[k] = a[i]
            k += 1
            i += 1
            j += 1
    return out[:k]


@njit(cache=True)
def gallop_intersect(small, large):
    """Exponential search of each element of ``small`` in ``large``."""
    out = np.empty(small.shape[0], dtype=np.int64)
    k = 0
    lo = 0
    n = large.shape[0]
    for x in small:
        step = 1
        hi = lo
        while hi < n and large[hi] < x:
            lo = hi + 1
            hi = lo + step
            step <<= 1
        if hi > n:
            hi = n
        # binary search in [lo, hi]
        while lo < hi:
            mid = (lo + hi) >> 1
            if large[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        if lo == n:
            break
        if large[lo] == x:
            out[k] = x
            k += 1
            lo += 1
    return out[:k]


@njit(cache=True)
def merge_union(a, b):
    out = np.empty(a.shape[0] + b.shape[0], dtype=np.int64)
    i = j = k = 0
    while i < a.shape[0] and j < b.shape[0]:
        if a[i] < b[j]:
            out[k] = a[i]
            i += 1
        elif a[i] > b[j]:
            out[k] = b[j]
            j += 1
        else:
            out[k] = a[i]
            i += 1
            j += 1
        k += 1
    while i < a.shape[0]:
        out[k] = a[i]
        i += 1
        k += 1
    while j < b.shape[0]:
        out[k] = b[j]
        j += 1
        k += 1
    return out[:k]


def sorted_intersect(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size > b.size:
        a, b = b, a
    if a.size == 0:
        return np.zeros(0, dtype=np.int64)
    if b.size > GALLOP_RATIO * a.size:
        return gallop_intersect(a, b)
    return merge_intersect(a, b)


# -- bitmap helpers (MSB-first within each byte) ---------------------------

def to_bitmap(lows: np.ndarray, span: int = SPAN) -> np.ndarray:
    flags = np.zeros(span, dtype=bool)
    flags[lows] = True
    return np.packbits(flags)


def bitmap_values(bm: np.ndarray) -> np.ndarray:
    return np.flatnonzero(np.unpackbits(bm)).astype(np.int64)


def bitmap_contains(bm: np.ndarray, lows: np.ndarray) -> np.ndarray:
    return ((bm[lows >> 3] >> (7 - (lows & 7)).astype(np.uint8)) & 1).astype(bool)


def _runs_of(lows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(starts, lengths) with (v, l) covering v..v+l inclusive."""
    if lows.size == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    breaks = np.flatnonzero(np.diff(lows) != 1) + 1
    starts = lows[np.concatenate(([0], breaks))]
    ends = lows[np.concatenate((breaks - 1, [lows.size - 1]))]
    return starts.astype(np.int64), (ends - starts).astype(np.int64)


def _expand_runs(starts: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    if starts.size == 0:
        return np.zeros(0, dtype=np.int64)
    total = int(lengths.sum() + lengths.size)
    offs = np.repeat(starts - np.concatenate(([0], np.cumsum(lengths + 1)[:-1])), lengths + 1)
    return (np.arange(total, dtype=np.int64) + offs).astype(np.int64)


def _split(S: np.ndarray):
    """Yield (key, sorted low values) for each non-empty span."""
    if S.size == 0:
        return
    keys = S >> 16
    cut = np.flatnonzero(np.diff(keys)) + 1
    bounds = np.concatenate(([0], cut, [S.size]))
    for a, b in zip(bounds[:-1], bounds[1:]):
        yield int(keys[a]), (S[a:b] & 0xFFFF).astype(np.int64)


def _check(S, U) -> tuple[np.ndarray, int]:
    S = np.ascontiguousarray(S, dtype=np.int64)
    if S.size:
        if np.any(np.diff(S) <= 0):
            raise ValueError("sequence must be strictly increasing")
        if S[0] < 0:
            raise ValueError("values must be non-negative")
    if U is None:
        U = int(S[-1]) + 1 if S.size else 0
    if U > 1 << 32:
        raise ValueError("universe must not exceed 2^32")
    if S.size and S[-1] >= U:
        raise ValueError(f"last value {S[-1]} must be below the universe {U}")
    return S, int(U)


# -- Roaring ----------------------------------------------------------------

class Container:
    """One Roaring container over a 2^16 span."""

    __slots__ = ("kind", "card", "data", "lengths")

    def __init__(self, kind, card, data, lengths=None):
        self.kind = kind
        self.card = card
        self.data = data
        self.lengths = lengths

    @classmethod
    def build(cls, lows: np.ndarray) -> "Container":
        card = int(lows.size)
        starts, lengths = _runs_of(lows)
        array_bytes = 2 * card if card < ARRAY_MAX else None
        best = min(array_bytes, BITMAP_BYTES) if array_bytes is not None else BITMAP_BYTES
        if 4 * starts.size < best:
            return cls(RUNS, card, starts, lengths)
        if array_bytes is not None:
            return cls(ARRAY, card, lows.astype(np.int64))
        return cls(BITMAP, card, to_bitmap(lows))

    def values(self) -> np.ndarray:
        if self.kind == ARRAY:
            return self.data
        if self.kind == BITMAP:
            return bitmap_values(self.data)
        return _expand_runs(self.data, self.lengths)

    def bitmap(self) -> np.ndarray:
        if self.kind == BITMAP:
            return self.data
        return to_bitmap(self.values())

    def contains(self, lows: np.ndarray) -> np.ndarray:
        if self.kind == BITMAP:
            return bitmap_contains(self.data, lows)
        if self.kind == ARRAY:
            idx = np.searchsorted(self.data, lows)
            idx[idx == self.card] = 0
            return self.data[idx] == lows
        j = np.searchsorted(self.data, lows, side="right") - 1
        ok = j >= 0
        jj = np.where(ok, j, 0)
        return ok & (lows <= self.data[jj] + self.lengths[jj])

    def nextgeq(self, low: int) -> int:
        """Smallest member >= low, or -1."""
        if self.kind == ARRAY:
            i = int(np.searchsorted(self.data, low))
            return int(self.data[i]) if i < self.card else -1
        if self.kind == BITMAP:
            bits = np.unpackbits(self.data[low >> 3:])[low & 7:]
            hit = np.flatnonzero(bits)
            return int(hit[0]) + low if hit.size else -1
        j = int(np.searchsorted(self.data, low, side="right")) - 1
        if j >= 0 and low <= self.data[j] + self.lengths[j]:
            return low
        return int(self.data[j + 1]) if j + 1 < self.data.size else -1

    def nbytes(self) -> int:
        if self.kind == ARRAY:
            return 2 * self.card
        if self.kind == BITMAP:
            return BITMAP_BYTES
        return 2 + 4 * self.data.size

    def pack(self) -> bytes:
        if self.kind == ARRAY:
            return self.data.astype("<u2").tobytes()
        if self.kind == BITMAP:
            return self.data.tobytes()
        pairs = np.empty(2 * self.data.size, dtype="<u2")
        pairs[0::2] = self.data
        pairs[1::2] = self.lengths
        return struct.pack("<H", self.data.size) + pairs.tobytes()


def _container_intersect(a: Container, b: Container) -> np.ndarray:
    if a.kind == BITMAP and b.kind == BITMAP:
        return bitmap_values(a.data & b.data)
    if a.kind == ARRAY and b.kind == ARRAY:
        return sorted_intersect(a.data, b.data)
    if a.kind == ARRAY or (b.kind != ARRAY and a.card <= b.card):
        small, other = a, b
    else:
        small, other = b, a
    if small.kind == ARRAY:
        return small.data[other.contains(small.data)]
    if small.kind == RUNS and other.kind == RUNS:
        return _runs_intersect(small, other)
    # runs against a bitmap: mask the bitmap with the expanded runs
    return bitmap_values(small.bitmap() & other.bitmap())


def _runs_intersect(a: Container, b: Container) -> np.ndarray:
    ae = a.data + a.lengths
    be = b.data + b.lengths
    parts = []
    i = j = 0
    while i < a.data.size and j < b.data.size:
        lo = max(a.data[i], b.data[j])
        hi = min(ae[i], be[j])
        if lo <= hi:
            parts.append(np.arange(lo, hi + 1, dtype=np.int64))
        if ae[i] < be[j]:
            i += 1
        else:
            j += 1
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def _container_union(a: Container, b: Container) -> np.ndarray:
    if a.kind == ARRAY and b.kind == ARRAY:
        return merge_union(a.data, b.data)
    if a.kind == BITMAP or b.kind == BITMAP:
        return bitmap_values(a.bitmap() | b.bitmap())
    return merge_union(a.values(), b.values())


class RoaringSet:
    def __init__(self, S, U=None):
        S, self.U = _check(S, U)
        self.n = int(S.size)
        keys, conts = [], []
        for key, lows in _split(S):
            keys.append(key)
            conts.append(Container.build(lows))
        self.keys = np.array(keys, dtype=np.int64)
        self.containers = conts

    @property
    def exhausted(self) -> int:
        return self.U

    def __len__(self) -> int:
        return self.n

    def kinds(self) -> list[str]:
        return [ROARING_KINDS[c.kind] for c in self.containers]

    def decode(self) -> np.ndarray:
        if not self.containers:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([(k << 16) + c.values() for k, c in zip(self.keys, self.containers)])

    def __iter__(self):
        return iter(int(x) for x in self.decode())

    def nextgeq(self, x: int) -> int:
        x = max(int(x), 0)
        i = int(np.searchsorted(self.keys, x >> 16))
        if i < self.keys.size and self.keys[i] == x >> 16:
            low = self.containers[i].nextgeq(x & 0xFFFF)
            if low >= 0:
                return (int(self.keys[i]) << 16) + low
            i += 1
        if i >= self.keys.size:
            return self.U
        return (int(self.keys[i]) << 16) + self.containers[i].nextgeq(0)

    def filter(self, cands) -> np.ndarray:
        """Members of the sorted candidate array."""
        cands = np.asarray(cands, dtype=np.int64)
        out = []
        for key, lows in _split(cands):
            i = int(np.searchsorted(self.keys, key))
            if i < self.keys.size and self.keys[i] == key:
                hit = lows[self.containers[i].contains(lows)]
                out.append((key << 16) + hit)
        return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)

    def payload_bits(self) -> int:
        return 8 * sum(7 + c.nbytes() for c in self.containers)

    def size_bits(self) -> int:
        return 32 + self.payload_bits()

    def to_bytes(self) -> bytes:
        parts = [struct.pack("<I", len(self.containers))]
        for key, c in zip(self.keys, self.containers):
            parts.append(struct.pack("<HBI", int(key), c.kind, c.card))
            parts.append(c.pack())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes, U=None) -> "RoaringSet":
        r = _Reader(data)
        count = r.unpack("<I")[0]
        keys, conts = [], []
        for _ in range(count):
            key, kind, card = r.unpack("<HBI")
            if kind == ARRAY:
                data_ = r.array("<u2", card)
                c = Container(ARRAY, card, data_)
            elif kind == BITMAP:
                c = Container(BITMAP, card, r.array("u1", BITMAP_BYTES).astype(np.uint8))
            elif kind == RUNS:
                nr = r.unpack("<H")[0]
                pairs = r.array("<u2", 2 * nr)
                c = Container(RUNS, card, pairs[0::2].copy(), pairs[1::2].copy())
            else:
                raise MalformedStreamError(f"unknown Roaring container kind {kind}")
            if c.values().size != card or card == 0:
                raise MalformedStreamError(f"container {key} cardinality mismatch")
            if keys and key <= keys[-1]:
                raise MalformedStreamError("container keys are not increasing")
            keys.append(key)
            conts.append(c)
        self = cls.__new__(cls)
        self.keys = np.array(keys, dtype=np.int64)
        self.containers = conts
        self.n = sum(c.card for c in conts)
        last = (keys[-1] << 16) + int(conts[-1].values()[-1]) if conts else -1
        self.U = int(U) if U is not None else last + 1
        return self


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.off = 0

    def unpack(self, fmt: str):
        size = struct.calcsize(fmt)
        if self.off + size > len(self.data):
            raise EndOfStreamError("truncated set serialization")
        out = struct.unpack_from(fmt, self.data, self.off)
        self.off += size
        return out

    def array(self, dtype: str, count: int) -> np.ndarray:
        size = np.dtype(dtype).itemsize * count
        if self.off + size > len(self.data):
            raise EndOfStreamError("truncated set serialization")
        out = np.frombuffer(self.data, dtype=dtype, count=count, offset=self.off).astype(np.int64)
        self.off += size
        return out


# -- Slicing ----------------------------------------------------------------

class Slice:
    """A 2^16 span: full, dense bitmap, or sparse sub-blocks."""

    __slots__ = ("kind", "card", "bm", "subkeys", "subs")

    def __init__(self, kind, card, bm=None, subkeys=None, subs=None):
        self.kind = kind
        self.card = card
        self.bm = bm
        self.subkeys = subkeys
        self.subs = subs  # list of (sub kind, uint8 values or 32-byte bitmap)

    @classmethod
    def build(cls, lows: np.ndarray) -> "Slice":
        card = int(lows.size)
        if card == SPAN:
            return cls(FULL, card)
        if card > DENSE_MIN:
            return cls(DENSE, card, bm=to_bitmap(lows))
        hi = lows >> 8
        cut = np.flatnonzero(np.diff(hi)) + 1
        bounds = np.concatenate(([0], cut, [card]))
        subkeys, subs = [], []
        for a, b in zip(bounds[:-1], bounds[1:]):
            part = lows[a:b] & 0xFF
            subkeys.append(int(hi[a]))
            if part.size <= SUB_ARRAY_MAX:
                subs.append((SUB_ARRAY, part.astype(np.int64)))
            else:
                subs.append((SUB_BITMAP, to_bitmap(part, SUB_SPAN)))
        return cls(SPARSE, card, subkeys=np.array(subkeys, dtype=np.int64), subs=subs)

    @staticmethod
    def _sub_values(sub) -> np.ndarray:
        kind, data = sub
        return data if kind == SUB_ARRAY else bitmap_values(data)

    def values(self) -> np.ndarray:
        if self.kind == FULL:
            return np.arange(SPAN, dtype=np.int64)
        if self.kind == DENSE:
            return bitmap_values(self.bm)
        return np.concatenate([(k << 8) + self._sub_values(s) for k, s in zip(self.subkeys, self.subs)])

    def bitmap(self) -> np.ndarray:
        if self.kind == FULL:
            return np.full(BITMAP_BYTES, 0xFF, dtype=np.uint8)
        if self.kind == DENSE:
            return self.bm
        return to_bitmap(self.values())

    def contains(self, lows: np.ndarray) -> np.ndarray:
        if self.kind == FULL:
            return np.ones(lows.size, dtype=bool)
        if self.kind == DENSE:
            return bitmap_contains(self.bm, lows)
        out = np.zeros(lows.size, dtype=bool)
        idx = np.searchsorted(self.subkeys, lows >> 8)
        for j in np.unique(idx[idx < self.subkeys.size]):
            sel = (idx == j) & ((lows >> 8) == self.subkeys[j])
            if not sel.any():
                continue
            kind, data = self.subs[j]
            low8 = lows[sel] & 0xFF
            if kind == SUB_ARRAY:
                out[sel] = np.isin(low8, data, assume_unique=True)
            else:
                out[sel] = bitmap_contains(data, low8)
        return out

    def nextgeq(self, low: int) -> int:
        if self.kind == FULL:
            return low
        if self.kind == DENSE:
            bits = np.unpackbits(self.bm[low >> 3:])[low & 7:]
            hit = np.flatnonzero(bits)
            return int(hit[0]) + low if hit.size else -1
        j = int(np.searchsorted(self.subkeys, low >> 8))
        if j < self.subkeys.size and self.subkeys[j] == low >> 8:
            vals = self._sub_values(self.subs[j])
            i = int(np.searchsorted(vals, low & 0xFF))
            if i < vals.size:
                return (low >> 8 << 8) + int(vals[i])
            j += 1
        if j >= self.subkeys.size:
            return -1
        return (int(self.subkeys[j]) << 8) + int(self._sub_values(self.subs[j])[0])

    def nbytes(self) -> int:
        if self.kind == FULL:
            return 0
        if self.kind == DENSE:
            return BITMAP_BYTES
        return 2 + sum(4 + (d.size if k == SUB_ARRAY else SUB_SPAN // 8) for k, d in self.subs)

    def pack(self) -> bytes:
        if self.kind == FULL:
            return b""
        if self.kind == DENSE:
            return self.bm.tobytes()
        parts = [struct.pack("<H", len(self.subs))]
        for key, (kind, data) in zip(self.subkeys, self.subs):
            card = data.size if kind == SUB_ARRAY else int(np.unpackbits(data).sum())
            parts.append(struct.pack("<BBH", int(key), kind, card))
            parts.append(data.astype(np.uint8).tobytes())
        return b"".join(parts)


def _slice_intersect(a: Slice, b: Slice) -> np.ndarray:
    if a.kind == FULL:
        return b.values()
    if b.kind == FULL:
        return a.values()
    if a.kind == DENSE and b.kind == DENSE:
        return bitmap_values(a.bm & b.bm)
    if a.kind == DENSE or b.kind == DENSE:
        sparse, dense = (a, b) if b.kind == DENSE else (b, a)
        vals = sparse.values()
        return vals[bitmap_contains(dense.bm, vals)]
    # sparse x sparse: walk the common sub-block keys
    common, ia, ib = np.intersect1d(a.subkeys, b.subkeys, assume_unique=True, return_indices=True)
    out = []
    for key, i, j in zip(common, ia, ib):
        (ka, da), (kb, db) = a.subs[i], b.subs[j]
        if ka == SUB_BITMAP and kb == SUB_BITMAP:
            hit = bitmap_values(da & db)
        elif ka == SUB_ARRAY and kb == SUB_ARRAY:
            hit = sorted_intersect(da, db)
        elif ka == SUB_ARRAY:
            hit = da[bitmap_contains(db, da)]
        else:
            hit = db[bitmap_contains(da, db)]
        if hit.size:
            out.append((int(key) << 8) + hit)
    return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)


def _slice_union(a: Slice, b: Slice) -> np.ndarray:
    if a.kind == FULL or b.kind == FULL:
        return np.arange(SPAN, dtype=np.int64)
    if a.kind == DENSE or b.kind == DENSE:
        return bitmap_values(a.bitmap() | b.bitmap())
    return merge_union(a.values(), b.values())


class SlicedSet:
    def __init__(self, S, U=None):
        S, self.U = _check(S, U)
        self.n = int(S.size)
        keys, slices = [], []
        for key, lows in _split(S):
            keys.append(key)
            slices.append(Slice.build(lows))
        self.keys = np.array(keys, dtype=np.int64)
        self.containers = slices

    exhausted = RoaringSet.exhausted
    __len__ = RoaringSet.__len__
    decode = RoaringSet.decode
    __iter__ = RoaringSet.__iter__
    nextgeq = RoaringSet.nextgeq
    filter = RoaringSet.filter

    def kinds(self) -> list[str]:
        return [SLICE_KINDS[s.kind] for s in self.containers]

    def payload_bits(self) -> int:
        return 8 * sum(7 + s.nbytes() for s in self.containers)

    def size_bits(self) -> int:
        return 32 + self.payload_bits()

    def to_bytes(self) -> bytes:
        parts = [struct.pack("<I", len(self.containers))]
        for key, s in zip(self.keys, self.containers):
            parts.append(struct.pack("<HBI", int(key), s.kind, s.card))
            parts.append(s.pack())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes, U=None) -> "SlicedSet":
        r = _Reader(data)
        count = r.unpack("<I")[0]
        keys, slices = [], []
        for _ in range(count):
            key, kind, card = r.unpack("<HBI")
            if kind == FULL:
                s = Slice(FULL, card)
            elif kind == DENSE:
                s = Slice(DENSE, card, bm=r.array("u1", BITMAP_BYTES).astype(np.uint8))
            elif kind == SPARSE:
                nsub = r.unpack("<H")[0]
                subkeys, subs = [], []
                for _ in range(nsub):
                    sk, skind, scard = r.unpack("<BBH")
                    if skind == SUB_ARRAY:
                        subs.append((SUB_ARRAY, r.array("u1", scard)))
                    elif skind == SUB_BITMAP:
                        subs.append((SUB_BITMAP, r.array("u1", SUB_SPAN // 8).astype(np.uint8)))
                    else:
                        raise MalformedStreamError(f"unknown sub-block kind {skind}")
                    subkeys.append(sk)
                s = Slice(SPARSE, card, subkeys=np.array(subkeys, dtype=np.int64), subs=subs)
            else:
                raise MalformedStreamError(f"unknown slice kind {kind}")
            if s.values().size != card or card == 0:
                raise MalformedStreamError(f"slice {key} cardinality mismatch")
            if keys and key <= keys[-1]:
                raise MalformedStreamError("slice keys are not increasing")
            keys.append(key)
            slices.append(s)
        self = cls.__new__(cls)
        self.keys = np.array(keys, dtype=np.int64)
        self.containers = slices
        self.n = sum(s.card for s in slices)
        last = (keys[-1] << 16) + int(slices[-1].values()[-1]) if slices else -1
        self.U = int(U) if U is not None else last + 1
        return self


# -- set algebra ------------------------------------------------------------

def _pairwise(a, b, both, left_only, right_only):
    if type(a) is not type(b):
        raise TypeError("both operands must be the same set structure")
    same = _container_intersect if isinstance(a, RoaringSet) else _slice_intersect
    if both == "union":
        same = _container_union if isinstance(a, RoaringSet) else _slice_union
    out = []
    i = j = 0
    while i < a.keys.size or j < b.keys.size:
        ka = a.keys[i] if i < a.keys.size else None
        kb = b.keys[j] if j < b.keys.size else None
        if kb is None or (ka is not None and ka < kb):
            if left_only:
                out.append((int(ka) << 16) + a.containers[i].values())
            i += 1
        elif ka is None or kb < ka:
            if right_only:
                out.append((int(kb) << 16) + b.containers[j].values())
            j += 1
        else:
            hit = same(a.containers[i], b.containers[j])
            if hit.size:
                out.append((int(ka) << 16) + hit)
            i += 1
            j += 1
    return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)


def set_intersect(a, b) -> np.ndarray:
    return _pairwise(a, b, "intersect", False, False)


def set_union(a, b) -> np.ndarray:
    return _pairwise(a, b, "union", True, True)


def set_nextgeq(s, x: int) -> int:
    return s.nextgeq(x)


def roaring_build(S, U=None) -> RoaringSet:
    return RoaringSet(S, U)


def sliced_build(S, U=None) -> SlicedSet:
    return SlicedSet(S, U)
