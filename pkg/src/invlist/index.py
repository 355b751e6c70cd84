"""Inverted index over any registered codec, plus corpus gap statistics.

Every encoded list exposes the same small surface: ``decode()``,
``nextgeq(x)`` (returning the universe when exhausted), ``filter(cands)``
and ``len()``.  Query evaluation only relies on that surface, except that
Roaring and Slicing lists intersect and unite natively.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from . import blockcodecs as bc
from .eliasfano import EliasFano, PartitionedEF
from .universepart import (RoaringSet, SlicedSet, merge_union, set_intersect, set_union,
                           sorted_intersect)

BLOCKED = ("vbyte", "gamma128", "delta128", "rice128", "golomb128", "zeta128", "fib128",
           "scdense128", "simple9", "simple16", "simple8b", "pfor", "optpfor", "bp128", "bic")
REGISTRY = BLOCKED + ("ef", "pef", "roaring", "slicing")
NATIVE = ("roaring", "slicing")

BUCKETS = tuple(1 << i for i in range(14))  # 1, 2, 4, ..., 8192


def encode_list(S, codec: str, U: int, epsilon: float = 0.03, mode: str = "leftmost"):
    """Encode one strictly increasing list under ``codec``."""
    if codec in BLOCKED:
        return bc.list_encode(S, codec, universe=U, mode=mode)
    if codec == "ef":
        return EliasFano(S, U)
    if codec == "pef":
        return PartitionedEF(S, U, epsilon)
    if codec == "roaring":
        return RoaringSet(S, U)
    if codec == "slicing":
        return SlicedSet(S, U)
    raise ValueError(f"unknown codec {codec!r}; choose from {', '.join(REGISTRY)}")


def list_bits(enc, codec: str) -> int:
    """Space charged to a list when reporting bits/int.

    Blocked codecs count their payload (block skip tables are excluded),
    EF counts H plus L, PEF counts both levels, and the universe-partitioned
    sets count their serialized size.
    """
    if codec == "pef":
        return enc.total_bits()
    return enc.payload_bits()


class InvertedIndex:
    def __init__(self, lists, U: int, codec="pef", epsilon: float = 0.03, mode: str = "leftmost"):
        self.U = int(U)
        lists = [np.ascontiguousarray(s, dtype=np.int64) for s in lists]
        if isinstance(codec, str):
            self.codecs = [codec] * len(lists)
        else:
            self.codecs = [codec[t] for t in range(len(lists))]
        self.lists = []
        for t, (S, c) in enumerate(zip(lists, self.codecs)):
            if S.size and S[-1] >= self.U:
                raise ValueError(f"list {t} holds {S[-1]} outside the universe {self.U}")
            self.lists.append(encode_list(S, c, self.U, epsilon, mode))
        self.lengths = np.array([len(x) for x in self.lists], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.lists)

    @property
    def integers(self) -> int:
        return int(self.lengths.sum())

    def _get(self, t: int):
        if not 0 <= t < len(self.lists):
            raise KeyError(f"unknown term {t}")
        return self.lists[t]

    def decode(self, t: int) -> np.ndarray:
        return self._get(t).decode()

    def nextgeq(self, t: int, x: int) -> int:
        return self._get(t).nextgeq(x)

    def total_bits(self) -> int:
        return sum(list_bits(e, c) for e, c in zip(self.lists, self.codecs))

    def bits_per_int(self) -> float:
        return self.total_bits() / max(1, self.integers)

    def _ordered(self, terms):
        terms = list(dict.fromkeys(int(t) for t in terms))
        for t in terms:
            self._get(t)
        return sorted(terms, key=lambda t: self.lengths[t])

    def and_query(self, terms, method: str = "auto") -> np.ndarray:
        """Intersection of the lists of ``terms``.

        ``auto`` uses native set intersection when every list is a Roaring or
        Slicing set of the same kind and candidate filtering otherwise;
        ``nextgeq`` runs the textbook adaptive loop one candidate at a time;
        ``merge`` decodes everything and merges.
        """
        order = self._ordered(terms)
        if not order:
            raise ValueError("an AND query needs at least one term")
        lists = [self.lists[t] for t in order]
        if method == "nextgeq":
            return self._and_nextgeq(lists)
        if method == "merge":
            out = lists[0].decode()
            for lst in lists[1:]:
                out = sorted_intersect(out, lst.decode())
            return out
        if method != "auto":
            raise ValueError(f"unknown AND method {method!r}")
        kinds = {self.codecs[t] for t in order}
        if len(lists) >= 2 and len(kinds) == 1 and kinds <= set(NATIVE):
            out = set_intersect(lists[0], lists[1])
            rest = lists[2:]
        else:
            out = lists[0].decode()
            rest = lists[1:]
        for lst in rest:
            if out.size == 0:
                break
            out = lst.filter(out)
        return out

    @staticmethod
    def _and_nextgeq(lists) -> np.ndarray:
        out = []
        head = lists[0]
        exhausted = head.exhausted
        x = head.nextgeq(0)
        while x < exhausted:
            agreed = True
            for lst in lists[1:]:
                y = lst.nextgeq(x)
                if y != x:
                    agreed = False
                    x = head.nextgeq(y)
                    break
            if agreed:
                out.append(x)
                x = head.nextgeq(x + 1)
        return np.array(out, dtype=np.int64)

    def or_query(self, terms, method: str = "auto") -> np.ndarray:
        """Union of the lists of ``terms``.

        ``auto`` folds pairwise merges (native union for same-kind Roaring or
        Slicing sets); ``heap`` is a k-way merge over decoded heads.
        """
        order = self._ordered(terms)
        if not order:
            raise ValueError("an OR query needs at least one term")
        lists = [self.lists[t] for t in order]
        if method == "heap":
            merged = heapq.merge(*(iter(lst.decode().tolist()) for lst in lists))
            out, last = [], -1
            for x in merged:
                if x != last:
                    out.append(x)
                    last = x
            return np.array(out, dtype=np.int64)
        if method != "auto":
            raise ValueError(f"unknown OR method {method!r}")
        kinds = {self.codecs[t] for t in order}
        if len(lists) >= 2 and len(kinds) == 1 and kinds <= set(NATIVE):
            out = set_union(lists[0], lists[1])
            rest = lists[2:]
        else:
            out = lists[0].decode()
            rest = lists[1:]
        for lst in rest:
            out = merge_union(out, lst.decode())
        return out


def build_index(collection, codec="pef", epsilon: float = 0.03, mode: str = "leftmost") -> InvertedIndex:
    """Encode every list of a collection (anything with ``lists`` and ``universe``)."""
    return InvertedIndex(collection.lists, collection.universe, codec, epsilon, mode)


def and_query(index: InvertedIndex, terms, method: str = "auto") -> np.ndarray:
    return index.and_query(terms, method)


def or_query(index: InvertedIndex, terms, method: str = "auto") -> np.ndarray:
    return index.or_query(terms, method)


# -- statistics --------------------------------------------------------------

@dataclass
class CollectionStats:
    lists: int
    universe: int
    integers: int
    entropy: float
    mean_log_gap: float
    histogram: dict = field(default_factory=dict)  # bucket label -> percentage

    def rows(self) -> list[tuple[str, str]]:
        out = [("lists", str(self.lists)), ("universe", str(self.universe)),
               ("integers", str(self.integers)), ("entropy", f"{self.entropy:.4f}"),
               ("mean_ceil_log2", f"{self.mean_log_gap:.4f}")]
        out += [(f"bucket_{k}", f"{v:.2f}") for k, v in self.histogram.items()]
        return out


def pooled_gaps(lists) -> np.ndarray:
    """Gaps of every list, the first measured from -1 so that all gaps are >= 1."""
    parts = [np.diff(np.asarray(s, dtype=np.int64), prepend=-1) for s in lists if len(s)]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def gap_entropy(gaps: np.ndarray) -> float:
    """Zero-order empirical entropy in bits per gap."""
    if gaps.size == 0:
        return 0.0
    _, counts = np.unique(gaps, return_counts=True)
    p = counts / gaps.size
    return float(max(0.0, -(p * np.log2(p)).sum()))


def ceil_log2(gaps: np.ndarray) -> np.ndarray:
    """ceil(log2 g) for g >= 1, i.e. the bit length of g - 1."""
    _, e = np.frexp(np.asarray(gaps, dtype=np.int64) - 1)
    return e.astype(np.int64)


def gap_histogram(gaps: np.ndarray) -> dict:
    """Percentage of gaps per bucket, B[i-1] < g <= B[i], last bucket open-ended."""
    edges = np.array(BUCKETS, dtype=np.int64)
    idx = np.searchsorted(edges, gaps, side="left")
    counts = np.bincount(idx, minlength=len(BUCKETS) + 1)
    labels = [str(b) for b in BUCKETS] + ["+"]
    total = max(1, gaps.size)
    return {lab: 100.0 * int(c) / total for lab, c in zip(labels, counts)}


def compute_stats(collection) -> CollectionStats:
    lists = collection.lists
    if not lists:
        raise ValueError("empty collection")
    gaps = pooled_gaps(lists)
    return CollectionStats(
        lists=len(lists),
        universe=int(collection.universe),
        integers=int(gaps.size),
        entropy=gap_entropy(gaps),
        mean_log_gap=float(ceil_log2(gaps).mean()) if gaps.size else 0.0,
        histogram=gap_histogram(gaps),
    )


def geometric_entropy(p: float) -> float:
    """Entropy in bits of the geometric distribution P(g) = (1-p)^(g-1) p."""
    if p >= 1.0:
        return 0.0
    q = 1.0 - p
    return (-q * math.log2(q) - p * math.log2(p)) / p
