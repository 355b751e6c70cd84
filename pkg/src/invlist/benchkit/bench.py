"""Space and speed measurements over an encoded collection.

One warm-up pass, then ``reps`` timed passes on a monotonic clock; the
reported time is their mean and ``stdev`` their spread.  Decoding writes
every list into a reused 32-bit output buffer.  Queries are bucketed by
their number of distinct terms (2, 3, 4, 5+), plus an ``avg`` row over all.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..index import InvertedIndex, REGISTRY

OPS = ("decode", "and", "or")
HEADER = ("codec", "op", "terms", "GiB", "bits/int", "time", "unit", "stdev")
TERM_BUCKETS = ("2", "3", "4", "5+")


@dataclass
class Row:
    codec: str
    op: str
    terms: str
    gib: float
    bits_per_int: float
    time: float
    unit: str
    stdev: float

    def tsv(self) -> str:
        return "\t".join([self.codec, self.op, self.terms, f"{self.gib:.6f}",
                          f"{self.bits_per_int:.3f}", f"{self.time:.3f}", self.unit,
                          f"{self.stdev:.3f}"])


class VerificationError(AssertionError):
    """An encoded answer disagrees with the uncompressed oracle."""


def term_bucket(q) -> str:
    k = len(set(q))
    return "5+" if k >= 5 else str(k)


def oracle_and(lists, q) -> np.ndarray:
    return reduce(lambda a, b: np.intersect1d(a, b, assume_unique=True), (lists[t] for t in q))


def oracle_or(lists, q) -> np.ndarray:
    return reduce(np.union1d, (lists[t] for t in q))


def formula1_bound(lists, U: int) -> int:
    """Sum over lists of n * ceil(log2(U / n)) + 2n."""
    total = 0
    for s in lists:
        n = len(s)
        if n:
            total += n * max(0, math.ceil(math.log2(U / n))) + 2 * n
    return total


def verify(index: InvertedIndex, lists, queries, ops) -> list[str]:
    """Compare every answer with the oracle; returns the disagreements."""
    bad = []
    if "decode" in ops:
        for t, s in enumerate(lists):
            if not np.array_equal(index.decode(t), s):
                bad.append(f"decode list {t}")
    for op, oracle, fn in (("and", oracle_and, index.and_query), ("or", oracle_or, index.or_query)):
        if op not in ops:
            continue
        for i, q in enumerate(queries):
            if not np.array_equal(fn(q), oracle(lists, q)):
                bad.append(f"{op} query {i} {q}")
    return bad


def _timed(fn, reps: int) -> list[float]:
    fn()  # warm-up
    out = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        out.append(time.perf_counter_ns() - t0)
    return out


def _spread(xs) -> float:
    return statistics.stdev(xs) if len(xs) > 1 else 0.0


def bench_codec(lists, U: int, codec: str, queries=(), ops=OPS, reps: int = 3,
                epsilon: float = 0.03, mode: str = "leftmost", check: bool = False):
    """Rows for one codec.  Raises VerificationError when ``check`` finds a mismatch."""
    if codec not in REGISTRY:
        raise ValueError(f"unknown codec {codec!r}; choose from {', '.join(REGISTRY)}")
    index = InvertedIndex(lists, U, codec, epsilon, mode)
    if check:
        bad = verify(index, lists, queries, ops)
        if bad:
            raise VerificationError(f"{codec}: {len(bad)} mismatches, first: {bad[0]}")
    bits = index.total_bits()
    gib = bits / 8 / 2**30
    bpi = index.bits_per_int()
    rows = []
    if "decode" in ops:
        out = np.empty(max((len(s) for s in lists), default=0), dtype=np.uint32)

        def run():
            for t in range(len(index)):
                v = index.decode(t)
                out[:v.size] = v

        ns = _timed(run, reps)
        per = [x / max(1, index.integers) for x in ns]
        rows.append(Row(codec, "decode", "-", gib, bpi, statistics.fmean(per), "ns/int", _spread(per)))
    for op in ("and", "or"):
        if op not in ops or not queries:
            continue
        fn = index.and_query if op == "and" else index.or_query
        groups = {b: [q for q in queries if term_bucket(q) == b] for b in TERM_BUCKETS}
        groups["avg"] = list(queries)
        for b, qs in groups.items():
            if not qs:
                continue

            def run(qs=qs):
                for q in qs:
                    fn(q)

            ms = [x / 1e6 / len(qs) for x in _timed(run, reps)]
            rows.append(Row(codec, op, b, gib, bpi, statistics.fmean(ms), "ms/query", _spread(ms)))
    return rows, bits
