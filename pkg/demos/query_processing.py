"""
Space and query speed on a synthetic collection
================================================

Builds a small clustered collection, encodes it under a handful of codecs
and runs the same AND / OR queries on each, checking every answer against
plain numpy set operations.
"""

import time

import numpy as np

from invlist.benchkit.collection import synth, synth_queries
from invlist.index import InvertedIndex, compute_stats

coll = synth(lists=200, universe=500_000, density=0.01, clustering=0.7, seed=7)
stats = compute_stats(coll)
print(f"{stats.integers} integers, gap entropy {stats.entropy:.3f}, "
      f"mean ceil(log2 gap) {stats.mean_log_gap:.3f}")

queries = synth_queries(len(coll.lists), per_size=50, sizes=(2, 3, 4), seed=1)

print(f"\n{'codec':>10} {'bits/int':>9} {'AND ms':>8} {'OR ms':>8}")
for codec in ("vbyte", "optpfor", "simple16", "bic", "ef", "pef", "roaring"):
    index = InvertedIndex(coll.lists, coll.universe, codec)
    t = time.perf_counter()
    got = [index.and_query(q) for q in queries]
    t_and = (time.perf_counter() - t) / len(queries) * 1e3
    t = time.perf_counter()
    for q in queries:
        index.or_query(q)
    t_or = (time.perf_counter() - t) / len(queries) * 1e3
    for q, g in zip(queries, got):
        want = coll.lists[q[0]]
        for term in q[1:]:
            want = np.intersect1d(want, coll.lists[term])
        assert np.array_equal(g, want)
    print(f"{codec:>10} {index.bits_per_int():9.3f} {t_and:8.3f} {t_or:8.3f}")
