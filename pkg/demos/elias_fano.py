"""
Elias-Fano, plain and partitioned
==================================

The twelve-element example sequence is split into low and high parts, then
a larger clustered list shows what partitioning buys.
"""

import numpy as np

from invlist.eliasfano import EliasFano, PartitionedEF, formula1_bound

S = np.array([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54, 62])
ef = EliasFano(S, 64)
print("ell =", ef.ell)
print("L   =", ef.low_bits())
print("H   =", ef.high_bits())
print("Access(4) =", ef.access(4), " NextGEQ(30) =", ef.nextgeq(30),
      " search range", ef.bucket_bounds(30))
print(f"{ef.payload_bits()} bits, bound {formula1_bound(S.size, 64)}")

# a list made of dense runs separated by sparse stretches
rng = np.random.default_rng(1)
parts, start = [], 0
for _ in range(40):
    run = int(rng.integers(50, 2000))
    parts.append(np.arange(start, start + run))
    start += run + int(rng.integers(1000, 200_000))
    sparse = np.sort(rng.choice(np.arange(start, start + 100_000), 30, replace=False))
    parts.append(sparse)
    start += 100_000
S = np.concatenate(parts)
U = int(S[-1]) + 1

plain = EliasFano(S, U)
pef = PartitionedEF(S, U)
kinds = {}
for tag, size, _ in pef.chunk_summary():
    kinds[tag] = kinds.get(tag, 0) + size
print(f"\n{S.size} integers in [0, {U})")
print(f"plain EF        {plain.payload_bits() / S.size:6.3f} bits/int")
print(f"partitioned EF  {pef.total_bits() / S.size:6.3f} bits/int over {pef.k} chunks")
print("integers per chunk kind:", kinds)
