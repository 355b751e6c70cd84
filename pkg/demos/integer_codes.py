"""
Point codes on a skewed gap distribution
=========================================

Gaps between consecutive docIDs of a posting list are mostly small.  This
walk-through prints a few codewords, then compares the average codeword
length of several codes on geometric gaps with the entropy of those gaps.
"""

import numpy as np

from invlist import pointcodes as pc
from invlist.index import gap_entropy

# the same integers under four codes
for x in (1, 2, 5, 8, 113):
    print(f"{x:>4}  gamma={pc.codeword('gamma', x):<14} delta={pc.codeword('delta', x):<12} "
          f"zeta3={pc.codeword('zeta', x, k=3):<13} fib={pc.codeword('fibonacci', x)}")

# gaps drawn from a geometric distribution, as in a randomly scattered list
rng = np.random.default_rng(0)
p = 0.05
gaps = rng.geometric(p, 200_000)
print(f"\nentropy of the sample: {gap_entropy(gaps):.3f} bits/gap")

b = pc.golomb_optimal_b(p)
codes = [("gamma", {}), ("delta", {}), ("zeta", {"k": 3}), ("fibonacci", {}),
         ("golomb", {"b": b}), ("rice", {"k": int(np.log2(b))}), ("vbyte", {})]
for name, params in codes:
    xs = gaps - 1 if name == "vbyte" else gaps
    mean = pc.length_array(xs, name, **params).mean()
    print(f"{name:>10} {str(params):<10} {mean:6.3f} bits/gap")

# Golomb with the tuned b sits within a fraction of a bit of the entropy;
# the universal codes pay for not knowing p.
