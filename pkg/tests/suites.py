"""Randomized property suites shared by the unit tests and the acceptance run.

Each suite returns ``(cases, failures)`` where ``failures`` is a list of
short descriptions, so callers can both assert and report counts.
"""

from __future__ import annotations

import heapq
import math
from functools import reduce

import numpy as np

from invlist import blockcodecs as bc
from invlist import canonical as cc
from invlist import pointcodes as pc
from invlist.eliasfano import EliasFano, PartitionedEF, formula1_bound
from invlist.index import REGISTRY, InvertedIndex, encode_list

POINT_CODES = [
    ("unary", {}), ("gamma", {}), ("delta", {}), ("golomb", {"b": 3}), ("golomb", {"b": 10}),
    ("rice", {"k": 2}), ("rice_gamma", {"k": 3}), ("expgolomb", {"k": 0}), ("expgolomb", {"k": 3}),
    ("zeta", {"k": 1}), ("zeta", {"k": 3}), ("fibonacci", {}), ("vbyte", {}), ("nibble", {}),
    ("scdense", {"s": 5, "c": 3}), ("scdense", {"s": 200, "c": 56}), ("binary", {"width": 13}),
]

# codes whose value range is unbounded enough for 40-bit inputs
_WIDE = {"gamma", "delta", "expgolomb", "zeta", "fibonacci", "vbyte", "nibble", "scdense", "rice_gamma"}


def random_values(rng, name: str, params: dict, n: int) -> np.ndarray:
    lo = 0 if name in ("vbyte", "nibble", "binary") else 1
    if name == "binary":
        return rng.integers(0, 1 << params["width"], n)
    if name == "unary":
        return rng.integers(1, 300, n)
    small = rng.geometric(0.05, n)
    if name in _WIDE:
        wide = rng.integers(1, 1 << 40, n)
        pick = rng.random(n) < 0.2
        small = np.where(pick, wide, small)
    else:
        small = np.minimum(small, 5000)
    return np.maximum(small, lo).astype(np.int64)


def point_roundtrip(seed: int = 1, per_code: int = 10_000):
    rng = np.random.default_rng(seed)
    cases, bad = 0, []
    for name, params in POINT_CODES:
        xs = random_values(rng, name, params, per_code)
        buf = pc.encode_array(xs, name, **params)
        lens = pc.length_array(xs, name, **params)
        if int(lens.sum()) != len(buf):
            bad.append(f"{name}{params}: length sum {lens.sum()} != {len(buf)}")
        got = pc.decode_array(buf.reader(), xs.size, name, **params)
        if not np.array_equal(got, xs):
            i = int(np.flatnonzero(got != xs)[0])
            bad.append(f"{name}{params}: x={xs[i]} decoded as {got[i]}")
        cases += xs.size
    return cases, bad


def prefix_free(limit: int = 4096):
    """Exhaustive prefix check on 1..limit for every bit-aligned code."""
    cases, bad = 0, []
    for name, params in POINT_CODES:
        if name in ("binary", "vbyte"):
            continue  # fixed width, or byte-aligned
        words = sorted(pc.codeword(name, x, **params) for x in range(1, limit + 1))
        cases += len(words)
        # in sorted order a prefix always sits right before one of its extensions
        for a, b in zip(words, words[1:]):
            if b.startswith(a):
                bad.append(f"{name}{params}: {a} prefixes {b}")
                break
    return cases, bad


def random_lengths(rng) -> list[int]:
    """Codeword lengths of a Huffman code for random frequencies."""
    m = int(rng.integers(1, 60))
    freqs = rng.integers(1, 1000, m)
    if m == 1:
        return [1]
    heap = [(int(f), i, [i]) for i, f in enumerate(freqs)]
    heapq.heapify(heap)
    depth = [0] * m
    tie = m
    while len(heap) > 1:
        f1, _, a = heapq.heappop(heap)
        f2, _, b = heapq.heappop(heap)
        for s in a + b:
            depth[s] += 1
        heapq.heappush(heap, (f1 + f2, tie, a + b))
        tie += 1
    # drop some leaves now and then so the code is not always complete
    if rng.random() < 0.3 and m > 2:
        depth = sorted(depth)[:-1]
    return sorted(depth)


def canonical_codes(seed: int = 2, count: int = 10_000):
    from invlist.bitstream import BitBuffer
    rng = np.random.default_rng(seed)
    cases, bad = 0, []
    for _ in range(count):
        lengths = random_lengths(rng)
        if cc.kraft_sum(lengths) > 1:
            bad.append(f"kraft > 1 for {lengths}")
        code = cc.build(lengths)
        syms = rng.integers(1, len(lengths) + 1, 20)
        buf = BitBuffer()
        for s in syms:
            cc.encode(code, int(s), buf)
        if cc.decode_many(code, buf.reader(), syms.size) != syms.tolist():
            bad.append(f"canonical roundtrip failed for {lengths}")
        cases += 1
    return cases, bad


def random_list(rng, n_max: int = 100_000, U_max: int = 10_000_000):
    """Strictly increasing list; sizes skew small, a few are long or clustered."""
    U = int(rng.integers(2, U_max + 1))
    r = rng.random()
    n_cap = min(U, n_max)
    if r < 0.02:
        n = int(rng.integers(1, n_cap + 1))
    else:
        n = int(min(n_cap, rng.geometric(1 / 60)))
    if rng.random() < 0.3:
        # a clustered list: a few runs of consecutive ids
        start = int(rng.integers(0, U - n + 1))
        S = np.arange(start, start + n)
        if n > 4:
            cut = np.sort(rng.choice(np.arange(1, n), size=min(3, n - 1), replace=False))
            shift = np.zeros(n, dtype=np.int64)
            for c in cut:
                shift[c:] += int(rng.integers(0, 50))
            S = S + shift
            S = S[S < U]
        return np.unique(S).astype(np.int64), U
    return np.sort(rng.choice(U, size=n, replace=False)).astype(np.int64), U


def list_roundtrip(seed: int = 3, per_codec: int = 600, codecs=REGISTRY):
    rng = np.random.default_rng(seed)
    samples = [random_list(rng) for _ in range(per_codec)]
    cases, bad = 0, []
    for codec in codecs:
        for S, U in samples:
            got = encode_list(S, codec, U).decode()
            if not np.array_equal(got, S):
                bad.append(f"{codec}: n={S.size} U={U}")
            cases += 1
    return cases, bad


def formula1_pairs(seed: int = 4, pairs: int = 1000):
    rng = np.random.default_rng(seed)
    cases, bad = 0, []
    for _ in range(pairs):
        U = int(rng.integers(1, 10**6))
        n = int(rng.integers(1, min(U, 5000) + 1))
        S = np.sort(rng.choice(U, n, replace=False))
        ef = EliasFano(S, U)
        bound = n * max(0, math.ceil(math.log2(U / n))) + 2 * n
        if ef.payload_bits() > bound or bound != formula1_bound(n, U):
            bad.append(f"n={n} U={U}: {ef.payload_bits()} > {bound}")
        cases += 1
    return cases, bad


def pef_bounds(seed: int = 5, count: int = 300, eps: float = 0.03):
    """Approximate partition within (1 + eps) of the exact one, and PEF <= EF + first level."""
    rng = np.random.default_rng(seed)
    cases, bad = 0, []
    for i in range(count):
        n = int(rng.integers(1, 2049))
        U = int(rng.integers(n, 50 * n + 2))
        clustering = rng.random()
        S, _ = random_list(rng, n_max=n, U_max=U) if clustering < 0.5 else (
            np.sort(rng.choice(U, n, replace=False)), U)
        S = S[S < U]
        if S.size == 0:
            continue
        approx = PartitionedEF(S, U, eps)
        exact = PartitionedEF(S, U, eps, exact=True)
        if approx.model_cost > (1 + eps) * exact.model_cost:
            bad.append(f"n={S.size} U={U}: {approx.model_cost} > (1+eps) {exact.model_cost}")
        if approx.payload_bits() > EliasFano(S, U).payload_bits():
            bad.append(f"n={S.size} U={U}: PEF chunks exceed plain EF")
        if not np.array_equal(approx.decode(), S):
            bad.append(f"n={S.size} U={U}: PEF decode")
        cases += 1
    return cases, bad


def nextgeq_equivalence(seed: int = 6, queries: int = 100_000, codecs=REGISTRY):
    rng = np.random.default_rng(seed)
    lists = [random_list(rng, n_max=20_000, U_max=2_000_000) for _ in range(8)]
    cases, bad = 0, []
    for codec in codecs:
        per = queries // len(lists)
        for S, U in lists:
            enc = encode_list(S, codec, U)
            xs = rng.integers(0, U + 2, per)
            xs[: per // 2].sort()  # half in increasing order like a real cursor
            idx = np.searchsorted(S, xs)
            want = np.where(idx < S.size, S[np.minimum(idx, S.size - 1)], U)
            for x, w in zip(xs.tolist(), want.tolist()):
                if enc.nextgeq(x) != w:
                    bad.append(f"{codec}: nextgeq({x}) != {w}")
                    break
            cases += per
    return cases, bad


def and_oracle(lists, q):
    return reduce(lambda a, b: np.intersect1d(a, b, assume_unique=True), (lists[t] for t in q))


def or_oracle(lists, q):
    return reduce(np.union1d, (lists[t] for t in q))


def query_equivalence(seed: int = 7, per_codec: int = 120):
    """AND/OR of 2-5 terms against the set oracle, per codec and for mixed codecs."""
    rng = np.random.default_rng(seed)
    U = 300_000
    lists = []
    for _ in range(16):
        n = int(rng.choice([20, 300, 3000, 20000, 90000]))
        S, _ = random_list(rng, n_max=n, U_max=U)
        lists.append(S[S < U] if S.size else np.array([0]))
    lists = [S if S.size else np.array([0]) for S in lists]
    queries = [rng.choice(len(lists), size=int(rng.integers(2, 6)), replace=False).tolist()
               for _ in range(per_codec)]
    cases, bad = 0, []
    setups = [(c, c) for c in REGISTRY]
    # codec pairs: alternate two codecs across terms
    pairs = [(REGISTRY[i], REGISTRY[(i * 7 + 3) % len(REGISTRY)]) for i in range(len(REGISTRY))]
    setups += [("roaring", "slicing"), ("ef", "roaring")] + pairs
    for a, b in setups:
        index = InvertedIndex(lists, U, {t: (a if t % 2 else b) for t in range(len(lists))})
        for q in queries:
            want_and, want_or = and_oracle(lists, q), or_oracle(lists, q)
            methods = [("auto", "auto"), ("nextgeq", "heap"), ("merge", "auto")]
            for am, om in methods:
                if not np.array_equal(index.and_query(q, am), want_and):
                    bad.append(f"{a}/{b} AND[{am}] {q}")
                if not np.array_equal(index.or_query(q, om), want_or):
                    bad.append(f"{a}/{b} OR[{om}] {q}")
                cases += 2
    return cases, bad


def optpfor_grid(seed: int = 8, blocks: int = 1000):
    rng = np.random.default_rng(seed)
    cases, bad = 0, []
    for _ in range(blocks):
        n = int(rng.integers(1, 129))
        base = int(rng.integers(0, 50))
        vals = base + rng.geometric(rng.uniform(0.01, 0.9), n) - 1
        spikes = rng.random(n) < rng.uniform(0, 0.2)
        vals = np.where(spikes, rng.integers(0, 1 << int(rng.integers(8, 30)), n), vals).astype(np.int64)
        grid = min(bc.pfor_size(vals, b, k) for k in range(1, 33)
                   for b in {0, int(vals.min())})
        b, k = bc.optpfor_choose_block(vals)
        if bc.pfor_size(vals, b, k) != grid:
            bad.append(f"block n={n}: chose {(b, k)} size {bc.pfor_size(vals, b, k)} vs grid {grid}")
        cases += 1
    return cases, bad
