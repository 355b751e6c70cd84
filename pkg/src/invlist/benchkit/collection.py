"""Collection and query files, and the synthetic corpus generator.

A collection file is a flat run of little-endian uint32 values: the record
``[1][U]`` first, then one record ``[n][x_1 .. x_n]`` per list with the x
strictly increasing and below U.  A query file is text with one query per
line, given as whitespace-separated term ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


class CollectionError(ValueError):
    """Malformed collection or query file."""


@dataclass
class Collection:
    universe: int
    lists: list

    @property
    def integers(self) -> int:
        return sum(len(s) for s in self.lists)

    def filtered(self, min_size: int) -> "Collection":
        """Keep lists longer than ``min_size`` (the usual corpus pruning)."""
        return Collection(self.universe, [s for s in self.lists if len(s) > min_size])


def to_bytes(coll: Collection) -> bytes:
    parts = [np.array([1, coll.universe], dtype="<u4").tobytes()]
    for s in coll.lists:
        rec = np.empty(len(s) + 1, dtype="<u4")
        rec[0] = len(s)
        rec[1:] = s
        parts.append(rec.tobytes())
    return b"".join(parts)


def from_bytes(data: bytes, name: str = "<collection>") -> Collection:
    if len(data) % 4:
        raise CollectionError(f"{name}: length {len(data)} is not a multiple of 4 bytes")
    raw = np.frombuffer(data, dtype="<u4").astype(np.int64)
    if raw.size < 2 or raw[0] != 1:
        raise CollectionError(f"{name}: record 0 must be [1][U]")
    U = int(raw[1])
    lists = []
    off = 2
    rec = 1
    while off < raw.size:
        n = int(raw[off])
        if n < 1:
            raise CollectionError(f"{name}: record {rec} at word {off} has length 0")
        if off + 1 + n > raw.size:
            raise CollectionError(
                f"{name}: record {rec} at word {off} declares {n} values but only "
                f"{raw.size - off - 1} remain")
        s = raw[off + 1:off + 1 + n]
        bad = np.flatnonzero(np.diff(s) <= 0)
        if bad.size:
            k = int(bad[0]) + 1
            raise CollectionError(
                f"{name}: record {rec} at word {off} is not strictly increasing at position {k} "
                f"({s[k - 1]} then {s[k]})")
        if s[-1] >= U:
            k = int(np.flatnonzero(s >= U)[0])
            raise CollectionError(
                f"{name}: record {rec} at word {off} holds {s[k]} at position {k}, not below U={U}")
        lists.append(s.copy())
        off += 1 + n
        rec += 1
    return Collection(U, lists)


def write_collection(coll: Collection, path) -> None:
    Path(path).write_bytes(to_bytes(coll))


def read_collection(path) -> Collection:
    return from_bytes(Path(path).read_bytes(), str(path))


def read_queries(path, nlists: int | None = None) -> list[list[int]]:
    queries = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            terms = [int(tok) for tok in line.split()]
        except ValueError:
            raise CollectionError(f"{path}:{lineno}: term ids must be integers") from None
        for t in terms:
            if t < 0 or (nlists is not None and t >= nlists):
                raise CollectionError(f"{path}:{lineno}: term {t} outside 0..{nlists - 1}")
        queries.append(terms)
    return queries


def write_queries(queries, path) -> None:
    Path(path).write_text("".join(" ".join(map(str, q)) + "\n" for q in queries))


# -- synthetic corpus ----------------------------------------------------------

MEAN_RUN = 32


def synth_list(rng: np.random.Generator, U: int, n: int, clustering: float) -> np.ndarray:
    """``n`` distinct docIDs below U; a ``clustering`` fraction sits in runs.

    Run lengths are geometric with mean 32.  The rest is a uniform sample of
    the docIDs outside the runs, so with clustering 0 the gaps are close to
    geometric with parameter n / U.
    """
    n_run = int(round(clustering * n))
    runs = []
    total = 0
    while total < n_run:
        r = min(int(rng.geometric(1.0 / MEAN_RUN)), n_run - total)
        runs.append(r)
        total += r
    runs = np.array(runs, dtype=np.int64)
    members = np.zeros(0, dtype=np.int64)
    if runs.size:
        # distinct slots in the space left after removing run bodies, then shift
        slots = np.sort(rng.choice(U - n_run, size=runs.size, replace=False))
        starts = slots + np.concatenate(([0], np.cumsum(runs)[:-1]))
        members = np.repeat(starts - np.concatenate(([0], np.cumsum(runs)[:-1])), runs) + np.arange(n_run)
    rest = n - n_run
    if rest:
        free = U - n_run
        picks = np.sort(rng.choice(free, size=rest, replace=False))
        # map ranks among free docIDs back to docIDs skipping run members
        below = np.searchsorted(members - np.arange(members.size), picks, side="right")
        members = np.concatenate((members, picks + below))
    return np.sort(members)


def synth(lists: int, universe: int, density: float, clustering: float, seed: int) -> Collection:
    if not 0 <= clustering <= 1:
        raise ValueError("clustering must lie in [0, 1]")
    n = int(round(density * universe))
    if n < 1:
        raise ValueError("density * universe must be at least 1")
    if n > universe:
        raise ValueError("density must not exceed 1")
    rng = np.random.default_rng(seed)
    return Collection(universe, [synth_list(rng, universe, n, clustering) for _ in range(lists)])


def synth_queries(nlists: int, per_size: int = 1000, sizes=(2, 3, 4, 5), seed: int = 0,
                  lengths=None, min_size: int = 0) -> list[list[int]]:
    """Random distinct-term queries, ``per_size`` for every term count.

    With ``lengths`` given, only lists longer than ``min_size`` are sampled.
    """
    rng = np.random.default_rng(seed)
    pool = np.arange(nlists)
    if lengths is not None:
        pool = pool[np.asarray(lengths) > min_size]
    out = []
    for k in sizes:
        if k > pool.size:
            continue
        for _ in range(per_size):
            out.append([int(t) for t in rng.choice(pool, size=k, replace=False)])
    return out
