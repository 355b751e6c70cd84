"""Command line entry point: ``invlist {stats,synth,queries,bench,golden}``.

Exit codes: 0 ok, 1 a verification or golden vector failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys

from ..index import REGISTRY, compute_stats
from . import bench, golden
from .collection import (CollectionError, read_collection, read_queries, synth,
                         synth_queries, write_collection, write_queries)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


def _load(path, min_size: int):
    coll = read_collection(path)
    return coll.filtered(min_size) if min_size else coll


def cmd_stats(args) -> int:
    coll = _load(args.collection, args.min_list_size)
    for key, value in compute_stats(coll).rows():
        print(f"{key}\t{value}")
    return EXIT_OK


def cmd_synth(args) -> int:
    coll = synth(args.lists, args.universe, args.density, args.clustering, args.seed)
    write_collection(coll, args.output)
    print(f"wrote {len(coll.lists)} lists, {coll.integers} integers to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_queries(args) -> int:
    coll = _load(args.collection, args.min_list_size)
    sizes = tuple(int(k) for k in args.sizes.split(","))
    qs = synth_queries(len(coll.lists), args.per_size, sizes, args.seed,
                       lengths=[len(s) for s in coll.lists])
    write_queries(qs, args.output)
    print(f"wrote {len(qs)} queries to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    coll = _load(args.collection, args.min_list_size)
    ops = bench.OPS if args.op == "all" else (args.op,)
    codecs = REGISTRY if "all" in args.codec else tuple(args.codec)
    queries = []
    if set(ops) & {"and", "or"}:
        if not args.queries:
            print("error: --queries is required for and/or", file=sys.stderr)
            return EXIT_USAGE
        queries = read_queries(args.queries, len(coll.lists))
    bound = bench.formula1_bound(coll.lists, coll.universe)
    status = EXIT_OK
    print("\t".join(bench.HEADER))
    for codec in codecs:
        try:
            rows, bits = bench.bench_codec(coll.lists, coll.universe, codec, queries, ops,
                                           args.reps, args.epsilon, args.mode, args.verify)
        except bench.VerificationError as exc:
            print(f"verify FAIL {exc}", file=sys.stderr)
            status = EXIT_VERIFY
            continue
        for row in rows:
            print(row.tsv())
        sys.stdout.flush()
        verdict = "ok" if bits <= bound else ("FAIL" if codec == "ef" else "above")
        print(f"formula1\t{codec}\tbits={bits}\tbound={bound}\t{verdict}", file=sys.stderr)
        if codec == "ef" and bits > bound:
            status = EXIT_VERIFY
        if args.verify:
            print(f"verify ok {codec}", file=sys.stderr)
    return status


def cmd_golden(args) -> int:
    outcomes = golden.run()
    failed = [o for o in outcomes if not o.ok]
    for o in outcomes:
        if o.ok:
            print(f"PASS\t{o.name}")
        else:
            print(f"FAIL\t{o.name}\texpected={o.expected}\tgot={o.got}")
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} golden vectors pass", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invlist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def min_size(sp):
        sp.add_argument("--min-list-size", type=int, default=0,
                        help="keep only lists longer than this (default: keep all)")

    s = sub.add_parser("stats", help="gap statistics of a collection as TSV")
    s.add_argument("collection")
    min_size(s)
    s.set_defaults(fn=cmd_stats)

    s = sub.add_parser("synth", help="write a synthetic collection")
    s.add_argument("--lists", type=int, required=True)
    s.add_argument("--universe", type=int, required=True)
    s.add_argument("--density", type=float, required=True)
    s.add_argument("--clustering", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=cmd_synth)

    s = sub.add_parser("queries", help="sample random queries for a collection")
    s.add_argument("--collection", required=True)
    s.add_argument("--per-size", type=int, default=1000)
    s.add_argument("--sizes", default="2,3,4,5")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", required=True)
    min_size(s)
    s.set_defaults(fn=cmd_queries)

    s = sub.add_parser("bench", help="bits/int, decode and query timings as TSV")
    s.add_argument("--codec", action="append", choices=REGISTRY + ("all",), required=True)
    s.add_argument("--collection", required=True)
    s.add_argument("--queries")
    s.add_argument("--op", choices=bench.OPS + ("all",), default="decode")
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--epsilon", type=float, default=0.03)
    s.add_argument("--mode", choices=("plain", "leftmost", "centered"), default="leftmost")
    s.add_argument("--verify", action="store_true", help="check every answer against the oracle first")
    s.add_argument("--seed", type=int, default=0, help="accepted for symmetry; bench is deterministic")
    min_size(s)
    s.set_defaults(fn=cmd_bench)

    s = sub.add_parser("golden", help="check the published example vectors")
    s.set_defaults(fn=cmd_golden)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (CollectionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
