"""Published example vectors, checked bit for bit.

Each vector pairs the expected rendering with a zero-argument function that
recomputes it from the library.  ``run`` evaluates them all and reports the
ones that disagree by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import blockcodecs as bc
from .. import canonical as cc
from .. import pointcodes as pc
from ..bitstream import BitBuffer
from ..bitvector import BitVectorRS
from ..dac import DacVector
from ..eliasfano import EliasFano, pef_chunk_cost
from ..interpolative import bic_bits, bic_trace
from ..universepart import RoaringSet


@dataclass
class Vector:
    name: str
    expected: object
    compute: Callable[[], object]


@dataclass
class Outcome:
    name: str
    ok: bool
    expected: object
    got: object


def _words(name, xs, **kw):
    return [pc.codeword(name, x, **kw) for x in xs]


def _binary(x: int) -> str:
    # B(x): x - 1 in as few bits as possible, one bit for x = 1
    v = x - 1
    return pc.codeword("binary", v, width=max(1, v.bit_length()))


def _minbin(x: int, b: int, mode: str = "leftmost") -> str:
    buf = BitBuffer()
    buf.write_minimal_binary(x, b, mode)
    return buf.to_bitstring()


def _canonical_decode(bits: str):
    code = cc.build([1, 3, 3, 5, 5, 5, 5, 7])
    src = BitBuffer.from_bitstring(bits).reader()
    sym = cc.decode(code, src)
    return sym, src.tell()


def _sc(x: int, s: int, c: int) -> str:
    return pc.codeword("scdense", x, s=s, c=c)


def _table5() -> EliasFano:
    return EliasFano([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54, 62], 64)


def _dac() -> DacVector:
    return DacVector([2, 7, 12, 5, 13, 142, 61, 129], 3)


def _simple_rows(family: str):
    return [(format(r["selector"], "04b"), r["integers"], r["widths"][0], r["wasted"])
            for r in bc.simple_table(family)]


def _simple_selector(values) -> str:
    return format(bc.simple_pack_words(values, "simple9")[0] >> 28, "04b")


def vectors() -> list[Vector]:
    ones_to_8 = range(1, 9)
    v = [
        Vector("bin(113) in 7 bits", "1110001", lambda: pc.codeword("binary", 113, width=7)),
        Vector("read 7 bits of 1010100", 84,
               lambda: BitBuffer.from_bitstring("1010100").reader().read_bits(7)),
        Vector("Table 2 U(1..8)", ["0", "10", "110", "1110", "11110", "111110", "1111110", "11111110"],
               lambda: _words("unary", ones_to_8)),
        Vector("Table 2 B(1..8)", ["0", "1", "10", "11", "100", "101", "110", "111"],
               lambda: [_binary(x) for x in ones_to_8]),
        Vector("Table 2 gamma(1..8)",
               ["0", "100", "101", "11000", "11001", "11010", "11011", "1110000"],
               lambda: _words("gamma", ones_to_8)),
        Vector("Table 2 delta(1..8)",
               ["0", "1000", "1001", "10100", "10101", "10110", "10111", "11000000"],
               lambda: _words("delta", ones_to_8)),
        Vector("Table 2 G2(1..8)", ["00", "01", "100", "101", "1100", "1101", "11100", "11101"],
               lambda: _words("golomb", ones_to_8, b=2)),
        Vector("Table 2 ExpG2(1..8)",
               ["000", "001", "010", "011", "10000", "10001", "10010", "10011"],
               lambda: _words("expgolomb", ones_to_8, k=2)),
        Vector("Table 2 Z2(1..8)",
               ["00", "010", "011", "10000", "10001", "10010", "10011", "101000"],
               lambda: _words("zeta", ones_to_8, k=2)),
        Vector("gamma(113)", "1111110110001", lambda: pc.codeword("gamma", 113)),
        Vector("delta(113)", "11011110001", lambda: pc.codeword("delta", 113)),
        Vector("minimal binary b=5 leftmost 0..4", ["00", "01", "10", "110", "111"],
               lambda: [_minbin(x, 5) for x in range(5)]),
        Vector("minimal binary b=8 x=3", "011", lambda: _minbin(3, 8)),
        Vector("Golomb b=5 remainders", ["000", "001", "010", "0110", "0111"],
               lambda: _words("golomb", range(1, 6), b=5)),
        Vector("Golomb b for p=0.1 near 0.69/p", True, lambda: abs(pc.golomb_optimal_b(0.1) - 7) <= 1),
        Vector("Rice k=1 equals G2 on 1..8", _words("golomb", ones_to_8, b=2),
               lambda: _words("rice", ones_to_8, k=1)),
        Vector("ExpG0 equals gamma on 1..64", _words("gamma", range(1, 65)),
               lambda: _words("expgolomb", range(1, 65), k=0)),
        Vector("Z1 equals gamma on 1..64", _words("gamma", range(1, 65)),
               lambda: _words("zeta", range(1, 65), k=1)),
        Vector("Z3(147)", "110010010011", lambda: pc.codeword("zeta", 147, k=3)),
        Vector("Table 3(a) Fibonacci(1..8)",
               ["11", "011", "0011", "1011", "00011", "10011", "01011", "000011"],
               lambda: _words("fibonacci", ones_to_8)),
        Vector("Fibonacci lengths up to 8", [2, 3, 4, 4, 5, 5, 5, 6], lambda: pc.fibonacci_lengths(8)),
        Vector("Fibonacci lengths up to 1", [2], lambda: pc.fibonacci_lengths(1)),
        Vector("Table 3(b) lexicographic codewords",
               ["00", "010", "0110", "0111", "10000", "10001", "10010", "100110"],
               lambda: cc.assign_lexicographic([2, 3, 4, 4, 5, 5, 5, 6])),
        Vector("Table 1(a) codewords",
               ["0", "100", "101", "11000", "11001", "11010", "11011", "1110000"],
               lambda: [cc.build([1, 3, 3, 5, 5, 5, 5, 7]).codeword(x) for x in ones_to_8]),
        Vector("Table 1(b) first", [1, 2, 2, 4, 4, 8, 8],
               lambda: cc.build([1, 3, 3, 5, 5, 5, 5, 7]).first_row()),
        Vector("Table 1(b) values", [0, 64, 64, 96, 96, 112, 112],
               lambda: cc.build([1, 3, 3, 5, 5, 5, 5, 7]).values_row()),
        Vector("Table 1(b) sentinels", (9, 127),
               lambda: (lambda c: (c.first[c.M + 1], c.values[c.M + 1]))(cc.build([1, 3, 3, 5, 5, 5, 5, 7]))),
        Vector("canonical encode(4)", "11000", lambda: cc.build([1, 3, 3, 5, 5, 5, 5, 7]).codeword(4)),
        Vector("canonical encode(6)", "11010", lambda: cc.build([1, 3, 3, 5, 5, 5, 5, 7]).codeword(6)),
        Vector("canonical decode 1010100", (3, 3), lambda: _canonical_decode("1010100")),
        Vector("VByte 65790 groups", "11111110.10000001.00000100",
               lambda: ".".join(format(b, "08b") for b in pc.vbyte_bytes(65790))),
        Vector("Table 4 SC(4,4) 1..20",
               ["000", "001", "010", "011", "100000", "100001", "100010", "100011", "101000", "101001",
                "101010", "101011", "110000", "110001", "110010", "110011", "111000", "111001",
                "111010", "111011"],
               lambda: [_sc(x, 4, 4) for x in range(1, 21)]),
        Vector("Table 4 SC(5,3) 1..20",
               ["000", "001", "010", "011", "100", "101000", "101001", "101010", "101011", "101100",
                "110000", "110001", "110010", "110011", "110100", "111000", "111001", "111010",
                "111011", "111100"],
               lambda: [_sc(x, 5, 3) for x in range(1, 21)]),
        Vector("SC(5,3) of 13", "110010", lambda: _sc(13, 5, 3)),
        Vector("Simple9 selector table",
               [("0000", 28, 1, 0), ("0001", 14, 2, 0), ("0010", 9, 3, 1), ("0011", 7, 4, 0),
                ("0100", 5, 5, 3), ("0101", 4, 7, 0), ("0110", 3, 9, 1), ("0111", 2, 14, 0),
                ("1000", 1, 28, 0)],
               lambda: _simple_rows("simple9")),
        Vector("Simple9 28 ones use selector 0000", "0000", lambda: _simple_selector([1] * 28)),
        Vector("Simple9 14 values below 4 use selector 0001", "0001", lambda: _simple_selector([3] * 14)),
        Vector("Simple9 2^27 uses selector 1000", "1000", lambda: _simple_selector([1 << 27])),
        Vector("Simple8b wasteful rows", 2,
               lambda: sum(1 for r in bc.simple_table("simple8b") if r["wasted"])),
        Vector("PFor slots and exceptions",
               ([1, 2, 5, "ESC", 7, 10, 3, "ESC", 4, 0, "ESC"], [21, 16, 34]),
               lambda: bc.pfor_layout([3, 4, 7, 21, 9, 12, 5, 16, 6, 2, 34], 2, 4)),
        Vector("Table 5 H", "11101110101011001010", lambda: _table5().high_bits()),
        Vector("Table 5 L", "011100111101110111101001100110110110", lambda: _table5().low_bits()),
        Vector("Table 5 ell", 3, lambda: _table5().ell),
        Vector("EF Access(4)", 13, lambda: _table5().access(4)),
        Vector("EF Access(1), Access(12)", (3, 62), lambda: (_table5().access(1), _table5().access(12))),
        Vector("EF Select1(4) on H", 5, lambda: _table5().high_vector().select1(4)),
        Vector("EF Select0(3) on H", 10, lambda: _table5().high_vector().select0(3)),
        Vector("EF NextGEQ(30) range", (8, 9), lambda: _table5().bucket_bounds(30)),
        Vector("EF NextGEQ(30)", 36, lambda: _table5().nextgeq(30)),
        Vector("PEF chunk M=40 b=5", ("ef", 25), lambda: pef_chunk_cost(5, 40)),
        Vector("PEF chunk M=40 b=30", ("bitmap", 40), lambda: pef_chunk_cost(30, 40)),
        Vector("PEF chunk b=M", ("full", 0), lambda: pef_chunk_cost(40, 40)),
        Vector("Roaring 4095 values -> array", ["array"],
               lambda: RoaringSet(np.arange(0, 8190, 2)).kinds()),
        Vector("Roaring 4096 values -> bitmap", ["bitmap"],
               lambda: RoaringSet(np.arange(0, 8192, 2)).kinds()),
        Vector("Fig. 2 pre-order values", [10, 5, 3, 0, 5, 18, 5, 3, 1, 15],
               lambda: bic_trace([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54], 0, 62, "plain")[0]),
        Vector("Fig. 2 bit lengths", [6, 4, 3, 2, 3, 6, 5, 4, 5, 5],
               lambda: bic_trace([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54], 0, 62, "plain")[1]),
        Vector("Fig. 2 total bits", 43,
               lambda: bic_bits([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54], 0, 62, "plain")),
        Vector("BIC 14 within [14, 14]", 0, lambda: bic_bits([14], 14, 14, "plain")),
        Vector("Rank1(6) on 010001101110", 2, lambda: BitVectorRS.from_bitstring("010001101110").rank1(6)),
        Vector("Rank0(8) on 010001101110", 5, lambda: BitVectorRS.from_bitstring("010001101110").rank0(8)),
        Vector("DAC B_1", "00101111", lambda: _dac().control_bitstring(1)),
        Vector("DAC B_2 ones", 2, lambda: _dac().control_bitstring(2).count("1")),
        Vector("DAC B_3", "00", lambda: _dac().control_bitstring(3)),
        Vector("DAC levels", 3, lambda: _dac().levels),
        Vector("DAC Access(5)", 13, lambda: _dac().access(5)),
    ]
    return v


def run(vecs=None) -> list[Outcome]:
    out = []
    for vec in vecs if vecs is not None else vectors():
        try:
            got = vec.compute()
        except Exception as exc:  # a crash is a failure of that vector only
            got = f"{type(exc).__name__}: {exc}"
        out.append(Outcome(vec.name, got == vec.expected, vec.expected, got))
    return out
