"""Bitvector rank/select against brute-force counting."""

from __future__ import annotations

import random

import pytest

from heapindex.bits import Bitvector


def brute_rank(bits: list[int], p: int, b: int) -> int:
    return sum(1 for x in bits[:p] if x == b)


def brute_select(bits: list[int], k: int, b: int) -> int:
    seen = 0
    for i, x in enumerate(bits):
        if x == b:
            seen += 1
            if seen == k:
                return i + 1
    raise ValueError


def test_small_fixed():
    bv = Bitvector([1, 0, 1, 1, 0])
    assert bv.bit_size() == 5
    assert [bv.get(p) for p in range(1, 6)] == [1, 0, 1, 1, 0]
    assert [bv.rank(p) for p in range(6)] == [0, 1, 1, 2, 3, 3]
    assert [bv.rank(p, 0) for p in range(6)] == [0, 0, 1, 1, 1, 2]
    assert bv.select(1) == 1
    assert bv.select(3) == 4
    assert bv.select(2, 0) == 5
    assert bv.count(1) == 3
    assert bv.count(0) == 2


def test_random_matches_brute():
    rng = random.Random(0xB175)
    for _ in range(50):
        n = rng.randrange(1, 200)
        bits = [rng.randrange(2) for _ in range(n)]
        bv = Bitvector(bits)
        for p in range(n + 1):
            assert bv.rank(p) == brute_rank(bits, p, 1)
            assert bv.rank(p, 0) == brute_rank(bits, p, 0)
        for b in (0, 1):
            total = bits.count(b)
            for k in range(1, total + 1):
                assert bv.select(k, b) == brute_select(bits, k, b)


def test_errors():
    bv = Bitvector([1, 0, 1])
    with pytest.raises(IndexError):
        bv.rank(4)
    with pytest.raises(IndexError):
        bv.rank(-1)
    with pytest.raises(ValueError):
        bv.select(0)
    with pytest.raises(ValueError):
        bv.select(3)
    with pytest.raises(ValueError):
        bv.select(2, 0)


def test_roundtrip():
    bits = [1, 1, 0, 1, 0, 0, 1]
    bv = Bitvector(bits)
    again = Bitvector.from_bytes(bv.to_bytes())
    assert [again.get(p) for p in range(1, len(bits) + 1)] == bits
    with pytest.raises(ValueError):
        Bitvector.from_bytes(b"\x02\x00")
