"""Suffix array / inverse / LCP / first-char rank index against naive oracles."""

from __future__ import annotations

import random

import pytest

from heapindex.suffixes import FirstCharIndex, SAAccess, build_suffix_array
from heapindex.text import TerminatedText

from oracles import naive_inverse, naive_lcp, naive_suffix_array, random_text

S0 = "abaababbabbab$"
SA0 = [14, 3, 12, 1, 4, 9, 6, 13, 2, 11, 8, 5, 10, 7]
ISA0 = [4, 9, 2, 5, 12, 7, 14, 11, 6, 13, 10, 3, 8, 1]


def test_worked_example():
    bundle = build_suffix_array(TerminatedText.from_text(S0))
    assert bundle.sa_list() == SA0
    assert bundle.isa_list() == ISA0
    assert bundle.sa_at(8) == 13 and bundle.isa_at(13) == 8
    lcp = naive_lcp(S0, SA0)
    assert [bundle.lcp_at(p) for p in range(2, 15)] == lcp[1:]
    with pytest.raises(IndexError):
        bundle.sa_at(0)
    with pytest.raises(IndexError):
        bundle.isa_at(15)
    with pytest.raises(IndexError):
        bundle.lcp_at(1)


def test_random_vs_naive():
    rng = random.Random(0x5A01)
    for _ in range(60):
        n = rng.randrange(1, 120)
        sigma = rng.choice([1, 2, 4, 26])
        s = random_text(rng, n, sigma)
        bundle = build_suffix_array(TerminatedText.from_text(s))
        sa = naive_suffix_array(s)
        assert bundle.sa_list() == sa
        assert bundle.isa_list() == naive_inverse(sa)
        if n > 1:
            lcp = naive_lcp(s, sa)
            assert [bundle.lcp_at(p) for p in range(2, n + 1)] == lcp[1:]


def test_tuple_alphabet():
    codes = (5, 3, 5, 3, 3, 7, 1)
    bundle = build_suffix_array(TerminatedText(codes))
    assert bundle.sa_list() == naive_suffix_array(codes)


def test_first_char_index():
    bundle = build_suffix_array(TerminatedText.from_text(S0))
    fci = FirstCharIndex(bundle)
    assert fci.char_at_rank(1) == ord("$")
    for p in range(2, 8):
        assert fci.char_at_rank(p) == ord("a")
    for p in range(8, 15):
        assert fci.char_at_rank(p) == ord("b")
    assert fci.bit_size() == 14 + 32 * 3


def test_sa_access_counts():
    bundle = build_suffix_array(TerminatedText.from_text(S0))
    acc = SAAccess.from_bundle(bundle)
    assert acc.sa(8) == 13
    assert acc.isa(13) == 8
    assert acc.calls == 2
    assert acc.reset() == 2 and acc.calls == 0
    with pytest.raises(IndexError):
        acc.sa(0)
    with pytest.raises(IndexError):
        acc.isa(15)
