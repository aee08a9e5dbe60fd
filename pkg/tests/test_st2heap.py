"""Suffix-tree conversion must reproduce the naively built position heap."""

from __future__ import annotations

import random

from heapindex.heap import build_naive, maximal_reach_of, search, verify_heap
from heapindex.st2heap import suffix_tree_to_heap
from heapindex.suffixes import build_suffix_array
from heapindex.suffixtree import sa_to_suffix_tree
from heapindex.text import TerminatedText

from oracles import occurrences, random_text, sample_pattern, st2heap_inserted_labels

S0 = "abaababbabbab$"


def convert(s: str):
    text = TerminatedText.from_text(s)
    tree = sa_to_suffix_tree(build_suffix_array(text))
    heap, info = suffix_tree_to_heap(tree, text)
    return text, heap, info


def same_shape(a, b) -> bool:
    return (a.n == b.n
            and list(a.parent) == list(b.parent)
            and list(a.echar) == list(b.echar)
            and list(a.pre_label) == list(b.pre_label))


def test_worked_example():
    text, heap, info = convert(S0)
    assert same_shape(heap, build_naive(text))
    assert info.inserted == {3, 6, 7, 9, 10}
    assert info.inserted == st2heap_inserted_labels(S0)
    assert info.marked_final == 15  # root plus one node per label
    mr = maximal_reach_of(heap, text)
    assert list(mr)[1:] == [4, 5, 3, 4, 8, 9, 10, 8, 9, 10, 11, 12, 13, 14]
    verify_heap(heap, text)


def test_small_edges():
    for s in ("$", "a$", "aa$", "ab$", "aaaaaa$", "abcabc$"):
        text, heap, info = convert(s)
        assert same_shape(heap, build_naive(text))
        assert info.marked_final == text.n + 1


def test_random_equivalence():
    rng = random.Random(0x57E2)
    saw_la = False
    for _ in range(80):
        n = rng.randrange(1, 300)
        s = random_text(rng, n, rng.choice([1, 2, 4, 26]))
        text, heap, info = convert(s)
        assert same_shape(heap, build_naive(text))
        assert info.inserted == st2heap_inserted_labels(s)
        saw_la = saw_la or info.la_queries > 0
        verify_heap(heap, text)
    assert saw_la  # wide alphabets must exercise the level-ancestor path


def test_converted_heap_searches():
    rng = random.Random(0x57E3)
    for _ in range(25):
        n = rng.randrange(2, 150)
        s = random_text(rng, n, rng.choice([2, 4]))
        text, heap, _ = convert(s)
        for _ in range(4):
            pat = sample_pattern(rng, s, 10)
            assert set(search(heap, text, pat)) == occurrences(s, pat)
