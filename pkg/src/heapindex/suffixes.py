"""Suffix-array construction and rank-side lookups for terminated texts."""

from __future__ import annotations

from array import array
from typing import Callable

import numpy as np

from .bits import Bitvector
from .text import TerminatedText


def _doubling_order(codes) -> np.ndarray:
    """0-based suffix start indices in lexicographic order, by prefix doubling."""
    if isinstance(codes, (bytes, bytearray)):
        a = np.frombuffer(bytes(codes), dtype=np.uint8).astype(np.int64)
    else:
        a = np.asarray(codes, dtype=np.int64)
    n = len(a)
    _, rank = np.unique(a, return_inverse=True)
    rank = rank.astype(np.int64)
    order = np.argsort(rank, kind="stable")
    k = 1
    while rank[order[-1]] != n - 1:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        order = np.lexsort((key2, rank))
        changed = (rank[order[1:]] != rank[order[:-1]]) | (key2[order[1:]] != key2[order[:-1]])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order[0]] = 0
        new_rank[order[1:]] = np.cumsum(changed)
        rank = new_rank
        k *= 2
    return order


class SuffixBundle:
    """Suffix array, inverse, and lazily computed LCP array of one text.

    Ranks and positions are 1-based; lcp_at(p) is the longest common prefix of
    the suffixes ranked p-1 and p (defined for p in 2..n).
    """

    __slots__ = ("text", "_sa", "_isa", "_lcp")

    def __init__(self, text: TerminatedText, sa: array) -> None:
        self.text = text
        self._sa = sa
        isa = array("q", bytes(8 * len(sa)))
        for p, i in enumerate(sa, start=1):
            isa[i - 1] = p
        self._isa = isa
        self._lcp: array | None = None

    @property
    def n(self) -> int:
        return len(self._sa)

    def sa_at(self, p: int) -> int:
        if not 1 <= p <= len(self._sa):
            raise IndexError(f"rank {p} out of range 1..{len(self._sa)}")
        return self._sa[p - 1]

    def isa_at(self, i: int) -> int:
        if not 1 <= i <= len(self._isa):
            raise IndexError(f"position {i} out of range 1..{len(self._isa)}")
        return self._isa[i - 1]

    def sa_list(self) -> list[int]:
        return list(self._sa)

    def isa_list(self) -> list[int]:
        return list(self._isa)

    def lcp_at(self, p: int) -> int:
        if not 2 <= p <= self.n:
            raise IndexError(f"lcp rank {p} out of range 2..{self.n}")
        if self._lcp is None:
            self._lcp = self._kasai()
        return self._lcp[p]

    def _kasai(self) -> array:
        codes, n = self.text.codes, self.n
        lcp = array("q", bytes(8 * (n + 1)))
        h = 0
        for i0 in range(n):
            r = self._isa[i0]
            if r > 1:
                j0 = self._sa[r - 2] - 1
                while i0 + h < n and j0 + h < n and codes[i0 + h] == codes[j0 + h]:
                    h += 1
                lcp[r] = h
                if h:
                    h -= 1
            else:
                h = 0
        return lcp


def build_suffix_array(text: TerminatedText) -> SuffixBundle:
    """SuffixBundle for text; O(n log^2 n) via numpy prefix doubling."""
    order = _doubling_order(text.codes)
    return SuffixBundle(text, array("q", (int(i) + 1 for i in order)))


class FirstCharIndex:
    """First character of the p-th ranked suffix, via a run-boundary bitvector."""

    __slots__ = ("_bv", "_chars")

    def __init__(self, bundle: SuffixBundle) -> None:
        codes = bundle.text.codes
        bits = []
        chars = array("q")
        prev = None
        for p in range(1, bundle.n + 1):
            c = codes[bundle.sa_at(p) - 1]
            if c != prev:
                bits.append(1)
                chars.append(c)
                prev = c
            else:
                bits.append(0)
        self._bv = Bitvector(bits)
        self._chars = chars

    def char_at_rank(self, p: int) -> int:
        """Code of the first character of the suffix ranked p."""
        return self._chars[self._bv.rank(p) - 1]

    def bit_size(self) -> int:
        """Canonical payload size: the bitvector plus 32 bits per distinct char."""
        return self._bv.bit_size() + 32 * len(self._chars)


class SAAccess:
    """Counted oracle access to SA and its inverse; every call is tallied."""

    __slots__ = ("_sa_fn", "_isa_fn", "n", "calls")

    def __init__(self, sa_fn: Callable[[int], int], isa_fn: Callable[[int], int], n: int) -> None:
        self._sa_fn = sa_fn
        self._isa_fn = isa_fn
        self.n = n
        self.calls = 0

    @classmethod
    def from_bundle(cls, bundle: SuffixBundle) -> "SAAccess":
        return cls(bundle.sa_at, bundle.isa_at, bundle.n)

    def sa(self, p: int) -> int:
        if not 1 <= p <= self.n:
            raise IndexError(f"rank {p} out of range 1..{self.n}")
        self.calls += 1
        return self._sa_fn(p)

    def isa(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        self.calls += 1
        return self._isa_fn(i)

    def reset(self) -> int:
        """Return the tally and zero it."""
        c, self.calls = self.calls, 0
        return c
