"""Plain bitvector with O(1) rank and select via precomputed tables."""

from __future__ import annotations

from array import array
from typing import Iterable


class Bitvector:
    """Static bitvector over positions 1..n.

    rank(p, b) counts occurrences of bit b in positions 1..p; select(k, b)
    returns the position of the k-th occurrence.  Plain prefix-sum and
    position tables give O(1) queries at O(n) words of space.
    """

    __slots__ = ("_bits", "_rank1", "_pos1", "_pos0")

    def __init__(self, bits: Iterable[int]) -> None:
        data = bytes(1 if b else 0 for b in bits)
        self._bits = data
        rank1 = array("q", [0] * (len(data) + 1))
        pos1 = array("q")
        pos0 = array("q")
        acc = 0
        for i, b in enumerate(data, start=1):
            acc += b
            rank1[i] = acc
            (pos1 if b else pos0).append(i)
        self._rank1 = rank1
        self._pos1 = pos1
        self._pos0 = pos0

    def __len__(self) -> int:
        return len(self._bits)

    def get(self, p: int) -> int:
        if not 1 <= p <= len(self._bits):
            raise IndexError(f"position {p} out of range 1..{len(self._bits)}")
        return self._bits[p - 1]

    def rank(self, p: int, b: int = 1) -> int:
        """Count of bit b in positions 1..p; rank(0) = 0."""
        if not 0 <= p <= len(self._bits):
            raise IndexError(f"position {p} out of range 0..{len(self._bits)}")
        ones = self._rank1[p]
        return ones if b else p - ones

    def select(self, k: int, b: int = 1) -> int:
        """Position of the k-th occurrence of bit b (k is 1-based)."""
        table = self._pos1 if b else self._pos0
        if not 1 <= k <= len(table):
            raise ValueError(f"fewer than {k} occurrences of bit {b}")
        return table[k - 1]

    def count(self, b: int = 1) -> int:
        return len(self._pos1) if b else len(self._pos0)

    def bit_size(self) -> int:
        """Canonical payload size: one bit per position."""
        return len(self._bits)

    def to_bytes(self) -> bytes:
        return bytes(self._bits)

    @classmethod
    def from_bytes(cls, payload: bytes) -> "Bitvector":
        if any(b not in (0, 1) for b in payload):
            raise ValueError("bitvector payload must be 0/1 bytes")
        return cls(payload)
