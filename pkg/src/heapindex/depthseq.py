"""Integer sequence with O(1) access/partial-rank and O(1) select per value."""

from __future__ import annotations

from array import array
from collections.abc import Iterable


class DepthSequence:
    """Static sequence of small non-negative ints, positions 1-based.

    partial_rank(p) counts occurrences of seq[p] within seq[1..p]; select(v, r)
    inverts it.  Backed by per-value occurrence lists plus a flat rank table.
    """

    __slots__ = ("_seq", "_partial", "_positions")

    def __init__(self, values: Iterable[int]) -> None:
        seq = array("q", values)
        partial = array("q", bytes(8 * len(seq)))
        positions: dict[int, array] = {}
        for idx, v in enumerate(seq):
            if v < 0:
                raise ValueError("sequence values must be non-negative")
            occ = positions.get(v)
            if occ is None:
                occ = positions[v] = array("q")
            occ.append(idx + 1)
            partial[idx] = len(occ)
        self._seq = seq
        self._partial = partial
        self._positions = positions

    def __len__(self) -> int:
        return len(self._seq)

    def _check_pos(self, p: int) -> None:
        if not 1 <= p <= len(self._seq):
            raise IndexError(f"position {p} out of range 1..{len(self._seq)}")

    def access(self, p: int) -> int:
        self._check_pos(p)
        return self._seq[p - 1]

    def partial_rank(self, p: int) -> int:
        """Occurrences of the value at p within the prefix ending at p."""
        self._check_pos(p)
        return self._partial[p - 1]

    def select(self, v: int, r: int) -> int:
        """Position of the r-th occurrence of v; ValueError if absent."""
        occ = self._positions.get(v)
        if occ is None or not 1 <= r <= len(occ):
            have = 0 if occ is None else len(occ)
            raise ValueError(f"value {v} has {have} occurrences, asked for #{r}")
        return occ[r - 1]

    def count(self, v: int) -> int:
        occ = self._positions.get(v)
        return 0 if occ is None else len(occ)

    def to_list(self) -> list[int]:
        return list(self._seq)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DepthSequence) and self._seq == other._seq

    def __repr__(self) -> str:
        return f"DepthSequence(len={len(self._seq)})"
