"""Terminated strings over integer code points."""

from __future__ import annotations

from typing import Iterator, Sequence, Union

TextLike = Union[str, bytes, "TerminatedText", Sequence[int]]


class TerminatedText:
    """Immutable string whose last symbol is a unique, strictly smallest terminator.

    Symbols are integer code points so str and bytes inputs share one
    representation; bytes are kept as-is (byte indexing yields ints).
    Positions are 1-based throughout.
    """

    __slots__ = ("codes", "n")

    def __init__(self, codes: Sequence[int]) -> None:
        n = len(codes)
        if n == 0:
            raise ValueError("text must contain at least a terminator symbol")
        term = codes[n - 1]
        count = codes.count(term) if isinstance(codes, (bytes, bytearray)) else sum(
            1 for c in codes if c == term)
        if count != 1:
            raise ValueError("terminator occurs more than once")
        if n > 1 and min(codes) != term:
            raise ValueError("terminator is not the smallest symbol")
        self.codes = codes
        self.n = n

    @classmethod
    def from_text(cls, text: TextLike) -> "TerminatedText":
        """Wrap str/bytes/int-sequence input; no terminator is appended here."""
        if isinstance(text, TerminatedText):
            return text
        if isinstance(text, str):
            return cls(tuple(ord(c) for c in text))
        if isinstance(text, (bytes, bytearray)):
            return cls(bytes(text))
        return cls(tuple(int(c) for c in text))

    @property
    def terminator(self) -> int:
        return self.codes[self.n - 1]

    def at(self, i: int) -> int:
        """Code point at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.codes[i - 1]

    def suffix(self, i: int) -> Sequence[int]:
        """Code points of the suffix starting at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.codes[i - 1:]

    def as_str(self) -> str:
        return "".join(chr(c) for c in self.codes)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TerminatedText) and tuple(self.codes) == tuple(other.codes)

    def __hash__(self) -> int:
        return hash(tuple(self.codes))

    def __repr__(self) -> str:
        return f"TerminatedText(n={self.n})"


def pattern_codes(pattern: TextLike) -> tuple[int, ...]:
    """Normalize a search pattern to a tuple of code points."""
    if isinstance(pattern, TerminatedText):
        return tuple(pattern.codes)
    if isinstance(pattern, str):
        return tuple(ord(c) for c in pattern)
    if isinstance(pattern, (bytes, bytearray)):
        return tuple(pattern)
    return tuple(int(c) for c in pattern)
