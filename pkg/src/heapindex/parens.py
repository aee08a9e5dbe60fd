"""Balanced-parentheses tree encoding, optionally with interleaved star symbols."""

from __future__ import annotations

from array import array

OPEN, CLOSE, STAR = ord("("), ord(")"), ord("*")


class ParenTree:
    """Tree over a symbol stream of '(', ')' and '*'.

    Node identifiers are 0-based preorder ranks (root = 0).  Star symbols are
    numbered 1..star_count in stream order.  All tables are precomputed, so
    every query is O(1) except children(), which is O(#children).
    """

    __slots__ = ("_stream", "_open_pos", "_close_pos", "_parent", "_depth",
                 "_opens_before", "_star_pos", "_star_host")

    def __init__(self, stream: str | bytes) -> None:
        if isinstance(stream, str):
            stream = stream.encode("ascii")
        if not stream:
            raise ValueError("empty parenthesis stream")
        length = len(stream)
        opens_before = array("q", [0] * (length + 1))
        open_pos = array("q")
        close_pos = array("q")
        parent = array("q")
        depth = array("q")
        star_pos = array("q")
        star_host = array("q")
        stack: list[int] = []
        for pos, sym in enumerate(stream):
            opens_before[pos + 1] = opens_before[pos] + (1 if sym == OPEN else 0)
            if sym == OPEN:
                node = len(open_pos)
                open_pos.append(pos)
                close_pos.append(-1)
                parent.append(stack[-1] if stack else -1)
                depth.append(len(stack))
                stack.append(node)
            elif sym == CLOSE:
                if not stack:
                    raise ValueError("unbalanced parentheses: extra close")
                close_pos[stack.pop()] = pos
            elif sym == STAR:
                if not stack:
                    raise ValueError("star outside the root pair")
                star_pos.append(pos)
                star_host.append(stack[-1])
            else:
                raise ValueError(f"bad symbol {chr(sym)!r} in parenthesis stream")
        if stack:
            raise ValueError("unbalanced parentheses: unclosed open")
        if stream[0] != OPEN:
            raise ValueError("stream must start at the root open")
        if close_pos[0] != length - 1:
            raise ValueError("symbols outside the root pair")
        self._stream = bytes(stream)
        self._open_pos = open_pos
        self._close_pos = close_pos
        self._parent = parent
        self._depth = depth
        self._opens_before = opens_before
        self._star_pos = star_pos
        self._star_host = star_host

    # -- basic shape ---------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._open_pos)

    @property
    def star_count(self) -> int:
        return len(self._star_pos)

    def _check_node(self, t: int) -> None:
        if not 0 <= t < self.node_count:
            raise IndexError(f"node rank {t} out of range 0..{self.node_count - 1}")

    def parent(self, t: int) -> int | None:
        self._check_node(t)
        p = self._parent[t]
        return None if p < 0 else p

    def depth(self, t: int) -> int:
        self._check_node(t)
        return self._depth[t]

    def children(self, t: int) -> list[int]:
        self._check_node(t)
        out = []
        pos = self._open_pos[t] + 1
        end = self._close_pos[t]
        while pos < end:
            sym = self._stream[pos]
            if sym == OPEN:
                child = self._opens_before[pos]
                out.append(child)
                pos = self._close_pos[child] + 1
            else:
                pos += 1
        return out

    def subtree_size(self, t: int) -> int:
        self._check_node(t)
        return self._opens_before[self._close_pos[t]] - self._opens_before[self._open_pos[t]]

    def subtree_nodes(self, t: int) -> range:
        """Preorder ranks of the subtree rooted at t (contiguous by preorder)."""
        return range(t, t + self.subtree_size(t))

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff a is an ancestor of b or a == b."""
        self._check_node(a)
        self._check_node(b)
        return (self._open_pos[a] <= self._open_pos[b]
                and self._close_pos[b] <= self._close_pos[a])

    # -- stars ----------------------------------------------------------------

    def _check_star(self, k: int) -> None:
        if not 1 <= k <= self.star_count:
            raise IndexError(f"star index {k} out of range 1..{self.star_count}")

    def star_host(self, k: int) -> int:
        """Preorder rank of the node whose pair most tightly encloses star k."""
        self._check_star(k)
        return self._star_host[k - 1]

    def star_open_rank(self, k: int) -> int:
        """(number of opens strictly before star k) - 1."""
        self._check_star(k)
        return self._opens_before[self._star_pos[k - 1]] - 1

    def stars_in(self, t: int) -> int:
        """Number of stars hosted directly inside node t's pair (not descendants)."""
        self._check_node(t)
        return sum(1 for h in self._star_host if h == t)

    # -- serialization --------------------------------------------------------

    def to_string(self) -> str:
        return self._stream.decode("ascii")

    def bit_size(self) -> int:
        """Canonical payload size: 2 bits per 3-letter symbol."""
        return 2 * len(self._stream)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParenTree) and self._stream == other._stream

    def __repr__(self) -> str:
        return f"ParenTree(nodes={self.node_count}, stars={self.star_count})"


def plain_paren_stream(children: list[list[int]], root: int = 0) -> str:
    """Preorder '('/')' stream of a tree given as child lists."""
    out: list[str] = []
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        node, closing = stack.pop()
        if closing:
            out.append(")")
            continue
        out.append("(")
        stack.append((node, True))
        stack.extend((c, False) for c in reversed(children[node]))
    return "".join(out)
