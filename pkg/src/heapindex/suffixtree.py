"""Suffix tree from SA+LCP, with level-ancestor and marked-ancestor services."""

from __future__ import annotations

from array import array

from .suffixes import SuffixBundle
from .text import TerminatedText


class SuffixTree:
    """Static suffix tree; node 0 is the root, leaves carry lex ranks 1..n.

    Built from the suffix array and LCP array with a single stack pass, so
    children lists come out sorted by edge character for free.
    """

    __slots__ = ("text", "sd", "parent", "children", "lo", "hi",
                 "node_depth", "_leaf_of_rank", "_isa")

    def __init__(self, bundle: SuffixBundle) -> None:
        text = bundle.text
        n = bundle.n
        sd = array("q", [0])
        parent = array("q", [-1])
        children: list[list[int]] = [[]]
        lo = array("q", [1])
        hi = array("q", [n])
        leaf_of_rank = array("q", bytes(8 * (n + 1)))

        def new_node(depth: int, par: int) -> int:
            sd.append(depth)
            parent.append(par)
            children.append([])
            lo.append(0)
            hi.append(0)
            return len(sd) - 1

        stack = [0]
        for p in range(1, n + 1):
            suf_len = n - bundle.sa_at(p) + 1
            l = bundle.lcp_at(p) if p > 1 else 0
            last = -1
            while sd[stack[-1]] > l:
                last = stack.pop()
            top = stack[-1]
            if sd[top] < l:
                # split: interpose a node of string depth l above `last`
                u = new_node(l, top)
                children[top][-1] = u
                parent[last] = u
                children[u].append(last)
                stack.append(u)
                top = u
            leaf = new_node(suf_len, top)
            children[top].append(leaf)
            lo[leaf] = hi[leaf] = p
            leaf_of_rank[p] = leaf
            stack.append(leaf)

        # leaf intervals for internal nodes and node depths, one preorder pass
        node_depth = array("q", bytes(8 * len(sd)))
        order: list[int] = []
        dfs = [0]
        while dfs:
            v = dfs.pop()
            order.append(v)
            for c in children[v]:
                node_depth[c] = node_depth[v] + 1
                dfs.append(c)
        for v in reversed(order):
            if children[v]:
                lo[v] = lo[children[v][0]]
                hi[v] = hi[children[v][-1]]

        self.text = text
        self.sd = sd
        self.parent = parent
        self.children = children
        self.lo = lo
        self.hi = hi
        self.node_depth = node_depth
        self._leaf_of_rank = leaf_of_rank
        self._isa = bundle.isa_at

    @property
    def node_count(self) -> int:
        return len(self.sd)

    @property
    def n(self) -> int:
        return self.hi[0]

    def leaf_of_rank(self, p: int) -> int:
        if not 1 <= p <= self.n:
            raise IndexError(f"rank {p} out of range 1..{self.n}")
        return self._leaf_of_rank[p]

    def leaf_of_pos(self, i: int) -> int:
        return self.leaf_of_rank(self._isa(i))

    def rep_pos(self, v: int) -> int:
        """A text position whose suffix runs through v (the leftmost one)."""
        # lo[v] is the smallest lex rank below v; its suffix start represents v
        return self.text.n - self.sd[self._leaf_of_rank[self.lo[v]]] + 1

    def leaf_count(self, v: int) -> int:
        return self.hi[v] - self.lo[v] + 1

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def edge_char(self, v: int) -> int:
        """Code of the first character on the edge entering v."""
        return self.text.at(self.rep_pos(v) + self.sd[self.parent[v]])

    def path_codes(self, v: int) -> tuple[int, ...]:
        r = self.rep_pos(v)
        return tuple(self.text.at(r + k) for k in range(self.sd[v]))


def sa_to_suffix_tree(bundle: SuffixBundle) -> SuffixTree:
    """Suffix tree of the bundle's text; O(n) given SA and LCP."""
    return SuffixTree(bundle)


class LevelAncestorService:
    """level_ancestor(v, d): ancestor of v at node depth d, via binary lifting."""

    __slots__ = ("_tree", "_up", "_levels")

    def __init__(self, tree: SuffixTree) -> None:
        m = tree.node_count
        levels = max(1, max(tree.node_depth).bit_length())
        up = [array("q", tree.parent)]
        up[0][0] = 0
        for k in range(1, levels):
            prev = up[-1]
            up.append(array("q", (prev[prev[v]] for v in range(m))))
        self._tree = tree
        self._up = up
        self._levels = levels

    def level_ancestor(self, v: int, d: int) -> int:
        """Ancestor of v whose node depth is exactly d."""
        cur = self._tree.node_depth[v]
        if not 0 <= d <= cur:
            raise ValueError(f"no ancestor of node {v} at depth {d}")
        delta = cur - d
        k = 0
        while delta:
            if delta & 1:
                v = self._up[k][v]
            delta >>= 1
            k += 1
        return v


class MarkedAncestorService:
    """Mark nodes; query the lowest marked ancestor-or-self by walking up."""

    __slots__ = ("_tree", "_marked", "marked_count")

    def __init__(self, tree: SuffixTree) -> None:
        self._tree = tree
        self._marked = bytearray(tree.node_count)
        self.marked_count = 0

    def mark(self, v: int) -> None:
        if not self._marked[v]:
            self._marked[v] = 1
            self.marked_count += 1

    def is_marked(self, v: int) -> bool:
        return bool(self._marked[v])

    def lowest_marked_ancestor(self, v: int) -> int:
        """Nearest marked node on the root path of v, including v itself."""
        while not self._marked[v]:
            if v == 0:
                raise ValueError("root is not marked; no marked ancestor")
            v = self._tree.parent[v]
        return v
