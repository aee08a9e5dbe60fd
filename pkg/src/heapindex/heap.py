"""Position heap: trie of positions where older (smaller) labels sit above newer."""

from __future__ import annotations

from array import array

from .text import TerminatedText, pattern_codes


class PositionHeap:
    """Position heap of a terminated text; node id equals its position label.

    Node 0 is the unlabelled root; node i (1-based) was inserted for suffix
    S[i..n] and its path label is a prefix of that suffix.  Every parent label
    is smaller than all labels below it.  finalize() freezes CSR child lists
    (sorted by edge character), the preorder permutation and subtree sizes.
    """

    __slots__ = ("n", "parent", "echar", "depth", "_child", "_cstart", "_clabel",
                 "pre", "pre_label", "size", "height", "_mr")

    def __init__(self, n: int) -> None:
        self.n = n
        self.parent = array("q", bytes(8 * (n + 1)))
        self.echar = array("q", bytes(8 * (n + 1)))
        self.depth = array("q", bytes(8 * (n + 1)))
        self.parent[0] = -1
        self.echar[0] = -1
        self._child: dict[int, int] = {}
        self._cstart: array | None = None
        self._clabel: array | None = None
        self.pre: array | None = None
        self.pre_label: array | None = None
        self.size: array | None = None
        self.height = 0
        self._mr: array | None = None

    # -- construction ----------------------------------------------------------

    def attach(self, label: int, parent: int, char: int) -> None:
        key = (parent << 32) | char
        if key in self._child:
            raise ValueError(f"node {parent} already has a child on {char}")
        self._child[key] = label
        self.parent[label] = parent
        self.echar[label] = char
        self.depth[label] = self.depth[parent] + 1

    def child(self, v: int, char: int) -> int | None:
        return self._child.get((v << 32) | char)

    def finalize(self) -> "PositionHeap":
        n = self.n
        keys = sorted(self._child)
        cstart = array("q", bytes(8 * (n + 2)))
        clabel = array("q", bytes(8 * len(keys)))
        for idx, key in enumerate(keys):
            cstart[(key >> 32) + 1] += 1
            clabel[idx] = self._child[key]
        for v in range(1, n + 2):
            cstart[v] += cstart[v - 1]
        pre_label = array("q", bytes(8 * (n + 1)))
        pre = array("q", bytes(8 * (n + 1)))
        stack = [0]
        t = 0
        while stack:
            v = stack.pop()
            pre_label[t] = v
            pre[v] = t
            t += 1
            lo, hi = cstart[v], cstart[v + 1]
            for idx in range(hi - 1, lo - 1, -1):
                stack.append(clabel[idx])
        size = array("q", [1] * (n + 1))
        for t in range(n, 0, -1):
            v = pre_label[t]
            size[self.parent[v]] += size[v]
        self._cstart = cstart
        self._clabel = clabel
        self.pre = pre
        self.pre_label = pre_label
        self.size = size
        self.height = max(self.depth)
        return self

    # -- queries ----------------------------------------------------------------

    def children_of(self, v: int) -> list[int]:
        """Children of v in edge-character order."""
        return list(self._clabel[self._cstart[v]:self._cstart[v + 1]])

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff a is an ancestor of b or a == b (preorder interval test)."""
        ta, tb = self.pre[a], self.pre[b]
        return ta <= tb < ta + self.size[a]

    def subtree_labels(self, v: int) -> list[int]:
        t = self.pre[v]
        return [self.pre_label[k] for k in range(t, t + self.size[v])]

    def path_nodes(self, v: int) -> list[int]:
        """Nodes on the root path of v, from the root's child down to v itself."""
        out = []
        while v != 0:
            out.append(v)
            v = self.parent[v]
        out.reverse()
        return out

    def path_codes(self, v: int) -> tuple[int, ...]:
        return tuple(self.echar[u] for u in self.path_nodes(v))


def build_naive(text: TerminatedText) -> PositionHeap:
    """Insert positions 1..n in order, each at the first missing child slot."""
    codes = text.codes
    n = text.n
    heap = PositionHeap(n)
    child = heap._child
    parent, echar, depth = heap.parent, heap.echar, heap.depth
    for i in range(1, n + 1):
        v = 0
        d = i - 1
        while True:
            c = codes[d]
            key = (v << 32) | c
            nxt = child.get(key)
            if nxt is None:
                child[key] = i
                parent[i] = v
                echar[i] = c
                depth[i] = depth[v] + 1
                break
            v = nxt
            d += 1
    return heap.finalize()


def compute_maximal_reach(heap: PositionHeap, text: TerminatedText) -> array:
    """mr[i] = deepest node whose path label prefixes S[i..n], for i in 1..n."""
    codes = text.codes
    n = text.n
    child = heap._child
    mr = array("q", bytes(8 * (n + 1)))
    for i in range(1, n + 1):
        v = 0
        d = i - 1
        while d < n:
            nxt = child.get((v << 32) | codes[d])
            if nxt is None:
                break
            v = nxt
            d += 1
        mr[i] = v
    return mr


def maximal_reach_of(heap: PositionHeap, text: TerminatedText) -> array:
    """Cached compute_maximal_reach."""
    if heap._mr is None:
        heap._mr = compute_maximal_reach(heap, text)
    return heap._mr


def search(heap: PositionHeap, text: TerminatedText, pattern,
           trace: list | None = None) -> list[int]:
    """All occurrences of pattern in the text, by multi-round heap descent.

    Each round consumes the longest matchable chunk of the remaining pattern;
    candidate positions survive a round only if their continuation stays on
    the descent path, checked through maximal-reach pointers.  O(m^2 + occ)
    node inspections overall.
    """
    pat = pattern_codes(pattern)
    m = len(pat)
    if m == 0:
        raise ValueError("empty pattern")
    mr = maximal_reach_of(heap, text)
    n = heap.n
    dcum = 0
    first = True
    cand: list[int] = []
    while True:
        v = 0
        d = 0
        while dcum + d < m:
            nxt = heap.child(v, pat[dcum + d])
            if nxt is None:
                break
            v = nxt
            d += 1
        full = dcum + d == m
        if first:
            if full:
                hits = set(heap.subtree_labels(v))
                hits.update(i for i in heap.path_nodes(v)
                            if heap.is_ancestor(v, mr[i]))
                result = sorted(hits)
                if trace is not None:
                    trace.append({"locus": v, "depth": d, "full": True,
                                  "candidates": result})
                return result
            cand = [i for i in heap.path_nodes(v) if mr[i] == v] if d else []
            first = False
        elif full:
            hits = []
            for i in cand:
                j = i + dcum
                if j > n:
                    continue
                if heap.is_ancestor(v, j):
                    hits.append(i)
                elif heap.is_ancestor(j, v) and j != v and heap.is_ancestor(v, mr[j]):
                    hits.append(i)
            result = sorted(hits)
            if trace is not None:
                trace.append({"locus": v, "depth": d, "full": True,
                              "candidates": result})
            return result
        else:
            cand = [i for i in cand
                    if i + dcum <= n and heap.is_ancestor(i + dcum, v)
                    and mr[i + dcum] == v]
        if trace is not None:
            trace.append({"locus": v, "depth": d, "full": False,
                          "candidates": sorted(cand)})
        if not cand:
            return []
        dcum += d


def verify_heap(heap: PositionHeap, text: TerminatedText) -> None:
    """Check structural invariants; raises ValueError on the first violation."""
    n = heap.n
    if text.n != n:
        raise ValueError("text length does not match heap size")
    codes = text.codes
    seen = 0
    for v in range(n + 1):
        for c in heap.children_of(v):
            if heap.parent[c] != v:
                raise ValueError(f"child link {v}->{c} not mirrored by parent")
            if c <= v and v != 0:
                raise ValueError(f"label order violated on edge {v}->{c}")
            seen += 1
    if seen != n:
        raise ValueError("tree is not connected over all labels")
    for i in range(1, n + 1):
        path = heap.path_codes(i)
        if len(path) > n - i + 1 or tuple(codes[i - 1:i - 1 + len(path)]) != path:
            raise ValueError(f"path label of node {i} does not prefix suffix {i}")
    mr = maximal_reach_of(heap, text)
    for i in range(1, n + 1):
        v = mr[i]
        path = heap.path_codes(v)
        if tuple(codes[i - 1:i - 1 + len(path)]) != path:
            raise ValueError(f"maximal reach of {i} is not a prefix node")
