"""Depth-sequence bridge between a position heap and the suffix array."""

from __future__ import annotations

from .depthseq import DepthSequence
from .heap import PositionHeap, build_naive, maximal_reach_of
from .parens import ParenTree
from .suffixes import FirstCharIndex, SAAccess, SuffixBundle, build_suffix_array
from .text import TerminatedText, pattern_codes


def build_depth_arrays(heap: PositionHeap,
                       bundle: SuffixBundle) -> tuple[DepthSequence, DepthSequence]:
    """D = node depths in suffix-rank order, E = node depths in preorder.

    Among nodes of equal depth, rank order and preorder agree, which is what
    makes the two sequences a two-way bridge.
    """
    n = heap.n
    d_seq = DepthSequence(heap.depth[bundle.sa_at(p)] for p in range(1, n + 1))
    e_seq = DepthSequence(heap.depth[heap.pre_label[t]] for t in range(1, n + 1))
    return d_seq, e_seq


class HeapArrayBridge:
    """Suffix-array and inverse access recovered from the heap plus D and E."""

    __slots__ = ("heap", "d_seq", "e_seq")

    def __init__(self, heap: PositionHeap, d_seq: DepthSequence, e_seq: DepthSequence) -> None:
        self.heap = heap
        self.d_seq = d_seq
        self.e_seq = e_seq

    def sa_at(self, p: int) -> int:
        t = self.e_seq.select(self.d_seq.access(p), self.d_seq.partial_rank(p))
        return self.heap.pre_label[t]

    def isa_at(self, i: int) -> int:
        if not 1 <= i <= self.heap.n:
            raise IndexError(f"position {i} out of range 1..{self.heap.n}")
        t = self.heap.pre[i]
        return self.d_seq.select(self.e_seq.access(t), self.e_seq.partial_rank(t))


def heap_parens(heap: PositionHeap) -> str:
    """Plain preorder parenthesis stream of the heap (children in char order)."""
    out: list[str] = []
    stack: list[int | None] = [0]
    while stack:
        v = stack.pop()
        if v is None:
            out.append(")")
            continue
        out.append("(")
        stack.append(None)
        stack.extend(reversed(heap.children_of(v)))
    return "".join(out)


def heap_augmented_parens(heap: PositionHeap, text: TerminatedText,
                          bundle: SuffixBundle) -> str:
    """Heap parens with one star per suffix rank, hosted at its maximal reach.

    Inside a host, a star sorts by the first text character past the host's
    path label (an exhausted suffix sorts before everything); that never
    collides with a child edge character, so the merge is unambiguous.
    """
    n = heap.n
    mr = maximal_reach_of(heap, text)
    codes = text.codes
    stars: dict[int, list[tuple[int, int]]] = {}
    for k in range(1, n + 1):
        i = bundle.sa_at(k)
        host = mr[i]
        d = heap.depth[host]
        cont = codes[i - 1 + d] if i + d <= n else -1
        stars.setdefault(host, []).append((cont, k))
    out: list[str] = []
    CLOSE, STAR, NODE = 0, 1, 2
    stack: list[tuple[int, int]] = [(NODE, 0)]
    while stack:
        kind, v = stack.pop()
        if kind == CLOSE:
            out.append(")")
            continue
        if kind == STAR:
            out.append("*")
            continue
        out.append("(")
        stack.append((CLOSE, v))
        merged = [(cont, True, k) for cont, k in stars.get(v, ())]
        merged += [(heap.echar[c], False, c) for c in heap.children_of(v)]
        merged.sort()
        for _, is_star, x in reversed(merged):
            stack.append((STAR, x) if is_star else (NODE, x))
    return "".join(out)


class SimulatedHeap:
    """Heap node access simulated over SA/ISA calls plus succinct tables.

    Public node handles are 1-based preorder visit indices (the root is 1);
    labels and text positions stay 1-based.  Every operation spends O(1)
    SA/ISA primitive calls, all tallied on the access object.
    """

    __slots__ = ("acc", "pt", "d_seq", "e_seq", "fci")

    def __init__(self, acc: SAAccess, pt: ParenTree, d_seq: DepthSequence,
                 e_seq: DepthSequence, fci: FirstCharIndex) -> None:
        if pt.node_count != acc.n + 1 or pt.star_count != acc.n:
            raise ValueError("parenthesis stream does not fit the text length")
        self.acc = acc
        self.pt = pt
        self.d_seq = d_seq
        self.e_seq = e_seq
        self.fci = fci

    @property
    def n(self) -> int:
        return self.acc.n

    def _check_node(self, t: int) -> None:
        if not 1 <= t <= self.n + 1:
            raise IndexError(f"node index {t} out of range 1..{self.n + 1}")

    # -- O(1)-primitive node operations ---------------------------------------

    def sim_label(self, t: int) -> int:
        """Text position labelling the t-th preorder node (t >= 2)."""
        self._check_node(t)
        if t == 1:
            raise ValueError("the root carries no label")
        d = self.e_seq.access(t - 1)
        p = self.d_seq.select(d, self.e_seq.partial_rank(t - 1))
        return self.acc.sa(p)

    def sim_node_of_label(self, i: int) -> int:
        p = self.acc.isa(i)
        return self.e_seq.select(self.d_seq.access(p), self.d_seq.partial_rank(p)) + 1

    def sim_depth(self, t: int) -> int:
        self._check_node(t)
        return self.pt.depth(t - 1)

    def sim_parent(self, t: int) -> int | None:
        self._check_node(t)
        p = self.pt.parent(t - 1)
        return None if p is None else p + 1

    def sim_children(self, t: int) -> list[int]:
        self._check_node(t)
        return [c + 1 for c in self.pt.children(t - 1)]

    def sim_is_ancestor(self, a: int, b: int) -> bool:
        self._check_node(a)
        self._check_node(b)
        return self.pt.is_ancestor(a - 1, b - 1)

    def sim_edge_label(self, t: int) -> str:
        """Character on the edge entering node t."""
        lab = self.sim_label(t)
        d = self.pt.depth(t - 1)
        return chr(self._edge_code_of(lab, d))

    def _edge_code_of(self, lab: int, depth: int) -> int:
        return self.fci.char_at_rank(self.acc.isa(lab + depth - 1))

    def sim_maximal_reach(self, i: int) -> int:
        """Node index of the deepest node whose path label prefixes S[i..n]."""
        return self.pt.star_host(self.acc.isa(i)) + 1

    # -- internal helpers for search -------------------------------------------

    def _label_of(self, v: int) -> int:
        """Label of internal preorder id v >= 1."""
        d = self.e_seq.access(v)
        return self.acc.sa(self.d_seq.select(d, self.e_seq.partial_rank(v)))

    def _child_on(self, v: int, code: int) -> int | None:
        for c in self.pt.children(v):
            lab = self._label_of(c)
            if self._edge_code_of(lab, self.pt.depth(c)) == code:
                return c
        return None

    def _mr_and_node(self, j: int) -> tuple[int, int]:
        """(internal node id of label j, internal id of its maximal reach)."""
        p = self.acc.isa(j)
        node = self.e_seq.select(self.d_seq.access(p), self.d_seq.partial_rank(p))
        return node, self.pt.star_host(p)


def simulated_search(sim: SimulatedHeap, pattern) -> list[int]:
    """Multi-round pattern search over the simulated heap; O(1) primitive
    calls per pattern character and per reported occurrence."""
    pat = pattern_codes(pattern)
    m = len(pat)
    if m == 0:
        raise ValueError("empty pattern")
    pt = sim.pt
    n = sim.n
    dcum = 0
    first = True
    cand: list[int] = []
    while True:
        v = 0
        d = 0
        while dcum + d < m:
            nxt = sim._child_on(v, pat[dcum + d])
            if nxt is None:
                break
            v = nxt
            d += 1
        full = dcum + d == m
        if first:
            path: list[int] = []
            u = v
            while u != 0:
                path.append(u)
                u = pt.parent(u)
            if full:
                hits = {sim._label_of(t) for t in pt.subtree_nodes(v)}
                for t in path:
                    lab = sim._label_of(t)
                    if pt.is_ancestor(v, sim.pt.star_host(sim.acc.isa(lab))):
                        hits.add(lab)
                return sorted(hits)
            if d:
                for t in path:
                    lab = sim._label_of(t)
                    if sim.pt.star_host(sim.acc.isa(lab)) == v:
                        cand.append(lab)
            first = False
        elif full:
            hits = []
            for i in cand:
                j = i + dcum
                if j > n:
                    continue
                node_j, mr_j = sim._mr_and_node(j)
                if pt.is_ancestor(v, node_j):
                    hits.append(i)
                elif pt.is_ancestor(node_j, v) and node_j != v and pt.is_ancestor(v, mr_j):
                    hits.append(i)
            return sorted(hits)
        else:
            kept = []
            for i in cand:
                j = i + dcum
                if j > n:
                    continue
                node_j, mr_j = sim._mr_and_node(j)
                if pt.is_ancestor(node_j, v) and mr_j == v:
                    kept.append(i)
            cand = kept
        if not cand:
            return []
        dcum += d


def build_simulated(text: TerminatedText) -> SimulatedHeap:
    """Construct the simulated heap of a text from scratch."""
    bundle = build_suffix_array(text)
    heap = build_naive(text)
    d_seq, e_seq = build_depth_arrays(heap, bundle)
    aug = heap_augmented_parens(heap, text, bundle)
    return SimulatedHeap(SAAccess.from_bundle(bundle), ParenTree(aug),
                         d_seq, e_seq, FirstCharIndex(bundle))
