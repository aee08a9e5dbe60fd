"""Position heap construction by relabelling a suffix tree, label by label."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field

from .heap import PositionHeap
from .suffixtree import LevelAncestorService, SuffixTree
from .text import TerminatedText


@dataclass
class ConversionInfo:
    """Bookkeeping from one conversion run."""

    inserted: set[int] = field(default_factory=set)
    la_queries: int = 0
    child_scans: int = 0
    marked_final: int = 0


class _Overlay:
    """Growable working copy of the suffix tree that receives heap labels.

    Nodes with id below orig_count mirror the static tree; edge splits append
    fresh nodes.  A node is marked iff it carries a heap label (root carries 0).
    """

    __slots__ = ("sd", "parent", "rep", "lo", "hi", "label", "marked",
                 "children", "orig_count")

    def __init__(self, base: SuffixTree) -> None:
        m = base.node_count
        self.sd = list(base.sd)
        self.parent = list(base.parent)
        self.rep = [base.rep_pos(v) for v in range(m)]
        self.lo = list(base.lo)
        self.hi = list(base.hi)
        self.label = [-1] * m
        self.marked = bytearray(m)
        self.children: list[dict[int, int]] = [
            {base.edge_char(c): c for c in base.children[v]} for v in range(m)]
        self.orig_count = m
        self.label[0] = 0
        self.marked[0] = 1

    def mark(self, v: int, lab: int) -> None:
        self.marked[v] = 1
        self.label[v] = lab

    def lowest_marked_ancestor(self, v: int) -> int:
        while not self.marked[v]:
            v = self.parent[v]
        return v

    def split_edge(self, u: int, v: int, text: TerminatedText) -> int:
        """Insert a node at string depth sd(u)+1 on the edge u -> v."""
        x = len(self.sd)
        sd_x = self.sd[u] + 1
        old_char = text.at(self.rep[v] + self.sd[u])
        new_char = text.at(self.rep[v] + sd_x)
        self.sd.append(sd_x)
        self.parent.append(u)
        self.rep.append(self.rep[v])
        self.lo.append(self.lo[v])
        self.hi.append(self.hi[v])
        self.label.append(-1)
        self.marked.append(0)
        self.children.append({new_char: v})
        self.children[u][old_char] = x
        self.parent[v] = x
        return x


def suffix_tree_to_heap(base: SuffixTree,
                        text: TerminatedText) -> tuple[PositionHeap, ConversionInfo]:
    """Build the position heap of text from its suffix tree.

    Label i lands one level below the lowest marked ancestor of suffix i's
    leaf.  The child on that path is found by scanning when the fan-out is at
    most 2 and by a level-ancestor query on the static tree otherwise; both
    are O(1), so the whole conversion is O(n) plus the marked-ancestor walks.
    """
    n = text.n
    ov = _Overlay(base)
    la = LevelAncestorService(base)
    info = ConversionInfo()
    for i in range(1, n + 1):
        w = base.leaf_of_pos(i)
        u = ov.lowest_marked_ancestor(w)
        if u == w:
            # a leaf can only be labelled by its own suffix, which runs once
            raise ValueError(f"marked leaf revisited while placing label {i}")
        kids = ov.children[u]
        if len(kids) <= 2:
            info.child_scans += 1
            p = base.lo[w]
            v = -1
            for c in kids.values():
                if ov.lo[c] <= p <= ov.hi[c]:
                    v = c
                    break
            if v < 0:
                raise ValueError(f"no child of node {u} leads to suffix {i}")
        else:
            info.la_queries += 1
            v = la.level_ancestor(w, base.node_depth[u] + 1)
            # the shortcut is sound only while the edge u -> v is unsplit
            if u >= ov.orig_count or ov.parent[v] != u:
                raise ValueError("level-ancestor shortcut hit a rewritten edge")
        if ov.sd[v] == ov.sd[u] + 1:
            if ov.label[v] != -1:
                raise ValueError(f"node already labelled while placing {i}")
            ov.mark(v, i)
        else:
            x = ov.split_edge(u, v, text)
            ov.mark(x, i)
            info.inserted.add(i)
    info.marked_final = sum(ov.marked)

    # maximal reach of i = deepest labelled ancestor-or-self of suffix i's leaf
    mr = array("q", bytes(8 * (n + 1)))
    for i in range(1, n + 1):
        mr[i] = ov.label[ov.lowest_marked_ancestor(base.leaf_of_pos(i))]

    heap = PositionHeap(n)
    stack = [0]
    while stack:
        v = stack.pop()
        lab = ov.label[v]
        if v != 0 and lab != -1:
            par = ov.parent[v]
            heap.attach(lab, ov.label[par], text.at(lab + ov.sd[par]))
        stack.extend(ov.children[v].values())
    heap.finalize()
    heap._mr = mr
    return heap, info
