"""Suffix heap: a position heap over lexicographic ranks instead of positions."""

from __future__ import annotations

from array import array

from .parens import ParenTree
from .suffixes import FirstCharIndex, SAAccess, build_suffix_array
from .suffixtree import SuffixTree, sa_to_suffix_tree
from .text import TerminatedText, pattern_codes


def _explicit_build(tree: SuffixTree, text: TerminatedText):
    """parent/depth/echar/children arrays; labels are preorder creation ranks.

    Walks the suffix trie through (suffix-tree node, chars-left-on-edge)
    frames; a node is a heap leaf once its counter c reaches the number of
    suffixes ending inside its trie subtree, otherwise the counter picks the
    child branch that absorbs it and the remaining branches restart at 1.
    """
    n = text.n
    parent = array("q", bytes(8 * (n + 1)))
    depth = array("q", bytes(8 * (n + 1)))
    echar = array("q", bytes(8 * (n + 1)))
    parent[0] = echar[0] = -1
    children: list[list[int]] = [[] for _ in range(n + 1)]
    counter = 0
    # frame: (st node, chars left to its depth, counter, parent label,
    #         edge char, trie depth); the root frame is special-cased
    stack: list[tuple[int, int, int, int, int, int]] = []
    root_kids = [(c, tree.sd[c] - 1) for c in tree.children[0]]
    for w, delta in reversed(root_kids):
        stack.append((w, delta, 1, 0, text.at(tree.rep_pos(w)), 1))
    while stack:
        w, delta, c, par, ch, td = stack.pop()
        counter += 1
        x = counter
        parent[x] = par
        children[par].append(x)
        echar[x] = ch
        depth[x] = td
        if c == tree.leaf_count(w):
            continue
        if delta > 0:
            subs = [(w, delta - 1)]
        else:
            subs = [(cw, tree.sd[cw] - tree.sd[w] - 1) for cw in tree.children[w]]
        pushes: list[tuple[int, int, int]] | None = None
        for idx, (cw, cd) in enumerate(subs):
            if tree.leaf_count(cw) > c:
                pushes = [(cw, cd, c + 1)] + [(rw, rd, 1) for rw, rd in subs[idx + 1:]]
                break
            c -= tree.leaf_count(cw)
        if pushes is None:
            raise ValueError(f"scan exhausted children below heap node {x}")
        for pw, pd, pc in reversed(pushes):
            stack.append((pw, pd, pc, x, text.at(tree.rep_pos(pw) + td), td + 1))
    if counter != n:
        raise ValueError(f"built {counter} nodes for a text of length {n}")
    return parent, depth, echar, children


def _compute_mr(children, echar, text: TerminatedText, sa_list) -> array:
    """mr[k] = deepest heap node whose path label prefixes the rank-k suffix."""
    cmap = [{echar[c]: c for c in kids} for kids in children]
    codes = text.codes
    n = text.n
    mr = array("q", bytes(8 * (n + 1)))
    for k in range(1, n + 1):
        v = 0
        d = sa_list[k - 1] - 1
        while d < n:
            nxt = cmap[v].get(codes[d])
            if nxt is None:
                break
            v = nxt
            d += 1
        mr[k] = v
    return mr


def _aug_stream(children, mr, n: int) -> str:
    """Preorder parens with each rank's star right after its host's open."""
    hosted: dict[int, list[int]] = {}
    for k in range(1, n + 1):
        hosted.setdefault(mr[k], []).append(k)
    out: list[str] = []
    stack: list[int | None] = [0]
    while stack:
        v = stack.pop()
        if v is None:
            out.append(")")
            continue
        out.append("(")
        stack.append(None)
        out.append("*" * len(hosted.get(v, ())))
        stack.extend(reversed(children[v]))
    return "".join(out)


class SuffixHeap:
    """Rank-labelled heap; navigation is succinct, content comes via SA calls.

    Node ids equal both the heap labels and the 0-based preorder ranks of the
    parenthesis tree, so tree shape queries are table lookups and only edge
    characters and reported positions spend SA/ISA primitives.  The explicit
    parent/depth/echar/children/mr arrays are diagnostics kept for
    verification; queries never read them.
    """

    __slots__ = ("acc", "pt", "fci", "parent", "depth", "echar", "children", "mr")

    def __init__(self, acc: SAAccess, pt: ParenTree, fci: FirstCharIndex,
                 parent, depth, echar, children, mr) -> None:
        if pt.node_count != acc.n + 1 or pt.star_count != acc.n:
            raise ValueError("parenthesis stream does not fit the text length")
        self.acc = acc
        self.pt = pt
        self.fci = fci
        self.parent = parent
        self.depth = depth
        self.echar = echar
        self.children = children
        self.mr = mr

    @property
    def n(self) -> int:
        return self.acc.n

    def _check_node(self, j: int) -> None:
        if not 0 <= j <= self.n:
            raise IndexError(f"node {j} out of range 0..{self.n}")

    def sheap_depth(self, j: int) -> int:
        self._check_node(j)
        return self.pt.depth(j)

    def sheap_parent(self, j: int) -> int | None:
        self._check_node(j)
        return self.pt.parent(j)

    def sheap_children(self, j: int) -> list[int]:
        self._check_node(j)
        return self.pt.children(j)

    def _edge_code(self, j: int) -> int:
        return self.fci.char_at_rank(self.acc.isa(self.acc.sa(j) + self.pt.depth(j) - 1))

    def sheap_edge_label(self, j: int) -> str:
        """Character on the edge entering node j (two primitive calls)."""
        self._check_node(j)
        if j == 0:
            raise ValueError("the root has no incoming edge")
        return chr(self._edge_code(j))

    def sheap_maximal_reach(self, k: int) -> int:
        """Deepest node whose path label prefixes the rank-k suffix; O(1)."""
        if not 1 <= k <= self.n:
            raise IndexError(f"rank {k} out of range 1..{self.n}")
        return self.pt.star_open_rank(k)

    def aux_bit_size(self) -> int:
        """Bits held besides the SA oracle: parens plus first-char index."""
        return self.pt.bit_size() + self.fci.bit_size()


def build_suffix_heap(text: TerminatedText) -> SuffixHeap:
    """Construct the suffix heap of a text from scratch."""
    bundle = build_suffix_array(text)
    tree = sa_to_suffix_tree(bundle)
    parent, depth, echar, children = _explicit_build(tree, text)
    mr = _compute_mr(children, echar, text, bundle.sa_list())
    aug = _aug_stream(children, mr, text.n)
    return SuffixHeap(SAAccess.from_bundle(bundle), ParenTree(aug),
                      FirstCharIndex(bundle), parent, depth, echar, children, mr)


def sheap_search(sheap: SuffixHeap, pattern, trace: list | None = None) -> list[int]:
    """All occurrences of pattern, by multi-round descent over rank nodes.

    Candidates are ranks; a rank's continuation after j matched characters is
    found with isa(sa(r)+j), so every round costs O(1) primitives per
    candidate plus the descent.
    """
    pat = pattern_codes(pattern)
    m = len(pat)
    if m == 0:
        raise ValueError("empty pattern")
    pt = sheap.pt
    acc = sheap.acc
    n = sheap.n
    dcum = 0
    first = True
    cand: list[tuple[int, int]] = []  # (rank, its text position)
    while True:
        v = 0
        d = 0
        while dcum + d < m:
            nxt = None
            for c in pt.children(v):
                if sheap._edge_code(c) == pat[dcum + d]:
                    nxt = c
                    break
            if nxt is None:
                break
            v = nxt
            d += 1
        full = dcum + d == m
        if first:
            path = []
            u = v
            while u != 0:
                path.append(u)
                u = pt.parent(u)
            if full:
                hits = {acc.sa(t) for t in pt.subtree_nodes(v)}
                hits.update(acc.sa(r) for r in path
                            if pt.is_ancestor(v, pt.star_host(r)))
                result = sorted(hits)
                if trace is not None:
                    trace.append({"locus": v, "depth": d, "full": True,
                                  "candidates": result})
                return result
            cand = [(r, acc.sa(r)) for r in path if pt.star_host(r) == v] if d else []
            first = False
        elif full:
            hits = []
            for r, i in cand:
                j = i + dcum
                if j > n:
                    continue
                q = acc.isa(j)
                if pt.is_ancestor(v, q):
                    hits.append(i)
                elif pt.is_ancestor(q, v) and q != v and pt.is_ancestor(v, pt.star_host(q)):
                    hits.append(i)
            result = sorted(hits)
            if trace is not None:
                trace.append({"locus": v, "depth": d, "full": True,
                              "candidates": result})
            return result
        else:
            kept = []
            for r, i in cand:
                j = i + dcum
                if j > n:
                    continue
                q = acc.isa(j)
                if pt.is_ancestor(q, v) and pt.star_host(q) == v:
                    kept.append((r, i))
            cand = kept
        if trace is not None:
            trace.append({"locus": v, "depth": d, "full": False,
                          "candidates": sorted(r for r, _ in cand)})
        if not cand:
            return []
        dcum += d
