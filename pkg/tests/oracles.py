"""Independent reference implementations used to derive and check expected values.

Everything here is deliberately naive (quadratic or worse, O(n^2) trie nodes)
and shares no code with the production package.  Texts are plain strings or
sequences of ints; positions and ranks are 1-based throughout.
"""

from __future__ import annotations

import random


# ---------------------------------------------------------------------------
# plain string facts


def occurrences(text, pattern) -> set[int]:
    """All 1-based starting positions of pattern in text, by direct scan."""
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    n = len(text)
    out = set()
    for i in range(n - m + 1):
        if text[i:i + m] == pattern:
            out.add(i + 1)
    return out


def naive_suffix_array(text) -> list[int]:
    """Positions 1..n sorted by suffix, O(n^2 log n)."""
    return sorted(range(1, len(text) + 1), key=lambda i: text[i - 1:])


def naive_inverse(sa: list[int]) -> list[int]:
    isa = [0] * len(sa)
    for rank, pos in enumerate(sa, start=1):
        isa[pos - 1] = rank
    return isa


def naive_lcp(text, sa: list[int]) -> list[int]:
    """lcp[k] = common prefix length of suffixes sa[k-1], sa[k]; lcp[1] = 0."""
    out = [0]
    for k in range(1, len(sa)):
        a = text[sa[k - 1] - 1:]
        b = text[sa[k] - 1:]
        q = 0
        while q < len(a) and q < len(b) and a[q] == b[q]:
            q += 1
        out.append(q)
    return out


# ---------------------------------------------------------------------------
# explicit suffix trie (one node per distinct substring prefix)


class TrieNode:
    __slots__ = ("children", "suffix_rank", "leaf_count")

    def __init__(self) -> None:
        self.children: dict = {}
        self.suffix_rank: int | None = None  # lex rank when a whole suffix ends here
        self.leaf_count = 0


def build_suffix_trie(text) -> TrieNode:
    """Explicit trie of all suffixes; ends are leaves thanks to the terminator."""
    isa = naive_inverse(naive_suffix_array(text))
    root = TrieNode()
    n = len(text)
    for i in range(1, n + 1):
        node = root
        for q in range(i - 1, n):
            c = text[q]
            node = node.children.setdefault(c, TrieNode())
        if node.children:
            raise ValueError("suffix end is not a leaf: terminator not unique")
        node.suffix_rank = isa[i - 1]
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            node.leaf_count = (1 if node.suffix_rank is not None else 0) + sum(
                ch.leaf_count for ch in node.children.values())
        else:
            stack.append((node, True))
            stack.extend((ch, False) for ch in node.children.values())
    return root


def trie_node_at(root: TrieNode, path) -> TrieNode | None:
    node = root
    for c in path:
        node = node.children.get(c)
        if node is None:
            return None
    return node


# ---------------------------------------------------------------------------
# position heap by definition (ascending insertion into a dict trie)


def naive_position_heap(text):
    """Returns (parent, edge_char, depth) maps keyed by label, plus path map."""
    n = len(text)
    root: dict = {}
    owner = {(): 0}
    parent = {0: None}
    echar = {0: None}
    depth = {0: 0}
    paths = {0: ()}
    for i in range(1, n + 1):
        node = root
        path = ()
        q = i - 1
        while True:
            c = text[q]
            nxt = node.get(c)
            if nxt is None:
                node[c] = {}
                paths[i] = path + (c,)
                owner[path + (c,)] = i
                parent[i] = owner[path]
                echar[i] = c
                depth[i] = len(path) + 1
                break
            node = nxt
            path = path + (c,)
            q += 1
            if q >= n:
                raise ValueError("ran past the terminator: text not terminated")
    return parent, echar, depth, paths


def heap_children(parent, echar) -> dict[int, list[int]]:
    """label -> children labels in edge-character order."""
    kids: dict[int, list[int]] = {lab: [] for lab in parent}
    for lab, par in parent.items():
        if par is not None:
            kids[par].append(lab)
    for lab in kids:
        kids[lab].sort(key=lambda c: echar[c])
    return kids


def heap_preorder(parent, echar) -> list[int]:
    kids = heap_children(parent, echar)
    out = []
    stack = [0]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(kids[v]))
    return out


def naive_maximal_reach(text, paths) -> dict[int, int]:
    """mr[i] = deepest heap node whose path label prefixes text[i..]."""
    by_path = {p: lab for lab, p in paths.items()}
    n = len(text)
    mr = {}
    for i in range(1, n + 1):
        path = ()
        q = i - 1
        while q < n and path + (text[q],) in by_path:
            path = path + (text[q],)
            q += 1
        mr[i] = by_path[path]
    return mr


def heap_height(depth) -> int:
    return max(depth.values())


# ---------------------------------------------------------------------------
# section-6 augmented stream: trie preorder with '(' at heap nodes, '*' at ends


def aug_stream_via_trie(text) -> str:
    _, _, _, paths = naive_position_heap(text)
    heap_paths = set(paths.values())
    root = build_suffix_trie(text)
    out: list[str] = []
    stack: list = [("node", root, ())]
    while stack:
        kind, node, path = stack.pop()
        if kind == "close":
            out.append(")")
            continue
        is_heap = path in heap_paths
        if is_heap:
            out.append("(")
            stack.append(("close", None, None))
        if node.suffix_rank is not None:
            out.append("*")
        for c in sorted(node.children, reverse=True):
            stack.append(("node", node.children[c], path + (c,)))
    return "".join(out)


def suffix_tree_node_paths(text) -> set:
    """Paths of suffix-tree nodes: root, branching trie nodes, and leaves."""
    root = build_suffix_trie(text)
    out = set()
    stack = [(root, ())]
    while stack:
        node, path = stack.pop()
        if path == () or len(node.children) >= 2 or node.suffix_rank is not None:
            out.add(path)
        stack.extend((ch, path + (c,)) for c, ch in node.children.items())
    return out


def st2heap_inserted_labels(text) -> set[int]:
    """Heap labels whose nodes do not coincide with suffix-tree nodes."""
    _, _, _, paths = naive_position_heap(text)
    tree_paths = suffix_tree_node_paths(text)
    return {lab for lab, p in paths.items() if lab != 0 and p not in tree_paths}


# ---------------------------------------------------------------------------
# suffix heap: literal recursive pseudocode over the explicit suffix trie


class SheapOracle:
    """parent/children/depth maps for the rank-labelled heap, plus mr and stream."""

    def __init__(self, text) -> None:
        import sys
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * len(text) + 1000))
        self.text = text
        self.sa = naive_suffix_array(text)
        trie = build_suffix_trie(text)
        self.parent: dict[int, int | None] = {0: None}
        self.children: dict[int, list[int]] = {0: []}
        self.depth = {0: 0}
        self.paths: dict[int, tuple] = {0: ()}
        self._counter = 0
        for c in sorted(trie.children):
            self._attach(0, self._build(trie.children[c], 1, self.paths[0] + (c,)))
        self.mr = self._maximal_reach()

    def _attach(self, parent_label: int, child_label: int) -> None:
        self.children[parent_label].append(child_label)
        self.parent[child_label] = parent_label

    def _build(self, v: TrieNode, c: int, path: tuple) -> int:
        self._counter += 1
        x = self._counter
        self.children[x] = []
        self.paths[x] = path
        self.depth[x] = len(path)
        if c == v.leaf_count:
            return x
        items = sorted(v.children.items())
        for idx, (ch_char, ch) in enumerate(items):
            if ch.leaf_count > c:
                self._attach(x, self._build(ch, c + 1, path + (ch_char,)))
                for later_char, later in items[idx + 1:]:
                    self._attach(x, self._build(later, 1, path + (later_char,)))
                return x
            c -= ch.leaf_count
        raise AssertionError("scan exhausted children without attaching")

    def _maximal_reach(self) -> dict[int, int]:
        by_path = {p: lab for lab, p in self.paths.items()}
        n = len(self.text)
        mr = {}
        for rank in range(1, n + 1):
            i = self.sa[rank - 1]
            path = ()
            q = i - 1
            while q < n and path + (self.text[q],) in by_path:
                path = path + (self.text[q],)
                q += 1
            mr[rank] = by_path[path]
        return mr

    def aug_stream(self) -> str:
        hosted: dict[int, list[int]] = {}
        for rank in sorted(self.mr):
            hosted.setdefault(self.mr[rank], []).append(rank)
        out: list[str] = []

        def emit(lab: int) -> None:
            out.append("(")
            out.extend("*" * len(hosted.get(lab, ())))
            for ch in self.children[lab]:
                emit(ch)
            out.append(")")

        emit(0)
        return "".join(out)


# ---------------------------------------------------------------------------
# parentheses: stack-scan answers for star enclosure and open counts


def scan_star_hosts(stream: str) -> list[int]:
    """For each star (in order), the 0-based preorder rank of the enclosing node."""
    hosts = []
    stack = []
    opens = 0
    for sym in stream:
        if sym == "(":
            stack.append(opens)
            opens += 1
        elif sym == ")":
            stack.pop()
        elif sym == "*":
            hosts.append(stack[-1])
        else:
            raise ValueError(f"bad symbol {sym!r}")
    return hosts


def scan_opens_before_star(stream: str) -> list[int]:
    """For each star (in order), the count of '(' strictly before it."""
    out = []
    opens = 0
    for sym in stream:
        if sym == "(":
            opens += 1
        elif sym == "*":
            out.append(opens)
    return out


# ---------------------------------------------------------------------------
# dynamic-index helpers


class ShadowText:
    """Plain-string mirror of the editable text; last char is undeletable."""

    def __init__(self, text: str) -> None:
        if not text:
            raise ValueError("empty text")
        self.s = text

    def insert(self, pos: int, chunk: str) -> None:
        if not 1 <= pos <= len(self.s):
            raise IndexError(f"insert position {pos} out of range")
        self.s = self.s[:pos - 1] + chunk + self.s[pos - 1:]

    def delete(self, pos: int, length: int) -> None:
        if length < 0 or pos < 1 or pos + length - 1 > len(self.s) - 1:
            raise IndexError("delete range out of bounds or covers the terminator")
        self.s = self.s[:pos - 1] + self.s[pos - 1 + length:]


def fresh_blocks(text: str, m: int) -> list[str]:
    """S' blocks of a fresh build: full 2M slices, short final remainder kept."""
    step = 2 * m
    return [text[k:k + step] for k in range(0, len(text), step)] or [text]


def fresh_windows(text: str, m: int) -> list[str]:
    """S'' windows: 2M chars centered after each non-final block boundary."""
    blocks = fresh_blocks(text, m)
    out = []
    boundary = 0
    for blk in blocks[:-1]:
        boundary += len(blk)
        lo = max(1, boundary - m + 1)
        hi = min(len(text), boundary + m)
        out.append(text[lo - 1:hi])
    return out


# ---------------------------------------------------------------------------
# randomness


def random_text(rnd: random.Random, n: int, sigma: int, terminator: str = "$") -> str:
    """Random content of length n-1 over the first sigma letters, plus terminator."""
    letters = "abcdefghijklmnopqrstuvwxyz"[:sigma]
    return "".join(rnd.choice(letters) for _ in range(n - 1)) + terminator


def sample_pattern(rnd: random.Random, text: str, max_len: int) -> str:
    """Mostly substrings of text (hits), sometimes random strings (misses)."""
    content = text[:-1] or text
    m = rnd.randint(1, max_len)
    if rnd.random() < 0.75 and len(content) >= 1:
        m = min(m, len(content))
        start = rnd.randrange(len(content) - m + 1)
        return content[start:start + m]
    letters = sorted(set(content)) or ["a"]
    return "".join(rnd.choice(letters) for _ in range(m))
