"""Editable limited-height index: blocked text, AVL rope, and a relaxed heap."""

from __future__ import annotations

from .text import pattern_codes

DIVIDER_BASE = 1 << 30  # divider code points live above every text character


class RopeNode:
    """One character cell; its identity is stable across all edits."""

    __slots__ = ("code", "left", "right", "parent", "size", "height")

    def __init__(self, code: int) -> None:
        self.code = code
        self.left: RopeNode | None = None
        self.right: RopeNode | None = None
        self.parent: RopeNode | None = None
        self.size = 1
        self.height = 1


class AvlRope:
    """Order-statistics AVL tree over character cells.

    Nodes are the public handles: rank(handle) recovers a cell's current
    1-based position in O(log n), and handles survive every splice that does
    not delete them (deletions splice the successor in by pointer surgery, so
    no cell's identity is ever reused for other content).
    """

    __slots__ = ("_root",)

    def __init__(self, codes=()) -> None:
        self._root = self._build_balanced(list(codes), None)

    def _build_balanced(self, codes, parent) -> RopeNode | None:
        if not codes:
            return None
        mid = len(codes) // 2
        node = RopeNode(codes[mid])
        node.parent = parent
        node.left = self._build_balanced(codes[:mid], node)
        node.right = self._build_balanced(codes[mid + 1:], node)
        self._pull(node)
        return node

    def __len__(self) -> int:
        return self._root.size if self._root else 0

    @staticmethod
    def _h(v: RopeNode | None) -> int:
        return v.height if v else 0

    @staticmethod
    def _s(v: RopeNode | None) -> int:
        return v.size if v else 0

    def _pull(self, v: RopeNode) -> None:
        v.size = 1 + self._s(v.left) + self._s(v.right)
        v.height = 1 + max(self._h(v.left), self._h(v.right))

    def _rotate_left(self, x: RopeNode) -> None:
        y = x.right
        x.right = y.left
        if y.left:
            y.left.parent = x
        y.parent = x.parent
        if x.parent is None:
            self._root = y
        elif x.parent.left is x:
            x.parent.left = y
        else:
            x.parent.right = y
        y.left = x
        x.parent = y
        self._pull(x)
        self._pull(y)

    def _rotate_right(self, x: RopeNode) -> None:
        y = x.left
        x.left = y.right
        if y.right:
            y.right.parent = x
        y.parent = x.parent
        if x.parent is None:
            self._root = y
        elif x.parent.left is x:
            x.parent.left = y
        else:
            x.parent.right = y
        y.right = x
        x.parent = y
        self._pull(x)
        self._pull(y)

    def _fix_up(self, v: RopeNode | None) -> None:
        while v is not None:
            self._pull(v)
            bf = self._h(v.left) - self._h(v.right)
            if bf > 1:
                if self._h(v.left.left) < self._h(v.left.right):
                    self._rotate_left(v.left)
                self._rotate_right(v)
                v = v.parent
            elif bf < -1:
                if self._h(v.right.right) < self._h(v.right.left):
                    self._rotate_right(v.right)
                self._rotate_left(v)
                v = v.parent
            v = v.parent

    # -- queries ---------------------------------------------------------------

    def node_at(self, pos: int) -> RopeNode:
        if not 1 <= pos <= len(self):
            raise IndexError(f"position {pos} out of range 1..{len(self)}")
        v = self._root
        while True:
            left = self._s(v.left)
            if pos <= left:
                v = v.left
            elif pos == left + 1:
                return v
            else:
                pos -= left + 1
                v = v.right

    def rank(self, node: RopeNode) -> int:
        r = self._s(node.left) + 1
        v = node
        while v.parent is not None:
            if v.parent.right is v:
                r += self._s(v.parent.left) + 1
            v = v.parent
        return r

    def code_at(self, pos: int) -> int:
        return self.node_at(pos).code

    def successor(self, node: RopeNode) -> RopeNode | None:
        if node.right:
            v = node.right
            while v.left:
                v = v.left
            return v
        v = node
        while v.parent and v.parent.right is v:
            v = v.parent
        return v.parent

    def nodes_range(self, pos: int, length: int) -> list[RopeNode]:
        """Handles currently at positions pos..pos+length-1."""
        if length <= 0:
            return []
        out = [self.node_at(pos)]
        for _ in range(length - 1):
            out.append(self.successor(out[-1]))
        return out

    def codes_range(self, pos: int, length: int) -> list[int]:
        return [v.code for v in self.nodes_range(pos, length)]

    # -- updates ---------------------------------------------------------------

    def _insert_one(self, pos: int, code: int) -> RopeNode:
        """New cell becomes the pos-th; pos in 1..n+1."""
        node = RopeNode(code)
        if self._root is None:
            self._root = node
            return node
        v = self._root
        while True:
            left = self._s(v.left)
            if pos <= left + 1:
                if v.left is None:
                    v.left = node
                    node.parent = v
                    break
                v = v.left
            else:
                pos -= left + 1
                if v.right is None:
                    v.right = node
                    node.parent = v
                    break
                v = v.right
        self._fix_up(node.parent)
        return node

    def insert_seq(self, pos: int, codes) -> list[RopeNode]:
        """Insert cells so they occupy positions pos..pos+len-1."""
        if not 1 <= pos <= len(self) + 1:
            raise IndexError(f"insert position {pos} out of range 1..{len(self) + 1}")
        return [self._insert_one(pos + k, c) for k, c in enumerate(codes)]

    def _delete_node(self, z: RopeNode) -> None:
        if z.left and z.right:
            s = z.right
            while s.left:
                s = s.left
            # unhook the successor (it has no left child), then transplant it
            fix_from = s.parent if s.parent is not z else s
            if s.parent is not z:
                s.parent.left = s.right
                if s.right:
                    s.right.parent = s.parent
                s.right = z.right
                z.right.parent = s
            s.left = z.left
            z.left.parent = s
            s.parent = z.parent
            if z.parent is None:
                self._root = s
            elif z.parent.left is z:
                z.parent.left = s
            else:
                z.parent.right = s
            self._fix_up(fix_from)
        else:
            child = z.left or z.right
            if child:
                child.parent = z.parent
            if z.parent is None:
                self._root = child
            elif z.parent.left is z:
                z.parent.left = child
            else:
                z.parent.right = child
            self._fix_up(z.parent)
        z.left = z.right = z.parent = None
        z.size = z.height = 0

    def delete_range(self, pos: int, length: int) -> list[RopeNode]:
        """Remove cells pos..pos+length-1; returns their (now dead) handles."""
        if length < 0 or pos < 1 or pos + length - 1 > len(self):
            raise IndexError("delete range out of bounds")
        out = []
        for _ in range(length):
            node = self.node_at(pos)
            self._delete_node(node)
            out.append(node)
        return out

    def check(self) -> None:
        """AVL and bookkeeping invariants, for tests."""
        def rec(v: RopeNode | None) -> tuple[int, int]:
            if v is None:
                return 0, 0
            ls, lh = rec(v.left)
            rs, rh = rec(v.right)
            if v.left and v.left.parent is not v:
                raise AssertionError("broken parent link (left)")
            if v.right and v.right.parent is not v:
                raise AssertionError("broken parent link (right)")
            if v.size != ls + rs + 1 or v.height != max(lh, rh) + 1:
                raise AssertionError("stale size/height")
            if abs(lh - rh) > 1:
                raise AssertionError("AVL balance violated")
            return v.size, v.height
        if self._root and self._root.parent is not None:
            raise AssertionError("root has a parent")
        rec(self._root)


class _TrieNode:
    __slots__ = ("label", "parent", "echar", "children")

    def __init__(self, label, parent, echar) -> None:
        self.label = label      # RopeNode handle; None at the root
        self.parent = parent
        self.echar = echar
        self.children: dict[int, _TrieNode] = {}


class RelaxedHeap:
    """Trie of one node per live cell; parents need not carry older labels.

    insert() attaches a cell's node at the first missing child along its
    forward text; delete() promotes the minimum-rank label up the child chain.
    Each call counts as one touched entry.
    """

    __slots__ = ("rope", "root", "node_of", "touched")

    def __init__(self, rope: AvlRope) -> None:
        self.rope = rope
        self.root = _TrieNode(None, None, None)
        self.node_of: dict[RopeNode, _TrieNode] = {}
        self.touched = 0

    def insert(self, handle: RopeNode) -> _TrieNode:
        self.touched += 1
        q = self.rope.rank(handle)
        n = len(self.rope)
        v = self.root
        cur = handle
        while True:
            if q > n:
                raise ValueError("descent ran past the end of the working string")
            c = cur.code
            nxt = v.children.get(c)
            if nxt is None:
                node = _TrieNode(handle, v, c)
                v.children[c] = node
                self.node_of[handle] = node
                return node
            v = nxt
            cur = self.rope.successor(cur)
            q += 1

    def delete(self, handle: RopeNode) -> None:
        self.touched += 1
        v = self.node_of.pop(handle)
        while v.children:
            best = min(v.children.values(), key=lambda ch: self.rope.rank(ch.label))
            v.label = best.label
            self.node_of[v.label] = v
            v = best
        v.parent.children.pop(v.echar)

    def depth_of(self, node: _TrieNode) -> int:
        d = 0
        while node.parent is not None:
            node = node.parent
            d += 1
        return d

    def height(self) -> int:
        best = 0
        stack = [(self.root, 0)]
        while stack:
            v, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in v.children.values())
        return best

    def is_ancestor(self, a: _TrieNode, b: _TrieNode) -> bool:
        while b is not None:
            if b is a:
                return True
            b = b.parent
        return False

    def path_nodes(self, v: _TrieNode) -> list[_TrieNode]:
        out = []
        while v.parent is not None:
            out.append(v)
            v = v.parent
        out.reverse()
        return out

    def subtree(self, v: _TrieNode) -> list[_TrieNode]:
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(u.children.values())
        return out

    def reach_node(self, wpos: int) -> _TrieNode:
        """Deepest trie node whose path prefixes the text from wpos on; by descent."""
        n = len(self.rope)
        v = self.root
        cur = self.rope.node_at(wpos) if wpos <= n else None
        while cur is not None:
            nxt = v.children.get(cur.code)
            if nxt is None:
                break
            v = nxt
            cur = self.rope.successor(cur)
        return v


class LimitedIndex:
    """Editable position-heap index answering patterns of length up to M.

    The working string is S-with-dividers followed by a separator, overlap
    windows around each divider, and a terminal divider: every occurrence of
    a short pattern in S appears divider-free in some copy.  All dividers are
    single unique code points above the text alphabet.
    """

    __slots__ = ("m", "rope", "heap", "_block_lens", "_sdivs", "_window_lens",
                 "_wdivs", "_sep_id", "_term_id", "_next_id",
                 "last_edit_touched")

    def __init__(self, codes, m: int) -> None:
        codes = list(codes)
        if m < 1:
            raise ValueError("limit M must be at least 1")
        if not codes:
            raise ValueError("empty text")
        if any(not 0 <= c < DIVIDER_BASE for c in codes):
            raise ValueError("text code points must be below the divider range")
        self.m = m
        self._next_id = DIVIDER_BASE
        step = 2 * m
        lens = [len(codes[k:k + step]) for k in range(0, len(codes), step)]
        self._block_lens = lens
        self._sdivs = [self._fresh_id() for _ in range(len(lens) - 1)]
        self._sep_id = self._fresh_id()
        self._term_id = self._fresh_id()
        self._wdivs = [self._fresh_id() for _ in range(max(0, len(lens) - 2))]
        self._assemble(codes)

    @classmethod
    def from_parts(cls, codes, m: int, block_lens, sdivs, wdivs,
                   sep_id: int, term_id: int, next_id: int) -> "LimitedIndex":
        """Rebuild an index from persisted bookkeeping; fully deterministic."""
        codes = list(codes)
        block_lens = list(block_lens)
        sdivs, wdivs = list(sdivs), list(wdivs)
        if m < 1 or not block_lens or any(ln < 1 for ln in block_lens):
            raise ValueError("bad block table")
        if sum(block_lens) != len(codes):
            raise ValueError("block lengths do not cover the text")
        if any(not 0 <= c < DIVIDER_BASE for c in codes):
            raise ValueError("text code points must be below the divider range")
        nb = len(block_lens)
        if len(sdivs) != nb - 1 or len(wdivs) != max(0, nb - 2):
            raise ValueError("divider tables do not match the block count")
        ids = sdivs + wdivs + [sep_id, term_id]
        if len(set(ids)) != len(ids) or any(
                not DIVIDER_BASE <= i < next_id for i in ids):
            raise ValueError("divider ids must be unique and below the counter")
        idx = object.__new__(cls)
        idx.m = m
        idx._next_id = next_id
        idx._block_lens = block_lens
        idx._sdivs = sdivs
        idx._wdivs = wdivs
        idx._sep_id = sep_id
        idx._term_id = term_id
        idx._assemble(codes)
        return idx

    def _assemble(self, codes) -> None:
        """Build rope and heap from the bookkeeping lists and the S codes."""
        lens = self._block_lens
        wins = self._window_contents_from(codes, lens, range(1, len(lens)))
        self._window_lens = [len(w) for w in wins]
        w = []
        at = 0
        for b, ln in enumerate(lens):
            if b:
                w.append(self._sdivs[b - 1])
            w.extend(codes[at:at + ln])
            at += ln
        w.append(self._sep_id)
        for j, win in enumerate(wins):
            if j:
                w.append(self._wdivs[j - 1])
            w.extend(win)
        w.append(self._term_id)
        self.rope = AvlRope(w)
        self.heap = RelaxedHeap(self.rope)
        for pos in range(1, len(w) + 1):
            self.heap.insert(self.rope.node_at(pos))
        self.last_edit_touched = 0

    # -- bookkeeping helpers -----------------------------------------------------

    def _fresh_id(self) -> int:
        i = self._next_id
        self._next_id += 1
        return i

    @property
    def n(self) -> int:
        return sum(self._block_lens)

    @property
    def total_touched(self) -> int:
        return self.heap.touched

    def _window_contents_from(self, s_codes, lens, div_indices) -> list[list[int]]:
        """Window contents for the given divider indices, from a full S string."""
        n = len(s_codes)
        out = []
        bounds = []
        acc = 0
        for ln in lens:
            acc += ln
            bounds.append(acc)
        for j in div_indices:
            b = bounds[j - 1]
            lo = max(1, b - self.m + 1)
            hi = min(n, b + self.m)
            out.append(list(s_codes[lo - 1:hi]))
        return out

    def _block_wstart(self, b: int) -> int:
        """W position of the first char of block b (1-based)."""
        return 1 + sum(self._block_lens[:b - 1]) + (b - 1)

    def _sprime_len(self) -> int:
        return sum(self._block_lens) + len(self._sdivs)

    def _window_wstart(self, j: int) -> int:
        return (self._sprime_len() + 2
                + sum(self._window_lens[:j - 1]) + (j - 1))

    def _block_sstart(self, b: int) -> int:
        return 1 + sum(self._block_lens[:b - 1])

    def _block_of_spos(self, pos: int) -> tuple[int, int]:
        """(block index, 1-based offset inside it) for an S position."""
        acc = 0
        for b, ln in enumerate(self._block_lens, start=1):
            if pos <= acc + ln:
                return b, pos - acc
            acc += ln
        raise IndexError(f"position {pos} out of range 1..{acc}")

    def _read_block(self, b: int) -> list[int]:
        return self.rope.codes_range(self._block_wstart(b), self._block_lens[b - 1])

    def current_string(self) -> str:
        return "".join(chr(c) for b in range(1, len(self._block_lens) + 1)
                       for c in self._read_block(b))

    def blocks(self) -> list[str]:
        return ["".join(map(chr, self._read_block(b)))
                for b in range(1, len(self._block_lens) + 1)]

    def windows(self) -> list[str]:
        return ["".join(map(chr, self.rope.codes_range(self._window_wstart(j),
                                                       self._window_lens[j - 1])))
                for j in range(1, len(self._window_lens) + 1)]

    def divider_ids(self) -> tuple[list[int], list[int]]:
        return list(self._sdivs), list(self._wdivs)

    # -- edits ---------------------------------------------------------------------

    @staticmethod
    def _balanced_parts(content: list[int], cap: int) -> list[list[int]]:
        pieces = -(-len(content) // cap)
        q, r = divmod(len(content), pieces)
        sizes = [q + 1] * r + [q] * (pieces - r)
        out = []
        at = 0
        for s in sizes:
            out.append(content[at:at + s])
            at += s
        return out

    def insert_substring(self, pos: int, chunk) -> None:
        """Insert chunk so its first char lands at position pos (1 <= pos <= n)."""
        codes = list(pattern_codes(chunk))
        if not 1 <= pos <= self.n:
            raise IndexError(f"insert position {pos} out of range 1..{self.n}")
        if not codes:
            self.last_edit_touched = 0
            return
        if any(not 0 <= c < DIVIDER_BASE for c in codes):
            raise ValueError("inserted code points must be below the divider range")
        b, off = self._block_of_spos(pos)
        content = self._read_block(b)
        content[off - 1:off - 1] = codes
        if len(content) <= 4 * self.m:
            span_blocks = [content]
        else:
            span_blocks = self._balanced_parts(content, 4 * self.m)
        self._rewrite(b, b, span_blocks)

    def delete_substring(self, pos: int, length: int) -> None:
        """Remove length chars starting at pos; the final char is protected."""
        if length < 0 or pos < 1 or pos + length - 1 > self.n - 1:
            raise IndexError("delete range out of bounds or covers the terminator")
        if length == 0:
            self.last_edit_touched = 0
            return
        b1, off1 = self._block_of_spos(pos)
        b2, off2 = self._block_of_spos(pos + length - 1)
        head = self._read_block(b1)[:off1 - 1]
        tail = self._read_block(b2)[off2:]
        slot = head + tail
        lo, hi = b1, b2
        if not slot:
            self._rewrite(lo, hi, [])
            return
        if len(slot) < 2 * self.m:
            if lo > 1:
                lo -= 1
                slot = self._read_block(lo) + slot
            elif hi < len(self._block_lens):
                hi += 1
                slot = slot + self._read_block(hi)
        if len(slot) > 4 * self.m:
            span_blocks = self._balanced_parts(slot, 4 * self.m)
        else:
            span_blocks = [slot]
        self._rewrite(lo, hi, span_blocks)

    def _rewrite(self, bl: int, br: int, span_blocks: list[list[int]]) -> None:
        """Replace blocks bl..br with span_blocks; resplices adjacent windows."""
        m = self.m
        margin = 8 * m + 4
        old_b = len(self._block_lens)
        old_k = len(self._sdivs)

        # ---- plan the S' splice in old W coordinates
        sp_start = self._block_wstart(bl)
        sp_end = (self._block_wstart(br) + self._block_lens[br - 1] - 1)
        new_sdiv_ids = [self._fresh_id() for _ in range(max(0, len(span_blocks) - 1))]
        sp_codes: list[int] = []
        for idx, blk in enumerate(span_blocks):
            if idx:
                sp_codes.append(new_sdiv_ids[idx - 1])
            sp_codes.extend(blk)
        drop_left_div = drop_right_div = False
        if not span_blocks:
            if bl > 1:
                sp_start -= 1
                drop_left_div = True
            elif br < old_b:
                sp_end += 1
                drop_right_div = True

        # ---- derive the new block bookkeeping
        new_lens = (self._block_lens[:bl - 1]
                    + [len(b) for b in span_blocks]
                    + self._block_lens[br:])
        lo_div = bl - 2 if drop_left_div else bl - 1
        hi_div = br if drop_right_div else br - 1
        new_sdivs = self._sdivs[:lo_div] + new_sdiv_ids + self._sdivs[hi_div:]

        # ---- plan the S'' splice (windows adjacent to the rewritten span)
        j1 = max(1, bl - 1)
        j2 = min(old_k, br)
        cnt_new = (j2 - j1 + 1) + (len(new_sdivs) - old_k)
        # context: unchanged neighbours plus the new span, for window contents
        ctx: list[int] = []
        ctx_sstart = 1
        if bl > 1:
            ctx_sstart = self._block_sstart(bl - 1)
            ctx.extend(self._read_block(bl - 1))
        for blk in span_blocks:
            ctx.extend(blk)
        if br < old_b:
            ctx.extend(self._read_block(br + 1))
        new_total = sum(new_lens)
        bounds = []
        acc = 0
        for ln in new_lens:
            acc += ln
            bounds.append(acc)
        new_wins = []
        for j in range(j1, j1 + cnt_new):
            b = bounds[j - 1]
            w_lo = max(1, b - m + 1)
            w_hi = min(new_total, b + m)
            new_wins.append(ctx[w_lo - ctx_sstart:w_hi - ctx_sstart + 1])
        new_wdiv_ids = [self._fresh_id() for _ in range(max(0, cnt_new - 1))]
        sw_codes: list[int] = []
        for idx, win in enumerate(new_wins):
            if idx:
                sw_codes.append(new_wdiv_ids[idx - 1])
            sw_codes.extend(win)
        if j1 <= j2:
            sw_start = self._window_wstart(j1)
            sw_end = (self._window_wstart(j2) + self._window_lens[j2 - 1] - 1)
            if not new_wins:
                if j1 > 1:
                    sw_start -= 1
                elif j2 < old_k:
                    sw_end += 1
        else:
            # no windows existed; insert right after the separator
            sw_start = self._sprime_len() + 2
            sw_end = sw_start - 1

        new_window_lens = (self._window_lens[:j1 - 1]
                           + [len(w) for w in new_wins]
                           + self._window_lens[j2:])
        if j1 <= j2:
            # separators strictly inside the old span are indices j1-1..j2-2
            keep_head = self._wdivs[:j1 - 1]
            keep_tail = self._wdivs[j2 - 1:]
            if not new_wins:
                if j1 > 1:
                    keep_head = self._wdivs[:j1 - 2]
                elif j2 < old_k:
                    keep_tail = self._wdivs[j2:]
            new_wdivs = keep_head + new_wdiv_ids + keep_tail
        else:
            new_wdivs = new_wdiv_ids

        # ---- invalidate heap entries around both splices (old coordinates)
        ranges = []
        for s, e in ((sp_start, sp_end), (sw_start, sw_end)):
            ranges.append((max(1, s - margin), max(e, s - 1)))
        ranges.sort()
        merged: list[list[int]] = []
        for s, e in ranges:
            if merged and s <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], e)
            else:
                merged.append([s, e])
        before = self.heap.touched
        victims: list[RopeNode] = []
        for s, e in merged:
            victims.extend(self.rope.nodes_range(s, e - s + 1))
        for h in victims:
            self.heap.delete(h)

        # ---- splice the rope, right-to-left so old coordinates stay valid
        doomed: set[RopeNode] = set()
        fresh: list[RopeNode] = []
        for s, e, codes in sorted(((sp_start, sp_end, sp_codes),
                                   (sw_start, sw_end, sw_codes)), reverse=True):
            doomed.update(self.rope.delete_range(s, e - s + 1))
            fresh.extend(self.rope.insert_seq(s, codes))

        # ---- reinsert surviving and fresh handles in increasing rank order
        revived = [h for h in victims if h not in doomed] + fresh
        revived.sort(key=self.rope.rank)
        for h in revived:
            self.heap.insert(h)

        self._block_lens = new_lens
        self._sdivs = new_sdivs
        self._window_lens = new_window_lens
        self._wdivs = new_wdivs
        self.last_edit_touched = self.heap.touched - before

    # -- search ------------------------------------------------------------------

    def _segments(self) -> list[tuple[int, int, int]]:
        """(wstart, wend, s_start) of every divider-free content segment."""
        out = []
        for b in range(1, len(self._block_lens) + 1):
            ws = self._block_wstart(b)
            out.append((ws, ws + self._block_lens[b - 1] - 1, self._block_sstart(b)))
        bounds = []
        acc = 0
        for ln in self._block_lens:
            acc += ln
            bounds.append(acc)
        for j in range(1, len(self._window_lens) + 1):
            ws = self._window_wstart(j)
            s_lo = max(1, bounds[j - 1] - self.m + 1)
            out.append((ws, ws + self._window_lens[j - 1] - 1, s_lo))
        return out

    def search_limited(self, pattern) -> list[int]:
        """Occurrences of pattern in the current text; len(pattern) <= M."""
        pat = pattern_codes(pattern)
        m_pat = len(pat)
        if not 1 <= m_pat <= self.m:
            raise ValueError(f"pattern length must be in 1..{self.m}")
        heap = self.heap
        rope = self.rope
        w_len = len(rope)
        dcum = 0
        first = True
        cand: list[tuple[RopeNode, int]] = []  # (handle, its W rank)
        w_hits: list[int] = []
        while True:
            v = heap.root
            d = 0
            while dcum + d < m_pat:
                nxt = v.children.get(pat[dcum + d])
                if nxt is None:
                    break
                v = nxt
                d += 1
            full = dcum + d == m_pat
            if first:
                path = heap.path_nodes(v)
                if full:
                    subs = heap.subtree(v)
                    seen = {id(u) for u in subs}
                    w_hits = [rope.rank(u.label) for u in subs]
                    for u in path:
                        r = rope.rank(u.label)
                        if id(u) not in seen and heap.is_ancestor(v, heap.reach_node(r)):
                            w_hits.append(r)
                    break
                if d:
                    for u in path:
                        r = rope.rank(u.label)
                        if heap.reach_node(r) is v:
                            cand.append((u.label, r))
                first = False
            elif full:
                for h, r in cand:
                    j = r + dcum
                    if j > w_len:
                        continue
                    node_j = heap.node_of[rope.node_at(j)]
                    if heap.is_ancestor(v, node_j):
                        w_hits.append(r)
                    elif (heap.is_ancestor(node_j, v) and node_j is not v
                          and heap.is_ancestor(v, heap.reach_node(j))):
                        w_hits.append(r)
                break
            else:
                kept = []
                for h, r in cand:
                    j = r + dcum
                    if j > w_len:
                        continue
                    node_j = heap.node_of[rope.node_at(j)]
                    if heap.is_ancestor(node_j, v) and heap.reach_node(j) is v:
                        kept.append((h, r))
                cand = kept
            if not cand:
                return []
            dcum += d
        segs = self._segments()
        hits: set[int] = set()
        for w in w_hits:
            for ws, we, ss in segs:
                if ws <= w and w + m_pat - 1 <= we:
                    hits.add(ss + (w - ws))
                    break
        return sorted(hits)

    # -- validation ----------------------------------------------------------------

    def check_layout(self, deep: bool = True) -> None:
        """Structural invariants; deep also replays every heap path (O(n·h))."""
        m = self.m
        lens = self._block_lens
        nb = len(lens)
        assert nb >= 1 and all(ln >= 1 for ln in lens)
        for i, ln in enumerate(lens):
            if nb > 1 and i < nb - 1:
                assert 2 * m <= ln <= 4 * m, f"non-final block {i + 1} length {ln}"
            else:
                assert ln <= 4 * m, f"final block length {ln}"
        assert len(self._sdivs) == nb - 1
        assert len(self._window_lens) == max(0, nb - 1)
        assert len(self._wdivs) == max(0, len(self._window_lens) - 1)
        ids = (self._sdivs + self._wdivs + [self._sep_id, self._term_id])
        assert len(set(ids)) == len(ids), "divider ids must be unique"
        assert all(DIVIDER_BASE <= i < self._next_id for i in ids)
        # rebuild W from the bookkeeping and compare with the rope
        s_codes = [c for b in range(1, nb + 1) for c in self._read_block(b)]
        expect: list[int] = []
        at = 0
        for b, ln in enumerate(lens):
            if b:
                expect.append(self._sdivs[b - 1])
            expect.extend(s_codes[at:at + ln])
            at += ln
        expect.append(self._sep_id)
        wins = self._window_contents_from(s_codes, lens, range(1, nb))
        for j, win in enumerate(wins):
            if j:
                expect.append(self._wdivs[j - 1])
            expect.extend(win)
        expect.append(self._term_id)
        got = self.rope.codes_range(1, len(self.rope))
        assert got == expect, "working string does not match the layout"
        self.rope.check()
        # heap completeness and path validity
        assert len(self.heap.node_of) == len(self.rope)
        height = self.heap.height()
        assert height <= 8 * m + 4, f"height {height} exceeds 8M+4"
        if not deep:
            return
        for handle, node in self.heap.node_of.items():
            r = self.rope.rank(handle)
            path = []
            u = node
            while u.parent is not None:
                path.append(u.echar)
                u = u.parent
            path.reverse()
            assert path == self.rope.codes_range(r, len(path)), \
                f"path of cell at {r} does not prefix the text"


def new_limited(text, m: int) -> LimitedIndex:
    """Editable index over text answering patterns up to length m."""
    if isinstance(text, str):
        codes = [ord(c) for c in text]
    else:
        codes = list(text)
    return LimitedIndex(codes, m)
