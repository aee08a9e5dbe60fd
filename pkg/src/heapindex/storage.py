"""Binary index files: magic "PHX1", little-endian, length-prefixed sections."""

from __future__ import annotations

import struct
import sys
from array import array
from dataclasses import dataclass, field

from .bridge import (HeapArrayBridge, SimulatedHeap, build_depth_arrays,
                     heap_augmented_parens, heap_parens, simulated_search)
from .depthseq import DepthSequence
from .dynamic import DIVIDER_BASE, LimitedIndex
from .heap import PositionHeap, build_naive, search, verify_heap
from .parens import ParenTree
from .sheap import SuffixHeap, build_suffix_heap, sheap_search
from .suffixes import FirstCharIndex, SAAccess, SuffixBundle, build_suffix_array
from .text import TerminatedText

MAGIC = b"PHX1"
VERSION = 1
VARIANTS = ("heap", "bridge", "simulated", "sheap", "dynamic")
_VARIANT_CODE = {name: k + 1 for k, name in enumerate(VARIANTS)}
_CODE_VARIANT = {v: k for k, v in _VARIANT_CODE.items()}
_SECTIONS = {
    "heap": ("text", "parens", "labels"),
    "bridge": ("text", "parens", "labels", "dseq", "eseq"),
    "simulated": ("text", "sa", "aug", "dseq", "eseq"),
    "sheap": ("text", "sa", "aug"),
    "dynamic": ("text", "meta", "block_lens", "sdivs", "wdivs"),
}


class IndexFormatError(Exception):
    """The index file is malformed or fails its invariant suite."""


@dataclass
class LoadedIndex:
    """In-memory index of one variant plus everything needed to re-serialize."""

    variant: str
    text: TerminatedText | None = None
    heap: PositionHeap | None = None
    bridge: HeapArrayBridge | None = None
    sim: SimulatedHeap | None = None
    sheap: SuffixHeap | None = None
    dyn: LimitedIndex | None = None
    sa: list[int] = field(default_factory=list)
    d_list: list[int] = field(default_factory=list)
    e_list: list[int] = field(default_factory=list)


# -- little-endian packing helpers ----------------------------------------------


def _pack_ints(values, typecode: str) -> bytes:
    a = array(typecode, list(values))
    if sys.byteorder == "big":
        a.byteswap()
    return a.tobytes()


def _unpack_ints(payload: bytes, typecode: str) -> list[int]:
    a = array(typecode)
    if len(payload) % a.itemsize:
        raise IndexFormatError("array payload length is not a multiple of the item size")
    a.frombytes(payload)
    if sys.byteorder == "big":
        a.byteswap()
    return a.tolist()


def _need(buf: bytes, at: int, k: int) -> int:
    if at + k > len(buf):
        raise IndexFormatError("truncated index file")
    return at + k


# -- building -------------------------------------------------------------------


def text_from_bytes(data: bytes) -> TerminatedText:
    """Input file bytes to a terminated text; 0x00 is reserved and appended."""
    if b"\x00" in data:
        raise ValueError("input may not contain the reserved 0x00 terminator byte")
    return TerminatedText(bytes(data) + b"\x00")


def build_index(data: bytes, variant: str, m: int | None = None) -> LoadedIndex:
    """Index of the requested variant over the file bytes (terminator added)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "dynamic":
        if m is None or m < 1:
            raise ValueError("the dynamic variant needs a positive --max-pattern")
        if b"\x00" in data:
            raise ValueError("input may not contain the reserved 0x00 terminator byte")
        dyn = LimitedIndex(list(data) + [0], m)
        return LoadedIndex("dynamic", dyn=dyn)
    text = text_from_bytes(data)
    out = LoadedIndex(variant, text=text)
    if variant in ("heap", "bridge"):
        out.heap = build_naive(text)
        if variant == "bridge":
            bundle = build_suffix_array(text)
            d_seq, e_seq = build_depth_arrays(out.heap, bundle)
            out.bridge = HeapArrayBridge(out.heap, d_seq, e_seq)
            out.d_list = d_seq.to_list()
            out.e_list = e_seq.to_list()
        return out
    bundle = build_suffix_array(text)
    out.sa = bundle.sa_list()
    if variant == "simulated":
        heap = build_naive(text)
        d_seq, e_seq = build_depth_arrays(heap, bundle)
        aug = heap_augmented_parens(heap, text, bundle)
        out.sim = SimulatedHeap(SAAccess.from_bundle(bundle), ParenTree(aug),
                                d_seq, e_seq, FirstCharIndex(bundle))
        out.d_list = d_seq.to_list()
        out.e_list = e_seq.to_list()
    else:
        out.sheap = build_suffix_heap(text)
    return out


# -- serialization ----------------------------------------------------------------


def _sections_of(idx: LoadedIndex) -> dict[str, bytes]:
    v = idx.variant
    if v == "dynamic":
        dyn = idx.dyn
        codes = [ord(c) for c in dyn.current_string()]
        sdivs, wdivs = dyn.divider_ids()
        return {
            "text": _pack_ints(codes, "I"),
            "meta": _pack_ints([dyn.m, dyn._next_id, dyn._sep_id, dyn._term_id], "Q"),
            "block_lens": _pack_ints(dyn._block_lens, "Q"),
            "sdivs": _pack_ints(sdivs, "Q"),
            "wdivs": _pack_ints(wdivs, "Q"),
        }
    out = {"text": _pack_ints(list(idx.text.codes), "I")}
    if v in ("heap", "bridge"):
        out["parens"] = heap_parens(idx.heap).encode("ascii")
        out["labels"] = _pack_ints(list(idx.heap.pre_label)[1:], "Q")
    else:
        out["sa"] = _pack_ints(idx.sa, "Q")
        pt = idx.sim.pt if v == "simulated" else idx.sheap.pt
        out["aug"] = pt.to_string().encode("ascii")
    if v in ("bridge", "simulated"):
        out["dseq"] = _pack_ints(idx.d_list, "Q")
        out["eseq"] = _pack_ints(idx.e_list, "Q")
    return out


def _n_of(idx: LoadedIndex) -> int:
    return idx.dyn.n if idx.variant == "dynamic" else idx.text.n


def _alphabet_of(idx: LoadedIndex) -> list[int]:
    if idx.variant == "dynamic":
        return sorted({ord(c) for c in idx.dyn.current_string()})
    return sorted(set(idx.text.codes))


def dump_index(idx: LoadedIndex) -> bytes:
    sections = _sections_of(idx)
    alpha = _alphabet_of(idx)
    out = [MAGIC, struct.pack("<HH", VERSION, _VARIANT_CODE[idx.variant]),
           struct.pack("<Q", _n_of(idx)), struct.pack("<Q", len(alpha)),
           _pack_ints(alpha, "I"), struct.pack("<Q", len(sections))]
    for name in _SECTIONS[idx.variant]:
        blob = sections[name]
        nb = name.encode("ascii")
        out.append(struct.pack("<Q", len(nb)))
        out.append(nb)
        out.append(struct.pack("<Q", len(blob)))
        out.append(blob)
    return b"".join(out)


def save_index(path, idx: LoadedIndex) -> int:
    data = dump_index(idx)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


def section_sizes(idx: LoadedIndex) -> dict[str, int]:
    return {name: len(blob) for name, blob in _sections_of(idx).items()}


# -- loading ----------------------------------------------------------------------


def _rebuild_heap(text: TerminatedText, parens: str, labels: list[int]) -> PositionHeap:
    pt = ParenTree(parens)
    n = text.n
    if pt.star_count or pt.node_count != n + 1 or len(labels) != n:
        raise IndexFormatError("paren stream and label table do not fit the text")
    if sorted(labels) != list(range(1, n + 1)):
        raise IndexFormatError("labels are not a permutation of 1..n")
    heap = PositionHeap(n)
    for t in range(1, n + 1):
        par = pt.parent(t)
        par_label = 0 if par == 0 else labels[par - 1]
        lab = labels[t - 1]
        heap.attach(lab, par_label, text.at(lab + pt.depth(t) - 1))
    heap.finalize()
    return heap


def load_index(data: bytes) -> LoadedIndex:
    """Parse and reconstruct; any inconsistency raises IndexFormatError."""
    try:
        return _load(data)
    except IndexFormatError:
        raise
    except (ValueError, IndexError, KeyError, OverflowError, struct.error) as exc:
        raise IndexFormatError(f"corrupt index file: {exc}") from exc


def load_index_file(path) -> LoadedIndex:
    with open(path, "rb") as fh:
        return load_index(fh.read())


def _load(data: bytes) -> LoadedIndex:
    at = _need(data, 0, 4) - 4
    if data[:4] != MAGIC:
        raise IndexFormatError("bad magic bytes")
    at = _need(data, 4, 4)
    version, vcode = struct.unpack_from("<HH", data, 4)
    if version != VERSION:
        raise IndexFormatError(f"unsupported version {version}")
    if vcode not in _CODE_VARIANT:
        raise IndexFormatError(f"unknown variant code {vcode}")
    variant = _CODE_VARIANT[vcode]
    at = _need(data, at, 8)
    (n,) = struct.unpack_from("<Q", data, at - 8)
    at = _need(data, at, 8)
    (alpha_count,) = struct.unpack_from("<Q", data, at - 8)
    at = _need(data, at, 4 * alpha_count)
    alpha = _unpack_ints(data[at - 4 * alpha_count:at], "I")
    if alpha != sorted(set(alpha)):
        raise IndexFormatError("alphabet table is not sorted and distinct")
    at = _need(data, at, 8)
    (section_count,) = struct.unpack_from("<Q", data, at - 8)
    sections: dict[str, bytes] = {}
    for _ in range(section_count):
        at = _need(data, at, 8)
        (name_len,) = struct.unpack_from("<Q", data, at - 8)
        at = _need(data, at, name_len)
        name = data[at - name_len:at].decode("ascii")
        at = _need(data, at, 8)
        (blob_len,) = struct.unpack_from("<Q", data, at - 8)
        at = _need(data, at, blob_len)
        sections[name] = data[at - blob_len:at]
    if at != len(data):
        raise IndexFormatError("trailing bytes after the section table")
    if tuple(sections) != _SECTIONS[variant]:
        raise IndexFormatError(f"section table {tuple(sections)} does not match "
                               f"variant {variant}")

    codes = _unpack_ints(sections["text"], "I")
    if len(codes) != n:
        raise IndexFormatError("text section length disagrees with the header")
    if sorted(set(codes)) != alpha:
        raise IndexFormatError("alphabet table disagrees with the text")

    if variant == "dynamic":
        meta = _unpack_ints(sections["meta"], "Q")
        if len(meta) != 4:
            raise IndexFormatError("meta section must hold four values")
        m, next_id, sep_id, term_id = meta
        dyn = LimitedIndex.from_parts(
            codes, m, _unpack_ints(sections["block_lens"], "Q"),
            _unpack_ints(sections["sdivs"], "Q"),
            _unpack_ints(sections["wdivs"], "Q"), sep_id, term_id, next_id)
        return LoadedIndex("dynamic", dyn=dyn)

    text = TerminatedText(tuple(codes))
    out = LoadedIndex(variant, text=text)
    if variant in ("heap", "bridge"):
        out.heap = _rebuild_heap(text, sections["parens"].decode("ascii"),
                                 _unpack_ints(sections["labels"], "Q"))
    else:
        out.sa = _unpack_ints(sections["sa"], "Q")
        if sorted(out.sa) != list(range(1, n + 1)):
            raise IndexFormatError("SA section is not a permutation of 1..n")
        bundle = SuffixBundle(text, array("q", out.sa))
        aug = sections["aug"].decode("ascii")
        if variant == "simulated":
            out.d_list = _unpack_ints(sections["dseq"], "Q")
            out.e_list = _unpack_ints(sections["eseq"], "Q")
            out.sim = SimulatedHeap(SAAccess.from_bundle(bundle), ParenTree(aug),
                                    DepthSequence(out.d_list),
                                    DepthSequence(out.e_list),
                                    FirstCharIndex(bundle))
        else:
            out.sheap = SuffixHeap(SAAccess.from_bundle(bundle), ParenTree(aug),
                                   FirstCharIndex(bundle),
                                   None, None, None, None, None)
    if variant == "bridge":
        out.d_list = _unpack_ints(sections["dseq"], "Q")
        out.e_list = _unpack_ints(sections["eseq"], "Q")
        out.bridge = HeapArrayBridge(out.heap, DepthSequence(out.d_list),
                                     DepthSequence(out.e_list))
    return out


# -- queries and verification -------------------------------------------------------


def query_index(idx: LoadedIndex, pattern: str) -> list[int]:
    """Sorted 1-based occurrence positions of pattern, whatever the variant."""
    if idx.variant == "dynamic":
        return idx.dyn.search_limited(pattern)
    if idx.variant in ("heap", "bridge"):
        return search(idx.heap, idx.text, pattern)
    if idx.variant == "simulated":
        return simulated_search(idx.sim, pattern)
    return sheap_search(idx.sheap, pattern)


def verify_index(idx: LoadedIndex) -> list[str]:
    """Variant-appropriate invariant suite; raises IndexFormatError on failure."""
    checks: list[str] = []
    try:
        if idx.variant == "dynamic":
            idx.dyn.check_layout()
            checks.append("layout and relaxed-heap invariants")
            return checks
        if idx.variant in ("heap", "bridge"):
            verify_heap(idx.heap, idx.text)
            checks.append("heap structure against the text")
        if idx.variant == "bridge":
            bundle = build_suffix_array(idx.text)
            d_seq, e_seq = build_depth_arrays(idx.heap, bundle)
            if d_seq.to_list() != idx.d_list or e_seq.to_list() != idx.e_list:
                raise IndexFormatError("depth sequences disagree with recomputation")
            checks.append("depth sequences against recomputation")
        if idx.variant == "simulated":
            bundle = build_suffix_array(idx.text)
            heap = build_naive(idx.text)
            d_seq, e_seq = build_depth_arrays(heap, bundle)
            aug = heap_augmented_parens(heap, idx.text, bundle)
            if (bundle.sa_list() != idx.sa or aug != idx.sim.pt.to_string()
                    or d_seq.to_list() != idx.d_list
                    or e_seq.to_list() != idx.e_list):
                raise IndexFormatError("simulated tables disagree with recomputation")
            checks.append("augmented stream and depth sequences against recomputation")
        if idx.variant == "sheap":
            fresh = build_suffix_heap(idx.text)
            bundle = build_suffix_array(idx.text)
            if (bundle.sa_list() != idx.sa
                    or fresh.pt.to_string() != idx.sheap.pt.to_string()):
                raise IndexFormatError("suffix-heap stream disagrees with recomputation")
            checks.append("suffix-heap stream against recomputation")
    except IndexFormatError:
        raise
    except (ValueError, AssertionError, IndexError) as exc:
        raise IndexFormatError(f"verification failed: {exc}") from exc
    return checks


def index_stats(idx: LoadedIndex) -> dict:
    """Size and shape facts for build/verify reports."""
    out: dict = {"variant": idx.variant, "n": _n_of(idx),
                 "sections": section_sizes(idx)}
    if idx.variant in ("heap", "bridge"):
        out["nodes"] = idx.heap.n + 1
        out["height"] = idx.heap.height
    elif idx.variant == "simulated":
        out["nodes"] = idx.sim.pt.node_count
        out["height"] = max(idx.d_list)
    elif idx.variant == "sheap":
        pt = idx.sheap.pt
        out["nodes"] = pt.node_count
        out["height"] = max(pt.depth(t) for t in range(pt.node_count))
    else:
        dyn = idx.dyn
        sdivs, wdivs = dyn.divider_ids()
        out["nodes"] = len(dyn.rope) + 1
        out["height"] = dyn.heap.height()
        out["max_pattern"] = dyn.m
        out["sprime_dividers"] = len(sdivs)
        out["swindow_dividers"] = len(wdivs)
    return out
