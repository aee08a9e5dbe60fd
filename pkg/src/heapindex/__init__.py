"""Position-heap text indexing: static, dynamic, array-backed and simulated variants."""

from __future__ import annotations

from heapindex.bridge import (HeapArrayBridge, SimulatedHeap, build_depth_arrays,
                              build_simulated, heap_augmented_parens, heap_parens,
                              simulated_search)
from heapindex.dynamic import LimitedIndex, new_limited
from heapindex.heap import (PositionHeap, build_naive, compute_maximal_reach,
                            maximal_reach_of, search, verify_heap)
from heapindex.sheap import SuffixHeap, build_suffix_heap, sheap_search
from heapindex.st2heap import ConversionInfo, suffix_tree_to_heap
from heapindex.storage import (IndexFormatError, build_index, dump_index, index_stats,
                               load_index, query_index, save_index, verify_index)
from heapindex.suffixes import SuffixBundle, build_suffix_array
from heapindex.suffixtree import SuffixTree, sa_to_suffix_tree
from heapindex.text import TerminatedText, pattern_codes

__version__ = "0.1.0"

__all__ = [
    "ConversionInfo",
    "HeapArrayBridge",
    "IndexFormatError",
    "LimitedIndex",
    "PositionHeap",
    "SimulatedHeap",
    "SuffixBundle",
    "SuffixHeap",
    "SuffixTree",
    "TerminatedText",
    "__version__",
    "build_depth_arrays",
    "build_index",
    "build_naive",
    "build_simulated",
    "build_suffix_array",
    "build_suffix_heap",
    "compute_maximal_reach",
    "dump_index",
    "heap_augmented_parens",
    "heap_parens",
    "index_stats",
    "load_index",
    "maximal_reach_of",
    "new_limited",
    "pattern_codes",
    "query_index",
    "sa_to_suffix_tree",
    "save_index",
    "search",
    "sheap_search",
    "simulated_search",
    "suffix_tree_to_heap",
    "verify_heap",
    "verify_index",
]
