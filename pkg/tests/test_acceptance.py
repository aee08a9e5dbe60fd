"""End-to-end acceptance checks; each criterion reports one PASS/FAIL line."""

from __future__ import annotations

import gc
import random
import string
import time
from contextlib import contextmanager
from dataclasses import dataclass

import conftest

from heapindex.bridge import (HeapArrayBridge, build_depth_arrays, build_simulated,
                              heap_augmented_parens, simulated_search)
from heapindex.dynamic import new_limited
from heapindex.heap import build_naive, maximal_reach_of, search
from heapindex.sheap import build_suffix_heap, sheap_search
from heapindex.st2heap import suffix_tree_to_heap
from heapindex.suffixes import build_suffix_array
from heapindex.suffixtree import sa_to_suffix_tree
from heapindex.text import TerminatedText

from oracles import ShadowText, occurrences, random_text, sample_pattern

S0 = "abaababbabbab$"
PRE0 = [0, 14, 1, 3, 4, 12, 6, 9, 2, 13, 5, 8, 11, 7, 10]
REACH0 = [4, 5, 3, 4, 8, 9, 10, 8, 9, 10, 11, 12, 13, 14]
AUG_HEAP0 = "((*)((*)((*)**((**))))((*)(*((*)**))((**))))"
AUG_SHEAP0 = "((*)(*(*(*(*))((**))))(*(*(*((**))))((**))))"
SA0 = [14, 3, 12, 1, 4, 9, 6, 13, 2, 11, 8, 5, 10, 7]
ISA0 = [4, 9, 2, 5, 12, 7, 14, 11, 6, 13, 10, 3, 8, 1]
D0 = [1, 2, 3, 1, 2, 4, 3, 2, 1, 4, 3, 2, 3, 2]
E0 = [1, 1, 2, 2, 3, 3, 4, 1, 2, 2, 3, 4, 2, 3]


@dataclass
class Outcome:
    ok: bool = False
    detail: str = ""


def _emit(num: int, name: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}  {name} -- {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


@contextmanager
def criterion(num: int, name: str):
    out = Outcome()
    try:
        yield out
    except BaseException as exc:
        _emit(num, name, False, f"{type(exc).__name__}: {exc}")
        raise
    _emit(num, name, out.ok, out.detail)
    assert out.ok, f"criterion {num} ({name}): {out.detail}"


def _flag(v: bool) -> str:
    return "ok" if v else "BAD"


def test_criterion_01_golden_structure():
    with criterion(1, "golden heap structure") as out:
        t0 = time.perf_counter()
        text = TerminatedText.from_text(S0)
        heap = build_naive(text)
        aug = heap_augmented_parens(heap, text, build_suffix_array(text))
        elapsed = time.perf_counter() - t0
        pre_ok = list(heap.pre_label) == PRE0
        reach_ok = list(maximal_reach_of(heap, text))[1:] == REACH0
        aug_ok = aug == AUG_HEAP0
        out.ok = pre_ok and reach_ok and aug_ok and elapsed < 1.0
        out.detail = (f"preorder {_flag(pre_ok)}, reach links {_flag(reach_ok)}, "
                      f"annotated parens {_flag(aug_ok)}, {elapsed * 1000:.1f} ms")


def test_criterion_02_golden_search():
    with criterion(2, "golden multi-round search") as out:
        t0 = time.perf_counter()
        text = TerminatedText.from_text(S0)
        heap = build_naive(text)
        trace: list = []
        hits = search(heap, text, "aabab", trace)
        elapsed = time.perf_counter() - t0
        out.ok = hits == [3] and trace[0]["candidates"] == [3] and elapsed < 1.0
        out.detail = (f"hits {hits}, round-1 candidates {trace[0]['candidates']}, "
                      f"{elapsed * 1000:.1f} ms")


def test_criterion_03_golden_arrays():
    with criterion(3, "golden depth and suffix arrays") as out:
        text = TerminatedText.from_text(S0)
        bundle = build_suffix_array(text)
        d_seq, e_seq = build_depth_arrays(build_naive(text), bundle)
        checks = {"D": d_seq.to_list() == D0, "E": e_seq.to_list() == E0,
                  "SA": bundle.sa_list() == SA0, "SA^-1": bundle.isa_list() == ISA0}
        out.ok = all(checks.values())
        out.detail = ", ".join(f"{k} {_flag(v)}" for k, v in checks.items())


def test_criterion_04_bridge_walkthroughs():
    with criterion(4, "bridge and simulated-heap walkthroughs") as out:
        text = TerminatedText.from_text(S0)
        heap = build_naive(text)
        bridge = HeapArrayBridge(heap, *build_depth_arrays(heap, build_suffix_array(text)))
        sim = build_simulated(text)
        node8 = sim.sim_node_of_label(8)
        node13 = sim.sim_node_of_label(13)
        checks = {
            "sa_access(8)=13": bridge.sa_at(8) == 13,
            "isa_access(13)=8": bridge.isa_at(13) == 8,
            "sim_label(10)=13": sim.sim_label(10) == 13,
            "sim_maximal_reach(5)=node 8": sim.sim_maximal_reach(5) == node8 == 12,
            "sim_edge_label(node 13)='$'": node13 == 10 and sim.sim_edge_label(node13) == "$",
        }
        out.ok = all(checks.values())
        out.detail = ", ".join(k if v else f"{k} BAD" for k, v in checks.items())


def test_criterion_05_sheap_walkthroughs():
    with criterion(5, "suffix-heap walkthroughs") as out:
        sheap = build_suffix_heap(TerminatedText.from_text(S0))
        checks = {
            "stream byte-exact": sheap.pt.to_string() == AUG_SHEAP0,
            "sheap_maximal_reach(6)=7": sheap.sheap_maximal_reach(6) == 7,
            "search('aabab')={3}": sheap_search(sheap, "aabab") == [3],
            "SA[2]=3": sheap.acc.sa(2) == 3,
            "SA^-1[4]=5": sheap.acc.isa(4) == 5,
            "sheap_edge_label(13)='b'": sheap.sheap_edge_label(13) == "b",
        }
        out.ok = all(checks.values())
        out.detail = ", ".join(k if v else f"{k} BAD" for k, v in checks.items())


def test_criterion_06_limited_layout():
    with criterion(6, "limited-height layout golden") as out:
        idx = new_limited(S0, 3)
        blocks0, windows0 = idx.blocks(), idx.windows()
        ids0 = idx.divider_ids()
        idx.check_layout()
        idx.insert_substring(5, "bba")
        idx.check_layout()
        checks = {
            "S' blocks before": blocks0 == ["abaaba", "bbabba", "b$"],
            "S'' windows before": windows0 == ["ababba", "bbab$"],
            "S' blocks after": idx.blocks() == ["abaabbaba", "bbabba", "b$"],
            "S'' windows after": idx.windows() == ["ababba", "bbab$"],
            "divider identities": (len(ids0[0]) == 2 and len(ids0[1]) == 1
                                   and idx.divider_ids() == ids0),
            "edited text": idx.current_string() == "abaabbababbabbab$",
        }
        out.ok = all(checks.values())
        out.detail = ", ".join(k if v else f"{k} BAD" for k, v in checks.items())


def test_criterion_07_oracle_equivalence():
    with criterion(7, "four search paths vs naive scan") as out:
        rng = random.Random(0xACC07)
        t0 = time.perf_counter()
        sizes = [rng.randrange(2, 300) for _ in range(200)]
        sizes += [rng.randrange(300, 2001) for _ in range(50)]
        cases = mismatches = 0
        for n in sizes:
            s = random_text(rng, n, rng.choice([1, 2, 4, 26]))
            text = TerminatedText.from_text(s)
            heap = build_naive(text)
            sim = build_simulated(text)
            sheap = build_suffix_heap(text)
            dyn = new_limited(s, 8)
            for _ in range(4):
                pat = sample_pattern(rng, s, 8)
                want = sorted(occurrences(s, pat))
                got = (search(heap, text, pat), simulated_search(sim, pat),
                       sheap_search(sheap, pat), dyn.search_limited(pat))
                cases += 1
                mismatches += any(g != want for g in got)
        elapsed = time.perf_counter() - t0
        out.ok = cases == 1000 and mismatches == 0 and elapsed < 60.0
        out.detail = (f"{cases} cases (n <= 2000, alphabets 1/2/4/26), "
                      f"{mismatches} mismatches, {elapsed:.1f} s (< 60 s)")


def test_criterion_08_construction_equivalence():
    with criterion(8, "suffix-tree conversion vs naive build") as out:
        rng = random.Random(0xACC08)
        bad = 0
        for _ in range(500):
            s = random_text(rng, rng.randrange(1, 1001), rng.choice([1, 2, 4, 26]))
            text = TerminatedText.from_text(s)
            conv, _ = suffix_tree_to_heap(sa_to_suffix_tree(build_suffix_array(text)), text)
            ref = build_naive(text)
            same = (list(conv.parent) == list(ref.parent)
                    and list(conv.echar) == list(ref.echar)
                    and list(conv.pre_label) == list(ref.pre_label))
            bad += not same
        out.ok = bad == 0
        out.detail = f"500 texts (n <= 1000), {bad} mismatches"


def test_criterion_09_dynamic_scripts():
    with criterion(9, "dynamic edit scripts vs shadow oracle") as out:
        rng = random.Random(0xACC09)
        edits = queries = 0
        min_slack = 10 ** 9
        for _ in range(200):
            m = rng.choice([1, 2, 3, 8])
            s = random_text(rng, rng.randrange(1, 31), rng.choice([1, 2, 4, 26]))
            idx = new_limited(s, m)
            shadow = ShadowText(s)
            idx.check_layout()
            for _ in range(rng.randrange(10, 51)):
                r = rng.random()
                n = len(shadow.s)
                if r < 0.45 or n < 2:
                    pos = rng.randrange(1, n + 1)
                    cap = min(6 * m, 20) if rng.random() < 0.1 else min(3 * m, 12)
                    chunk = "".join(rng.choice("abcd")
                                    for _ in range(rng.randrange(0, cap + 1)))
                    idx.insert_substring(pos, chunk)
                    shadow.insert(pos, chunk)
                    edits += 1
                elif r < 0.75:
                    pos = rng.randrange(1, n)
                    length = rng.randrange(0, min(3 * m, 10, n - pos) + 1)
                    idx.delete_substring(pos, length)
                    shadow.delete(pos, length)
                    edits += 1
                else:
                    pat = sample_pattern(rng, shadow.s, m)
                    assert idx.search_limited(pat) == sorted(occurrences(shadow.s, pat))
                    queries += 1
                idx.check_layout(deep=False)
                min_slack = min(min_slack, 8 * m + 4 - idx.heap.height())
            idx.check_layout(deep=True)
            pat = sample_pattern(rng, shadow.s, m)
            assert idx.search_limited(pat) == sorted(occurrences(shadow.s, pat))
            queries += 1
            assert idx.current_string() == shadow.s
        out.ok = min_slack >= 0
        out.detail = (f"200 scripts (M in 1/2/3/8), {edits} edits, {queries} queries, "
                      f"0 mismatches, layout checked after every op, "
                      f"min height slack to 8M+4 = {min_slack}")


def test_criterion_10_complexity_smoke():
    with criterion(10, "instrumented complexity smoke tests") as out:
        rng = random.Random(0xACC10)

        def build_time(n: int) -> float:
            s = "".join(rng.choices(string.ascii_lowercase, k=n - 1)) + "$"
            text = TerminatedText.from_text(s)
            gc.collect()
            t0 = time.perf_counter()
            heap = build_naive(text)
            maximal_reach_of(heap, text)
            return time.perf_counter() - t0

        t_half = min(build_time(500_000) for _ in range(2))
        t_full = min(build_time(1_000_000) for _ in range(2))
        build_ratio = t_full / t_half

        def convert_time(sigma: int) -> float:
            text = TerminatedText.from_text(random_text(rng, 100_000, sigma))
            tree = sa_to_suffix_tree(build_suffix_array(text))
            gc.collect()
            t0 = time.perf_counter()
            suffix_tree_to_heap(tree, text)
            return time.perf_counter() - t0

        t2 = min(convert_time(2) for _ in range(2))
        t26 = min(convert_time(26) for _ in range(2))
        conv_ratio = max(t2, t26) / min(t2, t26)

        worst_c = 0.0
        for m in (1, 2, 3, 8):
            idx = new_limited(random_text(rng, 2000, 4), m)
            for _ in range(40):
                n = idx.n
                if rng.random() < 0.5:
                    length = rng.randrange(0, 3 * m + 1)
                    chunk = "".join(rng.choice("abcd") for _ in range(length))
                    idx.insert_substring(rng.randrange(1, n + 1), chunk)
                else:
                    pos = rng.randrange(1, n)
                    length = rng.randrange(0, min(3 * m, n - pos) + 1)
                    idx.delete_substring(pos, length)
                worst_c = max(worst_c, idx.last_edit_touched / (m + length + 1))
        out.ok = 1.6 <= build_ratio <= 3.0 and conv_ratio < 2.0 and worst_c <= 64.0
        out.detail = (f"build 1e6/5e5 time ratio {build_ratio:.2f} (in [1.6, 3.0]), "
                      f"conversion alphabet-2/26 ratio {conv_ratio:.2f} (< 2.0), "
                      f"edit touched <= c*(M+len+1) with c = {worst_c:.1f} (cap 64)")


def test_criterion_11_space_audit():
    with criterion(11, "suffix-heap auxiliary space") as out:
        rng = random.Random(0xACC11)
        readings = []
        worst = 0.0
        for n in (1000, 5000, 20000):
            for sigma in (2, 26):
                sheap = build_suffix_heap(TerminatedText.from_text(random_text(rng, n, sigma)))
                c = sheap.aux_bit_size() / n
                worst = max(worst, c)
            readings.append(f"n={n}: {c:.2f} bits/char")
        out.ok = worst <= 16.0
        out.detail = f"{'; '.join(readings)}; max c = {worst:.2f} (cap 16)"
