"""Build/query timing over a corpus; machine-readable TSV rows."""

from __future__ import annotations

import random
import time

from .storage import VARIANTS, build_index, query_index

TSV_COLUMNS = ("name", "variant", "n", "build_s", "query_total_s", "queries")


def _sample_patterns(s: str, count: int, max_len: int, rnd: random.Random) -> list[str]:
    out = []
    for _ in range(count):
        ln = rnd.randrange(1, max_len + 1)
        if len(s) > ln:
            at = rnd.randrange(0, len(s) - ln)
            out.append(s[at:at + ln])
        else:
            out.append(s[:1] or "a")
    return out


def run_bench(entries, variants=VARIANTS, max_pattern: int = 8,
              patterns_per_text: int = 4, seed: int = 0) -> list[dict]:
    """One row per (entry, variant): build seconds and total query seconds.

    entries are (name, bytes) pairs; queried patterns are random substrings of
    each text, capped at max_pattern so the dynamic variant accepts them.
    """
    rows = []
    for name, data in entries:
        rnd = random.Random(seed ^ hash(name) & 0xFFFFFFFF)
        s = data.decode("latin-1")
        pats = _sample_patterns(s, patterns_per_text, max(1, max_pattern), rnd)
        for variant in variants:
            t0 = time.perf_counter()
            idx = build_index(data, variant,
                              max_pattern if variant == "dynamic" else None)
            build_s = time.perf_counter() - t0
            t0 = time.perf_counter()
            for pat in pats:
                query_index(idx, pat)
            query_s = time.perf_counter() - t0
            rows.append({"name": name, "variant": variant, "n": len(data) + 1,
                         "build_s": round(build_s, 6),
                         "query_total_s": round(query_s, 6),
                         "queries": len(pats)})
    return rows


def bench_tsv(rows) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        lines.append("\t".join(str(row[c]) for c in TSV_COLUMNS))
    return "\n".join(lines) + "\n"
