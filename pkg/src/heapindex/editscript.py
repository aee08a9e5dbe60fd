"""Edit scripts for the dynamic index: I/D mutate, Q emits one result line."""

from __future__ import annotations

from .dynamic import LimitedIndex


def apply_edit_script(dyn: LimitedIndex, script: str) -> list[str]:
    """Apply `I <pos> <string>` / `D <pos> <len>` / `Q <pattern>` lines in order.

    Returns one output line per Q (space-separated sorted positions, possibly
    empty).  Malformed lines raise ValueError naming the line number; payloads
    may not contain spaces.
    """
    outputs: list[str] = []
    for lineno, raw in enumerate(script.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(" ")
        try:
            if parts[0] == "I" and len(parts) == 3:
                dyn.insert_substring(int(parts[1]), parts[2])
            elif parts[0] == "D" and len(parts) == 3:
                dyn.delete_substring(int(parts[1]), int(parts[2]))
            elif parts[0] == "Q" and len(parts) == 2:
                outputs.append(" ".join(map(str, dyn.search_limited(parts[1]))))
            else:
                raise ValueError(f"unrecognized operation {line!r}")
        except (ValueError, IndexError) as exc:
            raise ValueError(f"script line {lineno}: {exc}") from exc
    return outputs
