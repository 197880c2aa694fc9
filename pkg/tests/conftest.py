from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from greencomplex.complex import Graph  # noqa: E402


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(tuple(range(n)), frozenset(p for p, keep in zip(pairs, mask) if keep))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        parts = results[n]
        ok = all(passed for _, passed in parts)
        failed = [name for name, passed in parts if not passed]
        line = f"criterion {n} ({mod.TITLES[n]}): {'PASS' if ok else 'FAIL'}"
        if failed:
            line += "  -- failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
