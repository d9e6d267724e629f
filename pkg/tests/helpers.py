"""Shared strategies and independent brute-force oracles for the test suite.

The oracles here deliberately use the dumbest possible algorithms (full
subset enumeration, direct re-evaluation) so the library's cleverer
implementations are checked against something with no shared code.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from rkl.core import BitString, NatSet, PairColoring, StringFamily, downward_closure


def bitstrings(max_len: int = 10):
    return st.text(alphabet="01", max_size=max_len).map(BitString)


def nonempty_bitstrings(max_len: int = 10):
    return st.text(alphabet="01", min_size=1, max_size=max_len).map(BitString)


def natsets(max_value: int = 24, max_size: int = 8):
    return st.frozensets(st.integers(0, max_value), max_size=max_size).map(NatSet.of)


def string_families(max_len: int = 8, max_members: int = 6):
    return st.frozensets(bitstrings(max_len), max_size=max_members).map(StringFamily)


def trees(max_len: int = 8, max_members: int = 5):
    return st.frozensets(bitstrings(max_len), min_size=1, max_size=max_members).map(
        downward_closure
    )


def _coloring_from_flat(n: int, flat: list[int]) -> PairColoring:
    rows, i = [], 0
    for y in range(1, n + 1):
        rows.append(tuple(flat[i : i + y]))
        i += y
    return PairColoring(n, tuple(rows))


def colorings(max_n: int = 8, min_n: int = 0):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.integers(0, 1), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2
        ).map(lambda flat: _coloring_from_flat(n, flat))
    )


def graded_families(max_n: int = 8, min_n: int = 0):
    def build(codes: list[int]) -> StringFamily:
        return StringFamily.of(
            BitString(format(code % (1 << y), f"0{y}b")) for y, code in enumerate(codes, start=1)
        )

    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(st.integers(0, (1 << max_n) - 1), min_size=n, max_size=n).map(build)
    )


def monochromatic_color(f: PairColoring, subset: tuple[int, ...]) -> int | None:
    """The unique color on all pairs from the subset, or None."""
    seen = {f.value(x, y) for x, y in itertools.combinations(subset, 2)}
    return seen.pop() if len(seen) == 1 else None


def naive_ramsey(f: PairColoring, min_size: int) -> tuple[int, NatSet] | None:
    """Full subset enumeration; the canonical-answer oracle for ramsey_search."""
    vertices = range(f.n + 1)
    for size in range(f.n + 1, min_size - 1, -1):
        for combo in itertools.combinations(vertices, size):
            c = monochromatic_color(f, combo)
            if c is not None:
                return c, NatSet(combo)
    return None
