"""Domain types and homogeneity semantics.

Strings are finite words over {0,1}; trees are finite prefix-closed string
sets with the root always present.  A set of naturals h is homogeneous for a
string sigma with color c when sigma shows c at every position of h that it
covers; positions past the end of sigma impose nothing.  All canonical
choices below prefer color 0 over 1 and lexicographically least strings,
with 0 < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class NotPrefixClosed(ValueError):
    """A member's prefix is missing from a would-be tree."""

    def __init__(self, offending: "BitString", missing: "BitString") -> None:
        self.offending = offending
        self.missing = missing
        super().__init__(
            f"'{offending}' is a member but its prefix '{missing}' is not"
        )


class NotGraded(ValueError):
    """The operation needs exactly one string of each length 1..n."""


@dataclass(frozen=True, order=True)
class BitString:
    """A finite {0,1}-word; doubles as a tree node or the prefix of a path.

    Comparison is plain lexicographic on the symbols with 0 < 1, so a proper
    prefix sorts before each of its extensions.
    """

    bits: str = ""

    def __post_init__(self) -> None:
        if self.bits.strip("01"):
            raise ValueError(f"not a binary string: {self.bits!r}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "BitString":
        return cls("".join("1" if v else "0" for v in values))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, x: int) -> int:
        if not 0 <= x < len(self.bits):
            raise IndexError(f"position {x} out of range for length {len(self.bits)}")
        return int(self.bits[x])

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self.bits)

    def __str__(self) -> str:
        return self.bits or "ε"

    def is_prefix_of(self, other: "BitString") -> bool:
        return other.bits.startswith(self.bits)

    def prefix(self, t: int) -> "BitString":
        """The initial segment of length t (all of self if t is larger)."""
        return BitString(self.bits[: max(0, t)])

    def prefixes(self) -> Iterator["BitString"]:
        """Every initial segment, shortest first, root and self included."""
        return (BitString(self.bits[:i]) for i in range(len(self.bits) + 1))

    def extended(self, bit: int) -> "BitString":
        return BitString(self.bits + ("1" if bit else "0"))

    def padded(self, length: int, bit: int = 0) -> "BitString":
        """Self, extended with `bit` up to the requested length."""
        if length <= len(self.bits):
            return self
        return BitString(self.bits + ("1" if bit else "0") * (length - len(self.bits)))


EMPTY = BitString()


def _as_bitstring(s: "BitString | str") -> BitString:
    return s if isinstance(s, BitString) else BitString(s)


def lenlex(s: BitString) -> tuple[int, str]:
    """Sort key ordering strings by length first, then lexicographically."""
    return (len(s.bits), s.bits)


@dataclass(frozen=True)
class FinTree:
    """A finite prefix-closed set of binary strings; the root is a member."""

    members: frozenset[BitString] = frozenset()

    def __post_init__(self) -> None:
        mem = frozenset(self.members) | {EMPTY}
        object.__setattr__(self, "members", mem)
        for sigma in sorted(mem, key=lenlex):
            # The parent check suffices for closure; on failure report the
            # shortest missing prefix.
            if len(sigma) and BitString(sigma.bits[:-1]) not in mem:
                for tau in sigma.prefixes():
                    if tau not in mem:
                        raise NotPrefixClosed(sigma, tau)

    @cached_property
    def horizon(self) -> int:
        """Length of the longest member."""
        return max(len(s) for s in self.members)

    @cached_property
    def _levels(self) -> dict[int, tuple[BitString, ...]]:
        levels: dict[int, list[BitString]] = {}
        for s in sorted(self.members, key=lenlex):
            levels.setdefault(len(s), []).append(s)
        return {l: tuple(v) for l, v in levels.items()}

    def level(self, l: int) -> tuple[BitString, ...]:
        """Members of length l, lexicographically sorted."""
        return self._levels.get(l, ())

    def __contains__(self, s: BitString) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[BitString]:
        return iter(sorted(self.members, key=lenlex))


@dataclass(frozen=True)
class PairColoring:
    """A total 2-coloring of the pairs {(x, y) : 0 <= x < y <= n}.

    rows[y-1][x] holds the color of the pair (x, y).
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be a natural number")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for y, row in enumerate(self.rows, start=1):
            if len(row) != y:
                raise ValueError(f"row for y={y} must have {y} entries")
            if any(c not in (0, 1) for c in row):
                raise ValueError(f"row for y={y} holds a non-color value")

    @classmethod
    def from_function(cls, n: int, fn) -> "PairColoring":
        return cls(
            n, tuple(tuple(int(fn(x, y)) for x in range(y)) for y in range(1, n + 1))
        )

    def value(self, x: int, y: int) -> int:
        if not 0 <= x < y <= self.n:
            raise ValueError(f"pair ({x},{y}) outside 0 <= x < y <= {self.n}")
        return self.rows[y - 1][x]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """All (x, y, color) triples, ordered by (y, x)."""
        for y in range(1, self.n + 1):
            for x in range(y):
                yield x, y, self.rows[y - 1][x]


@dataclass(frozen=True)
class StringFamily:
    """A finite set of binary strings.

    The family is graded when it holds exactly one string of each length
    1..n and nothing else; gradedness is derived from the members so no
    inconsistent state exists.
    """

    members: frozenset[BitString] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def of(cls, strings: Iterable[BitString | str]) -> "StringFamily":
        return cls(frozenset(_as_bitstring(s) for s in strings))

    @cached_property
    def n(self) -> int:
        """Length of the longest member (0 for the empty family)."""
        return max((len(s) for s in self.members), default=0)

    @cached_property
    def graded(self) -> bool:
        lengths = sorted(len(s) for s in self.members)
        return lengths == list(range(1, self.n + 1))

    def of_length(self, l: int) -> tuple[BitString, ...]:
        return tuple(sorted(s for s in self.members if len(s) == l))

    def __contains__(self, s: BitString) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[BitString]:
        return iter(sorted(self.members, key=lenlex))


@dataclass(frozen=True)
class NatSet:
    """A finite set of naturals, stored strictly increasing."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(int(v) for v in self.elements))
        if any(v < 0 for v in self.elements):
            raise ValueError("elements must be naturals")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("elements must be strictly increasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "NatSet":
        return cls(tuple(sorted({int(v) for v in values})))

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.elements)

    def below(self, k: int) -> "NatSet":
        return NatSet(tuple(v for v in self.elements if v < k))

    def __contains__(self, x: int) -> bool:
        return x in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.elements) + "}"


@dataclass(frozen=True)
class HomWitness:
    """A color together with members certifying homogeneity at thresholds."""

    color: int
    witnesses: tuple[BitString, ...]
    thresholds: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.color not in (0, 1):
            raise ValueError("color must be 0 or 1")
        if len(self.witnesses) != len(self.thresholds):
            raise ValueError("one threshold per witness")
        for w, t in zip(self.witnesses, self.thresholds):
            if len(w) < t:
                raise ValueError(f"witness '{w}' shorter than its threshold {t}")


def validate_tree(strings: Iterable[BitString | str]) -> FinTree:
    """Wrap a string set as a tree, adding the root; reject unclosed sets."""
    return FinTree(frozenset(_as_bitstring(s) for s in strings))


def downward_closure(family: StringFamily | Iterable[BitString | str]) -> FinTree:
    """The tree of all prefixes of the family's members."""
    members = getattr(family, "members", family)
    closed = {
        tau for sigma in members for tau in _as_bitstring(sigma).prefixes()
    }
    closed.add(EMPTY)
    return FinTree(frozenset(closed))


def is_homog_string(h: NatSet, sigma: BitString, c: int) -> bool:
    """Whether sigma shows color c at every position of h it covers."""
    return all(sigma[x] == c for x in h if x < len(sigma))


def is_homog_path(h: NatSet, t: FinTree, horizon: int) -> HomWitness | None:
    """A single long witness: a member of length >= horizon monochromatic on h.

    Prefers color 0 over 1, then the lexicographically least witness.  The
    requested horizon must not exceed the tree's own.
    """
    if horizon > t.horizon:
        raise ValueError(f"horizon {horizon} exceeds tree horizon {t.horizon}")
    for c in (0, 1):
        wits = [s for s in t.members if len(s) >= horizon and is_homog_string(h, s, c)]
        if wits:
            return HomWitness(color=c, witnesses=(min(wits),), thresholds=(horizon,))
    return None


def is_homog_graded(h: NatSet, family: StringFamily) -> int | None:
    """The fixed color working for every member whose length lies in h.

    Requires a graded family.  Vacuous instances resolve to color 0.
    """
    if not family.graded:
        raise NotGraded("family is not graded")
    relevant = [s for s in family.members if len(s) in h]
    for c in (0, 1):
        if all(is_homog_string(h, s, c) for s in relevant):
            return c
    return None
