"""Permutation statistics: weak excedances, mid-points, and the four classes.

Permutations are tuples of the values 1..n.  Position i holds a *weak
excedance* when the value there is at least i.  A value is a *mid-point*
when some larger value sits before it and some smaller value sits after
it (it is the middle letter of a decreasing subsequence of length
three).  Crossing the two properties partitions the values into four
classes; the class of values that are neither weak excedances nor
mid-points is the one whose size drives the sign computations
downstream (``nwnm_count``).

Partial permutations (values known only on a subset of positions) carry
the same statistics, computed over the supported entries with their
original positions; this is what survives when the fixed points of a
symmetric permutation are stripped away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


def check_perm(word: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize a permutation of 1..n."""
    p = tuple(word)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def weak_excedance_positions(p: Sequence[int]) -> frozenset[int]:
    """Positions i with value >= i."""
    return frozenset(i for i, v in enumerate(p, 1) if v >= i)


def _mid_flags(p: Sequence[int]) -> list[bool]:
    """Per position: is the value there a mid-point."""
    n = len(p)
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(p[i], suffix_min[i + 1])
    flags = []
    prefix_max = 0
    for i, v in enumerate(p):
        flags.append(prefix_max > v > suffix_min[i + 1])
        if v > prefix_max:
            prefix_max = v
    return flags


def mid_point_values(p: Sequence[int]) -> frozenset[int]:
    """Values with a larger value before them and a smaller one after."""
    return frozenset(v for v, m in zip(p, _mid_flags(p)) if m)


@dataclass(frozen=True)
class FourSets:
    """The four value classes cut out by weak excedance x mid-point."""

    weak_mid: frozenset[int]
    nonweak_mid: frozenset[int]
    weak_nonmid: frozenset[int]
    nonweak_nonmid: frozenset[int]

    @property
    def nwnm(self) -> int:
        return len(self.nonweak_nonmid)


def four_sets(p: Sequence[int]) -> FourSets:
    """Partition the values of ``p`` into the four classes."""
    mids = _mid_flags(p)
    buckets: dict[tuple[bool, bool], set[int]] = {
        (True, True): set(),
        (True, False): set(),
        (False, True): set(),
        (False, False): set(),
    }
    for i, v in enumerate(p, 1):
        buckets[(v >= i, mids[i - 1])].add(v)
    return FourSets(
        weak_mid=frozenset(buckets[(True, True)]),
        nonweak_mid=frozenset(buckets[(False, True)]),
        weak_nonmid=frozenset(buckets[(True, False)]),
        nonweak_nonmid=frozenset(buckets[(False, False)]),
    )


def four_position_sets(p: Sequence[int]) -> FourSets:
    """Same partition, but holding positions instead of values."""
    mids = _mid_flags(p)
    buckets: dict[tuple[bool, bool], set[int]] = {
        (True, True): set(),
        (True, False): set(),
        (False, True): set(),
        (False, False): set(),
    }
    for i, v in enumerate(p, 1):
        buckets[(v >= i, mids[i - 1])].add(i)
    return FourSets(
        weak_mid=frozenset(buckets[(True, True)]),
        nonweak_mid=frozenset(buckets[(False, True)]),
        weak_nonmid=frozenset(buckets[(True, False)]),
        nonweak_nonmid=frozenset(buckets[(False, False)]),
    )


def nwnm_count(p: Sequence[int]) -> int:
    """Number of values that are neither weak excedances nor mid-points."""
    mids = _mid_flags(p)
    return sum(1 for i, v in enumerate(p, 1) if v < i and not mids[i - 1])


def perm_sign_weight(p: Sequence[int]) -> int:
    """(-1) ** nwnm_count(p)."""
    return -1 if nwnm_count(p) % 2 else 1


# --- symmetric permutations ------------------------------------------------


def is_symmetric_perm(p: Sequence[int]) -> bool:
    """Permutation of 1..2n with p(i) + p(2n+1-i) = 2n+1 for all i."""
    n2 = len(p)
    if n2 % 2:
        return False
    try:
        check_perm(p)
    except ValueError:
        return False
    return all(p[i] + p[n2 - 1 - i] == n2 + 1 for i in range(n2))


def enumerate_symmetric_perms(n: int) -> Iterator[tuple[int, ...]]:
    """All symmetric permutations of 1..2n, ordered by their first half.

    Choosing the value at position i forces 2n+1-v at position 2n+1-i,
    so the first half determines everything; halves are generated in
    lexicographic order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    size = 2 * n
    word = [0] * size
    used = [False] * (size + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(word)
            return
        for v in range(1, size + 1):
            partner = size + 1 - v
            if used[v] or used[partner]:
                continue
            used[v] = used[partner] = True
            word[i - 1] = v
            word[size - i] = partner
            yield from rec(i + 1)
            used[v] = used[partner] = False

    return rec(1)


# --- partial permutations --------------------------------------------------


@dataclass(frozen=True)
class PartialPerm:
    """Values known on a subset of the positions of 1..n.

    ``entries`` is a tuple of (position, value) pairs with positions
    strictly increasing; values are distinct and lie in 1..n.
    """

    n: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        positions = [i for i, _ in self.entries]
        values = [v for _, v in self.entries]
        if positions != sorted(set(positions)):
            raise ValueError("positions must be strictly increasing")
        if len(set(values)) != len(values):
            raise ValueError("values must be distinct")
        if any(x < 1 or x > self.n for x in positions + values):
            raise ValueError(f"positions and values must lie in 1..{self.n}")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "PartialPerm":
        return cls(n, tuple(sorted(mapping.items())))

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)


def drop_fixed_points(p: Sequence[int]) -> PartialPerm:
    """The partial permutation left after removing all fixed points."""
    p = check_perm(p)
    return PartialPerm(
        len(p), tuple((i, v) for i, v in enumerate(p, 1) if v != i)
    )


def _partial_mid_flags(pp: PartialPerm) -> list[bool]:
    values = pp.values
    m = len(values)
    suffix_min = [pp.n + 1] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_min[i] = min(values[i], suffix_min[i + 1])
    flags = []
    prefix_max = 0
    for i, v in enumerate(values):
        flags.append(prefix_max > v > suffix_min[i + 1])
        if v > prefix_max:
            prefix_max = v
    return flags


def nwnm_values_of_partial(pp: PartialPerm) -> frozenset[int]:
    """Supported values that are neither weak excedances nor mid-points.

    Weak excedance compares a value against its original position;
    mid-points are taken within the supported subsequence.
    """
    mids = _partial_mid_flags(pp)
    return frozenset(
        v for (i, v), m in zip(pp.entries, mids) if v < i and not m
    )


def nwnm_of_partial(pp: PartialPerm) -> int:
    return len(nwnm_values_of_partial(pp))


def extend_with_fixed_points(pp: PartialPerm) -> tuple[int, ...]:
    """Complete a partial permutation by fixing every unsupported position.

    Raises ValueError when the completion is not a permutation (some
    supported value collides with an unsupported position's fixed value).
    """
    word = [0] * pp.n
    for i, v in pp.entries:
        word[i - 1] = v
    for i in range(1, pp.n + 1):
        if word[i - 1] == 0:
            word[i - 1] = i
    if sorted(word) != list(range(1, pp.n + 1)):
        raise ValueError("fixed-point completion is not a permutation")
    return tuple(word)
