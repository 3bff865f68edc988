"""Parity-reversing involutions on permutation families.

Everything here flips the parity of ``nwnm_count`` (the number of
values that are neither weak excedances nor mid-points), so each map
cancels its domain out of signed sums.  Three maps cover successively
larger domains:

* ``swap12`` exchanges the values 1 and 2.  It works whenever the first
  letter is not 1 or 2, or the first two letters are exactly 12 or 21.
* ``triple_swap`` handles the remaining words that avoid the four
  blocked prefixes: it exchanges two letters chosen from the values
  {2,3,4} (first letter 1) or {1,3,4} (first letter 2), with four short
  prefixes special-cased because the general rule would land on a
  blocked word.
* ``tail_involution`` skips a leading run of valid *blocks* (length-4
  segments on consecutive values shaped like a blocked word) and applies
  the combined map to the shifted remainder.

Its domain complement - the words made entirely of valid blocks - is
the family whose signed census survives all the cancellation;
``block_census`` enumerates it directly.

``symmetric_swap12`` is the analogue on symmetric permutations of
1..2n: it exchanges 1 with 2 and, to keep the word symmetric, 2n-1
with 2n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .permstat import check_perm, is_symmetric_perm, nwnm_count

BLOCKED_PREFIXES = ((1, 3, 4, 2), (1, 4, 3, 2), (2, 3, 4, 1), (2, 4, 3, 1))
_BLOCKED = frozenset(BLOCKED_PREFIXES)

# Prefixes where the general triple rule would produce a blocked word;
# these swap the values 3 and 4 instead.
_SPECIAL_PREFIXES = frozenset(
    [(1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3)]
)


def _swap_values(p: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    out = list(p)
    ia, ib = out.index(a), out.index(b)
    out[ia], out[ib] = b, a
    return tuple(out)


def avoids_blocked_prefix(p: Sequence[int]) -> bool:
    """First four letters are not literally one of the blocked words."""
    return len(p) < 4 or tuple(p[:4]) not in _BLOCKED


def in_swap12_domain(p: Sequence[int]) -> bool:
    """Where exchanging the values 1 and 2 reverses parity."""
    if len(p) == 0:
        return False
    if p[0] not in (1, 2):
        return True
    return len(p) >= 2 and tuple(p[:2]) in ((1, 2), (2, 1))


def in_triple_swap_domain(p: Sequence[int]) -> bool:
    """Unblocked words starting 1x (x != 2) or 2x (x != 1), length >= 4."""
    return (
        len(p) >= 4
        and avoids_blocked_prefix(p)
        and not in_swap12_domain(p)
    )


def swap12(p: Sequence[int]) -> tuple[int, ...]:
    """Exchange the values 1 and 2."""
    p = check_perm(p)
    if not in_swap12_domain(p):
        raise ValueError("first letter 1 or 2 without its partner next")
    return _swap_values(p, 1, 2)


def triple_swap(p: Sequence[int]) -> tuple[int, ...]:
    """Exchange two small values, chosen so the prefix stays unblocked.

    With first letter 1 the values {2,3,4} sit at positions i < j < k;
    the letters at j and k trade places (mirror case: first letter 2,
    values {1,3,4}).  Four short prefixes are special-cased to swap the
    values 3 and 4 because the general rule would create a blocked word.
    """
    p = check_perm(p)
    if not in_triple_swap_domain(p):
        raise ValueError("not in the triple-swap domain")
    if tuple(p[:4]) in _SPECIAL_PREFIXES:
        return _swap_values(p, 3, 4)
    values = (2, 3, 4) if p[0] == 1 else (1, 3, 4)
    positions = sorted(p.index(v) for v in values)
    _, j, k = positions
    out = list(p)
    out[j], out[k] = out[k], out[j]
    return tuple(out)


def prefix_involution(p: Sequence[int]) -> tuple[int, ...]:
    """The combined parity-reversing involution on unblocked words."""
    p = check_perm(p)
    if not avoids_blocked_prefix(p):
        raise ValueError("word starts with a blocked prefix")
    if in_swap12_domain(p):
        return swap12(p)
    return triple_swap(p)


# --- block permutations ------------------------------------------------------


def _block_ok(p: Sequence[int], i: int) -> bool:
    lo = 4 * (i - 1)
    return tuple(v - lo for v in p[lo : lo + 4]) in _BLOCKED


def is_block_perm(p: Sequence[int]) -> bool:
    """Every length-4 block sits on its own value range, shaped like a blocked word.

    Words shorter than 4 have no blocks and qualify vacuously; for
    length 4k+r the trailing r letters are automatically the r largest
    values, in any order.
    """
    return all(_block_ok(p, i) for i in range(1, len(p) // 4 + 1))


def is_narrow_block_perm(p: Sequence[int]) -> bool:
    """Block permutation (length 4k+3) whose last three letters rise then fall.

    The final triple must be shaped like 132 or 231; these are the block
    words whose signs survive the final cancellation step.
    """
    n = len(p)
    if n % 4 != 3 or not is_block_perm(p):
        return False
    a, b, c = p[-3:]
    ranks = tuple(sorted((a, b, c)).index(v) + 1 for v in (a, b, c))
    return ranks in ((1, 3, 2), (2, 3, 1))


def tail_involution(p: Sequence[int]) -> tuple[int, ...]:
    """Skip leading valid blocks, transform the shifted remainder.

    The first failing block marks the cut; everything before it is kept,
    and the remainder (shifted down to start at 1) goes through
    ``prefix_involution`` and is spliced back.  Words made entirely of
    valid blocks have nothing to transform and are rejected.
    """
    p = check_perm(p)
    k = len(p) // 4
    j = next((i for i in range(1, k + 1) if not _block_ok(p, i)), None)
    if j is None:
        raise ValueError("block permutation: outside the involution's domain")
    cut = 4 * (j - 1)
    shifted = tuple(v - cut for v in p[cut:])
    q = prefix_involution(shifted)
    return p[:cut] + tuple(v + cut for v in q)


def enumerate_block_perms(n: int) -> Iterator[tuple[int, ...]]:
    """All block permutations of 1..n (trailing letters in every order)."""
    k, r = divmod(n, 4)
    block_choices = [
        [tuple(v + 4 * i for v in word) for word in BLOCKED_PREFIXES]
        for i in range(k)
    ]
    tail_values = range(4 * k + 1, n + 1)
    tails = list(itertools.permutations(tail_values))
    for blocks in itertools.product(*block_choices):
        head = tuple(itertools.chain.from_iterable(blocks))
        for tail in tails:
            yield head + tail


@dataclass(frozen=True)
class BlockCensus:
    """Count and signed count of the block permutations of one length."""

    n: int
    count: int
    signed_sum: int
    narrow_count: int | None = None
    narrow_signed_sum: int | None = None


def block_census(n: int) -> BlockCensus:
    """Census of block permutations; lengths 4k+3 also report the narrow family."""
    count = 0
    signed = 0
    narrow_count = narrow_signed = 0
    narrow = n % 4 == 3
    for p in enumerate_block_perms(n):
        count += 1
        s = -1 if nwnm_count(p) % 2 else 1
        signed += s
        if narrow and is_narrow_block_perm(p):
            narrow_count += 1
            narrow_signed += s
    if narrow:
        return BlockCensus(n, count, signed, narrow_count, narrow_signed)
    return BlockCensus(n, count, signed)


# --- symmetric variant -------------------------------------------------------


def in_symmetric_swap_domain(p: Sequence[int]) -> bool:
    """Symmetric permutations of 1..2n not starting with 12 or 21."""
    return (
        len(p) >= 2
        and is_symmetric_perm(p)
        and tuple(p[:2]) not in ((1, 2), (2, 1))
    )


def symmetric_swap12(p: Sequence[int]) -> tuple[int, ...]:
    """Exchange values 1 and 2, and their mirror partners 2n-1 and 2n."""
    p = check_perm(p)
    if not in_symmetric_swap_domain(p):
        raise ValueError("not a symmetric permutation, or prefix is 12/21")
    size = len(p)
    return _swap_values(_swap_values(p, 1, 2), size - 1, size)
