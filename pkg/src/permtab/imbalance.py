"""Signed enumeration of tableaux and the generating series behind it.

The *sign* of a tableau is (-1) to the number of unrestricted columns;
the *sign imbalance* s(n) is the sum of signs over all tableaux of
length n.  Under the routing bijection the unrestricted-column count
maps to the number of values that are neither weak excedances nor
mid-points of decreasing triples, so s(n) is also a signed sum over
permutations.  Both computations are provided, together with a closed
form by residue of n mod 4 and a two-term linear recurrence; the four
must agree.

The type-B analogue sums (-1) to the unrestricted statistic over the
shifted tableaux, or equivalently over symmetric permutations of
1..2n; it vanishes for odd n and doubles every second step.

Conventions: length 0 admits exactly one (empty) tableau in both
families, so s(0) = 1 and the type-B value at 0 is 1 as well.  Both
recurrences extend backwards consistently to these seeds.

The series-level statements live here too: the ordinary generating
function of the polynomials sum-of-t^(unrestricted columns) equals
(1 + E) / (1 + (t - 1) x E) with E the weighted sum of rising
factorials, and for fixed n the bivariate polynomial in
(unrestricted rows - 1, top-row ones) is a rising factorial of x + y.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .permstat import enumerate_symmetric_perms, nwnm_count
from .series import BivarPoly, IntPoly, TruncatedSeries, rising_factorial
from .tableaux import count_by_statistics

METHODS = ("enumerate", "permutation", "formula", "recurrence")


def sign_imbalance(n: int, method: str = "enumerate") -> int:
    """Sum of (-1)^(unrestricted columns) over all tableaux of length n.

    ``enumerate`` sweeps the tableaux, ``permutation`` sweeps the
    permutations of 1..n counting values that are neither weak
    excedances nor mid-points, ``formula`` applies the closed form by
    n mod 4, and ``recurrence`` iterates s(n) = 2(s(n-1) - s(n-2)).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "enumerate":
        return sum(
            (-1 if urc % 2 else 1) * count
            for (urc, _urr, _top), count in count_by_statistics(n).items()
        )
    if method == "permutation":
        return sum(
            -1 if nwnm_count(p) % 2 else 1
            for p in permutations(range(1, n + 1))
        )
    if method == "formula":
        k, r = divmod(n, 4)
        if r == 2:
            return 0
        base = (-4) ** k
        return -2 * base if r == 3 else base
    if method == "recurrence":
        prev, cur = 1, 1  # s(0), s(1)
        if n == 0:
            return prev
        for _ in range(n - 1):
            prev, cur = cur, 2 * (cur - prev)
        return cur
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def sign_imbalance_b(n: int, method: str = "enumerate") -> int:
    """Sum of (-1)^(unrestricted statistic) over type-B tableaux of size n.

    ``permutation`` sums over symmetric permutations of 1..2n instead,
    ``formula`` gives 2^(n/2) for even n and 0 for odd, ``recurrence``
    iterates doubling every second step.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "enumerate":
        from .typeb import btableau_statistics, enumerate_btableaux

        return sum(
            btableau_statistics(t).sign for t in enumerate_btableaux(n)
        )
    if method == "permutation":
        return sum(
            -1 if nwnm_count(p) % 2 else 1 for p in enumerate_symmetric_perms(n)
        )
    if method == "formula":
        if n == 0:
            return 1
        return 0 if n % 2 else 2 ** (n // 2)
    if method == "recurrence":
        values = [1, 0, 2]  # n = 0, 1, 2
        if n <= 2:
            return values[n]
        seed = 2 - n % 2  # even n chains back to 2, odd n to 1
        return values[seed] * 2 ** ((n - seed) // 2)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass(frozen=True)
class ImbalanceRecord:
    """One imbalance value computed four independent ways."""

    n: int
    by_enumeration: int
    by_permutation: int
    by_formula: int
    by_recurrence: int

    @property
    def agree(self) -> bool:
        return (
            self.by_enumeration
            == self.by_permutation
            == self.by_formula
            == self.by_recurrence
        )


def sign_imbalance_records(max_n: int) -> tuple[ImbalanceRecord, ...]:
    return tuple(
        ImbalanceRecord(n, *(sign_imbalance(n, m) for m in METHODS))
        for n in range(max_n + 1)
    )


def sign_imbalance_b_records(max_n: int) -> tuple[ImbalanceRecord, ...]:
    return tuple(
        ImbalanceRecord(n, *(sign_imbalance_b(n, m) for m in METHODS))
        for n in range(max_n + 1)
    )


# --- generating series -----------------------------------------------------


def urc_series(cutoff: int) -> TruncatedSeries:
    """Series whose x^n coefficient is the polynomial
    sum over tableaux of length n of t^(unrestricted columns).

    The empty tableau contributes the constant term 1.
    """
    coeffs = []
    for n in range(cutoff + 1):
        by_urc: dict[int, int] = {}
        for (urc, _urr, _top), count in count_by_statistics(n).items():
            by_urc[urc] = by_urc.get(urc, 0) + count
        size = max(by_urc) + 1 if by_urc else 0
        coeffs.append(IntPoly(tuple(by_urc.get(d, 0) for d in range(size))))
    return TruncatedSeries.from_coeffs(cutoff, coeffs)


def weighted_rising_series(cutoff: int) -> TruncatedSeries:
    """E = sum over n >= 1 of n * t(t+1)...(t+n-2) * x^n."""
    t = IntPoly.variable()
    coeffs: list[IntPoly] = [IntPoly.zero()]
    for n in range(1, cutoff + 1):
        coeffs.append(rising_factorial(t, n - 1) * n)
    return TruncatedSeries.from_coeffs(cutoff, coeffs)


def rhs_series(cutoff: int) -> TruncatedSeries:
    """(1 + E) / (1 + (t - 1) x E), truncated at x^cutoff."""
    one = TruncatedSeries.one(cutoff)
    e = weighted_rising_series(cutoff)
    t_minus_1 = IntPoly((-1, 1))
    return (one + e).divide(one + e.scale(t_minus_1).shift(1))


def check_series_identity(cutoff: int = 8) -> bool:
    """Tableau-by-tableau series equals the closed form, to the cutoff."""
    return urc_series(cutoff) == rhs_series(cutoff)


def bivariate_tableau_poly(n: int) -> BivarPoly:
    """Sum over tableaux of length n of x^(unrestricted rows - 1) *
    y^(ones in the topmost row).

    Defined for n >= 1; the exponent on x is safe because the topmost
    row of a nonempty tableau is never row-restricted, so every tableau
    has at least one unrestricted row.
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    terms: dict[tuple[int, int], int] = {}
    for (_urc, urr, top), count in count_by_statistics(n).items():
        key = (urr - 1, top)
        terms[key] = terms.get(key, 0) + count
    return BivarPoly.from_mapping(terms)


def check_bivariate_identity(n: int) -> bool:
    """The bivariate tableau polynomial is the rising factorial
    (x + y)(x + y + 1)...(x + y + n - 2)."""
    lhs = bivariate_tableau_poly(n)
    rhs = rising_factorial(BivarPoly.x() + BivarPoly.y(), n - 1)
    return lhs == rhs
