"""Exhaustive machine checks for the library's named identities.

Each claim pairs an identifier (the token accepted by the command-line
``verify`` subcommand) with a runner that sweeps every object up to a
size bound and returns ``None`` on success or a small JSON-friendly
witness for the first failure.  The identifiers are fixed contract
tokens; their meaning is spelled out in the description strings below.

Runners that sweep all tableaux shard the work by (length, column-label
set) and can spread shards over worker processes; results are merged in
shard order, so the reported witness does not depend on the process
count.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from multiprocessing import Pool
from typing import Callable, Optional

from .imbalance import (
    check_bivariate_identity,
    check_series_identity,
    sign_imbalance,
    sign_imbalance_b_records,
    sign_imbalance_records,
    urc_series,
)
from .involutions import (
    in_swap12_domain,
    in_symmetric_swap_domain,
    in_triple_swap_domain,
    swap12,
    symmetric_swap12,
    triple_swap,
)
from .permstat import (
    drop_fixed_points,
    enumerate_symmetric_perms,
    four_sets,
    nwnm_count,
    nwnm_values_of_partial,
)
from .tableaux import (
    column_label_sets,
    fillings,
    shape_from_column_labels,
    statistics,
    tableau_to_dict,
)
from .typeb import (
    btableau_statistics,
    btableau_to_dict,
    enumerate_btableaux,
    symmetrize,
    to_symmetric_perm,
)
from .zigzag import (
    path_intersection_violations,
    restriction_sets_match,
    row_labels_are_weak_excedances,
)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one claim run."""

    claim: str
    n_range: tuple[int, int]
    status: str  # "pass" or "fail"
    witness: Optional[object]
    wall_time_s: float

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "n_range": list(self.n_range),
            "status": self.status,
            "witness": self.witness,
            "wall_time_s": round(self.wall_time_s, 3),
        }


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    min_n: int
    default_max_n: int
    runner: Callable[[int, int], Optional[object]]


# --- sharded tableau sweeps --------------------------------------------------


def _sweep_shards(worker, shards, threads: int):
    """First witness in shard order, optionally across processes."""
    if threads <= 1:
        for shard in shards:
            found = worker(shard)
            if found is not None:
                return found
        return None
    with Pool(threads) as pool:
        for found in pool.imap(worker, shards):
            if found is not None:
                return found
    return None


def _tableau_shards(max_n: int):
    return [
        (n, cols) for n in range(max_n + 1) for cols in column_label_sets(n)
    ]


def _restriction_shard(shard):
    n, cols = shard
    for t in fillings(shape_from_column_labels(n, cols)):
        if not restriction_sets_match(t):
            return {"n": n, "tableau": tableau_to_dict(t)}
    return None


def _weak_excedance_shard(shard):
    n, cols = shard
    for t in fillings(shape_from_column_labels(n, cols)):
        if not row_labels_are_weak_excedances(t):
            return {"n": n, "tableau": tableau_to_dict(t)}
    return None


def _path_shard(shard):
    n, cols = shard
    for t in fillings(shape_from_column_labels(n, cols)):
        violations = path_intersection_violations(t)
        if violations:
            v = violations[0]
            return {
                "n": n,
                "tableau": tableau_to_dict(t),
                "kind": v.kind,
                "entries": list(v.entries),
            }
    return None


# --- claim runners -----------------------------------------------------------


def _run_eq11(max_n: int, threads: int):
    for n in range(1, max_n + 1):
        if not check_bivariate_identity(n):
            return {"n": n}
    return None


def _run_thm11(max_n: int, threads: int):
    if not check_series_identity(max_n):
        return {"cutoff": max_n, "detail": "series and closed form differ"}
    series = urc_series(max_n)
    at_one = series.specialize(1)
    counts = tuple(factorial(n) for n in range(max_n + 1))
    if at_one != counts:
        return {"detail": "specialization at 1 is not the factorials"}
    at_minus_one = series.specialize(-1)
    imbalances = tuple(sign_imbalance(n, "formula") for n in range(max_n + 1))
    if at_minus_one != imbalances:
        return {"detail": "specialization at -1 is not the sign imbalance"}
    return None


def _run_thm12(max_n: int, threads: int):
    for rec in sign_imbalance_records(max_n):
        if not rec.agree:
            return {
                "n": rec.n,
                "values": [
                    rec.by_enumeration,
                    rec.by_permutation,
                    rec.by_formula,
                    rec.by_recurrence,
                ],
            }
    return None


def _run_thm13(max_n: int, threads: int):
    values = [sign_imbalance(n, "enumerate") for n in range(max_n + 1)]
    seeds = values[: 2]
    if seeds != [1, 1][: len(seeds)]:
        return {"detail": "seed values differ", "values": seeds}
    for n in range(2, max_n + 1):
        expected = 2 * (values[n - 1] - values[n - 2])
        if values[n] != expected:
            return {"n": n, "enumerated": values[n], "recurrence": expected}
    return None


def _run_lemma21(max_n: int, threads: int):
    return _sweep_shards(_restriction_shard, _tableau_shards(max_n), threads)


def _run_lemma22(max_n: int, threads: int):
    for n in range(1, max_n + 1):
        for p in permutations(range(1, n + 1)):
            if not in_swap12_domain(p):
                continue
            q = swap12(p)
            if q == p or not in_swap12_domain(q) or swap12(q) != p:
                return {"n": n, "perm": list(p), "detail": "not an involution"}
            if abs(nwnm_count(q) - nwnm_count(p)) != 1:
                return {"n": n, "perm": list(p), "detail": "parity not flipped"}
    return None


def _run_lemma23(max_n: int, threads: int):
    for n in range(4, max_n + 1):
        for p in permutations(range(1, n + 1)):
            if not in_triple_swap_domain(p):
                continue
            q = triple_swap(p)
            if q == p or not in_triple_swap_domain(q) or triple_swap(q) != p:
                return {"n": n, "perm": list(p), "detail": "not an involution"}
            if abs(nwnm_count(q) - nwnm_count(p)) != 1:
                return {"n": n, "perm": list(p), "detail": "parity not flipped"}
    return None


def _run_prop21(max_n: int, threads: int):
    return _sweep_shards(_weak_excedance_shard, _tableau_shards(max_n), threads)


def _run_prop22(max_n: int, threads: int):
    return _sweep_shards(_path_shard, _tableau_shards(max_n), threads)


def _run_prop31(max_n: int, threads: int):
    for n in range(max_n + 1):
        for t in enumerate_btableaux(n):
            sym = symmetrize(t)
            p = to_symmetric_perm(t)
            rows = set(sym.symmetric.shape.rows)
            cols = set(sym.symmetric.shape.cols)
            for i, v in enumerate(p, 1):
                if v == i:
                    ok = i in (cols if i <= n else rows)
                else:
                    ok = i in (rows if v > i else cols)
                if not ok:
                    return {
                        "n": n,
                        "tableau": btableau_to_dict(t),
                        "position": i,
                    }
    return None


def _run_lemma31(max_n: int, threads: int):
    for n in range(max_n + 1):
        by_tableau: Counter = Counter()
        for t in enumerate_btableaux(n):
            stats = btableau_statistics(t)
            by_tableau[stats.ur] += 1
            p = to_symmetric_perm(t)
            reduced = nwnm_values_of_partial(drop_fixed_points(p))
            if reduced != four_sets(p).nonweak_nonmid:
                return {
                    "n": n,
                    "tableau": btableau_to_dict(t),
                    "detail": "reduced word misses the non-weak non-mid set",
                }
            if stats.ur != len(reduced):
                return {
                    "n": n,
                    "tableau": btableau_to_dict(t),
                    "detail": "unrestricted statistic differs from the image",
                }
        by_perm = Counter(
            nwnm_count(p) for p in enumerate_symmetric_perms(n)
        )
        if by_tableau != by_perm:
            return {"n": n, "detail": "distributions differ"}
    return None


def _run_thm31(max_n: int, threads: int):
    for rec in sign_imbalance_b_records(max_n):
        if not rec.agree:
            return {
                "n": rec.n,
                "values": [
                    rec.by_enumeration,
                    rec.by_permutation,
                    rec.by_formula,
                    rec.by_recurrence,
                ],
            }
    for n in range(min(max_n, 4) + 1):
        for p in enumerate_symmetric_perms(n):
            if not in_symmetric_swap_domain(p):
                continue
            q = symmetric_swap12(p)
            if (
                q == p
                or not in_symmetric_swap_domain(q)
                or symmetric_swap12(q) != p
            ):
                return {"n": n, "perm": list(p), "detail": "not an involution"}
            if abs(nwnm_count(q) - nwnm_count(p)) != 1:
                return {"n": n, "perm": list(p), "detail": "parity not flipped"}
    return None


def _run_urb_eq_urc(max_n: int, threads: int):
    for n in range(max_n + 1):
        for t in enumerate_btableaux(n):
            core = symmetrize(t).core
            if btableau_statistics(t).ur != statistics(core).urc:
                return {"n": n, "tableau": btableau_to_dict(t)}
    return None


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in (
        Claim(
            "eq1.1",
            "per length, the tableau polynomial in (unrestricted rows - 1,"
            " top-row ones) equals the rising factorial of x + y",
            1,
            9,
            _run_eq11,
        ),
        Claim(
            "thm1.1",
            "the series of t^(unrestricted columns) polynomials equals"
            " (1 + E)/(1 + (t - 1)xE), specializing to factorials at t = 1"
            " and to the sign imbalance at t = -1",
            0,
            8,
            _run_thm11,
        ),
        Claim(
            "thm1.2",
            "sign imbalance agrees across the tableau sweep, the"
            " permutation sweep, the closed form, and the recurrence",
            0,
            8,
            _run_thm12,
        ),
        Claim(
            "thm1.3",
            "enumerated sign imbalance satisfies s(n) = 2(s(n-1) - s(n-2))",
            0,
            9,
            _run_thm13,
        ),
        Claim(
            "lemma2.1",
            "routing sends the four restriction label sets onto the four"
            " excedance/mid-point classes of the image permutation",
            0,
            8,
            _run_lemma21,
        ),
        Claim(
            "lemma2.2",
            "swapping the values 1 and 2 is a parity-flipping involution"
            " on words that do not start with either value (plus the two"
            " two-letter prefixes)",
            1,
            8,
            _run_lemma22,
        ),
        Claim(
            "lemma2.3",
            "the triple swap is a parity-flipping involution on the"
            " remaining words with no blocked four-letter prefix",
            4,
            8,
            _run_lemma23,
        ),
        Claim(
            "prop2.1",
            "row labels of a tableau are exactly the weak excedance"
            " positions of its image permutation",
            0,
            8,
            _run_prop21,
        ),
        Claim(
            "prop2.2",
            "two routes never share an edge, and wherever they meet after"
            " their first common cell the filling holds a 1",
            0,
            7,
            _run_prop22,
        ),
        Claim(
            "prop3.1",
            "in the doubled tableau, small fixed points label columns,"
            " large fixed points label rows, and non-fixed labels follow"
            " the excedance rule",
            0,
            5,
            _run_prop31,
        ),
        Claim(
            "lemma3.1",
            "the unrestricted statistic equals the count of values of the"
            " symmetric image that are neither weak excedances nor"
            " mid-points, computable on the reduced word",
            0,
            5,
            _run_lemma31,
        ),
        Claim(
            "thm3.1",
            "type-B sign imbalance agrees four ways and the symmetric"
            " value swap is a parity-flipping involution",
            0,
            5,
            _run_thm31,
        ),
        Claim(
            "urB-eq-urc",
            "the type-B unrestricted statistic equals the number of"
            " unrestricted columns of the core",
            0,
            5,
            _run_urb_eq_urc,
        ),
    )
}


def run_claim(
    claim_id: str, max_n: Optional[int] = None, threads: int = 1
) -> VerifyReport:
    """Run one registered claim and time it.

    ``max_n`` overrides the claim's default size bound; ``threads``
    spreads sharded sweeps over worker processes (other runners ignore
    it).  Unknown identifiers raise KeyError, bounds below the claim's
    smallest meaningful size raise ValueError.
    """
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}")
    claim = CLAIMS[claim_id]
    limit = claim.default_max_n if max_n is None else max_n
    if limit < claim.min_n:
        raise ValueError(
            f"claim {claim_id} needs a size bound of at least {claim.min_n}"
        )
    if threads < 1:
        raise ValueError("threads must be positive")
    start = time.perf_counter()
    witness = claim.runner(limit, threads)
    elapsed = time.perf_counter() - start
    return VerifyReport(
        claim=claim_id,
        n_range=(claim.min_n, limit),
        status="pass" if witness is None else "fail",
        witness=witness,
        wall_time_s=elapsed,
    )
