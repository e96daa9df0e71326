"""Analytic spread of equigenerated monomial ideals and the Freiman test."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Sequence

from .core import FamilyParams, MonomialIdeal, equigenerated_degree, family_mnt, mu, product
from .errors import DomainError


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Every intermediate entry is an exact integer: after each pivot step the
    updated entries are divisible by the previous pivot.
    """
    M: List[List[int]] = [list(map(int, r)) for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, nrows):
            f = M[r][col]
            M[r] = [(p * M[r][c] - f * M[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _require_equigenerated(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise DomainError("the zero ideal has no fiber cone")
    deg = equigenerated_degree(I)
    if deg is None:
        raise DomainError("analytic spread is only implemented for equigenerated ideals")
    return deg


def analytic_spread_equigen(I: MonomialIdeal) -> int:
    """Krull dimension of the fiber cone: the rank of the generator exponent matrix."""
    _require_equigenerated(I)
    return integer_rank(I.gens)


@dataclass(frozen=True)
class FreimanReport:
    mu_I: int
    mu_I2: int
    spread: int
    bound: int
    is_freiman: bool

    @property
    def bound_holds(self) -> bool:
        """Whether ``mu(I^2) >= spread * mu(I) - C(spread, 2)``; a violation is a finding."""
        return self.mu_I2 >= self.bound


def freiman_test(I: MonomialIdeal) -> FreimanReport:
    _require_equigenerated(I)
    # Same-degree monomials never divide each other, so mu(I^2) is just the
    # number of distinct pairwise sums; product() minimalizes anyway.
    mu_I = mu(I)
    mu_I2 = mu(product(I, I))
    spread = analytic_spread_equigen(I)
    bound = spread * mu_I - comb(spread, 2)
    return FreimanReport(mu_I, mu_I2, spread, bound, mu_I2 == bound)


def freiman_family_check(n: int, t: int) -> bool:
    """``M_{n,t}`` is Freiman with ``mu(I^2) = C(n+1, 2)`` and spread ``n``."""
    report = freiman_test(family_mnt(FamilyParams(n, t)))
    return report.is_freiman and report.mu_I2 == comb(n + 1, 2) and report.spread == n
