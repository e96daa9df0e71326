"""Integral closure of monomial ideals.

A monomial lies in the closure of ``I`` exactly when its exponent vector lies
in the Newton polyhedron ``conv(gens) + R_{>=0}^n``.  Membership is decided by
the exact LP in :mod:`monomial_lab.lp`; :func:`power_witness` is the LP-free
route that searches for ``k`` with ``u^k in I^k`` directly.
"""
from __future__ import annotations

from math import prod
from typing import Optional, Sequence

from .core import (
    ExpVec,
    MonomialIdeal,
    as_expvec,
    box_points,
    divides,
    minimalize,
    power,
    vec_add,
    vec_scale,
)
from .errors import DomainError, ResourceError
from .lp import LPCertificate, LPProblem

DEFAULT_BOX_CAP = 10**6


def _indicator(I: MonomialIdeal, a: ExpVec) -> Optional[LPCertificate]:
    for i, g in enumerate(I.gens):
        if divides(g, a):
            w = [0] * len(I.gens)
            w[i] = 1
            return LPCertificate(LPProblem(I.gens, a), w)
    return None


def np_membership(I: MonomialIdeal, a: Sequence[int]) -> Optional[LPCertificate]:
    """Certificate that ``a`` lies in the Newton polyhedron of ``I``, else ``None``."""
    if I.is_zero:
        raise DomainError("the zero ideal has an empty Newton polyhedron")
    a = as_expvec(a, I.ambient_n)
    cert = _indicator(I, a)
    if cert is not None:
        return cert
    # Exact necessary condition: every point of the polyhedron has total degree
    # at least the smallest generator degree.
    if sum(a) < min(sum(g) for g in I.gens):
        return None
    return LPProblem(I.gens, a).solve()


def power_witness(I: MonomialIdeal, a: Sequence[int], k_max: int) -> Optional[int]:
    """Smallest ``k <= k_max`` with ``k*a`` in ``I^k``, or ``None``.

    ``I^k`` is generated by the ``k``-fold sums of generators, so the search
    grows that set one factor at a time and stops at the first sum below ``k*a``.
    """
    if I.is_zero:
        raise DomainError("no power of the zero ideal contains a monomial")
    a = as_expvec(a, I.ambient_n)
    sums = {(0,) * I.ambient_n}
    for k in range(1, k_max + 1):
        target = vec_scale(a, k)
        # Sums that already exceed k*a in some coordinate only grow; drop them.
        sums = {
            s
            for s in (vec_add(s, g) for s in sums for g in I.gens)
            if _could_fit(s, a, k, k_max)
        }
        if any(divides(s, target) for s in sums):
            return k
        if not sums:
            return None
    return None


def _could_fit(s: ExpVec, a: ExpVec, k: int, k_max: int) -> bool:
    # Each remaining factor can add 0 in a coordinate while the target grows by
    # a_j per step, so s_j <= k_max * a_j is the only bound that survives.
    return all(x <= k_max * y for x, y in zip(s, a))


def closure_box(I: MonomialIdeal) -> tuple:
    """Per-coordinate bounds containing every minimal generator of the closure."""
    return tuple(max(g[j] for g in I.gens) for j in range(I.ambient_n))


def integral_closure(I: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> MonomialIdeal:
    """Minimal generators of the integral closure of ``I``.

    A minimal generator ``a`` of the closure has ``a_j <= max_i g_{ij}``:
    otherwise ``a - e_j`` is still in the polyhedron.  So the box of those
    bounds is scanned in lexicographic order; a point is a minimal generator
    iff it is in the polyhedron and not a multiple of one found earlier
    (its lower neighbours all come first in that order).

    Raises :class:`ResourceError` when the box has more than ``box_cap`` points.
    """
    if I.is_zero or I.is_unit:
        return I
    bounds = closure_box(I)
    size = prod(b + 1 for b in bounds)
    if size > box_cap:
        raise ResourceError(
            f"closure box {bounds} has {size} points, over the cap of {box_cap}",
            size=size,
            cap=box_cap,
        )
    found: list[ExpVec] = []
    for a in box_points(bounds):
        if any(divides(g, a) for g in found):
            continue
        if np_membership(I, a) is not None:
            found.append(a)
    return MonomialIdeal(I.ambient_n, minimalize(found))


def is_integrally_closed(I: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> bool:
    return integral_closure(I, box_cap) == I


def is_normal_up_to(I: MonomialIdeal, k_max: int, box_cap: int = DEFAULT_BOX_CAP) -> bool:
    """Whether ``I, I^2, ..., I^k_max`` are all integrally closed.

    A bounded check only; it does not certify normality.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    return all(is_integrally_closed(power(I, k), box_cap) for k in range(1, k_max + 1))
