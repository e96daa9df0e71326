"""Exact rational linear programming for Newton-polyhedron membership.

The solver is a dense two-phase tableau simplex over :class:`fractions.Fraction`
with Bland's rule, so it terminates on degenerate problems and never rounds.
Instances here are tiny: one row per variable of the ring plus one, one
column per generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .core import ExpVec
from .errors import ConsistencyError, DimensionError


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: Optional[Tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None


def _pivot(tab: List[List[Fraction]], basis: List[int], row: int, col: int) -> None:
    prow = tab[row]
    p = prow[col]
    if p != 1:
        tab[row] = prow = [v / p for v in prow]
    for r, other in enumerate(tab):
        if r != row:
            f = other[col]
            if f:
                tab[r] = [a - f * b for a, b in zip(other, prow)]
    basis[row] = col


def _run_simplex(tab, basis, allowed: int) -> str:
    """Minimize the objective held in the last row of ``tab``.

    Row layout: constraint rows first, objective row last, with the reduced
    cost in each column and ``-z`` in the rhs column.  Only columns below
    ``allowed`` may enter the basis.
    """
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        # Bland: lowest-index column with negative reduced cost enters.
        col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for r in range(m):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], col)


def simplex(
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Optional[Sequence[Fraction]] = None,
) -> LPResult:
    """Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly.

    ``c`` defaults to zero, which turns the call into a pure feasibility test.
    """
    m = len(A)
    nvars = len(A[0]) if m else (len(c) if c is not None else 0)
    if len(b) != m or any(len(row) != nvars for row in A):
        raise DimensionError("inconsistent LP dimensions")
    c = [Fraction(0)] * nvars if c is None else [Fraction(v) for v in c]
    if len(c) != nvars:
        raise DimensionError("objective length does not match column count")

    # Phase 1: one artificial per row, rows flipped so that b >= 0.
    tab: List[List[Fraction]] = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * v) for v in A[i]]
        row += [Fraction(1 if k == i else 0) for k in range(m)]
        row.append(Fraction(sign * b[i]))
        tab.append(row)
    width = nvars + m
    obj = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(nvars):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tab.append(obj)
    basis = list(range(nvars, nvars + m))

    _run_simplex(tab, basis, width)
    if tab[-1][-1] != 0:
        return LPResult("infeasible")

    # Drive any artificial still basic (at level zero) out of the basis.
    for r in range(m):
        if basis[r] >= nvars:
            col = next((j for j in range(nvars) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    keep = [r for r in range(m) if basis[r] < nvars]
    tab = [tab[r][:nvars] + [tab[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]

    # Phase 2 objective row expressed in the current basis.
    obj = list(c) + [Fraction(0)]
    for r, j in enumerate(basis):
        f = obj[j]
        if f:
            obj = [a - f * v for a, v in zip(obj, tab[r])]
    tab.append(obj)
    status = _run_simplex(tab, basis, nvars)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * nvars
    for r, j in enumerate(basis):
        x[j] = tab[r][-1]
    return LPResult("optimal", tuple(x), -tab[-1][-1])


@dataclass(frozen=True)
class LPProblem:
    """Is ``target`` in conv(generators) + nonnegative orthant?

    Unknowns are weights ``lam`` with ``lam >= 0``, ``sum(lam) == 1`` and
    ``sum(lam_i * g_i) <= target`` componentwise.
    """

    generators: Tuple[ExpVec, ...]
    target: ExpVec

    def __post_init__(self):
        n = len(self.target)
        if not self.generators:
            raise DimensionError("membership LP needs at least one generator")
        if any(len(g) != n for g in self.generators):
            raise DimensionError("generator and target lengths differ")

    @property
    def m(self) -> int:
        return len(self.generators)

    def standard_form(self):
        """``(A, b)`` for ``A x = b, x >= 0`` with ``x = (lam, slack)``."""
        n, m = len(self.target), self.m
        A = []
        for j in range(n):
            row = [Fraction(g[j]) for g in self.generators]
            row += [Fraction(1 if k == j else 0) for k in range(n)]
            A.append(row)
        A.append([Fraction(1)] * m + [Fraction(0)] * n)
        b = [Fraction(a) for a in self.target] + [Fraction(1)]
        return A, b

    def solve(self) -> Optional["LPCertificate"]:
        A, b = self.standard_form()
        res = simplex(A, b)
        if res.status != "optimal":
            return None
        return LPCertificate(self, res.x[: self.m])


@dataclass(frozen=True)
class LPCertificate:
    """Convex weights placing ``problem.target`` in the Newton polyhedron.

    The weights are re-verified with exact arithmetic on construction.
    """

    problem: LPProblem
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        gens, target = self.problem.generators, self.problem.target
        if len(w) != len(gens):
            raise ConsistencyError("certificate has the wrong number of weights")
        if any(v < 0 for v in w) or sum(w) != 1:
            raise ConsistencyError(f"weights are not a convex combination: {w}")
        for j, a in enumerate(target):
            if sum(v * g[j] for v, g in zip(w, gens)) > a:
                raise ConsistencyError(f"weighted sum exceeds target in coordinate {j}")

    @property
    def denominator(self) -> int:
        """lcm of the weight denominators; ``target`` times this lies in that power."""
        return lcm(*(v.denominator for v in self.weights))

    def power_composition(self) -> Tuple[int, ...]:
        """How many copies of each generator to multiply, for ``k = denominator``."""
        D = self.denominator
        return tuple(int(v * D) for v in self.weights)
