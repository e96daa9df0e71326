"""Exponent vectors and canonical monomial ideals.

A monomial ``x1^a1 * ... * xn^an`` is represented by its exponent vector, a
plain tuple of nonnegative ints.  A :class:`MonomialIdeal` stores the antichain
of its minimal generators, sorted so that equal ideals compare equal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import DimensionError, DomainError, ResourceError

ExpVec = Tuple[int, ...]


def as_expvec(entries: Iterable[int], n: Optional[int] = None) -> ExpVec:
    """Validate and freeze ``entries`` as an exponent vector of length ``n``."""
    vec = tuple(int(e) for e in entries)
    if n is not None and len(vec) != n:
        raise DimensionError(f"expected {n} exponents, got {len(vec)}: {vec}")
    if any(e < 0 for e in vec):
        raise DomainError(f"exponents must be nonnegative: {vec}")
    return vec


def divides(a: ExpVec, b: ExpVec) -> bool:
    """True iff ``x^a`` divides ``x^b`` (componentwise ``a <= b``)."""
    return all(x <= y for x, y in zip(a, b))


def vec_add(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(a: ExpVec, k: int) -> ExpVec:
    return tuple(k * x for x in a)


def vec_lcm(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(max(x, y) for x, y in zip(a, b))


def degree(a: ExpVec) -> int:
    return sum(a)


def minimalize(vectors: Iterable[ExpVec]) -> Tuple[ExpVec, ...]:
    """Divisor-minimal elements of ``vectors``, deduplicated, in canonical order.

    Canonical order is lexicographic on the entries, largest first, which is
    the lex monomial order with ``x1 > x2 > ... > xn``.
    """
    # A divisor of v has total degree <= deg(v), so scanning by degree means
    # every potential divisor of v is already in ``kept``.
    candidates = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[ExpVec] = []
    for v in candidates:
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    kept.sort(reverse=True)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``ambient_n`` variables given by minimal generators.

    Build instances through :func:`make_ideal`; the constructor trusts that
    ``gens`` is already canonical.  No generators means the zero ideal, and the
    single zero vector means the unit ideal.
    """

    ambient_n: int
    gens: Tuple[ExpVec, ...]

    def __iter__(self) -> Iterator[ExpVec]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.ambient_n,)

    def __str__(self) -> str:
        # Imported lazily: the text grammar lives with the cli layer.
        from .textio import format_ideal

        return format_ideal(self)


def make_ideal(n: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Canonical ideal generated by the exponent vectors in ``raw``."""
    if n < 1:
        raise DomainError(f"ambient variable count must be positive, got {n}")
    vecs = [as_expvec(v, n) for v in raw]
    return MonomialIdeal(n, minimalize(vecs))


def zero_ideal(n: int) -> MonomialIdeal:
    return make_ideal(n, [])


def unit_ideal(n: int) -> MonomialIdeal:
    return make_ideal(n, [(0,) * n])


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient_n != J.ambient_n:
        raise DimensionError(
            f"ideals live in different rings: n={I.ambient_n} vs n={J.ambient_n}"
        )


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    """Membership of the monomial with exponent vector ``m`` in ``I``."""
    m = as_expvec(m, I.ambient_n)
    return any(divides(g, m) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _check_same_ring(I, J)
    return all(contains(J, g) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return make_ideal(I.ambient_n, I.gens + J.gens)


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of generators."""
    _check_same_ring(I, J)
    return make_ideal(I.ambient_n, (vec_lcm(g, h) for g in I.gens for h in J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return make_ideal(I.ambient_n, (vec_add(g, h) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I**k`` by repeated squaring; ``I**0`` is the unit ideal."""
    if k < 0:
        raise DomainError(f"power exponent must be nonnegative, got {k}")
    result = unit_ideal(I.ambient_n)
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def scale_generators(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """The ideal generated by the ``t``-th powers of the generators of ``I``."""
    return make_ideal(I.ambient_n, (vec_scale(g, t) for g in I.gens))


def veronese_type(n: int, d: int, caps: Sequence[int]) -> MonomialIdeal:
    """Degree-``d`` monomials with ``deg_{x_i} <= caps[i]``."""
    if len(caps) != n:
        raise DimensionError(f"need {n} caps, got {len(caps)}")
    if d < 0 or any(c < 0 for c in caps):
        raise DomainError("degree and caps must be nonnegative")
    gens = sorted(bounded_compositions(d, caps), reverse=True)
    return MonomialIdeal(n, tuple(gens))


def bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[ExpVec]:
    """All vectors ``v`` with ``sum(v) == total`` and ``0 <= v[i] <= caps[i]``."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    lo = max(0, total - rest_cap)
    for first in range(min(caps[0], total), lo - 1, -1):
        for tail in bounded_compositions(total - first, caps[1:]):
            yield (first,) + tail


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    """``I_{d;n}``: all squarefree monomials of degree ``d``."""
    if not 1 <= d <= n:
        raise DomainError(f"squarefree Veronese needs 1 <= d <= n, got d={d}, n={n}")
    return veronese_type(n, d, [1] * n)


@dataclass(frozen=True)
class FamilyParams:
    n: int
    t: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"family needs n >= 2, got {self.n}")
        if self.t < 1:
            raise DomainError(f"family needs t >= 1, got {self.t}")


def family_mnt(p: FamilyParams | Tuple[int, int]) -> MonomialIdeal:
    """``M_{n,t}``: generator ``i`` is ``(x1...xn)^t`` with ``x_i`` left out."""
    if not isinstance(p, FamilyParams):
        p = FamilyParams(*p)
    n, t = p.n, p.t
    gens = [tuple(0 if j == i else t for j in range(n)) for i in range(n)]
    return make_ideal(n, gens)


def mu(I: MonomialIdeal) -> int:
    """Number of minimal generators."""
    return len(I.gens)


def equigenerated_degree(I: MonomialIdeal) -> Optional[int]:
    """Common total degree of the generators, or ``None`` if they differ."""
    degrees = {sum(g) for g in I.gens}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def kfold_sums(gens: Sequence[ExpVec], k: int, cap: Optional[int] = None) -> set:
    """Distinct sums of ``k`` generators (with repetition).

    This is the exponent set of the degree-``k`` part of the algebra generated
    by the monomials ``gens``; its size is that part's dimension.
    """
    if not gens:
        return set()
    n = len(gens[0])
    current = {(0,) * n}
    for _ in range(k):
        current = {vec_add(s, g) for s in current for g in gens}
        if cap is not None and len(current) > cap:
            raise ResourceError(
                f"{len(current)} distinct sums exceed the cap of {cap}",
                size=len(current),
                cap=cap,
            )
    return current


def box_points(bounds: Sequence[int]) -> Iterator[ExpVec]:
    """Lattice points of ``prod [0, bounds[j]]`` in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bounds))
