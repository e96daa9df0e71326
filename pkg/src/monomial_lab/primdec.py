"""Irreducible decomposition and associated primes of monomial ideals."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Tuple

from .closure import DEFAULT_BOX_CAP, integral_closure
from .core import MonomialIdeal, ideal_sum, intersection, make_ideal, power
from .errors import ConsistencyError, DomainError, ResourceError

DEFAULT_COMPONENT_CAP = 100_000


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The ideal ``(x_i^{a_i} : i in exponents)``; variable indices are 0-based.

    Stored as a sorted tuple of ``(index, exponent)`` pairs so that components
    hash and order canonically.
    """

    exponents: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(dict(self.exponents).items()))
        if any(a < 1 for _, a in pairs):
            raise DomainError(f"component exponents must be positive: {pairs}")
        object.__setattr__(self, "exponents", pairs)

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "IrreducibleComponent":
        pairs = []
        for g in I.gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) != 1:
                raise DomainError(f"{g} is not a pure power")
            pairs.append((support[0], g[support[0]]))
        return cls(tuple(pairs))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    @property
    def prime(self) -> "MonomialPrime":
        return MonomialPrime(frozenset(i for i, _ in self.exponents))

    def to_ideal(self, n: int) -> MonomialIdeal:
        gens = []
        for i, a in self.exponents:
            v = [0] * n
            v[i] = a
            gens.append(v)
        return make_ideal(n, gens)

    def contains_monomial(self, m) -> bool:
        return any(m[i] >= a for i, a in self.exponents)

    def is_subset_of(self, other: "IrreducibleComponent") -> bool:
        """Ideal containment: every ``x_i^a`` here is divisible by ``x_i^b`` there."""
        theirs = other.as_dict()
        return all(i in theirs and theirs[i] <= a for i, a in self.exponents)


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by a set of variables (0-based indices)."""

    variables: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "variables", frozenset(self.variables))

    @property
    def height(self) -> int:
        return len(self.variables)

    def sorted_indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.variables))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" for i in self.sorted_indices()) + ")"


def _sort_primes(primes) -> Tuple[MonomialPrime, ...]:
    return tuple(sorted(primes, key=lambda p: (p.height, p.sorted_indices())))


def _check_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise DomainError("the zero ideal has no irreducible decomposition here")
    if I.is_unit:
        raise DomainError("the unit ideal has no associated primes")


def _split_point(I: MonomialIdeal):
    """First generator (canonical order) that is not a pure power, split off its first variable."""
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) > 1:
            i = support[0]
            u1 = [0] * I.ambient_n
            u1[i] = g[i]
            u2 = list(g)
            u2[i] = 0
            return u1, u2
    return None


def _irredundant(components) -> Tuple[IrreducibleComponent, ...]:
    comps = sorted(set(components))
    # A component containing another one adds nothing to the intersection.
    kept = [
        c for c in comps
        if not any(o != c and o.is_subset_of(c) for o in comps)
    ]
    return tuple(kept)


@lru_cache(maxsize=None)
def _decompose(I: MonomialIdeal, cap: int) -> Tuple[IrreducibleComponent, ...]:
    split = _split_point(I)
    if split is None:
        return (IrreducibleComponent.from_ideal(I),)
    u1, u2 = split
    n = I.ambient_n
    left = _decompose(ideal_sum(I, make_ideal(n, [u1])), cap)
    right = _decompose(ideal_sum(I, make_ideal(n, [u2])), cap)
    if len(left) + len(right) > cap:
        raise ResourceError(
            f"decomposition would need more than {cap} components",
            size=len(left) + len(right),
            cap=cap,
        )
    return _irredundant(left + right)


def irreducible_decomposition(
    I: MonomialIdeal, cap: int = DEFAULT_COMPONENT_CAP
) -> Tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible components of a proper nonzero monomial ideal.

    Uses the splitting rule ``I = (I + u1) cap (I + u2)`` for a generator
    ``u1 * u2`` with coprime non-unit parts.  The intersection of the result is
    recomputed and compared with ``I`` before returning.
    """
    _check_proper_nonzero(I)
    comps = _decompose(I, cap)
    n = I.ambient_n
    back = comps[0].to_ideal(n)
    for c in comps[1:]:
        back = intersection(back, c.to_ideal(n))
    if back != I:
        raise ConsistencyError(f"components do not intersect back to {I.gens}")
    return comps


def associated_primes(I: MonomialIdeal) -> Tuple[MonomialPrime, ...]:
    """Associated primes, sorted by height then variables."""
    _check_proper_nonzero(I)
    return _sort_primes({c.prime for c in irreducible_decomposition(I)})


def minimal_primes(I: MonomialIdeal) -> Tuple[MonomialPrime, ...]:
    """Minimal primes, computed from the radical as minimal vertex covers.

    Independent of the decomposition: a prime ``P_S`` contains ``I`` iff ``S``
    meets the support of every generator.
    """
    _check_proper_nonzero(I)
    supports = {frozenset(i for i, e in enumerate(g) if e) for g in I.gens}
    n = I.ambient_n
    covers = []
    # Subsets by increasing size: a cover is minimal unless it contains one
    # already recorded.
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if all(S & s for s in supports) and not any(c <= S for c in covers):
                covers.append(S)
    return _sort_primes(MonomialPrime(S) for S in covers)


def is_unmixed(I: MonomialIdeal) -> bool:
    return len({p.height for p in associated_primes(I)}) == 1


def has_embedded_primes(I: MonomialIdeal) -> bool:
    primes = associated_primes(I)
    return any(p.variables < q.variables for p in primes for q in primes)


@dataclass(frozen=True)
class AssProfile:
    """Associated primes of ``I^k`` for ``k = 1..k_max``.

    ``stabilization_index`` is the first ``k0`` with ``Ass(I^k)`` constant on
    ``k0..k_max``.  Nothing is claimed about powers beyond ``k_max``.
    """

    per_power: Tuple[Tuple[MonomialPrime, ...], ...]
    stabilization_index: Optional[int]
    certified_beyond_window: bool = field(default=False)

    @property
    def k_max(self) -> int:
        return len(self.per_power)


def ass_profile(I: MonomialIdeal, k_max: int) -> AssProfile:
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    per_power = tuple(associated_primes(power(I, k)) for k in range(1, k_max + 1))
    index = k_max
    while index > 1 and set(per_power[index - 2]) == set(per_power[-1]):
        index -= 1
    return AssProfile(per_power, index)


def primary_closure_ass_check(I: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> bool:
    """For a primary ``I``, whether the closure has the same single associated prime."""
    primes = associated_primes(I)
    if len(primes) != 1:
        raise DomainError(f"ideal is not primary: associated primes {primes}")
    return associated_primes(integral_closure(I, box_cap)) == primes
