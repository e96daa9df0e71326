"""Hilbert function, series and multiplicity of the toric algebra of ``M_{n,t}``.

The closed forms are counted by inclusion-exclusion over how many of the
``alpha_j`` exceed ``i``; the oracles count the same quantities by brute force
(distinct sums of generators, finite differences, truncated series products).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import MonomialIdeal, kfold_sums
from .errors import ConsistencyError, DomainError
from .poly import DensePolynomial, first_mismatch

DEFAULT_TRUNCATION = 25
DEFAULT_SUM_CAP = 10**6

# Which superscript to use for the Veronese block inside the numerator.
# "n-r" is the one that agrees with brute force; "n-1" is kept only to
# reproduce the disagreement.
SUPERSCRIPTS = ("n-r", "n-1")


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is zero when ``a < b`` or ``a < 0``."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def a_coeffs(n: int, d: int) -> DensePolynomial:
    """Coefficients ``A_i^{n,d}`` of ``(1 + t + ... + t^(d-1))^n``."""
    if n < 0 or d < 0:
        raise DomainError(f"a_coeffs needs n, d >= 0, got n={n}, d={d}")
    if d == 0:
        # Empty geometric block: treated as the constant 1.
        return DensePolynomial([1])
    return DensePolynomial([1] * d) ** n


def veronese_block(m: int, d: int) -> DensePolynomial:
    """``sum_k A_{kd}^{m,d} t^k``: every ``d``-th coefficient of ``a_coeffs(m, d)``."""
    if d == 0:
        return DensePolynomial([1])
    return DensePolynomial(a_coeffs(m, d).coeffs[::d])


def toric_hilbert_formula(n: int, i: int) -> int:
    """Closed-form Hilbert function ``H(i)`` of the toric algebra of ``M_{n,t}``."""
    if n < 2 or i < 0:
        raise DomainError(f"need n >= 2 and i >= 0, got n={n}, i={i}")
    return sum(
        (-1) ** j * comb(n, j) * binom(i * (n - 1) - j * i - j + n - 1, n - 1)
        for j in range(n - 1)
    )


def toric_hilbert_oracle(I: MonomialIdeal, i: int, cap: int = DEFAULT_SUM_CAP) -> int:
    """Number of distinct ``i``-fold sums of the generators of ``I``."""
    if I.is_zero:
        raise DomainError("the zero ideal has no toric algebra")
    if i < 0:
        raise DomainError(f"degree must be nonnegative, got {i}")
    return len(kfold_sums(I.gens, i, cap=cap))


def h_numerator(n: int, superscript: str = "n-r") -> DensePolynomial:
    """Numerator ``Q(t)`` of the Hilbert series ``Q(t) / (1 - t)^n``.

    ``superscript="n-1"`` swaps the inner exponent ``n - r`` for ``n - 1``;
    that variant does not match the Hilbert function and exists for regression
    tests only.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if superscript not in SUPERSCRIPTS:
        raise ValueError(f"superscript must be one of {SUPERSCRIPTS}")
    one_minus_t = DensePolynomial.one_minus_t()
    total = DensePolynomial()
    for j in range(n - 1):
        d = n - j - 1
        inner = DensePolynomial()
        for r in range(j + 1):
            m = n - r if superscript == "n-r" else n - 1
            term = (one_minus_t**r) * veronese_block(m, d)
            inner = inner + (-1) ** r * comb(j, r) * term
        total = total + (-1) ** j * comb(n, j) * inner
    return total


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^denominator_exponent``."""

    numerator: DensePolynomial
    denominator_exponent: int

    def __post_init__(self):
        if self.denominator_exponent < 1:
            raise DomainError("denominator exponent must be at least 1")

    def expand(self, degree: int) -> DensePolynomial:
        """Power-series coefficients through ``degree``."""
        n = self.denominator_exponent
        # 1/(1-t)^n = sum_i C(i+n-1, n-1) t^i
        inv = DensePolynomial(binom(i + n - 1, n - 1) for i in range(degree + 1))
        return self.numerator.mul_trunc(inv, degree)

    def multiplicity(self) -> int:
        return self.numerator(1)


def hilbert_series(n: int) -> HilbertSeries:
    return HilbertSeries(h_numerator(n), n)


def hilbert_function_series(n: int, degree: int) -> DensePolynomial:
    """``sum_{i <= degree} H(i) t^i`` from the closed form."""
    return DensePolynomial(toric_hilbert_formula(n, i) for i in range(degree + 1))


def numerator_from_hilbert_function(n: int, degree: int) -> DensePolynomial:
    """``(1 - t)^n * sum H(i) t^i`` truncated at ``degree``.

    Independent of :func:`h_numerator`: it only uses the closed-form ``H``.
    """
    series = hilbert_function_series(n, degree)
    return (DensePolynomial.one_minus_t() ** n).mul_trunc(series, degree)


def numerator_mismatch(n: int, degree: int, superscript: str = "n-r"):
    """First index ``<= degree`` where the numerator and the reconstruction differ."""
    return first_mismatch(
        h_numerator(n, superscript), numerator_from_hilbert_function(n, degree), degree
    )


def multiplicity_formula(n: int) -> int:
    """``sum_{j=0}^{n-2} (-1)^j C(n, j) (n-j-1)^(n-1)``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return sum((-1) ** j * comb(n, j) * (n - j - 1) ** (n - 1) for j in range(n - 1))


def multiplicity_oracle(n: int) -> int:
    """``(n-1)``-th finite difference of the closed-form ``H`` at large ``i``.

    ``H`` agrees with a polynomial of degree ``n - 1`` for large ``i``, so this
    difference is ``(n-1)!`` times its leading coefficient.  Two consecutive
    values are compared to make sure the difference has settled.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    i0 = n
    values = [toric_hilbert_formula(n, i) for i in range(i0, i0 + n + 1)]
    for _ in range(n - 1):
        values = [b - a for a, b in zip(values, values[1:])]
    if values[0] != values[1]:
        raise ConsistencyError(
            f"finite differences of H did not stabilize for n={n}: {values}"
        )
    return values[0]


def roots_of_unity_sum(n: int, d: int) -> int:
    """``sum_k A_{kd}^{n,d}``, which should equal ``d^(n-1)``."""
    if n < 1 or d < 1:
        raise DomainError(f"need n, d >= 1, got n={n}, d={d}")
    return sum(veronese_block(n, d).coeffs)


def _check_indices(n: int, j: int, r: int = 0) -> None:
    if not (0 <= j <= n - 2 and 0 <= r <= j):
        raise DomainError(f"need 0 <= r <= j <= n-2, got n={n}, j={j}, r={r}")


def veronese_series_lhs(n: int, j: int, r: int, trunc: int) -> DensePolynomial:
    """``(1-t)^(n-r) * sum_i C(i(n-j-1)+n-r-1, n-r-1) t^i`` through ``trunc``."""
    d, m = n - j - 1, n - r
    series = DensePolynomial(binom(i * d + m - 1, m - 1) for i in range(trunc + 1))
    return (DensePolynomial.one_minus_t() ** m).mul_trunc(series, trunc)


def lemma_series_identity_check(n: int, j: int, r: int, trunc: int = DEFAULT_TRUNCATION) -> bool:
    """Series times ``(1-t)^(n-r)`` equals the Veronese block, through ``trunc``."""
    _check_indices(n, j, r)
    lhs = veronese_series_lhs(n, j, r, trunc)
    rhs = veronese_block(n - r, n - j - 1)
    return first_mismatch(lhs, rhs, trunc) is None


def lemma_inclusion_exclusion_check(n: int, j: int, trunc: int = DEFAULT_TRUNCATION) -> bool:
    """``C(i(n-j-1)-j+n-1, n-1) = sum_r (-1)^r C(j,r) C(i(n-j-1)+n-r-1, n-r-1)``."""
    _check_indices(n, j)
    d = n - j - 1
    lhs = DensePolynomial(binom(i * d - j + n - 1, n - 1) for i in range(trunc + 1))
    rhs = DensePolynomial()
    for r in range(j + 1):
        block = DensePolynomial(
            binom(i * d + n - r - 1, n - r - 1) for i in range(trunc + 1)
        )
        rhs = rhs + (-1) ** r * comb(j, r) * block
    return first_mismatch(lhs, rhs, trunc) is None
