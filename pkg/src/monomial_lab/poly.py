"""Dense univariate polynomials with Python-int coefficients."""
from __future__ import annotations

from typing import Iterable, Optional, Tuple


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class DensePolynomial:
    """``sum(coeffs[i] * t**i)``; trailing zeros are trimmed, so zero is ``()``.

    Instances are immutable and hashable.  Truncated power series are the same
    type with an explicit :meth:`truncate` after each multiplication.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "DensePolynomial":
        return cls([0] * k + [c])

    @classmethod
    def one_minus_t(cls) -> "DensePolynomial":
        return cls([1, -1])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DensePolynomial({list(self.coeffs)})"

    def __add__(self, other) -> "DensePolynomial":
        other = _coerce(other)
        size = max(len(self), len(other))
        return DensePolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "DensePolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "DensePolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "DensePolynomial":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return DensePolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "DensePolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = DensePolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, degree: int) -> "DensePolynomial":
        """Drop every term above ``degree``."""
        return DensePolynomial(self.coeffs[: degree + 1])

    def mul_trunc(self, other, degree: int) -> "DensePolynomial":
        """Product of two power series, kept through ``degree``."""
        other = _coerce(other)
        out = [0] * (degree + 1)
        for i, a in enumerate(self.coeffs[: degree + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: degree + 1 - i]):
                    out[i + j] += a * b
        return DensePolynomial(out)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def _coerce(x) -> DensePolynomial:
    if isinstance(x, DensePolynomial):
        return x
    if isinstance(x, int):
        return DensePolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def first_mismatch(p: DensePolynomial, q: DensePolynomial, degree: int) -> Optional[int]:
    """Lowest index ``<= degree`` where ``p`` and ``q`` differ, else ``None``."""
    for i in range(degree + 1):
        if p[i] != q[i]:
            return i
    return None
