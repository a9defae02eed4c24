"""Truncated power series with exact integer or mod-m coefficients.

A :class:`TruncatedSeries` of order ``N`` stores ``c[0..N]``; everything of
degree above ``N`` is discarded. The modulus belongs to the value and is
never coerced: combining series with different moduli or orders raises
:class:`SeriesError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "FactoredProduct",
    "SeriesError",
    "TruncatedSeries",
    "expand_product",
    "jacobi_cube",
    "series_invert",
    "series_mul",
    "verify_mod5_factor_identity",
]

_INT64_SAFE = 2**62


class SeriesError(ValueError):
    """Incompatible operands or a non-invertible series."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise SeriesError("a truncated series needs at least the constant term")
        if self.modulus is not None:
            if self.modulus < 1:
                raise SeriesError(f"modulus must be positive, got {self.modulus}")
            coeffs = tuple(c % self.modulus for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[int], order: int, modulus: Optional[int] = None
    ) -> "TruncatedSeries":
        """Pad with zeros or cut so that the result has exactly ``order + 1`` terms."""
        values = list(coeffs)[: order + 1]
        values += [0] * (order + 1 - len(values))
        return cls(tuple(values), modulus)

    @classmethod
    def one(cls, order: int, modulus: Optional[int] = None) -> "TruncatedSeries":
        return cls.from_coeffs([1], order, modulus)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def reduce(self, modulus: int) -> "TruncatedSeries":
        if self.modulus is not None and self.modulus % modulus:
            raise SeriesError(f"cannot reduce mod {self.modulus} coefficients mod {modulus}")
        return TruncatedSeries(self.coeffs, modulus)

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.modulus != other.modulus:
            raise SeriesError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        if self.order != other.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.modulus)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "modulus": self.modulus,
            "coeffs": [str(c) for c in self.coeffs],
        }


@dataclass(frozen=True)
class FactoredProduct:
    """``prod_{i >= 1} (1 - x**(step * i)) ** exponent`` over all ``(step, exponent)``."""

    factors: tuple = field(default_factory=tuple)

    def __post_init__(self) -> None:
        factors = tuple((int(s), int(e)) for s, e in self.factors)
        for step, _ in factors:
            if step < 1:
                raise ValueError(f"factor steps must be positive, got {step}")
        object.__setattr__(self, "factors", factors)


def _array(coeffs: Sequence[int], modulus: Optional[int]) -> np.ndarray:
    if modulus is not None and modulus < 2**31:
        return np.array(coeffs, dtype=np.int64)
    return np.array(coeffs, dtype=object)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common order."""
    a._check(b)
    n, m = a.order, a.modulus
    if m is not None and (m - 1) ** 2 * (n + 1) < _INT64_SAFE:
        prod = np.convolve(np.array(a.coeffs, dtype=np.int64), np.array(b.coeffs, dtype=np.int64))
    else:
        prod = np.convolve(np.array(a.coeffs, dtype=object), np.array(b.coeffs, dtype=object))
    return TruncatedSeries(tuple(prod[: n + 1].tolist()), m)


def _unit_inverse(c: int, modulus: Optional[int]) -> int:
    if modulus is None:
        if c not in (1, -1):
            raise SeriesError(f"constant term {c} is not a unit over the integers")
        return c
    if modulus == 1:
        return 0
    if gcd(c, modulus) != 1:
        raise SeriesError(f"constant term {c} is not a unit mod {modulus}")
    return pow(c, -1, modulus)


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to order ``N``; the constant term must be a unit."""
    m = a.modulus
    u = _unit_inverse(a.coeffs[0], m)
    coeffs = a.coeffs
    inv = [u]
    for n in range(1, a.order + 1):
        acc = sum(coeffs[k] * inv[n - k] for k in range(1, n + 1))
        value = -u * acc
        inv.append(value % m if m is not None else value)
    return TruncatedSeries(tuple(inv), m)


def _times_one_minus_power(c: np.ndarray, k: int, modulus: Optional[int]) -> None:
    # c <- c * (1 - x**k), in place
    c[k:] = c[k:] - c[:-k]
    if modulus is not None:
        c %= modulus


def _over_one_minus_power(c: np.ndarray, k: int, modulus: Optional[int]) -> None:
    # c <- c / (1 - x**k), i.e. c[n] += c[n - k] running upward, k terms at a time
    size = len(c)
    for start in range(k, size, k):
        stop = min(start + k, size)
        c[start:stop] += c[start - k : stop - k]
        if modulus is not None:
            c[start:stop] %= modulus


def expand_product(
    f: FactoredProduct | Iterable[tuple[int, int]], order: int, modulus: Optional[int] = None
) -> TruncatedSeries:
    """Expand a :class:`FactoredProduct` to a truncated series.

    Only factors ``1 - x**(s*i)`` with ``s*i <= order`` contribute. A negative
    exponent divides by the factor, which is the same as multiplying by its
    :func:`series_invert`.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if not isinstance(f, FactoredProduct):
        f = FactoredProduct(tuple(f))
    c = _array([1] + [0] * order, modulus)
    for step, exponent in f.factors:
        for k in range(step, order + 1, step):
            for _ in range(abs(exponent)):
                if exponent > 0:
                    _times_one_minus_power(c, k, modulus)
                else:
                    _over_one_minus_power(c, k, modulus)
    return TruncatedSeries(tuple(c.tolist()), modulus)


def jacobi_cube(order: int, modulus: Optional[int] = None) -> TruncatedSeries:
    """``sum_{n >= 0} (-1)**n (2n + 1) x**(n(n+1)/2)`` truncated at ``order``."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        coeffs[n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return TruncatedSeries(tuple(coeffs), modulus)


def _polynomial(coeffs: dict, order: int, modulus: Optional[int]) -> TruncatedSeries:
    values = [0] * (order + 1)
    for degree, c in coeffs.items():
        if degree <= order:
            values[degree] = c
    return TruncatedSeries(tuple(values), modulus)


def verify_mod5_factor_identity(order: int) -> bool:
    """Check ``1/(1-t)^2 == (1-t)^3 / (1-t^5)`` and its product form, mod 5."""
    one_minus_t = _polynomial({0: 1, 1: -1}, order, 5)
    lhs = series_invert(one_minus_t * one_minus_t)
    rhs = one_minus_t * one_minus_t * one_minus_t * series_invert(_polynomial({0: 1, 5: -1}, order, 5))
    if lhs != rhs:
        return False
    pairs = expand_product([(1, -2)], order, 5)
    factored = expand_product([(1, 3)], order, 5) * expand_product([(5, -1)], order, 5)
    return pairs == factored
