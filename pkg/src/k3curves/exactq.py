"""Truncated formal power series in ``q`` with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  Every binary operation truncates to the
smaller of the two operand orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

ExactRational = Fraction

Scalar = Union[int, Fraction]


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 q + ... + c_order q^order + O(q^(order+1))."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncatedSeries:
        return series_from_coeffs([c] + [0] * order, order)

    @classmethod
    def q(cls, order: int) -> TruncatedSeries:
        """The generator ``q`` truncated at ``order``."""
        coeffs = [0] * (order + 1)
        if order >= 1:
            coeffs[1] = 1
        return series_from_coeffs(coeffs, order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return series_add(self, _promote(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return series_add(self, -_promote(other, self.order))

    def __rsub__(self, other):
        return series_add(_promote(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        c = _as_rational(other)
        return TruncatedSeries(tuple(c * x for x in self.coeffs), self.order)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return series_pow(self, e)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        if not self.is_integral():
            bad = [str(c) for c in self.coeffs if c.denominator != 1]
            raise ValueError(f"series has non-integral coefficients: {bad[:5]}")
        return [c.numerator for c in self.coeffs]

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _promote(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(_as_rational(x), order)


def series_from_coeffs(coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(_as_rational(c) for c in coeffs), order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries(
        tuple(a.coeffs[n] + b.coeffs[n] for n in range(order + 1)), order
    )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients of a; the eta products are sparse early on
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        x = ac[i]
        if not x:
            continue
        for j in range(order + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out), order)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        raise ValueError("negative exponents: use series_inv first")
    result = TruncatedSeries.constant(1, a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse by solving a*b = 1 one coefficient at a time."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term is not a unit")
    b = [Fraction(0)] * (a.order + 1)
    b[0] = 1 / a0
    for n in range(1, a.order + 1):
        acc = sum((a.coeffs[k] * b[n - k] for k in range(1, n + 1)), Fraction(0))
        b[n] = -acc / a0
    return TruncatedSeries(tuple(b), a.order)


def series_deriv(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        raise ValueError("derivative of an order-0 series has no coefficients left")
    return TruncatedSeries(
        tuple(n * a.coeffs[n] for n in range(1, a.order + 1)), a.order - 1
    )
