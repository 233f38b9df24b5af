"""q-expansions of G_2, its derivative, inverse eta products and the
curve-counting generating functions built from them.

q/Delta(q) equals prod (1 - q^m)^(-24), so it is built directly from the
product and Delta itself is never formed.  The rational elliptic surface
uses the exponent-12 product, the exact square root of the K3 one.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import sigma
from .exactq import (
    TruncatedSeries,
    series_from_coeffs,
    series_inv,
    series_mul,
    series_pow,
)

K3_EXPONENT = 24
RATIONAL_ELLIPTIC_EXPONENT = 12


def g2_series(order: int) -> TruncatedSeries:
    """G_2(q) = -1/24 + sum_{k>=1} sigma(k) q^k."""
    coeffs = [Fraction(-1, 24)] + [sigma(k) for k in range(1, order + 1)]
    return series_from_coeffs(coeffs, order)


def g2_prime_series(order: int) -> TruncatedSeries:
    """d/dq G_2 = sum_{k>=1} k sigma(k) q^(k-1)."""
    return series_from_coeffs([k * sigma(k) for k in range(1, order + 2)], order)


def eta_product_inverse(exponent: int, order: int) -> TruncatedSeries:
    """prod_{m=1}^{order} (1 - q^m)^(-exponent); higher m only touch q^(>order)."""
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    product = TruncatedSeries.constant(1, order)
    for m in range(1, order + 1):
        factor = [0] * (order + 1)
        factor[0] = 1
        factor[m] = -1
        product = series_mul(product, series_from_coeffs(factor, order))
    return series_pow(series_inv(product), exponent)


def _generating_series(g: int, exponent: int, order: int) -> TruncatedSeries:
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    base = eta_product_inverse(exponent, order)
    if g == 0:
        return base
    return series_mul(series_pow(g2_prime_series(order), g), base)


def k3_generating_series(g: int, order: int) -> TruncatedSeries:
    """sum_n N_g(n) q^n = (G_2')^g * q/Delta."""
    return _generating_series(g, K3_EXPONENT, order)


def re_generating_series(g: int, order: int) -> TruncatedSeries:
    """sum_n N_g^Y(C_n) q^n = (G_2')^g * (q/Delta)^(1/2)."""
    return _generating_series(g, RATIONAL_ELLIPTIC_EXPONENT, order)
