"""Divisor sums, partition numbers and index-b sublattices of Z^2."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import isqrt

from .exactq import TruncatedSeries, series_from_coeffs, series_inv, series_mul


def sigma(k: int) -> int:
    """Sum of the positive divisors of ``k``."""
    if k < 1:
        raise ValueError(f"sigma is defined for k >= 1, got {k}")
    total = 0
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            e = k // d
            total += d if d == e else d + e
    return total


# p(0..len-1), grown on demand; extended under the lock, read without it
_partition_table: list[int] = [1]
_partition_lock = threading.Lock()


def _extend_partitions(n: int) -> None:
    with _partition_lock:
        table = _partition_table
        for m in range(len(table), n + 1):
            # Euler: p(m) = sum_{k>=1} (-1)^(k+1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * table[m - g1]
                g2 = g1 + k
                if g2 <= m:
                    total += sign * table[m - g2]
                k += 1
            table.append(total)


def partition(n: int) -> int:
    """Number of partitions of ``n`` (pentagonal-number recurrence)."""
    if n < 0:
        raise ValueError(f"partition(n) needs n >= 0, got {n}")
    if n >= len(_partition_table):
        _extend_partitions(n)
    return _partition_table[n]


def partition_series(order: int) -> TruncatedSeries:
    """1 / prod_{m<=order} (1 - q^m), expanded as a product and inverted."""
    product = TruncatedSeries.constant(1, order)
    for m in range(1, order + 1):
        factor = [0] * (order + 1)
        factor[0] = 1
        factor[m] = -1
        product = series_mul(product, series_from_coeffs(factor, order))
    return series_inv(product)


@dataclass(frozen=True)
class HnfMatrix:
    """Upper-triangular basis [[a, b], [0, d]] of a sublattice of Z^2.

    Rows are the basis vectors (a, b) and (0, d); the Hermite normal form is
    unique once 0 <= b < d.
    """

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise ValueError("diagonal entries must be positive")
        if not 0 <= self.b < self.d:
            raise ValueError(f"off-diagonal entry must satisfy 0 <= b < d, got {self}")

    @property
    def index(self) -> int:
        return self.a * self.d

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (0, self.d)

    def contains(self, x: int, y: int) -> bool:
        # (x, y) = s*(a, b) + t*(0, d) with s, t integers
        if x % self.a:
            return False
        s = x // self.a
        return (y - s * self.b) % self.d == 0


def enumerate_sublattices(b: int) -> list[HnfMatrix]:
    if b < 1:
        raise ValueError(f"index must be >= 1, got {b}")
    out = []
    for a in range(1, b + 1):
        if b % a:
            continue
        d = b // a
        out.extend(HnfMatrix(a, beta, d) for beta in range(d))
    return out


def sublattice_count(b: int) -> int:
    return len(enumerate_sublattices(b))
