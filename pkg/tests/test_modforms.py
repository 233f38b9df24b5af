from fractions import Fraction
from math import prod

import pytest

from k3curves.arith import partition
from k3curves.exactq import series_deriv, series_mul, series_pow
from k3curves.modforms import (
    eta_product_inverse,
    g2_prime_series,
    g2_series,
    k3_generating_series,
    re_generating_series,
)


def brute_sigma(k):
    return sum(d for d in range(1, k + 1) if k % d == 0)


def convolve_lists(a, b, order):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order + 1)]


def fold_partitions(slots, order):
    """Coefficients of (sum p(n) q^n)^slots by repeated plain-list convolution."""
    p = [partition(n) for n in range(order + 1)]
    out = [1] + [0] * order
    for _ in range(slots):
        out = convolve_lists(out, p, order)
    return out


def tuples_partition_sum(slots, n):
    """sum over a in N^slots with |a| = n of prod p(a_j), by listing tuples."""
    def weak_compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in weak_compositions(total - first, parts - 1):
                yield (first,) + rest

    return sum(prod(partition(x) for x in a) for a in weak_compositions(n, slots))


def test_g2_series():
    assert list(g2_series(0).coeffs) == [Fraction(-1, 24)]
    assert list(g2_series(2).coeffs) == [Fraction(-1, 24), 1, 3]
    assert list(g2_series(4).coeffs) == [Fraction(-1, 24), 1, 3, 4, 7]
    s = g2_series(30)
    assert all(s[k] == brute_sigma(k) for k in range(1, 31))


def test_g2_prime_series():
    assert list(g2_prime_series(0).coeffs) == [1]
    assert list(g2_prime_series(2).coeffs) == [1, 6, 12]
    assert g2_prime_series(10) == series_deriv(g2_series(11))


def test_eta_product_inverse_examples():
    assert eta_product_inverse(1, 8).integer_coeffs() == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert eta_product_inverse(24, 3).integer_coeffs() == [1, 24, 324, 3200]
    assert eta_product_inverse(12, 2).integer_coeffs() == [1, 12, 90]


def test_eta_product_inverse_rejects_zero_exponent():
    with pytest.raises(ValueError):
        eta_product_inverse(0, 3)


@pytest.mark.parametrize("exponent", [1, 2, 12, 24])
def test_eta_product_inverse_is_fold_of_partitions(exponent):
    assert eta_product_inverse(exponent, 12).integer_coeffs() == fold_partitions(exponent, 12)


def test_eta24_against_tuple_enumeration():
    # small n only; the tuple count grows like C(n+23, 23)
    coeffs = eta_product_inverse(24, 6).integer_coeffs()
    for n in range(5):
        assert coeffs[n] == tuples_partition_sum(24, n)
    assert coeffs[:7] == fold_partitions(24, 6)


def test_k3_generating_series_examples():
    assert k3_generating_series(0, 3).integer_coeffs() == [1, 24, 324, 3200]
    assert k3_generating_series(2, 3).integer_coeffs() == [1, 36, 672, 8728]
    assert k3_generating_series(3, 3).integer_coeffs() == [1, 42, 900, 13220]


def test_re_generating_series_examples():
    assert re_generating_series(0, 0).integer_coeffs() == [1]
    # 12 p(3) + 12*11 p(2) p(1) + C(12,3) = 36 + 264 + 220
    assert re_generating_series(0, 3).integer_coeffs() == [1, 12, 90, 520]
    assert re_generating_series(1, 1).integer_coeffs() == [1, 18]


def test_integrality():
    for g in range(6):
        for build in (k3_generating_series, re_generating_series):
            coeffs = build(g, 30).integer_coeffs()
            assert all(c >= 0 for c in coeffs)


def test_square_identity():
    for order in (0, 1, 5, 30):
        half = re_generating_series(0, order)
        assert series_mul(half, half) == k3_generating_series(0, order)


def test_k3_series_factorizes():
    N = 15
    for g in range(5):
        expected = series_mul(series_pow(g2_prime_series(N), g), k3_generating_series(0, N))
        assert k3_generating_series(g, N) == expected


def test_negative_genus_rejected():
    with pytest.raises(ValueError):
        k3_generating_series(-1, 3)
