import threading
from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3curves.arith import (
    HnfMatrix,
    enumerate_sublattices,
    partition,
    partition_series,
    sigma,
    sublattice_count,
)


def brute_sigma(k):
    return sum(d for d in range(1, k + 1) if k % d == 0)


def brute_partitions(n, largest=None):
    """Count partitions by recursive enumeration of parts."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(brute_partitions(n - first, first) for first in range(1, min(n, largest) + 1))


def subgroups_of_index(b):
    """Index-b sublattices of Z^2 as subgroups of (Z/b)^2 of order b.

    Every index-b sublattice contains b*Z^2, so it is determined by its image
    mod b; each such image is generated by at most two elements.
    """
    elements = list(product(range(b), repeat=2))
    found = set()
    for (x1, y1), (x2, y2) in product(elements, repeat=2):
        group = {((s * x1 + t * x2) % b, (s * y1 + t * y2) % b)
                 for s in range(b) for t in range(b)}
        if len(group) == b:
            found.add(frozenset(group))
    return found


def hnf_image(h, b):
    return frozenset((x, y) for x, y in product(range(b), repeat=2) if h.contains(x, y))


def test_sigma_examples():
    assert sigma(1) == 1
    assert sigma(6) == 12
    assert sigma(4) == 7


def test_sigma_matches_divisor_enumeration():
    for k in range(1, 300):
        assert sigma(k) == brute_sigma(k)


def test_sigma_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma(0)


@given(st.integers(1, 400), st.integers(1, 400))
def test_sigma_multiplicative(m, n):
    if gcd(m, n) == 1:
        assert sigma(m * n) == sigma(m) * sigma(n)


def test_partition_examples():
    assert partition(0) == 1
    assert partition(4) == 5
    assert partition(8) == 22
    assert partition(12) == 77


def test_partition_matches_enumeration():
    for n in range(25):
        assert partition(n) == brute_partitions(n)


def test_partition_series_examples():
    assert list(partition_series(0).coeffs) == [1]
    assert list(partition_series(5).coeffs) == [1, 1, 2, 3, 5, 7]


def test_pentagonal_recurrence_matches_product_expansion():
    coeffs = partition_series(200).integer_coeffs()
    assert coeffs == [partition(n) for n in range(201)]


def test_partition_concurrent_warmup():
    results = {}

    def worker(n):
        results[n] = partition(n)

    threads = [threading.Thread(target=worker, args=(n,)) for n in range(250, 300)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    coeffs = partition_series(299).integer_coeffs()
    assert all(results[n] == coeffs[n] for n in results)


def test_enumerate_sublattices_examples():
    assert enumerate_sublattices(1) == [HnfMatrix(1, 0, 1)]
    assert set(enumerate_sublattices(2)) == {HnfMatrix(2, 0, 1), HnfMatrix(1, 0, 2), HnfMatrix(1, 1, 2)}
    assert len(enumerate_sublattices(4)) == 7


def test_sublattice_count_examples():
    assert sublattice_count(1) == 1
    assert sublattice_count(6) == 12
    assert sublattice_count(100) == 217


def test_hnf_invariants():
    for b in range(1, 40):
        for h in enumerate_sublattices(b):
            assert 0 <= h.b < h.d
            assert h.index == b


def test_hnf_rejects_non_canonical():
    with pytest.raises(ValueError):
        HnfMatrix(1, 2, 2)
    with pytest.raises(ValueError):
        HnfMatrix(0, 0, 1)


@pytest.mark.parametrize("b", range(1, 9))
def test_each_sublattice_appears_exactly_once(b):
    images = [hnf_image(h, b) for h in enumerate_sublattices(b)]
    assert len(set(images)) == len(images)
    assert set(images) == subgroups_of_index(b)


def test_sublattice_count_equals_sigma():
    for b in range(1, 201):
        assert sublattice_count(b) == brute_sigma(b)
