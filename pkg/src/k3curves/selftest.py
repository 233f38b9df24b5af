"""Built-in consistency checks behind ``k3curves selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import counting
from .admseq import enumerate_admissible, enumerate_one_admissible, is_one_admissible
from .arith import partition, sigma, sublattice_count
from .cremona import (
    InvariantValue,
    class_from_sequence,
    evaluate_invariant,
    pairing_data,
    reduce_to_section_class,
    scramble,
    section_class,
)
from .exactq import series_mul
from .modforms import eta_product_inverse, k3_generating_series, re_generating_series

# first coefficients of F_0..F_3 for K3
K3_REFERENCE = {
    0: [1, 24, 324, 3200],
    1: [1, 30, 480, 5460],
    2: [1, 36, 672, 8728],
    3: [1, 42, 900, 13220],
}
PARTITIONS_TO_8 = [1, 1, 2, 3, 5, 7, 11, 15, 22]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class Sizes:
    grid_g: int
    grid_n: int
    one_admissible_max: int
    contribution_max: int
    lattice_max: int
    scrambles: int
    integrality_g: int
    integrality_order: int


FULL = Sizes(3, 6, 12, 8, 200, 1000, 5, 30)
QUICK = Sizes(2, 4, 8, 6, 60, 200, 3, 15)


def _reference_coefficients(sizes: Sizes):
    bad = [g for g, ref in K3_REFERENCE.items()
           if k3_generating_series(g, 3).integer_coeffs() != ref]
    return not bad, "F_0..F_3 through q^3" if not bad else f"mismatch for g in {bad}"


def _partition_expansion(sizes: Sizes):
    got = eta_product_inverse(1, 8).integer_coeffs()
    return got == PARTITIONS_TO_8, f"got {got}"


def _triangulation(sizes: Sizes):
    failures = []
    for surface in counting.Surface:
        report = counting.cross_validate(surface, sizes.grid_g, sizes.grid_n)
        failures += [f"{surface.value} g={r.genus} n={r.nodes}" for r in report.rows if not r.ok]
    return not failures, "all methods agree" if not failures else "mismatch at " + "; ".join(failures[:5])


def _one_admissible_count(sizes: Sizes):
    bad = [a for a in range(1, sizes.one_admissible_max + 1)
           if len(enumerate_one_admissible(a)) != partition(a)]
    return not bad, f"a <= {sizes.one_admissible_max}" if not bad else f"fails at a in {bad}"


def _component_contributions(sizes: Sizes):
    bad = []
    for a in range(1, sizes.contribution_max + 1):
        for s in enumerate_admissible(a):
            value = evaluate_invariant(class_from_sequence(s))
            if value is InvariantValue.UNDETERMINED or (value is InvariantValue.ONE) != is_one_admissible(s):
                bad.append(s.render())
    return not bad, f"|s| <= {sizes.contribution_max}" if not bad else f"{len(bad)} bad, e.g. {bad[0]}"


def _sublattices(sizes: Sizes):
    bad = [b for b in range(1, sizes.lattice_max + 1) if sublattice_count(b) != sigma(b)]
    return not bad, f"b <= {sizes.lattice_max}" if not bad else f"fails at b in {bad[:5]}"


def _section_reduction(sizes: Sizes):
    rng = random.Random(20260601)
    for trial in range(sizes.scrambles):
        g, n = rng.randint(0, 3), rng.randint(0, 6)
        start = section_class(g, n)
        target = pairing_data(start)
        scrambled, path = scramble(start, rng.randint(0, 10), rng)
        if any(pairing_data(c) != target for c in path):
            return False, f"pairing changed while scrambling trial {trial}"
        result = reduce_to_section_class(scrambled)
        if result.i != g + n:
            return False, f"trial {trial}: recovered {result.i}, expected {g + n}"
        if any(pairing_data(s.after) != target for s in result.steps):
            return False, f"pairing changed while reducing trial {trial}"
    return True, f"{sizes.scrambles} scrambles"


def _square_identity(sizes: Sizes):
    order = 20
    half = re_generating_series(0, order)
    return series_mul(half, half) == k3_generating_series(0, order), f"order {order}"


def _integrality(sizes: Sizes):
    for g in range(sizes.integrality_g + 1):
        for build in (k3_generating_series, re_generating_series):
            if not build(g, sizes.integrality_order).is_integral():
                return False, f"{build.__name__} g={g}"
    return True, f"g <= {sizes.integrality_g}, order {sizes.integrality_order}"


CHECKS: list[tuple[str, Callable[[Sizes], tuple[bool, str]]]] = [
    ("reference coefficients", _reference_coefficients),
    ("partition expansion", _partition_expansion),
    ("method triangulation", _triangulation),
    ("1-admissible count = p(a)", _one_admissible_count),
    ("component contributions", _component_contributions),
    ("sublattices = sigma", _sublattices),
    ("section-class reduction", _section_reduction),
    ("square identity", _square_identity),
    ("integrality", _integrality),
]


def run_selftest(quick: bool = False) -> list[CheckResult]:
    sizes = QUICK if quick else FULL
    results = []
    for name, check in CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = check(sizes)
        except Exception as exc:  # report, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return results


def render_results(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {round(r.seconds * 1000):6d} ms  {r.detail}"
        for r in results
    ]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
