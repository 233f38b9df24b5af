"""N_g(n) on K3 and N_g^Y(C_n) on the rational elliptic surface, three ways.

* closed form: a coefficient of the quasi-modular generating series;
* convolution: sum over component data (a, b) of prod p(a_j) * prod b_i sigma(b_i);
* components: the same sum, but each p(a_j) is replaced by a count of
  admissible sequences whose Cremona-evaluated contribution is 1, and each
  sigma(b_i) by an explicit Hermite-normal-form sublattice count.

The last two enumerate component data directly and never touch the series
code, so they serve as oracles for the first.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterator, Optional

from .admseq import enumerate_admissible, enumerate_diagrams
from .arith import partition, sigma, sublattice_count
from .cremona import (
    DEFAULT_MAX_STEPS,
    InvariantValue,
    class_from_sequence,
    evaluate_invariant,
)
from .modforms import k3_generating_series, re_generating_series


class Surface(str, enum.Enum):
    K3 = "k3"
    RATIONAL_ELLIPTIC = "re"

    @classmethod
    def parse(cls, text: str) -> Surface:
        key = text.strip().lower()
        aliases = {"k3": cls.K3, "re": cls.RATIONAL_ELLIPTIC, "rationalelliptic": cls.RATIONAL_ELLIPTIC,
                   "rational_elliptic": cls.RATIONAL_ELLIPTIC, "e1": cls.RATIONAL_ELLIPTIC}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown surface {text!r}; use 'k3' or 're'") from None


# Nodal fibers of a generic elliptic fibration; used by the enumeration methods.
FIBER_SLOTS = {Surface.K3: 24, Surface.RATIONAL_ELLIPTIC: 12}

ENV_CONVOLUTION_MAX = "K3CURVES_CONVOLUTION_MAX"
ENV_COMPONENTS_MAX = "K3CURVES_COMPONENTS_MAX"


class GuardExceeded(ValueError):
    """Query too large for an exhaustive enumeration method."""


class UndeterminedComponent(RuntimeError):
    """The Cremona evaluator could not settle some component's contribution."""


@dataclass(frozen=True)
class Guards:
    """Largest n + g each enumeration method accepts."""

    convolution_max: int = 10
    components_max: int = 8

    @classmethod
    def from_env(cls, environ=None) -> Guards:
        environ = os.environ if environ is None else environ
        base = cls()
        try:
            return cls(
                convolution_max=int(environ.get(ENV_CONVOLUTION_MAX, base.convolution_max)),
                components_max=int(environ.get(ENV_COMPONENTS_MAX, base.components_max)),
            )
        except ValueError as exc:
            raise ValueError(f"bad guard override in environment: {exc}") from None


@dataclass(frozen=True)
class CountQuery:
    surface: Surface
    genus: int
    nodes: int

    def __post_init__(self):
        object.__setattr__(self, "surface", Surface(self.surface))
        if self.genus < 0 or self.nodes < 0:
            raise ValueError(f"genus and nodes must be non-negative: {self}")

    @property
    def budget(self) -> int:
        return self.genus + self.nodes

    @property
    def slots(self) -> int:
        return FIBER_SLOTS[self.surface]


@dataclass(frozen=True)
class ComponentDatum:
    """Degrees a_j over the nodal fibers and b_i over the g marked fibers."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.a) or any(x < 1 for x in self.b):
            raise ValueError(f"need a_j >= 0 and b_i >= 1: {self}")

    @property
    def total(self) -> int:
        return sum(self.a) + sum(self.b)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def _placements(values: tuple[int, ...], slots: int) -> int:
    """Ways to place the nonzero multiset ``values`` into ``slots`` labelled slots."""
    k = len(values)
    if k > slots:
        return 0
    out = factorial(slots) // factorial(slots - k)
    for m in Counter(values).values():
        out //= factorial(m)
    return out


def component_data(slots: int, genus: int, budget: int) -> Iterator[tuple[ComponentDatum, int]]:
    """Every datum with |a| + |b| = budget, up to reordering of the a-slots.

    Yields (representative, multiplicity); the representative lists the
    nonzero a_j first in non-increasing order, and the multiplicity counts
    the distinct slot assignments it stands for.
    """
    for bsum in range(genus, budget + 1):
        if genus == 0 and bsum:
            break
        asum = budget - bsum
        a_shapes = [()] if asum == 0 else [d.rows for d in enumerate_diagrams(asum)]
        for shape in a_shapes:
            mult = _placements(shape, slots)
            if not mult:
                continue
            a = shape + (0,) * (slots - len(shape))
            for b in _compositions(bsum, genus):
                yield ComponentDatum(a, b), mult


def _check_guard(q: CountQuery, limit: int, method: str) -> None:
    if q.budget > limit:
        raise GuardExceeded(
            f"{method} enumeration is limited to genus + nodes <= {limit} "
            f"(got {q.budget}); use the closed form, or raise the limit via "
            f"{ENV_CONVOLUTION_MAX if method == 'convolution' else ENV_COMPONENTS_MAX}"
        )


def count_closed_form(q: CountQuery) -> int:
    build = k3_generating_series if q.surface is Surface.K3 else re_generating_series
    coeff = build(q.genus, q.nodes)[q.nodes]
    if coeff.denominator != 1:
        raise ArithmeticError(f"non-integral coefficient {coeff} for {q}")
    return coeff.numerator


def _datum_sum(
    q: CountQuery,
    a_weight: Callable[[int], int],
    b_weight: Callable[[int], int],
) -> int:
    total = 0
    for datum, mult in component_data(q.slots, q.genus, q.budget):
        wa = prod(a_weight(x) for x in datum.a if x)
        if not wa:
            continue
        total += mult * wa * prod(b_weight(x) for x in datum.b)
    return total


def count_convolution(q: CountQuery, guards: Optional[Guards] = None) -> int:
    guards = guards or Guards.from_env()
    _check_guard(q, guards.convolution_max, "convolution")
    return _datum_sum(q, partition, lambda b: b * sigma(b))


@lru_cache(maxsize=None)
def contributing_sequences(a: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Number of admissible s with |s| = a whose component contributes 1."""
    if a == 0:
        return 1
    count = 0
    for s in enumerate_admissible(a):
        value = evaluate_invariant(class_from_sequence(s), max_steps)
        if value is InvariantValue.UNDETERMINED:
            raise UndeterminedComponent(
                f"could not evaluate the component for {s.render()} "
                f"within {max_steps} steps"
            )
        if value is InvariantValue.ONE:
            count += 1
    return count


def count_by_components(
    q: CountQuery,
    max_steps: int = DEFAULT_MAX_STEPS,
    guards: Optional[Guards] = None,
) -> int:
    guards = guards or Guards.from_env()
    _check_guard(q, guards.components_max, "components")
    return _datum_sum(
        q,
        lambda a: contributing_sequences(a, max_steps),
        lambda b: sublattice_count(b) * b,
    )


METHODS = {
    "closed": lambda q, guards: count_closed_form(q),
    "convolution": lambda q, guards: count_convolution(q, guards=guards),
    "components": lambda q, guards: count_by_components(q, guards=guards),
}


@dataclass
class ValidationRow:
    genus: int
    nodes: int
    closed: int
    convolution: Optional[int]
    components: Optional[int]

    @property
    def ok(self) -> bool:
        return all(v is None or v == self.closed for v in (self.convolution, self.components))


@dataclass
class CrossValidationReport:
    surface: Surface
    rows: list[ValidationRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def render(self) -> str:
        def cell(v):
            return "-" if v is None else str(v)

        header = ("g", "n", "closed", "convolution", "components", "ok")
        body = [
            (str(r.genus), str(r.nodes), str(r.closed), cell(r.convolution),
             cell(r.components), "yes" if r.ok else "NO")
            for r in self.rows
        ]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = [f"surface {self.surface.value}"]
        for row in [header, *body]:
            lines.append("  ".join(x.rjust(w) for x, w in zip(row, widths)))
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def cross_validate(
    surface: Surface,
    g_max: int,
    n_max: int,
    guards: Optional[Guards] = None,
) -> CrossValidationReport:
    """Tabulate all three methods over 0 <= g <= g_max, 0 <= n <= n_max.

    Cells beyond a method's guard are left empty (``None``) rather than
    failing the report.
    """
    surface = Surface(surface)
    guards = guards or Guards.from_env()
    build = k3_generating_series if surface is Surface.K3 else re_generating_series
    report = CrossValidationReport(surface)
    for g in range(g_max + 1):
        closed = build(g, n_max).integer_coeffs()
        for n in range(n_max + 1):
            q = CountQuery(surface, g, n)
            conv = count_convolution(q, guards) if q.budget <= guards.convolution_max else None
            comp = count_by_components(q, guards=guards) if q.budget <= guards.components_max else None
            report.rows.append(ValidationRow(g, n, closed[n], conv, comp))
    return report
