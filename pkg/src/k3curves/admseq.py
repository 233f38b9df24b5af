"""Admissible sequences, the 1-admissible subfamily, and Young diagrams.

An admissible sequence is a run of positive integers s_lo, ..., s_hi with
lo <= 0 <= hi.  It is 1-admissible when, walking outward from index 0 in
either direction, every step keeps the value or lowers it by exactly one,
counting the implicit 0 just past each end.  So the two outermost values
are 1 (a lone s_0 must itself be 1).

Diagonal convention: cell (i, j) of a diagram (row i, column j, 0-based)
lies on diagonal i - j.  Diagonals below the main one (i > j) give the
positive indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class AdmissibleSequence:
    lo: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not is_admissible(self.lo, self.values):
            raise ValueError(
                f"not admissible: lo={self.lo}, values={list(self.values)}"
            )

    @classmethod
    def from_mapping(cls, entries: Mapping[int, int]) -> AdmissibleSequence:
        """Build from {index: value}; zero entries at either end are dropped."""
        nonzero = [n for n, v in entries.items() if v != 0]
        if not nonzero:
            raise ValueError("sequence has no nonzero entries")
        lo, hi = min(nonzero), max(nonzero)
        return cls(lo, tuple(entries.get(n, 0) for n in range(lo, hi + 1)))

    @classmethod
    def from_padded(cls, lo: int, values: Sequence[int]) -> AdmissibleSequence:
        """Like the constructor, but trims zero padding from both ends first."""
        return cls.from_mapping({lo + k: v for k, v in enumerate(values)})

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @property
    def magnitude(self) -> int:
        return sum(self.values)

    def __getitem__(self, n: int) -> int:
        """s_n, with 0 outside the index range."""
        if self.lo <= n <= self.hi:
            return self.values[n - self.lo]
        return 0

    def as_dict(self) -> dict[int, int]:
        return {self.lo + k: v for k, v in enumerate(self.values)}

    def render(self) -> str:
        return f"{self.lo}..{self.hi}: " + ",".join(str(v) for v in self.values)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class PartitionDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if any(r < 1 for r in self.rows):
            raise ValueError(f"rows must be positive: {self.rows}")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"rows must be non-increasing: {self.rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def cells(self) -> Iterable[tuple[int, int]]:
        for i, length in enumerate(self.rows):
            for j in range(length):
                yield i, j


def is_admissible(lo: int, values: Sequence[int]) -> bool:
    if not values:
        return False
    hi = lo + len(values) - 1
    return lo <= 0 <= hi and all(v >= 1 for v in values)


def is_one_admissible(seq: AdmissibleSequence) -> bool:
    for direction in (1, -1):
        prev = seq[0]
        n = direction
        while True:
            cur = seq[n]
            if prev - cur not in (0, 1):
                return False
            if cur == 0:
                break
            prev = cur
            n += direction
    return True


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` positive ints summing to ``total``."""
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def enumerate_admissible(a: int) -> list[AdmissibleSequence]:
    """Every admissible s with |s| = a, ordered by length, then lo, then values."""
    if a < 1:
        raise ValueError(f"magnitude must be >= 1, got {a}")
    out = []
    for width in range(1, a + 1):
        comps = list(_compositions(a, width))
        for lo in range(-(width - 1), 1):
            out.extend(AdmissibleSequence(lo, c) for c in comps)
    return out


def enumerate_one_admissible(a: int) -> list[AdmissibleSequence]:
    return [s for s in enumerate_admissible(a) if is_one_admissible(s)]


def diagram_to_sequence(d: PartitionDiagram) -> AdmissibleSequence:
    if not d.rows:
        raise ValueError("empty diagram")
    counts: dict[int, int] = {}
    for i, j in d.cells():
        counts[i - j] = counts.get(i - j, 0) + 1
    return AdmissibleSequence.from_mapping(counts)


def sequence_to_diagram(s: AdmissibleSequence) -> PartitionDiagram:
    """Inverse of :func:`diagram_to_sequence`.

    The cells of a diagram on any one diagonal form an initial run from the
    diagonal's first cell, so the counts pin down the cell set.
    """
    if not is_one_admissible(s):
        raise ValueError(f"no Young diagram has diagonal counts {s.render()}")
    rows: dict[int, int] = {}
    for k, count in s.as_dict().items():
        for t in range(count):
            i = t + k if k >= 0 else t
            rows[i] = rows.get(i, 0) + 1
    diagram = PartitionDiagram(tuple(rows.get(i, 0) for i in range(max(rows) + 1)))
    # 1-admissibility should already guarantee this
    if diagram_to_sequence(diagram) != s:
        raise ValueError(f"diagonal counts {s.render()} do not form a diagram")
    return diagram


def enumerate_diagrams(n: int) -> list[PartitionDiagram]:
    """All Young diagrams of size n, rows in non-increasing order."""

    def parts(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    return [PartitionDiagram(p) for p in parts(n, n)]
