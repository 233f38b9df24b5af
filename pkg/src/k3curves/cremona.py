"""Homology classes on blow-ups of P^2 and Cremona rewriting.

A class (d; a_1, ..., a_l) stands for d*h - sum a_i e_i.  Two rewrite
procedures live here:

* :func:`evaluate_invariant` decides the genus-0 invariant N(d; a_1, ...)
  for classes that the elementary rules (vanishing for negative entries,
  dropping 1s, permutation symmetry, Cremona invariance, N(1) = 1) can
  settle, and reports ``UNDETERMINED`` otherwise.
* :func:`reduce_to_section_class` walks a class with F.C = 1 on the
  9-point blow-up down to e_9 + i*F.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .admseq import AdmissibleSequence

DEFAULT_MAX_STEPS = 1000
SECTION_POINTS = 9


class ReductionError(ValueError):
    """Input is outside the hypotheses of the section-class reduction."""


@dataclass(frozen=True)
class BlowupClass:
    d: int
    alphas: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))

    @classmethod
    def parse(cls, text: str) -> BlowupClass:
        """Parse ``"d;a1,a2,...,al"`` (the alpha list may be empty)."""
        head, sep, tail = text.strip().partition(";")
        if not sep:
            raise ValueError(f"expected 'd;a1,...,al', got {text!r}")
        try:
            d = int(head)
            alphas = tuple(int(t) for t in tail.split(",")) if tail.strip() else ()
        except ValueError:
            raise ValueError(f"non-integer entry in class {text!r}") from None
        return cls(d, alphas)

    def render(self) -> str:
        return f"{self.d};" + ",".join(str(a) for a in self.alphas)

    def __str__(self):
        return f"({self.d}; " + ", ".join(str(a) for a in self.alphas) + ")"

    def canonical(self) -> BlowupClass:
        """Alphas sorted non-increasing with zero entries removed."""
        return BlowupClass(
            self.d, tuple(sorted((a for a in self.alphas if a != 0), reverse=True))
        )

    def padded(self, length: int, fill: int = 0) -> BlowupClass:
        if len(self.alphas) >= length:
            return self
        return BlowupClass(self.d, self.alphas + (fill,) * (length - len(self.alphas)))


def section_class(g: int, n: int) -> BlowupClass:
    """C_n = e_9 + (g+n) F = (3i; i, ..., i, i-1) with i = g+n."""
    i = g + n
    return BlowupClass(3 * i, (i,) * (SECTION_POINTS - 1) + (i - 1,))


def cremona_transform(c: BlowupClass, i: int, j: int, k: int) -> BlowupClass:
    if len({i, j, k}) != 3:
        raise ValueError(f"Cremona needs three distinct indices, got {(i, j, k)}")
    if min(i, j, k) < 0:
        raise ValueError(f"indices must be non-negative, got {(i, j, k)}")
    c = c.padded(max(i, j, k) + 1)
    d = c.d
    a = list(c.alphas)
    ai, aj, ak = a[i], a[j], a[k]
    a[i] = d - aj - ak
    a[j] = d - ai - ak
    a[k] = d - ai - aj
    return BlowupClass(2 * d - ai - aj - ak, tuple(a))


def pairing_data(c: BlowupClass) -> tuple[int, int]:
    """(C.C, -K.C) = (d^2 - sum a^2, 3d - sum a)."""
    return (
        c.d * c.d - sum(a * a for a in c.alphas),
        3 * c.d - sum(c.alphas),
    )


def class_from_sequence(s: AdmissibleSequence) -> BlowupClass:
    """Class whose invariant is the contribution of the component labelled by s.

    Exceptional classes are taken in the order e_0, e_1, e_-1, e_2, e_-2, ...
    giving (s_0; s_0-1, s_0-s_1, s_0-s_-1, s_1-s_2, s_-1-s_-2, ...).
    Trailing zeros are dropped.
    """
    alphas = [s[0] - 1, s[0] - s[1], s[0] - s[-1]]
    for n in range(1, s.magnitude):
        alphas.append(s[n] - s[n + 1])
        alphas.append(s[-n] - s[-n - 1])
    while alphas and alphas[-1] == 0:
        alphas.pop()
    return BlowupClass(s[0], tuple(alphas))


class InvariantValue(enum.Enum):
    ZERO = "Zero"
    ONE = "One"
    UNDETERMINED = "Undetermined"


def evaluate_invariant(
    c: BlowupClass, max_steps: int = DEFAULT_MAX_STEPS
) -> InvariantValue:
    """Settle N(c) using the elementary blow-up rules, or give up.

    Each round sorts the class and drops zeros, applies the vanishing rules
    for negative entries and negative expected dimension 3d - 1 - sum(a),
    strips entries equal to 1, stops at N(1) = 1, and otherwise pads with 1s
    to three entries and applies Cremona to the three largest.
    """
    for _ in range(max_steps + 1):
        c = c.canonical()
        if any(a < 0 for a in c.alphas):
            if c.d == 0 and c.alphas == (-1,):
                return InvariantValue.ONE
            return InvariantValue.ZERO
        if c.d < 0 or 3 * c.d - 1 - sum(c.alphas) < 0:
            return InvariantValue.ZERO
        c = BlowupClass(c.d, tuple(a for a in c.alphas if a != 1))
        if c.d == 1 and not c.alphas:
            return InvariantValue.ONE
        c = cremona_transform(c.padded(3, fill=1), 0, 1, 2)
    return InvariantValue.UNDETERMINED


class ReductionStep(NamedTuple):
    kind: str  # "pad", "permute" or "cremona"
    before: BlowupClass
    after: BlowupClass
    detail: tuple[int, ...] = ()

    def describe(self) -> str:
        if self.kind == "permute":
            return f"permute {list(self.detail)}: {self.before} -> {self.after}"
        if self.kind == "cremona":
            return f"cremona on e{self.detail[0] + 1},e{self.detail[1] + 1},e{self.detail[2] + 1}: {self.before} -> {self.after}"
        return f"pad with zeros: {self.before} -> {self.after}"


class Reduction(NamedTuple):
    i: int
    steps: list[ReductionStep]

    @property
    def n_transforms(self) -> int:
        return sum(1 for s in self.steps if s.kind == "cremona")


def _sort_step(c: BlowupClass) -> tuple[BlowupClass, tuple[int, ...]]:
    # stable: ties keep their original left-to-right order
    perm = tuple(sorted(range(len(c.alphas)), key=lambda t: -c.alphas[t]))
    return BlowupClass(c.d, tuple(c.alphas[t] for t in perm)), perm


def reduce_to_section_class(
    c: BlowupClass, max_steps: int = DEFAULT_MAX_STEPS
) -> Reduction:
    """Reduce a class with F.C = 1 to e_9 + i F by permutations and Cremona moves.

    Returns i together with the transcript of moves.  Raises
    :class:`ReductionError` when the class does not live on the 9-point
    blow-up, has F.C != 1, or fails to reduce.
    """
    steps: list[ReductionStep] = []
    if len(c.alphas) > SECTION_POINTS:
        raise ReductionError(
            f"class has {len(c.alphas)} exceptional entries, at most {SECTION_POINTS} allowed"
        )
    if len(c.alphas) < SECTION_POINTS:
        padded = c.padded(SECTION_POINTS)
        steps.append(ReductionStep("pad", c, padded))
        c = padded
    fc = pairing_data(c)[1]
    if fc != 1:
        raise ReductionError(f"F.C = {fc} != 1")

    for _ in range(max_steps + 1):
        ordered, perm = _sort_step(c)
        if ordered != c:
            steps.append(ReductionStep("permute", c, ordered, perm))
            c = ordered
        a = c.alphas
        top = a[0] + a[1] + a[2]
        if top == c.d:
            if c.d % 3:
                raise ReductionError(f"terminal class {c} has degree not divisible by 3")
            i = c.d // 3
            if c != section_class(i, 0):
                raise ReductionError(f"terminal class {c} is not of the form e9 + iF")
            return Reduction(i, steps)
        if top < c.d:
            raise ReductionError(f"a1+a2+a3 < d in {c}; Cremona would not lower the degree")
        nxt = cremona_transform(c, 0, 1, 2)
        steps.append(ReductionStep("cremona", c, nxt, (0, 1, 2)))
        c = nxt
    raise ReductionError(f"no reduction within {max_steps} Cremona steps")


def scramble(
    c: BlowupClass, moves: int, rng: random.Random
) -> tuple[BlowupClass, list[BlowupClass]]:
    """Apply ``moves`` random Cremona moves or permutations; returns the final
    class and every intermediate class (starting with ``c``)."""
    path = [c]
    n = len(c.alphas)
    if n < 3:
        raise ValueError("scrambling needs at least three exceptional entries")
    for _ in range(moves):
        if rng.random() < 0.5:
            i, j, k = rng.sample(range(n), 3)
            c = cremona_transform(c, i, j, k)
        else:
            perm = list(range(n))
            rng.shuffle(perm)
            c = BlowupClass(c.d, tuple(c.alphas[t] for t in perm))
        path.append(c)
    return c, path
