"""Amicability criterion and exact geometry of lattice parallelograms.

A lattice parallelogram with integer sides x, y is the amicable partner of
one with sides a, b exactly when ``x²y² - 4(a+b)²`` and ``a²b² - 4(x+y)²``
are both squares of integers.  Everything is kept in exact integer or
rational arithmetic; floats appear only in display helpers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, is_perfect_square


@dataclass(frozen=True, order=True)
class ParallelogramSpec:
    """Side lengths of a parallelogram, stored with ``x <= y``."""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise DomainError(f"side lengths must be positive: ({self.x}, {self.y})")
        if self.x > self.y:
            lo, hi = self.y, self.x
            object.__setattr__(self, "x", lo)
            object.__setattr__(self, "y", hi)

    @property
    def perimeter(self) -> int:
        return 2 * (self.x + self.y)

    @property
    def is_rhombus(self) -> bool:
        return self.x == self.y


@dataclass(frozen=True)
class AmicablePair:
    """Two parallelograms certified amicable by the roots ``s1`` and ``s2``.

    ``s1**2 == x²y² - 4(a+b)²`` for ``p1 = (x, y)``, ``p2 = (a, b)``, and
    symmetrically for ``s2``.
    """

    p1: ParallelogramSpec
    p2: ParallelogramSpec
    s1: int
    s2: int

    @property
    def trivial(self) -> bool:
        return self.p1 == self.p2

    @property
    def sides(self) -> tuple[int, int, int, int]:
        return (self.p1.x, self.p1.y, self.p2.x, self.p2.y)

    def check(self) -> None:
        """Raise :class:`DomainError` unless every invariant holds exactly."""
        x, y, a, b = self.sides
        if self.s1 < 0 or self.s1 ** 2 != (x * y) ** 2 - 4 * (a + b) ** 2:
            raise DomainError(f"s1 does not certify {self}")
        if self.s2 < 0 or self.s2 ** 2 != (a * b) ** 2 - 4 * (x + y) ** 2:
            raise DomainError(f"s2 does not certify {self}")
        if self.p2 < self.p1:
            raise DomainError(f"pair is not in canonical order: {self}")


class PairKind(enum.Flag):
    EQUABLE_TRIVIAL = enum.auto()
    AMICABLE_NONTRIVIAL = enum.auto()
    RECTANGLE_DEGENERATE = enum.auto()


def amicable_condition(x: int, y: int, a: int, b: int) -> AmicablePair | None:
    """Return the certified pair if (x, y) and (a, b) are amicable, else ``None``."""
    if min(x, y, a, b) < 1:
        raise DomainError(f"side lengths must be positive: {(x, y, a, b)}")
    s1 = is_perfect_square((x * y) ** 2 - 4 * (a + b) ** 2)
    if s1 is None:
        return None
    s2 = is_perfect_square((a * b) ** 2 - 4 * (x + y) ** 2)
    if s2 is None:
        return None
    p, q = ParallelogramSpec(x, y), ParallelogramSpec(a, b)
    if q < p:
        p, q, s1, s2 = q, p, s2, s1
    return AmicablePair(p, q, s1, s2)


def diagonal_squared(x: int, y: int, a: int, b: int) -> int:
    """Squared long diagonal ``x² + y² + 2*s1`` of the parallelogram with sides x, y.

    The result always satisfies ``x² + y² <= d² < (x + y)²``.
    """
    s1 = is_perfect_square((x * y) ** 2 - 4 * (a + b) ** 2)
    if s1 is None:
        raise DomainError(f"x²y² - 4(a+b)² is not a square for {(x, y, a, b)}")
    return x * x + y * y + 2 * s1


def sine_of_angle(x: int, y: int, partner_a: int, partner_b: int) -> Fraction:
    """Exact sine of the interior angle, ``2(a+b) / (xy)``, in lowest terms."""
    num, den = 2 * (partner_a + partner_b), x * y
    if den < 1 or num < 0:
        raise DomainError("side lengths must be positive")
    if num > den:
        raise DomainError(f"sin θ = {num}/{den} > 1; no such parallelogram")
    return Fraction(num, den)


def classify(pair: AmicablePair) -> PairKind:
    kind = PairKind.EQUABLE_TRIVIAL if pair.trivial else PairKind.AMICABLE_NONTRIVIAL
    if pair.s1 == 0 or pair.s2 == 0:
        kind |= PairKind.RECTANGLE_DEGENERATE
    return kind


def area(spec: ParallelogramSpec, sine: Fraction) -> Fraction:
    return spec.x * spec.y * sine


def display_sine(sine: Fraction) -> str:
    """Render a sine for humans, 12 significant digits."""
    return f"{float(sine):.12g}"
