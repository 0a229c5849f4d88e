"""Exact integer primitives: square roots, divisors, Pythagorean parametrization.

Python ints are arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt as _isqrt


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ContractError(RuntimeError):
    """An internal consistency guarantee was violated."""


def isqrt(n: int) -> int:
    """Floor square root: the r with r*r <= n < (r+1)**2."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return _isqrt(n)


def is_perfect_square(n: int) -> int | None:
    """Return the nonnegative root of ``n`` if it is a square, else ``None``.

    Zero is a square; negative numbers never are.
    """
    if n < 0:
        return None
    r = _isqrt(n)
    return r if r * r == n else None


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order (trial division)."""
    if n < 1:
        raise DomainError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    for d in range(1, _isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sum_of_two_squares(q: int) -> list[tuple[int, int]]:
    """Ordered pairs (m, n) of positive integers with m*m + n*n == q."""
    out = []
    m = 1
    while 2 * m * m <= q:
        n = is_perfect_square(q - m * m)
        if n:
            out.append((m, n))
            if n != m:
                out.append((n, m))
        m += 1
    return sorted(out)


class Case(enum.Enum):
    A = "A"  # x^2 = k(m^2+n^2), 4a = 2kmn
    B = "B"  # x^2 = k(m^2+n^2), 4a = k(n^2-m^2), n > m


@dataclass(frozen=True)
class TripleParam:
    """A Pythagorean parametrization of the triple (s, 4a, x^2)."""

    k: int
    m: int
    n: int
    case: Case

    def __post_init__(self):
        if min(self.k, self.m, self.n) < 1:
            raise DomainError(f"parameters must be positive: {self}")
        if gcd(self.m, self.n) != 1:
            raise DomainError(f"m and n must be coprime: {self}")
        if self.case is Case.B and self.n <= self.m:
            raise DomainError(f"case B requires n > m: {self}")

    @property
    def x_squared(self) -> int:
        return self.k * (self.m * self.m + self.n * self.n)

    @property
    def four_a(self) -> int:
        if self.case is Case.A:
            return 2 * self.k * self.m * self.n
        return self.k * (self.n * self.n - self.m * self.m)

    def __lt__(self, other):  # Case is not orderable on its own
        return (self.k, self.m, self.n, self.case.value) < (
            other.k, other.m, other.n, other.case.value)


class TripleList(list):
    """A list of :class:`TripleParam` that can carry a diagnostic message.

    ``parametrize_triples`` is probed freely by search code, so a failed
    precondition produces an empty list with ``diagnostic`` set instead of
    raising.
    """

    diagnostic: str | None = None


def parametrize_triples(x: int, a: int) -> TripleList:
    """Every (k, m, n, case) reproducing ``x**2`` and ``4*a``.

    Requires ``x**4 - 16*a**2`` to be a nonnegative square, i.e.
    ``(s, 4a, x^2)`` is a Pythagorean triple (``s = 0`` allowed).
    """
    out = TripleList()
    if x < 1 or a < 1:
        out.diagnostic = f"x and a must be positive, got x={x}, a={a}"
        return out
    x2 = x * x
    s = is_perfect_square(x2 * x2 - 16 * a * a)
    if s is None:
        out.diagnostic = f"x^4 - 16a^2 = {x2 * x2 - 16 * a * a} is not a nonnegative square"
        return out
    four_a = 4 * a
    for k in divisors(x2):
        for m, n in sum_of_two_squares(x2 // k):
            if gcd(m, n) != 1:
                continue
            if 2 * k * m * n == four_a:
                out.append(TripleParam(k, m, n, Case.A))
            if n > m and k * (n * n - m * m) == four_a:
                out.append(TripleParam(k, m, n, Case.B))
    out.sort()
    return out
