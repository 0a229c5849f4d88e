"""Realize amicable parallelograms on the integer lattice.

A triangle with integer squared sides and integer area can be placed with
integer vertices.  We find such a placement directly: put the vertex between
the two given sides at the origin, walk the lattice points U on the circle
of squared radius ``x2``, and solve for the third vertex P from

    U·P = (x2 + y2 - d2) / 2,     U×P = 2 * area,

which gives ``P = (dot*U + cross*U⊥) / x2``.  A placement exists iff some U
makes both coordinates integral.  No floating point is used.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exact import ContractError, DomainError, is_perfect_square, isqrt
from .parallelogram import AmicablePair


class LatticePoint(NamedTuple):
    px: int
    py: int

    def __add__(self, other):  # vector addition, not tuple concatenation
        return LatticePoint(self.px + other.px, self.py + other.py)

    def __sub__(self, other):
        return LatticePoint(self.px - other.px, self.py - other.py)

    def norm2(self) -> int:
        return self.px * self.px + self.py * self.py


def shoelace_area2(points: Sequence[tuple[int, int]]) -> int:
    """Twice the signed area of the polygon through ``points`` (CCW positive)."""
    if len(points) < 3:
        raise DomainError(f"need at least 3 points, got {len(points)}")
    total = 0
    for (x0, y0), (x1, y1) in zip(points, list(points[1:]) + [points[0]]):
        total += x0 * y1 - x1 * y0
    return total


@dataclass(frozen=True)
class LatticeEmbedding:
    """Integer vertices together with the squared sides and area they must realize."""

    vertices: tuple[LatticePoint, ...]
    target_sq_sides: tuple[int, ...]
    target_area2: int

    def edge_sq_lengths(self) -> tuple[int, ...]:
        vs = self.vertices
        return tuple((vs[(i + 1) % len(vs)] - vs[i]).norm2() for i in range(len(vs)))

    def verify(self) -> bool:
        """Exact check of side lengths, area and (for 4 vertices) parallelism."""
        vs = self.vertices
        if self.edge_sq_lengths() != tuple(self.target_sq_sides):
            return False
        if abs(shoelace_area2(vs)) != self.target_area2:
            return False
        if len(vs) == 4 and vs[2] - vs[1] != vs[3] - vs[0]:
            return False
        return True


def circle_points(r2: int) -> list[LatticePoint]:
    """Lattice points on x² + y² = r2 with x > 0 and y >= 0, by increasing y."""
    out = []
    for py in range(isqrt(r2) + 1):
        px = is_perfect_square(r2 - py * py)
        if px:
            out.append(LatticePoint(px, py))
    return out


def embed_triangle(x2: int, y2: int, d2: int, area: int) -> LatticeEmbedding:
    """Place the triangle with squared sides x2, y2 (meeting at the origin),
    squared third side d2 and the given integer area on the lattice.

    Returns vertices ``(O, U, P)`` with ``|U|² = x2``, ``|P|² = y2``,
    ``|P - U|² = d2`` and positive orientation.  The canonical choice is the
    U with the smallest polar angle; quarter turns preserve the lattice, so
    that U always lies in the first quadrant.
    """
    if min(x2, y2, d2, area) < 1:
        raise DomainError(f"inputs must be positive: {(x2, y2, d2, area)}")
    twice_dot = x2 + y2 - d2
    if 16 * area * area != 4 * x2 * y2 - twice_dot * twice_dot:
        raise DomainError(
            f"area {area} is inconsistent with squared sides {(x2, y2, d2)}")
    if twice_dot % 2:
        raise DomainError("x2 + y2 - d2 is odd; no lattice placement exists")
    dot, cross = twice_dot // 2, 2 * area
    for u in circle_points(x2):
        nx = dot * u.px - cross * u.py
        ny = dot * u.py + cross * u.px
        if nx % x2 == 0 and ny % x2 == 0:
            p = LatticePoint(nx // x2, ny // x2)
            origin = LatticePoint(0, 0)
            return LatticeEmbedding((origin, u, p), (x2, d2, y2), 2 * area)
    raise ContractError(f"no lattice embedding found for {(x2, y2, d2, area)}")


def assemble_parallelogram(tri: LatticeEmbedding) -> LatticeEmbedding:
    """Glue two copies of triangle (O, U, P) into the parallelogram O, U, U+P, P."""
    if len(tri.vertices) != 3:
        raise DomainError("expected a triangle")
    o, u, p = tri.vertices
    u, p = u - o, p - o
    area2 = shoelace_area2([LatticePoint(0, 0), u, p])
    if area2 == 0:
        raise DomainError("degenerate (collinear) triangle")
    verts = (o, o + u, o + u + p, o + p)
    x2, y2 = u.norm2(), p.norm2()
    return LatticeEmbedding(verts, (x2, y2, x2, y2), 2 * abs(area2))


def realize_amicable_pair(pair: AmicablePair) -> tuple[LatticeEmbedding, LatticeEmbedding]:
    """Lattice parallelograms for both members of an amicable pair.

    The first has twice-area ``4(a+b)``, the second ``4(x+y)``.
    """
    x, y, a, b = pair.sides
    tri1 = embed_triangle(x * x, y * y, x * x + y * y + 2 * pair.s1, a + b)
    tri2 = embed_triangle(a * a, b * b, a * a + b * b + 2 * pair.s2, x + y)
    return assemble_parallelogram(tri1), assemble_parallelogram(tri2)
