"""Map solutions of κ⁴m⁴n⁴ - 32κ(m² + n²) = s² onto Weierstrass curves.

With α = κm² and β = κn² the equation reads α²β² - 32(α + β) = s².  As a
quadratic in β its discriminant z² = 32² + 4α²(32α + s²) must be a square,
and scaling by 2⁸ turns that into

    u² = v³ + s²v² + 2¹⁸,        u = 2⁴z,  v = 2⁵α.

Substituting v = (X - 3s²)/9 and Y = 27u removes the quadratic term:

    Y² = X³ - 27s⁴·X + 54s⁶ + 729·2¹⁸.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import ContractError, DomainError, is_perfect_square
from .rhombus import star_residual

CURVE_CONSTANT = 2 ** 18


@dataclass(frozen=True)
class CurvePoint:
    X: int
    Y: int
    p: int
    q: int
    s: int


def on_curve(pt: CurvePoint) -> bool:
    return pt.Y * pt.Y == pt.X ** 3 + pt.p * pt.X + pt.q


def cubic_model(kappa: int, m: int, n: int) -> tuple[int, int, int]:
    """Return ``(u, v, s)`` on u² = v³ + s²v² + 2¹⁸ for a solution of (*)."""
    s = is_perfect_square(star_residual(kappa, m, n))
    if s is None:
        raise DomainError(f"({kappa}, {m}, {n}) does not solve (*)")
    alpha, beta = kappa * m * m, kappa * n * n
    if alpha * alpha * beta * beta - 32 * (alpha + beta) != s * s:
        raise ContractError("α²β² - 32(α + β) != s²")
    z = is_perfect_square(32 ** 2 + 4 * alpha * alpha * (32 * alpha + s * s))
    if z is None:
        raise ContractError("discriminant of the β-quadratic is not a square")
    return 16 * z, 32 * alpha, s


def beta_roots(kappa: int, m: int, n: int) -> list[int]:
    """Integer roots β of α²β² - 32β - (32α + s²) = 0."""
    u, v, s = cubic_model(kappa, m, n)
    z, alpha = u // 16, v // 32
    den = 2 * alpha * alpha
    return sorted({num // den for num in (32 + z, 32 - z) if num % den == 0})


def weierstrass_from_cubic(u: int, v: int, s: int) -> CurvePoint:
    """Apply X = 9v + 3s², Y = 27u to a point of u² = v³ + s²v² + 2¹⁸."""
    c = s * s
    return CurvePoint(
        X=9 * v + 3 * c,
        Y=27 * u,
        p=-27 * c * c,
        q=54 * c ** 3 + 729 * CURVE_CONSTANT,
        s=s,
    )


def star_to_curve(kappa: int, m: int, n: int) -> CurvePoint:
    return weierstrass_from_cubic(*cubic_model(kappa, m, n))
