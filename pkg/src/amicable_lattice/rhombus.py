"""Complete solution of the amicable lattice rhombus problem.

Rhombuses with sides x and a are amicable iff ``x⁴ - 16a²`` and
``a⁴ - 16x²`` are squares.  Parametrizing the first triple and substituting
into the second leaves two quartic equations:

    (*)   κ⁴m⁴n⁴ - 32κ(m² + n²) = s²        (k = 2κ even)
    (**)  k⁴μ⁴n⁴ - 16k(4μ² + n²) = s²       (k odd, m = 2μ)

Each is solved here by the bounded case split: small values of the gap
``(leading root) - s = 2β`` are ruled out by finite checks of a factored
identity, which bounds the parameters; the remaining region and its
degenerate edges are then enumerated and tested directly.

Candidate generators (:func:`star_candidates`, :func:`star_star_candidates`)
are public so each branch of the case split can be inspected on its own.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .exact import (
    Case,
    ContractError,
    DomainError,
    TripleParam,
    divisors,
    is_perfect_square,
    isqrt,
)

STAR_GAPS = (1, 2, 3)  # β values with gap 2β in {2, 4, 6}
STAR_STAR_GAPS = (1, 2, 3, 4)  # gap in {2, 4, 6, 8}
# β >= 4: 4³ + 64 >= (4κm² - 8)(4κn² - 8) = 16(κm² - 2)(κn² - 2)
STAR_REGION_BOUND = (4 ** 3 + 64) // 16
# β >= 5: 5³ + 64 >= (5kμ² - 4)(5kn² - 16)
STAR_STAR_REGION_BOUND = 5 ** 3 + 64


class Variant(enum.Enum):
    STAR = "Star"
    STAR_STAR = "StarStar"


@dataclass(frozen=True)
class StarSolution:
    """A solution of (*) or (**).

    For ``STAR_STAR`` the fields ``kappa`` and ``m`` hold the odd ``k`` and
    ``μ`` respectively.
    """

    kappa: int
    m: int
    n: int
    s: int
    variant: Variant

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.kappa, self.m, self.n)


@dataclass(frozen=True)
class RhombusResult:
    x: int
    a: int
    source: StarSolution


# --- residuals ------------------------------------------------------------


def _positive(*values: int) -> None:
    if min(values) < 1:
        raise DomainError(f"parameters must be positive: {values}")


def star_residual(kappa: int, m: int, n: int) -> int:
    """κ⁴m⁴n⁴ - 32κ(m² + n²); a square exactly when (κ, m, n) solves (*)."""
    _positive(kappa, m, n)
    lead = kappa * kappa * m * m * n * n
    return lead * lead - 32 * kappa * (m * m + n * n)


def star_star_residual(k: int, mu: int, n: int) -> int:
    """k⁴μ⁴n⁴ - 16k(4μ² + n²) for odd k and odd n."""
    _positive(k, mu, n)
    if k % 2 == 0 or n % 2 == 0:
        raise DomainError(f"k and n must be odd, got k={k}, n={n}")
    lead = k * k * mu * mu * n * n
    return lead * lead - 16 * k * (4 * mu * mu + n * n)


# --- bounding lemmas ------------------------------------------------------


def little_lemma_bound(c: int, d: int) -> int:
    """Bound (c+1)² + d on 2A whenever A² - 2cA - d is a square.

    Below ``(A - c)²`` the next square is ``(A - c - 1)²``, which caps A.
    """
    _positive(c, d)
    return (c + 1) ** 2 + d


def scaled_gap_bound(q: int, p1: int, p0: int) -> tuple[int, int]:
    """Return ``(coef, rhs)`` with ``coef * A <= rhs`` whenever
    ``q²A² - p1*A - p0`` is a nonnegative square (A, q, p1, p0 positive).

    Generalizes :func:`little_lemma_bound` (``q = 1``, ``p1 = 2c``) to a
    non-monic leading square: with ``c = p1 // (2q)`` the value lies strictly
    below ``(qA - c)²``, hence at most ``(qA - c - 1)²``.
    """
    _positive(q, p1, p0)
    c = p1 // (2 * q)
    return 2 * q * (c + 1) - p1, (c + 1) ** 2 + p0


def _factor_solutions(scale: int, off1: int, off2: int, target: int):
    """(m, n) >= 1 with (scale*m² - off1)(scale*n² - off2) == target > 0."""
    out = []
    for m in range(1, isqrt((target + off1) // scale) + 1):
        f1 = scale * m * m - off1
        if f1 == 0 or target % f1:
            continue
        f2 = target // f1
        num = f2 + off2
        if num <= 0 or num % scale:
            continue
        n = is_perfect_square(num // scale)
        if n:
            out.append((m, n))
    return out


def star_gap_solutions(beta: int) -> list[tuple[int, int, int]]:
    """(κ, m, n) with κ | β² and β³ + 64 = (βκm² - 8)(βκn² - 8)."""
    _positive(beta)
    target = beta ** 3 + 64
    return [(kappa, m, n)
            for kappa in divisors(beta * beta)
            for m, n in _factor_solutions(beta * kappa, 8, 8, target)]


def star_star_gap_solutions(beta: int) -> list[tuple[int, int, int]]:
    """Odd k with k | β² and β³ + 64 = (βkμ² - 4)(βkn² - 16), as (k, μ, n)."""
    _positive(beta)
    target = beta ** 3 + 64
    return [(k, mu, n)
            for k in divisors(beta * beta) if k % 2
            for mu, n in _factor_solutions(beta * k, 4, 16, target)]


def even_lemma_identity(kappa: int, m: int, n: int, beta: int) -> bool:
    """Check β³ + 64 = (βκm² - 8)(βκn² - 8) and κ | β² for a solution of (*)."""
    if is_perfect_square(star_residual(kappa, m, n)) is None:
        raise DomainError(f"({kappa}, {m}, {n}) does not solve (*)")
    lhs = beta ** 3 + 64
    rhs = (beta * kappa * m * m - 8) * (beta * kappa * n * n - 8)
    return lhs == rhs and (beta * beta) % kappa == 0


def odd_lemma_identity(k: int, mu: int, n: int, beta: int) -> bool:
    """Check β³ + 64 = (βkμ² - 4)(βkn² - 16) and k | β² for a solution of (**)."""
    if is_perfect_square(star_star_residual(k, mu, n)) is None:
        raise DomainError(f"({k}, {mu}, {n}) does not solve (**)")
    lhs = beta ** 3 + 64
    rhs = (beta * k * mu * mu - 4) * (beta * k * n * n - 16)
    return lhs == rhs and (beta * beta) % k == 0


def gap_beta(leading: int, s: int) -> int:
    """β with ``leading - s == 2β``; the gap is always positive and even."""
    gap = leading - s
    if gap <= 0 or gap % 2:
        raise ContractError(f"gap {gap} is not a positive even number")
    return gap // 2


# --- candidate generation -------------------------------------------------


def star_candidates() -> list[tuple[str, tuple[int, int, int]]]:
    """Every (κ, m, n) that can possibly solve (*), labelled by branch.

    Branches: ``gap`` (gap 2, 4 or 6), ``zero-factor`` (κm² = 2),
    ``negative-factor`` (κm² = 1) and ``region`` (both factors positive and
    their product at most 8).  The m/n symmetric images are included.
    """
    out = []
    for beta in STAR_GAPS:
        out.extend(("gap", t) for t in star_gap_solutions(beta))

    # κ=2, m=1: residual = 16(n⁴ - 4n² - 4), and s = 4t
    n_max = isqrt(little_lemma_bound(2, 4) // 2)
    for n in range(1, n_max + 1):
        out.append(("zero-factor", (2, 1, n)))
        out.append(("zero-factor", (2, n, 1)))

    # κ=1, m=1: residual = n⁴ - 32n² - 32
    n_max = isqrt(little_lemma_bound(16, 32) // 2)
    for n in range(1, n_max + 1):
        out.append(("negative-factor", (1, 1, n)))
        out.append(("negative-factor", (1, n, 1)))

    # both factors >= 1 with product <= 8 forces κm² - 2 <= 8
    top = STAR_REGION_BOUND + 2
    for kappa in range(1, top + 1):
        sides = [m for m in range(1, isqrt(top // kappa) + 1) if kappa * m * m > 2]
        for m in sides:
            for n in sides:
                if (kappa * m * m - 2) * (kappa * n * n - 2) <= STAR_REGION_BOUND:
                    out.append(("region", (kappa, m, n)))
    return _dedupe(out)


def k1_mu1_factor_candidates() -> list[int]:
    """n with n⁴ - 16n² - 64 = s², via (n² - 8 + s)(n² - 8 - s) = 128."""
    out = []
    for f in divisors(128):
        e = 128 // f
        if e < f or (e + f) % 2:
            continue
        half = (e + f) // 2  # = |n² - 8|
        for n2 in (8 + half, 8 - half):
            n = is_perfect_square(n2) if n2 > 0 else None
            if n:
                out.append(n)
    return sorted(set(out))


def star_star_candidates() -> list[tuple[str, tuple[int, int, int]]]:
    """Every (k, μ, n), k and n odd, that can possibly solve (**).

    Branches: ``gap`` (gap 2 through 8), ``k1-n1`` and ``k3-n1`` (where
    5kn² - 16 < 0 and the region bound says nothing), ``k1-mu1`` (the
    factorization of 128) and ``region``.
    """
    out = []
    for beta in STAR_STAR_GAPS:
        out.extend(("gap", t) for t in star_star_gap_solutions(beta))

    # k=1, n=1: residual = μ⁴ - 64μ² - 16
    mu_max = isqrt(little_lemma_bound(32, 16) // 2)
    out.extend(("k1-n1", (1, mu, 1)) for mu in range(1, mu_max + 1))

    # k=3, n=1: residual = (9μ²)² - 192μ² - 48
    coef, rhs = scaled_gap_bound(9, 192, 48)
    mu_max = isqrt(rhs // coef)
    out.extend(("k3-n1", (3, mu, 1)) for mu in range(1, mu_max + 1))

    out.extend(("k1-mu1", (1, 1, n)) for n in k1_mu1_factor_candidates() if n % 2)

    # 5kμ² - 4 >= 1 always; 5kn² - 16 >= 1 iff kn² >= 4
    bound = STAR_STAR_REGION_BOUND
    for k in range(1, (bound + 16) // 5 + 1, 2):
        mus = range(1, isqrt((bound + 4) // (5 * k)) + 1)
        ns = [n for n in range(1, isqrt((bound + 16) // (5 * k)) + 1, 2) if k * n * n >= 4]
        for mu in mus:
            for n in ns:
                if (5 * k * mu * mu - 4) * (5 * k * n * n - 16) <= bound:
                    out.append(("region", (k, mu, n)))
    return _dedupe(out)


def _dedupe(labelled):
    seen, out = set(), []
    for label, t in labelled:
        if (label, t) not in seen:
            seen.add((label, t))
            out.append((label, t))
    return out


# --- solvers --------------------------------------------------------------


def _test_star(t: tuple[int, int, int]) -> StarSolution | None:
    kappa, m, n = t
    if gcd(m, n) != 1:
        return None
    s = is_perfect_square(star_residual(kappa, m, n))
    return None if s is None else StarSolution(kappa, m, n, s, Variant.STAR)


def _test_star_star(t: tuple[int, int, int]) -> StarSolution | None:
    k, mu, n = t
    if k % 2 == 0 or n % 2 == 0 or gcd(2 * mu, n) != 1:
        return None
    s = is_perfect_square(star_star_residual(k, mu, n))
    return None if s is None else StarSolution(k, mu, n, s, Variant.STAR_STAR)


def solve_star() -> list[StarSolution]:
    """All solutions of (*) with coprime m, n, sorted by (κ, m, n)."""
    found = {sol for _, t in star_candidates() if (sol := _test_star(t))}
    return sorted(found, key=lambda sol: sol.key)


def solve_star_star() -> list[StarSolution]:
    """All solutions of (**) with odd k and gcd(2μ, n) = 1, sorted by (k, μ, n)."""
    found = {sol for _, t in star_star_candidates() if (sol := _test_star_star(t))}
    return sorted(found, key=lambda sol: sol.key)


def to_rhombus(sol: StarSolution) -> RhombusResult:
    """Recover the rhombus side x and partner side a from a solution."""
    if sol.variant is Variant.STAR:
        k = 2 * sol.kappa
        x2 = k * (sol.m ** 2 + sol.n ** 2)
        a = sol.kappa * sol.m * sol.n
    else:
        k, mu = sol.kappa, sol.m
        x2 = k * (4 * mu * mu + sol.n ** 2)
        a = k * mu * sol.n
    x = is_perfect_square(x2)
    if not x:
        raise ContractError(f"x² = {x2} is not a square for {sol}")
    return RhombusResult(x, a, sol)


def reduce_case_b(k: int, m: int, n: int) -> TripleParam:
    """Rewrite a case-B parametrization in case-A form.

    With k = 2κ, u = n + m and v = n - m the same x² and 4a arise as
    ``κ(u² + v²)`` and ``2κuv``; when u and v are both even they are halved
    and κ is multiplied by 4.
    """
    TripleParam(k, m, n, Case.B)  # validates coprimality and n > m
    if k % 2:
        raise ContractError(f"case B forces k even, got k={k}")
    kappa = k // 2
    u, v = n + m, n - m
    g = gcd(u, v)
    if g == 1:
        return TripleParam(kappa, v, u, Case.A)
    if g == 2:
        return TripleParam(4 * kappa, v // 2, u // 2, Case.A)
    raise ContractError(f"gcd(u, v) = {g} for coprime m, n")


def rhombus_solutions() -> list[RhombusResult]:
    """All amicable lattice rhombus pairs, from both equations."""
    return [to_rhombus(sol) for sol in solve_star() + solve_star_star()]
