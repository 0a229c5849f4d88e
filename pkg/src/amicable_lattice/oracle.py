"""Brute-force enumerations used as ground truth for the solvers.

Every search tests the amicability definition directly on each candidate.
Scans over the smallest side can be split across worker processes; the
merged hits are sorted, so results never depend on the worker count.

Rectangle search is provably complete.  For rectangles (x, y) and (a, b)
with ``xy = 2(a+b)`` and ``ab = 2(x+y)``, eliminating b gives

    y(ax - 4) = 2a² + 4x,

so ``ax > 4`` and ``y <= 2a² + 4x``; symmetrically ``b <= 2x² + 4a``.  Using
``x <= y`` and ``a <= b`` the two equations give ``xy·ab <= 16·by``, hence
``ax <= 16``.  Together these cap every side.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .parallelogram import AmicablePair, ParallelogramSpec

RECTANGLE_PRODUCT_BOUND = 16


class Kind(enum.Enum):
    RHOMBUS = "Rhombus"
    RECTANGLE = "Rectangle"
    PARALLELOGRAM = "Parallelogram"


@dataclass
class SearchReport:
    """Sorted, duplicate-free hits of one search, with their certificates."""

    kind: Kind
    bound: int
    pairs: list[AmicablePair]
    elapsed_ms: int = 0
    complete: bool = False
    source: str = "oracle"
    notes: dict = field(default_factory=dict)

    @property
    def hits(self) -> list[tuple[int, int, int, int]]:
        return [p.sides for p in self.pairs]

    def trivial_hits(self) -> list[tuple[int, int, int, int]]:
        return [p.sides for p in self.pairs if p.trivial]

    def nontrivial_hits(self) -> list[tuple[int, int, int, int]]:
        return [p.sides for p in self.pairs if not p.trivial]


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    step, extra = divmod(hi - lo + 1, parts)
    out, start = [], lo
    for i in range(parts):
        end = start + step + (i < extra) - 1
        out.append((start, end))
        start = end + 1
    return out


def _run(kernel_name: str, x_lo: int, x_hi: int, bound: int, backend: str | None):
    return getattr(kernels, kernel_name)(x_lo, x_hi, bound, backend)


def _scan(kernel_name: str, bound: int, jobs: int, backend: str | None) -> list[tuple]:
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1:
        return sorted(_run(kernel_name, 1, bound, bound, backend))
    # several chunks per worker: work per x grows with x
    ranges = _chunks(1, bound, 4 * jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run, kernel_name, lo, hi, bound, backend) for lo, hi in ranges]
        hits = [h for f in futures for h in f.result()]
    return sorted(hits)


def _elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def brute_rhombus(bound: int, jobs: int = 1, backend: str | None = None) -> SearchReport:
    """All amicable rhombus pairs with sides x <= a <= bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    start = time.perf_counter()
    raw = _scan("rhombus_scan", bound, jobs, backend)
    pairs = [AmicablePair(ParallelogramSpec(x, x), ParallelogramSpec(a, a), s1, s2)
             for x, a, s1, s2 in raw]
    return SearchReport(Kind.RHOMBUS, bound, pairs, _elapsed_ms(start),
                        source=f"oracle:{kernels.resolve(backend, bound)}")


def brute_parallelogram(bound: int, jobs: int = 1, backend: str | None = None) -> SearchReport:
    """All amicable parallelogram pairs with every side <= bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    start = time.perf_counter()
    raw = _scan("parallelogram_scan", bound, jobs, backend)
    pairs = [AmicablePair(ParallelogramSpec(x, y), ParallelogramSpec(a, b), s1, s2)
             for x, y, a, b, s1, s2 in raw]
    return SearchReport(Kind.PARALLELOGRAM, bound, pairs, _elapsed_ms(start),
                        source=f"oracle:{kernels.resolve(backend, bound)}")


def rectangle_side_cap(product_bound: int = RECTANGLE_PRODUCT_BOUND) -> int:
    """Largest side any amicable rectangle can have when ``ax <= product_bound``."""
    return max(max(2 * a * a + 4 * x, 2 * x * x + 4 * a)
               for x in range(1, product_bound + 1)
               for a in range(1, product_bound // x + 1))


def brute_rectangles(product_bound: int = RECTANGLE_PRODUCT_BOUND
                     ) -> tuple[list[ParallelogramSpec], SearchReport]:
    """Equable lattice rectangles and all amicable rectangle pairs.

    Pairs are ((x, y), (a, b)) with x <= y, a <= b and (x, y) <= (a, b);
    equable rectangles appear as trivial self-pairs.  Passing a larger
    ``product_bound`` widens the scan beyond what the bound argument needs.
    """
    start = time.perf_counter()
    cap = rectangle_side_cap(product_bound)

    equables = [ParallelogramSpec(x, y)
                for x in range(1, cap + 1)
                for y in range(x, cap + 1)
                if x * y == 2 * (x + y)]

    found = set()
    for x in range(1, product_bound + 1):
        for a in range(1, product_bound // x + 1):
            for y in range(x, cap + 1):
                # b follows from xy = 2(a + b)
                if (x * y) % 2:
                    continue
                b = x * y // 2 - a
                if b < a or b > cap:
                    continue
                if a * b == 2 * (x + y):
                    p, q = sorted([ParallelogramSpec(x, y), ParallelogramSpec(a, b)])
                    found.add((p, q))
    pairs = [AmicablePair(p, q, 0, 0) for p, q in sorted(found)]
    report = SearchReport(Kind.RECTANGLE, cap, pairs, _elapsed_ms(start), complete=True)
    report.notes = {
        "product_bound": product_bound,
        "side_cap": cap,
        "pairs_with_trivial": len(pairs),
        "pairs_without_trivial": len(report.nontrivial_hits()),
    }
    return equables, report
