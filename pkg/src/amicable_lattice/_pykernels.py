"""Pure-Python scan kernels.

Reference implementations of the hot loops; ``_ckernels.pyx`` mirrors them
line for line with C integers.  Both take an inclusive range of the smallest
side ``x`` so a scan can be split across workers.
"""
from math import isqrt


def rhombus_scan(x_lo, x_hi, bound):
    """Hits (x, a, s1, s2) with x_lo <= x <= x_hi, x <= a <= bound,
    s1² = x⁴ - 16a² and s2² = a⁴ - 16x²."""
    hits = []
    for x in range(max(x_lo, 1), min(x_hi, bound) + 1):
        x2 = x * x
        for a in range(x, min(bound, x2 // 4) + 1):
            a2 = a * a
            if a2 < 4 * x:
                continue
            r1 = x2 * x2 - 16 * a2
            s1 = isqrt(r1)
            if s1 * s1 != r1:
                continue
            r2 = a2 * a2 - 16 * x2
            s2 = isqrt(r2)
            if s2 * s2 == r2:
                hits.append((x, a, s1, s2))
    return hits


def parallelogram_scan(x_lo, x_hi, bound):
    """Hits (x, y, a, b, s1, s2) with x <= y, a <= b, (x, y) <= (a, b),
    all sides <= bound, s1² = x²y² - 4(a+b)², s2² = a²b² - 4(x+y)²."""
    hits = []
    for x in range(max(x_lo, 1), min(x_hi, bound) + 1):
        for y in range(x, bound + 1):
            p = x * y
            s = x + y
            half = p // 2  # a + b <= xy/2
            for a in range(x, min(bound, half // 2) + 1):
                b_lo = max(a, -(-2 * s // a))  # ab >= 2(x+y)
                if a == x and b_lo < y:
                    b_lo = y
                for b in range(b_lo, min(bound, half - a) + 1):
                    t = a + b
                    r1 = p * p - 4 * t * t
                    s1 = isqrt(r1)
                    if s1 * s1 != r1:
                        continue
                    q = a * b
                    r2 = q * q - 4 * s * s
                    s2 = isqrt(r2)
                    if s2 * s2 == r2:
                        hits.append((x, y, a, b, s1, s2))
    return hits
