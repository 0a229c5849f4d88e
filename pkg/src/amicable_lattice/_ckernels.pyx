# cython: boundscheck=False, wraparound=False, cdivision=True
"""C scan kernels; see _pykernels.py for the reference semantics.

All intermediates are bounded by bound**4, so a bound of at most
MAX_BOUND keeps every product inside a signed 64-bit integer.
"""
from libc.math cimport sqrt

MAX_BOUND = 30000


cdef inline long long _isqrt(long long n) nogil:
    cdef long long r = <long long> sqrt(<double> n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def _check_bound(long long bound):
    if bound > MAX_BOUND:
        raise OverflowError(f"bound {bound} exceeds the 64-bit safe limit {MAX_BOUND}")


def rhombus_scan(long long x_lo, long long x_hi, long long bound):
    _check_bound(bound)
    cdef long long x, a, x2, a2, r1, r2, s1, s2, a_hi
    hits = []
    if x_lo < 1:
        x_lo = 1
    if x_hi > bound:
        x_hi = bound
    for x in range(x_lo, x_hi + 1):
        x2 = x * x
        a_hi = x2 // 4
        if a_hi > bound:
            a_hi = bound
        for a in range(x, a_hi + 1):
            a2 = a * a
            if a2 < 4 * x:
                continue
            r1 = x2 * x2 - 16 * a2
            s1 = _isqrt(r1)
            if s1 * s1 != r1:
                continue
            r2 = a2 * a2 - 16 * x2
            s2 = _isqrt(r2)
            if s2 * s2 == r2:
                hits.append((x, a, s1, s2))
    return hits


def parallelogram_scan(long long x_lo, long long x_hi, long long bound):
    _check_bound(bound)
    cdef long long x, y, a, b, p, s, half, b_lo, b_hi, a_hi, t, q
    cdef long long r1, r2, s1, s2
    hits = []
    if x_lo < 1:
        x_lo = 1
    if x_hi > bound:
        x_hi = bound
    for x in range(x_lo, x_hi + 1):
        for y in range(x, bound + 1):
            p = x * y
            s = x + y
            half = p // 2
            a_hi = half // 2
            if a_hi > bound:
                a_hi = bound
            for a in range(x, a_hi + 1):
                b_lo = (2 * s + a - 1) // a
                if b_lo < a:
                    b_lo = a
                if a == x and b_lo < y:
                    b_lo = y
                b_hi = half - a
                if b_hi > bound:
                    b_hi = bound
                for b in range(b_lo, b_hi + 1):
                    t = a + b
                    r1 = p * p - 4 * t * t
                    s1 = _isqrt(r1)
                    if s1 * s1 != r1:
                        continue
                    q = a * b
                    r2 = q * q - 4 * s * s
                    s2 = _isqrt(r2)
                    if s2 * s2 == r2:
                        hits.append((x, y, a, b, s1, s2))
    return hits
