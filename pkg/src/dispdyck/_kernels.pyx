# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for rational-polynomial arithmetic.

A polynomial is a pair (nums, den): a tuple of integer numerators over one
shared positive denominator, reduced so that gcd(content, den) == 1 and
with no trailing zero entries.  Numerators stay Python ints, so the
arithmetic is arbitrary precision; the win over the pure fallback is the
removal of interpreter overhead in the convolution loops.
"""

from math import gcd


def poly_norm(list nums, den):
    cdef Py_ssize_t n = len(nums)
    while n and nums[n - 1] == 0:
        nums.pop()
        n -= 1
    if n == 0:
        return (), 1
    cdef Py_ssize_t i
    if den != 1:
        g = den
        for i in range(n):
            g = gcd(g, nums[i])
            if g == 1:
                break
        if g > 1:
            for i in range(n):
                nums[i] = nums[i] // g
            den = den // g
    return tuple(nums), den


def poly_add(an, ad, bn, bd):
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    cdef Py_ssize_t la = len(an), lb = len(bn)
    cdef Py_ssize_t n = la if la > lb else lb
    cdef list nums = [0] * n
    cdef Py_ssize_t i
    for i in range(la):
        nums[i] = an[i] * ma
    for i in range(lb):
        nums[i] = nums[i] + bn[i] * mb
    return poly_norm(nums, ad * ma)


def poly_sub(an, ad, bn, bd):
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    cdef Py_ssize_t la = len(an), lb = len(bn)
    cdef Py_ssize_t n = la if la > lb else lb
    cdef list nums = [0] * n
    cdef Py_ssize_t i
    for i in range(la):
        nums[i] = an[i] * ma
    for i in range(lb):
        nums[i] = nums[i] - bn[i] * mb
    return poly_norm(nums, ad * ma)


def poly_mul(an, ad, bn, bd):
    cdef Py_ssize_t la = len(an), lb = len(bn)
    if la == 0 or lb == 0:
        return (), 1
    cdef list nums = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    for i in range(la):
        x = an[i]
        if x:
            for j in range(lb):
                nums[i + j] = nums[i + j] + x * bn[j]
    return poly_norm(nums, ad * bd)


def poly_scale(an, ad, p, q):
    """Multiply by the rational p/q (q != 0)."""
    cdef Py_ssize_t la = len(an)
    if p == 0 or la == 0:
        return (), 1
    if q < 0:
        p, q = -p, -q
    cdef list nums = [0] * la
    cdef Py_ssize_t i
    for i in range(la):
        nums[i] = an[i] * p
    return poly_norm(nums, ad * q)
