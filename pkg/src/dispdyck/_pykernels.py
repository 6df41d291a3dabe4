"""Pure-Python fallback for the rational-polynomial kernels.

Same contract as the compiled module ``dispdyck._kernels``.  A polynomial is
a pair ``(nums, den)``: a tuple of integer numerators over one shared
positive denominator, reduced so that gcd(content, den) == 1 and with no
trailing zero entries (the zero polynomial is ``((), 1)``).
"""

from math import gcd


def poly_norm(nums, den):
    """Canonicalize a (nums, den) pair.  ``nums`` is a list we may mutate."""
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den != 1:
        g = den
        for x in nums:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
    return tuple(nums), den


def poly_add(an, ad, bn, bd):
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    n = max(len(an), len(bn))
    nums = [0] * n
    for i, x in enumerate(an):
        nums[i] = x * ma
    for i, y in enumerate(bn):
        nums[i] += y * mb
    return poly_norm(nums, ad * ma)


def poly_sub(an, ad, bn, bd):
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    n = max(len(an), len(bn))
    nums = [0] * n
    for i, x in enumerate(an):
        nums[i] = x * ma
    for i, y in enumerate(bn):
        nums[i] -= y * mb
    return poly_norm(nums, ad * ma)


def poly_mul(an, ad, bn, bd):
    if not an or not bn:
        return (), 1
    nums = [0] * (len(an) + len(bn) - 1)
    for i, x in enumerate(an):
        if x:
            for j, y in enumerate(bn):
                nums[i + j] += x * y
    return poly_norm(nums, ad * bd)


def poly_scale(an, ad, p, q):
    """Multiply by the rational p/q (q != 0)."""
    if p == 0 or not an:
        return (), 1
    if q < 0:
        p, q = -p, -q
    return poly_norm([x * p for x in an], ad * q)
