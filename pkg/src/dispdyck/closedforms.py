"""Kernel-method closed forms for the four statistics, as truncated series.

Each formula is evaluated exactly as displayed (no algebraic
pre-simplification), so a transcription slip shows up as a coefficient
mismatch in the cross-checks instead of being masked.  Functions take a
public order N and compute internally with a little padding, because each
valuation-cancelling division costs a coefficient of precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .paths import Statistic as Family
from .series import T, TPoly, ZSeries

_PAD = 8


class UnsupportedFamily(ValueError):
    """The requested closed form is not defined for this family."""


class UnsupportedLayer(ValueError):
    """The requested layer has no closed-form level extraction."""


def _zp(order: int, terms) -> ZSeries:
    return ZSeries.from_terms(order, terms)


def central_binomial(n: int) -> Fraction:
    """Number of dispersed Dyck paths of length n: C(n, floor(n/2))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Fraction(comb(n, n // 2))


def _radicand(fam: Family, order: int) -> ZSeries:
    t = T
    if fam is Family.ASCENT1:
        return _zp(order, {0: 1, 2: -2 * (t + 1), 4: -((t + 3) * (1 - t))})
    if fam is Family.DESCENT1:
        return _zp(order, {0: 1, 2: -2 * t - 2, 4: t * t + 2 * t - 3})
    if fam is Family.VALLEY0:
        return _zp(order, {0: 1, 2: -4})
    if fam is Family.UUDD4:
        return _zp(order, {0: 1, 2: -4, 4: 2 - 2 * t, 8: (1 - t) * (1 - t)})
    raise UnsupportedFamily(fam)


def w_series(fam: Family, order: int) -> ZSeries:
    """The square root that the kernel roots are built from."""
    return _radicand(fam, order + _PAD).sqrt().truncate(order)


def r2_series(fam: Family, order: int) -> ZSeries:
    """The small kernel root (a power series with valuation 1 in z)."""
    m = order + _PAD
    t = T
    w = _radicand(fam, m).sqrt()
    if fam is Family.ASCENT1:
        a = _zp(m, {0: 1, 2: 1 - t})
        r2 = (a - w) / (2 * a.shift(1))
    elif fam is Family.DESCENT1:
        r2 = (_zp(m, {0: 1, 2: 1 - t}) - w) / _zp(m, {1: 2})
    elif fam is Family.VALLEY0:
        r2 = (1 - w) / _zp(m, {1: 2})
    elif fam is Family.UUDD4:
        r2 = (_zp(m, {0: 1, 4: 1 - t}) - w) / _zp(m, {1: 2})
    else:
        raise UnsupportedFamily(fam)
    return r2.truncate(order)


def kernel_quadratic(fam: Family, order: int) -> tuple[ZSeries, ZSeries, ZSeries]:
    """Coefficients (c0, c1, c2) of the kernel polynomial c2 u^2 + c1 u + c0.

    The small root annihilates it: c0 + c1 r2 + c2 r2^2 = 0.
    """
    t = T
    if fam is Family.ASCENT1:
        return (
            _zp(order, {1: -1}),
            _zp(order, {0: 1, 2: 1 - t}),
            _zp(order, {1: -1, 3: t - 1}),
        )
    if fam is Family.DESCENT1:
        return (
            _zp(order, {1: 1, 3: 1 - t}),
            _zp(order, {0: -1, 2: t - 1}),
            _zp(order, {1: 1}),
        )
    if fam is Family.VALLEY0:
        return (_zp(order, {1: -1}), _zp(order, {0: 1}), _zp(order, {1: -1}))
    if fam is Family.UUDD4:
        return (
            _zp(order, {1: 1}),
            _zp(order, {0: -1, 4: t - 1}),
            _zp(order, {1: 1}),
        )
    raise UnsupportedFamily(fam)


def _valley0_f1(order: int) -> ZSeries:
    m = order + _PAD
    t = T
    r2 = r2_series(Family.VALLEY0, m)
    den = _zp(m, {0: 1, 1: -1, 2: -t, 3: t - 1}) + _zp(m, {1: -1, 2: 1}) * r2
    return (_zp(m, {1: 1}) / den).truncate(order)


def _descent1_parts(order: int) -> dict[str, ZSeries]:
    """The boundary quantities of the 1-descent system (for cross-checks)."""
    m = order + _PAD
    t = T
    r2 = r2_series(Family.DESCENT1, m)
    f1 = _zp(m, {1: 1}) / (_zp(m, {0: 1, 1: -1, 2: 1 - t}) - r2.shift(1))
    g1 = (r2.shift(1) * f1) / _zp(m, {0: 1, 2: 1 - t})
    g1h1 = ((r2 - _zp(m, {1: 1})) * f1) / _zp(m, {1: 1})
    one_minus_z = _zp(m, {0: 1, 1: -1})
    f0 = ZSeries.constant(1, m) / one_minus_z
    g0 = f1.shift(1) / one_minus_z
    h0 = g1h1.shift(1) / one_minus_z
    total = f0 + t * g0 + h0
    return {
        "f1": f1.truncate(order),
        "g1": g1.truncate(order),
        "g1h1": g1h1.truncate(order),
        "f0": f0.truncate(order),
        "g0": g0.truncate(order),
        "h0": h0.truncate(order),
        "total": total.truncate(order),
    }


def uudd4_f1(order: int) -> ZSeries:
    """The level-1 boundary series of the UUDD system, from its f0 relation."""
    m = order + _PAD
    f0 = _cf_closed_padded(Family.UUDD4, m)
    num = -(1 + f0.shift(1) + f0.shift(2) + (T * f0).shift(4) - f0)
    return (num / _zp(num.order, {1: 1})).truncate(order)


def _cf_closed_padded(fam: Family, m: int) -> ZSeries:
    t = T
    w = _radicand(fam, m).sqrt()
    if fam is Family.ASCENT1:
        num = _zp(m, {0: -1, 1: 2, 2: t - 1}) + w
        den = _zp(m, {1: 2, 2: -4, 3: 2 - 2 * t, 4: 2 * t - 2})
        return num / den
    if fam is Family.DESCENT1:
        r2 = r2_series(fam, m)
        return (1 - r2) / _zp(m, {0: 1, 1: -2, 2: 1 - t, 3: t - 1})
    if fam is Family.VALLEY0:
        f1 = _valley0_f1(m)
        return (1 + f1.shift(2)) / _zp(f1.order, {0: 1, 1: -1})
    if fam is Family.UUDD4:
        num = _zp(m, {0: -1, 1: 2, 4: t - 1}) + w
        den = _zp(m, {1: 2, 2: -4, 5: 2 - 2 * t})
        return num / den
    raise UnsupportedFamily(fam)


def cf_closed(fam: Family, order: int) -> ZSeries:
    """Bivariate series of closed paths with the statistic marked by t.

    For VALLEY0 this is the f0 convention: the empty path plus closed paths
    ending in H (a closed path ending in D lives one automaton layer over).
    """
    return _cf_closed_padded(fam, order + 2 * _PAD).truncate(order)


def _marks_closed_printed(fam: Family, order: int) -> ZSeries:
    """The displayed formula for total marks over closed paths."""
    m = order + _PAD
    s = _zp(m, {0: 1, 2: -4}).sqrt()
    if fam in (Family.ASCENT1, Family.DESCENT1):
        # The 1-descent total coincides with the 1-ascent one (reversal).
        p32 = _zp(m, {0: 1, 2: -4}) * s
        out = (
            _zp(m, {2: 1}) / _zp(m, {0: 2, 1: -4})
            + _zp(m, {2: 1}) / (2 * p32)
            + _zp(m, {3: 1}) / p32
        )
    elif fam is Family.VALLEY0:
        num = _zp(m, {0: 1, 2: -3}) + _zp(m, {0: -1, 2: 1}) * s
        out = num / _zp(m, {1: 2, 2: -4})
    elif fam is Family.UUDD4:
        out = _zp(m, {4: 1}) / (_zp(m, {0: 1, 1: -2}) * s)
    else:
        raise UnsupportedFamily(fam)
    return out.truncate(order)


def cf_total_marks_closed(fam: Family, order: int) -> ZSeries:
    """Total statistic count over closed paths, by length.

    Computed both as the t-derivative at 1 of the bivariate closed form and
    via the displayed univariate formula; the two routes must agree.
    """
    via_dt = cf_closed(fam, order).dt_at1()
    printed = _marks_closed_printed(fam, order)
    if via_dt != printed:
        raise ArithmeticError(
            f"closed-marks routes disagree for {fam.value}; transcription bug"
        )
    return via_dt


def cf_total_marks_meander(fam: Family, order: int) -> ZSeries:
    """Total statistic count over paths with arbitrary endpoint.

    Only the 1-ascent and 1-descent systems have a displayed formula.
    """
    m = order + _PAD
    if fam is Family.ASCENT1:
        out = _zp(m, {1: 1, 2: -2, 3: 1}) / _zp(m, {0: 1, 1: -4, 2: 4})
    elif fam is Family.DESCENT1:
        s = _zp(m, {0: 1, 2: -4}).sqrt()
        num = _zp(m, {2: 1}) + _zp(m, {2: 1}) * s
        out = num / _zp(m, {0: 2, 1: -8, 2: 8})
    else:
        raise UnsupportedFamily(
            f"no meander-marks closed form for {fam.value}"
        )
    return out.truncate(order)


def cf_level(fam: Family, layer: str, j: int, order: int) -> ZSeries:
    """Closed-form series of paths ending at level j in the given layer.

    Defined for the 1-ascent system (layers F, G, H) and the valley system
    (layer F); the coefficient of u^{j-1} is extracted from the post-kernel
    geometric series.
    """
    if j < 1:
        raise ValueError("level j must be >= 1")
    m = order + 2 * _PAD
    if fam is Family.VALLEY0:
        if layer != "F":
            raise UnsupportedLayer(f"valley system has no layer {layer!r} levels")
        f1 = _valley0_f1(m)
        r2 = r2_series(fam, m).truncate(f1.order)
        return (f1 * r2 ** (j - 1)).truncate(order)
    if fam is not Family.ASCENT1:
        raise UnsupportedFamily(f"no level closed forms for {fam.value}")
    if layer not in ("F", "G", "H"):
        raise UnsupportedLayer(f"unknown layer {layer!r}")
    r2 = r2_series(fam, m)
    f0 = _cf_closed_padded(fam, m)
    k = min(r2.order, f0.order)
    r2 = r2.truncate(k)
    f0 = f0.truncate(k)
    base = 1 - r2.shift(1)  # 1 - z*r2
    binv = ZSeries.constant(1, base.order) / base
    bf0 = base * f0
    if layer == "F":
        out = (r2 * f0).shift(j + 1) * binv**j
    elif layer == "G":
        if j == 1:
            out = bf0.shift(1) * binv
        else:
            out = bf0.shift(j) * binv**j - bf0.shift(j) * binv ** (j - 1)
    else:  # H
        if j == 1:
            return ZSeries.zero(order)
        out = bf0.shift(j) * binv ** (j - 1)
    return out.truncate(order)
