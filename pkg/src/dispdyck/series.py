"""Truncated power series in z over the polynomial ring Q[t].

Everything is exact: coefficients are rationals, never floats.  A TPoly is
a dense polynomial in the marker variable t.  A ZSeries knows its
coefficients for z^0 .. z^{N-1} and nothing beyond; binary operations
truncate to the shorter operand, so a result never pretends to more
precision than its inputs.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from . import backend


class SeriesError(ArithmeticError):
    """Base class for series-arithmetic contract violations."""


class DivisorNotInvertible(SeriesError):
    """Divisor's leading coefficient is zero or has positive t-degree."""


class ValuationMismatch(SeriesError):
    """Divisor vanishes to higher order in z than the dividend."""


class BadConstantTerm(SeriesError):
    """Square root requires constant term exactly 1."""


class NonzeroLowOrder(SeriesError):
    """Downward shift would discard a nonzero coefficient."""


class OutOfOrder(SeriesError):
    """Coefficient index at or beyond the truncation order."""


Scalar = Union[int, Fraction]


def _fracvec(coeffs):
    """Common-denominator integer form of a rational coefficient sequence."""
    fracs = [Fraction(c) for c in coeffs]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = [int(f * den) for f in fracs]
    return nums, den


class TPoly:
    """Polynomial in t with exact rational coefficients, index k = [t^k].

    Canonical form: no trailing zero coefficients (zero is the empty
    sequence), all numerators over a single positive denominator in lowest
    terms.
    """

    __slots__ = ("_nums", "_den")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        nums, den = _fracvec(coeffs)
        self._nums, self._den = backend.impl.poly_norm(nums, den)

    @classmethod
    def _raw(cls, nums, den):
        p = object.__new__(cls)
        p._nums = nums
        p._den = den
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._nums):
            return Fraction(self._nums[k], self._den)
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self._nums) - 1

    @property
    def is_constant(self) -> bool:
        return len(self._nums) <= 1

    def constant_value(self) -> Fraction:
        """The value as a rational; requires t-degree <= 0."""
        if len(self._nums) > 1:
            raise ValueError(f"not a constant polynomial: {self}")
        return Fraction(self._nums[0], self._den) if self._nums else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._nums)

    def __eq__(self, other) -> bool:
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self):
        return hash((self._nums, self._den))

    def __add__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return TPoly._raw(
            *backend.impl.poly_add(self._nums, self._den, other._nums, other._den)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return TPoly._raw(
            *backend.impl.poly_sub(self._nums, self._den, other._nums, other._den)
        )

    def __rsub__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return TPoly._raw(
            *backend.impl.poly_mul(self._nums, self._den, other._nums, other._den)
        )

    __rmul__ = __mul__

    def __neg__(self):
        return TPoly._raw(*backend.impl.poly_scale(self._nums, self._den, -1, 1))

    def scaled(self, r: Scalar) -> "TPoly":
        """Multiply by the rational r."""
        r = Fraction(r)
        return TPoly._raw(
            *backend.impl.poly_scale(self._nums, self._den, r.numerator, r.denominator)
        )

    def eval(self, r: Scalar) -> Fraction:
        """Evaluate at t = r."""
        r = Fraction(r)
        acc = Fraction(0)
        for n in reversed(self._nums):
            acc = acc * r + n
        return acc / self._den

    def dt_at1(self) -> Fraction:
        """Derivative with respect to t, evaluated at t = 1."""
        return Fraction(sum(k * n for k, n in enumerate(self._nums)), self._den)

    def __str__(self) -> str:
        if not self._nums:
            return "0"
        parts = []
        for k, n in enumerate(self._nums):
            if n == 0:
                continue
            c = Fraction(n, self._den)
            if k == 0:
                term = str(c)
            else:
                var = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    term = var
                elif c == -1:
                    term = f"-{var}"
                else:
                    term = f"{c}*{var}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += f" - {term[1:]}"
            else:
                out += f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"TPoly({self})"


TP_ZERO = TPoly()
TP_ONE = TPoly((1,))
T = TPoly((0, 1))


def _as_tpoly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly((x,))
    return NotImplemented


class ZSeries:
    """Power series in z truncated at order N, with TPoly coefficients.

    ``order`` is the number of known coefficients: z^0 .. z^{order-1}.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = []
        for c in coeffs:
            p = _as_tpoly(c)
            if p is NotImplemented:
                raise TypeError(f"bad coefficient {c!r}")
            cs.append(p)
        if not cs:
            raise ValueError("a series needs order >= 1")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "ZSeries":
        cs = [TP_ZERO] * order
        cs[0] = _as_tpoly(value)
        return cls(cs)

    @classmethod
    def zero(cls, order: int) -> "ZSeries":
        return cls([TP_ZERO] * order)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, object]) -> "ZSeries":
        """Polynomial in z: {exponent: coefficient}, truncated at order."""
        cs = [TP_ZERO] * order
        for k, v in terms.items():
            if 0 <= k < order:
                cs[k] = _as_tpoly(v)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[TPoly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> TPoly:
        if not 0 <= n < len(self._coeffs):
            raise OutOfOrder(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def valuation(self):
        """Index of the lowest nonzero coefficient, or None for zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, n: int) -> "ZSeries":
        if n > self.order:
            raise OutOfOrder(f"cannot widen order {self.order} to {n}")
        if n == self.order:
            return self
        return ZSeries(self._coeffs[:n])

    def matches(self, other: "ZSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality to the common (or given) order."""
        n = min(self.order, other.order)
        if upto is not None:
            if upto > n:
                raise OutOfOrder(f"only {n} coefficients available, need {upto}")
            n = upto
        return self._coeffs[:n] == other._coeffs[:n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return ZSeries([a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n])])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return ZSeries([a - b for a, b in zip(self._coeffs[:n], other._coeffs[:n])])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ZSeries([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            p = _as_tpoly(other)
            return ZSeries([c * p for c in self._coeffs])
        if not isinstance(other, ZSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = []
        for k in range(n):
            acc = TP_ZERO
            for i in range(k + 1):
                ai = a[i]
                bj = b[k - i]
                if ai and bj:
                    acc = acc + ai * bj
            out.append(acc)
        return ZSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            r = 1 / Fraction(other)
            return ZSeries([c.scaled(r) for c in self._coeffs])
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self._divide(other)

    def _divide(self, b: "ZSeries") -> "ZSeries":
        """Series division with valuation cancellation.

        The divisor's lowest nonzero coefficient must be a nonzero rational
        constant (t-degree 0), and the dividend must vanish to at least the
        same order in z.  The result's order shrinks by that valuation.
        """
        vb = b.valuation()
        if vb is None:
            raise DivisorNotInvertible("division by the zero series")
        lead = b._coeffs[vb]
        if not lead.is_constant:
            raise DivisorNotInvertible(
                f"leading coefficient {lead} has positive t-degree"
            )
        inv_lead = 1 / lead.constant_value()
        n = min(self.order, b.order)
        va = self.valuation()
        if va is None:
            return ZSeries.zero(n - vb) if n > vb else ZSeries.zero(1)
        if va < vb:
            raise ValuationMismatch(
                f"divisor valuation {vb} exceeds dividend valuation {va}"
            )
        a_sh = self._coeffs[vb:n]
        b_sh = b._coeffs[vb:n]
        m = n - vb
        q: list[TPoly] = []
        for k in range(m):
            acc = a_sh[k]
            for i in range(k):
                qi = q[i]
                bj = b_sh[k - i]
                if qi and bj:
                    acc = acc - qi * bj
            q.append(acc.scaled(inv_lead))
        return ZSeries(q)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = ZSeries.constant(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def sqrt(self) -> "ZSeries":
        """Principal square root; requires constant coefficient exactly 1."""
        if self._coeffs[0] != TP_ONE:
            raise BadConstantTerm(
                f"square root needs constant term 1, got {self._coeffs[0]}"
            )
        n = self.order
        s: list[TPoly] = [TP_ONE]
        half = Fraction(1, 2)
        for k in range(1, n):
            acc = self._coeffs[k]
            for i in range(1, k):
                si = s[i]
                sj = s[k - i]
                if si and sj:
                    acc = acc - si * sj
            s.append(acc.scaled(half))
        return ZSeries(s)

    def shift(self, k: int) -> "ZSeries":
        """Multiply by z^k (k may be negative if the low coefficients vanish).

        Upward shifts keep the order (top coefficients fall off the
        truncation window); downward shifts shrink it.
        """
        if k == 0:
            return self
        n = self.order
        if k > 0:
            return ZSeries([TP_ZERO] * k + list(self._coeffs[: n - k]))
        j = -k
        if j >= n:
            raise NonzeroLowOrder(f"cannot shift order-{n} series down by {j}")
        for i in range(j):
            if self._coeffs[i]:
                raise NonzeroLowOrder(
                    f"nonzero coefficient at z^{i} blocks shift by {k}"
                )
        return ZSeries(self._coeffs[j:])

    def dt_at1(self) -> "ZSeries":
        """d/dt of every coefficient, evaluated at t = 1."""
        return ZSeries([TPoly((c.dt_at1(),)) for c in self._coeffs])

    def eval_t(self, r: Scalar) -> "ZSeries":
        """Substitute t = r in every coefficient."""
        return ZSeries([TPoly((c.eval(r),)) for c in self._coeffs])

    def constants(self) -> list[Fraction]:
        """All coefficients as rationals; requires a t-free series."""
        return [c.constant_value() for c in self._coeffs]

    def _coerce(self, other):
        if isinstance(other, ZSeries):
            return other
        if isinstance(other, (int, Fraction, TPoly)):
            return ZSeries.constant(other, self.order)
        return NotImplemented

    def __repr__(self) -> str:
        shown = min(self.order, 8)
        terms = ", ".join(f"z^{n}: {c}" for n, c in enumerate(self._coeffs[:shown]))
        tail = ", ..." if self.order > shown else ""
        return f"ZSeries(order={self.order}; {terms}{tail})"
