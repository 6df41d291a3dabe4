"""Property-based checks of the series ring, plus backend equivalence."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dispdyck import backend
from dispdyck import _pykernels
from dispdyck.series import TP_ONE, TPoly, ZSeries

rationals = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=6
)

tpolys = st.lists(rationals, min_size=0, max_size=4).map(TPoly)


def zseries(order_min=1, order_max=6):
    return st.integers(order_min, order_max).flatmap(
        lambda n: st.lists(tpolys, min_size=n, max_size=n).map(ZSeries)
    )


@given(zseries(), zseries())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(zseries(), zseries())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(zseries(), zseries(), zseries())
def test_mul_distributes(a, b, c):
    n = min(a.order, b.order, c.order)
    assert (a * (b + c)).truncate(n) == (a * b + a * c).truncate(n)


@given(zseries(), zseries(), rationals.filter(lambda r: r != 0))
def test_division_round_trip(a, b_rest, lead):
    """(a/b) * b == a to the common order, for invertible b."""
    b = ZSeries([TPoly((lead,))] + list(b_rest.coeffs))
    q = a / b
    n = q.order
    assert (q * b).truncate(n) == a.truncate(n)


@given(zseries(order_min=1, order_max=6))
def test_sqrt_square_round_trip(rest):
    a = ZSeries([TP_ONE] + list(rest.coeffs))
    s = a.sqrt()
    assert s * s == a


@given(zseries(), zseries(), st.fractions(max_denominator=4))
def test_eval_t_is_a_ring_homomorphism(a, b, r):
    assert (a + b).eval_t(r) == a.eval_t(r) + b.eval_t(r)
    assert (a * b).eval_t(r) == a.eval_t(r) * b.eval_t(r)


@given(zseries())
def test_shift_round_trip(a):
    if a.order > 1:
        assert a.shift(1).shift(-1) == a.truncate(a.order - 1)


@settings(max_examples=200)
@given(
    st.lists(st.integers(-50, 50), max_size=6),
    st.integers(1, 30),
    st.lists(st.integers(-50, 50), max_size=6),
    st.integers(1, 30),
)
def test_backends_agree(an, ad, bn, bd):
    """The compiled kernels and the pure fallback compute identical results."""
    if backend.name != "compiled":
        return
    ka = backend.impl.poly_norm(list(an), ad)
    kb = backend.impl.poly_norm(list(bn), bd)
    pa = _pykernels.poly_norm(list(an), ad)
    pb = _pykernels.poly_norm(list(bn), bd)
    assert ka == pa and kb == pb
    for op in ("poly_add", "poly_sub", "poly_mul"):
        left = getattr(backend.impl, op)(ka[0], ka[1], kb[0], kb[1])
        right = getattr(_pykernels, op)(pa[0], pa[1], pb[0], pb[1])
        assert left == right
    assert backend.impl.poly_scale(ka[0], ka[1], 3, -2) == _pykernels.poly_scale(
        pa[0], pa[1], 3, -2
    )
