from fractions import Fraction

import pytest

from dispdyck.series import (
    BadConstantTerm,
    DivisorNotInvertible,
    NonzeroLowOrder,
    OutOfOrder,
    T,
    TPoly,
    ValuationMismatch,
    ZSeries,
)


def zp(order, terms):
    return ZSeries.from_terms(order, terms)


class TestTPoly:
    def test_canonical_no_trailing_zeros(self):
        assert TPoly((1, 2, 0, 0)) == TPoly((1, 2))
        assert TPoly((0, 0)) == TPoly()
        assert not TPoly((0,))

    def test_lowest_terms(self):
        p = TPoly((Fraction(2, 4), Fraction(6, 4)))
        assert p.coeffs == (Fraction(1, 2), Fraction(3, 2))

    def test_arithmetic(self):
        assert (T + 1) * (T - 1) == T * T - 1
        assert (T + 3) * (1 - T) == TPoly((3, -2, -1))
        assert -(T + 1) == TPoly((-1, -1))
        assert (T + 1).scaled(Fraction(1, 2)) == TPoly((Fraction(1, 2), Fraction(1, 2)))

    def test_eval_and_derivative(self):
        p = TPoly((3, 4, 3))  # 3 + 4t + 3t^2
        assert p.eval(1) == 10
        assert p.eval(0) == 3
        assert p.dt_at1() == 10  # 3*2 + 4
        assert TPoly((7,)).dt_at1() == 0

    def test_str(self):
        assert str(TPoly((3, 4, 3))) == "3 + 4*t + 3*t^2"
        assert str(TPoly()) == "0"
        assert str(TPoly((0, 1))) == "t"
        assert str(TPoly((-1, Fraction(1, 2)))) == "-1 + 1/2*t"
        assert str(TPoly((1, -1))) == "1 - t"

    def test_constant_value(self):
        assert TPoly((Fraction(5, 3),)).constant_value() == Fraction(5, 3)
        with pytest.raises(ValueError):
            T.constant_value()


class TestAdd:
    def test_cancellation(self):
        assert zp(4, {0: 1, 1: 1}) + zp(4, {0: 1, 1: -1}) == ZSeries.constant(2, 4)

    def test_identity(self):
        a = zp(4, {0: 1, 2: T})
        assert a + ZSeries.zero(4) == a

    def test_tpoly_coefficients(self):
        assert zp(4, {1: T}) + zp(4, {1: 1}) == zp(4, {1: T + 1})

    def test_truncates_to_min_order(self):
        assert (zp(6, {0: 1}) + zp(4, {0: 1})).order == 4


class TestMul:
    def test_difference_of_squares(self):
        assert zp(5, {0: 1, 1: 1}) * zp(5, {0: 1, 1: -1}) == zp(5, {0: 1, 2: -1})

    def test_identity(self):
        a = zp(5, {0: 1, 1: T, 3: 2})
        assert a * ZSeries.constant(1, 5) == a

    def test_square(self):
        assert zp(3, {0: 1, 1: -2}) ** 2 == zp(3, {0: 1, 1: -4, 2: 4})


class TestDiv:
    def test_geometric(self):
        q = ZSeries.constant(1, 6) / zp(6, {0: 1, 1: -1})
        assert q == zp(6, {k: 1 for k in range(6)})

    def test_geometric_coeffs(self):
        q = ZSeries.constant(1, 8) / zp(8, {0: 1, 1: -1})
        assert all(c == TPoly((1,)) for c in q.coeffs)

    def test_valuation_cancellation(self):
        q = zp(5, {1: 1, 2: -1}) / zp(5, {1: 1})
        assert q == zp(4, {0: 1, 1: -1})
        assert q.order == 4  # order shrinks by the valuation

    def test_divisor_with_t_leading_term(self):
        with pytest.raises(DivisorNotInvertible):
            ZSeries.constant(1, 4) / zp(4, {0: T})

    def test_zero_divisor(self):
        with pytest.raises(DivisorNotInvertible):
            ZSeries.constant(1, 4) / ZSeries.zero(4)

    def test_valuation_mismatch(self):
        with pytest.raises(ValuationMismatch):
            ZSeries.constant(1, 4) / zp(4, {1: 1})

    def test_scalar_division(self):
        assert zp(3, {1: 3}) / 3 == zp(3, {1: 1})


class TestSqrt:
    def test_sqrt_of_one(self):
        assert ZSeries.constant(1, 6).sqrt() == ZSeries.constant(1, 6)

    def test_square_check_oracle(self):
        # independent oracle: the square of the output must reproduce the input
        a = zp(12, {0: 1, 2: -4})
        s = a.sqrt()
        assert s * s == a
        # first coefficients, certified by the square-check above
        assert [c.constant_value() for c in s.coeffs[:9]] == [
            1, 0, -2, 0, -2, 0, -4, 0, -10,
        ]

    def test_bivariate_square_check(self):
        t = T
        a = zp(10, {0: 1, 2: -2 * (t + 1), 4: -((t + 3) * (1 - t))})
        s = a.sqrt()
        assert s * s == a

    def test_t1_specialization_collapses(self):
        t = T
        w = zp(10, {0: 1, 2: -2 * (t + 1), 4: -((t + 3) * (1 - t))}).sqrt()
        assert w.eval_t(1) == zp(10, {0: 1, 2: -4}).sqrt()

    def test_bad_constant_term(self):
        with pytest.raises(BadConstantTerm):
            zp(4, {0: 2}).sqrt()
        with pytest.raises(BadConstantTerm):
            zp(4, {1: 1}).sqrt()


class TestShift:
    def test_up(self):
        assert zp(4, {0: 1, 1: 1}).shift(1) == zp(4, {1: 1, 2: 1})

    def test_down(self):
        s = zp(4, {1: 1, 2: 1}).shift(-1)
        assert s == zp(3, {0: 1, 1: 1})
        assert s.order == 3

    def test_down_blocked(self):
        with pytest.raises(NonzeroLowOrder):
            zp(4, {0: 1, 1: 1}).shift(-1)


class TestDtAt1:
    def test_paper_coefficient(self):
        s = zp(8, {5: TPoly((3, 4, 3))})
        assert s.dt_at1() == zp(8, {5: 10})

    def test_t_free_series(self):
        assert zp(5, {0: 1, 3: 2}).dt_at1() == ZSeries.zero(5)

    def test_linear_marker(self):
        assert zp(6, {4: T + 5}).dt_at1() == zp(6, {4: 1})


class TestEvalT:
    def test_at_one(self):
        assert zp(4, {2: T + 1}).eval_t(1) == zp(4, {2: 2})

    def test_rational_point(self):
        s = zp(3, {1: TPoly((1, 2))}).eval_t(Fraction(1, 2))
        assert s.coeff(1).constant_value() == 2


class TestCoeff:
    def test_basic(self):
        assert ZSeries.constant(1, 8).coeff(0) == TPoly((1,))
        assert ZSeries.constant(1, 8).coeff(5) == TPoly()

    def test_out_of_order(self):
        with pytest.raises(OutOfOrder):
            ZSeries.constant(1, 4).coeff(4)

    def test_truncate_cannot_widen(self):
        with pytest.raises(OutOfOrder):
            ZSeries.constant(1, 4).truncate(5)
