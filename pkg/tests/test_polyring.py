from fractions import Fraction

import pytest

from artin_morse.polyring import (
    ONE, Q, ZERO, InexactDivision, LaurentPoly, NonCyclotomicFactor, cyclotomic,
    factor_cyclotomic, q_factorial, q_integer, render, render_rational, totient,
)


def test_arithmetic_and_units():
    p = LaurentPoly({-1: 3, 2: 1})
    assert p.low == -1 and p.high == 2
    assert (p * p).coeffs == {-2: 9, 1: 6, 4: 1}
    assert (p - p).is_zero()
    assert Q.is_unit() and not (Q + 1).is_unit()
    assert (Q ** -2) * Q ** 2 == ONE
    with pytest.raises(InexactDivision):
        (Q + 1) ** -1


def test_divmod_aligns_low_terms():
    a = LaurentPoly({3: 1, 0: -1})  # q^3 - 1
    quo, rem = a.divmod(Q - 1)
    assert rem.is_zero() and quo == LaurentPoly({0: 1, 1: 1, 2: 1})
    quo, rem = (Q ** -2 * (Q ** 2 + 1)).divmod(Q + 1)
    assert rem.span() < 1
    assert quo * (Q + 1) + rem == Q ** -2 * (Q ** 2 + 1)
    with pytest.raises(ZeroDivisionError):
        a.divmod(ZERO)


def test_cyclotomic_values():
    assert cyclotomic(1) == Q - 1
    assert str(cyclotomic(6)) == "q^2 - q + 1"
    assert cyclotomic(12).coeffs == {4: 1, 2: -1, 0: 1}
    assert cyclotomic(30).span() == totient(30) == 8


def test_q_integer_factorization():
    assert q_integer(4) == cyclotomic(2) * cyclotomic(4)
    assert factor_cyclotomic(q_factorial(4)).exponents == {2: 2, 3: 1, 4: 1}
    prof = factor_cyclotomic(LaurentPoly({5: -2, 6: -2}))  # -2 q^5 (1 + q)
    assert prof.exponents == {2: 1} and prof.coefficient == -2 and prof.shift == 5
    assert prof.to_poly() == LaurentPoly({5: -2, 6: -2})


def test_factor_rejects_non_cyclotomic():
    with pytest.raises(NonCyclotomicFactor):
        factor_cyclotomic(LaurentPoly({0: 2, 1: 1}))


def test_rendering_is_locale_free():
    assert render(LaurentPoly({2: 1, 1: -1, 0: 1})) == "q^2 - q + 1"
    assert render(LaurentPoly({-1: 3})) == "3*q^-1"
    assert render(LaurentPoly({1: Fraction(-1, 2)})) == "-1/2*q"
    assert render_rational(Fraction(4, 2)) == "2"
    assert render(ZERO) == "0"
