from fractions import Fraction

import pytest

from src import tpoly
from src.errors import NonUnitLeadingTerm


def test_trim_drops_trailing_zeros():
    assert tpoly.trim([1, 0, 2, 0, 0]) == (1, 0, 2)
    assert tpoly.trim([0, 0]) == tpoly.ZERO


def test_mul_truncates_at_tdeg():
    one_minus_t = (1, -1)
    assert tpoly.mul(one_minus_t, one_minus_t, 5) == (1, -2, 1)
    assert tpoly.mul(one_minus_t, one_minus_t, 1) == (1, -2)
    assert tpoly.mul(tpoly.ZERO, one_minus_t, 3) == tpoly.ZERO


def test_inverse_of_one_minus_t_is_geometric():
    assert tpoly.inverse((1, -1), 4) == (1, 1, 1, 1, 1)
    assert tpoly.mul(tpoly.inverse((1, 2, 3), 6), (1, 2, 3), 6) == tpoly.ONE


def test_inverse_accepts_minus_one_leading():
    inv = tpoly.inverse((-1, 1), 3)
    assert tpoly.mul(inv, (-1, 1), 3) == tpoly.ONE


def test_inverse_rejects_non_unit():
    with pytest.raises(NonUnitLeadingTerm):
        tpoly.inverse((2, 1), 3)
    with pytest.raises(NonUnitLeadingTerm):
        tpoly.inverse(tpoly.ZERO, 3)


def test_power_negative_exponent():
    assert tpoly.power((1, -1), -2, 3) == (1, 2, 3, 4)
    assert tpoly.power((1, 1), 0, 3) == tpoly.ONE


def test_power_positive_exponent():
    assert tpoly.power((1, 1), 3, 5) == (1, 3, 3, 1)
    assert tpoly.power((1, 1), 3, 1) == (1, 3)
    assert tpoly.power(tpoly.ZERO, 2, 3) == tpoly.ZERO
    assert tpoly.power((1, -1), -30, 3) == (1, 30, 465, 4960)


def test_inverse_minus_one_leading_values():
    assert tpoly.inverse((-1, 1), 3) == (-1, -1, -1, -1)


def test_coefficients_stay_exact_past_machine_integers():
    inv = tpoly.inverse((1, -2), 70)
    assert len(inv) == 71
    assert inv[70] == 2 ** 70
    assert tpoly.power((1, 1), 40, 40)[20] == 137846528820


def test_shift_and_monomial():
    assert tpoly.shift((1, 1), 2, 3) == (0, 0, 1, 1)
    assert tpoly.shift((1, 1), 3, 3) == (0, 0, 0, 1)
    assert tpoly.monomial(2, -3) == (0, 0, -3)
    assert tpoly.monomial(5, 0) == tpoly.ZERO


def test_negate_variable_and_evaluate():
    p = (1, 2, 3)
    assert tpoly.negate_variable(p) == (1, -2, 3)
    assert tpoly.evaluate(p, 2) == 17
    assert tpoly.evaluate(p, Fraction(1, 2)) == Fraction(11, 4)


def test_degree_and_at_zero():
    assert tpoly.degree(tpoly.ZERO) == -1
    assert tpoly.degree((0, 0, 5)) == 2
    assert tpoly.at_zero(tpoly.ZERO) == 0
    assert tpoly.at_zero((-1, 4)) == -1


def test_to_str():
    assert tpoly.to_str((1, -1)) == "1 - t"
    assert tpoly.to_str((0, -1, 2)) == "-t + 2t^2"
    assert tpoly.to_str(tpoly.ZERO) == "0"
