import pytest

from src import tpoly
from src.charseries import (
    CharacterSeries,
    Window,
    apply_J,
    geometric_factor,
    invert,
    monomial,
    multiply,
    one,
    product,
    times_factor,
    zero_weight,
)
from src.errors import (
    NonUnitLeadingTerm,
    NotStrictlyDominant,
    OutOfWindow,
    WindowError,
    WindowMismatch,
)


def test_window_validation():
    with pytest.raises(WindowError):
        Window((0,), -1, 2)
    assert Window([1], 2, 2).base == (1,)


def test_terms_deeper_than_window_are_dropped(a1):
    series = CharacterSeries(a1, Window((0,), 1, 3), {(0,): (1,), (1,): (2,), (2,): (5,)})
    assert dict(series.terms) == {(0,): (1,), (1,): (2,)}


def test_terms_above_base_are_rejected(a1):
    with pytest.raises(OutOfWindow):
        CharacterSeries(a1, Window((0,), 2, 2), {(-1,): (1,)})


def test_coefficient_by_weight(a2):
    window = Window((1, 1), 2, 2)
    series = monomial(a2, window, (0, 0), (1, -1))
    assert series.coefficient((0, 0)) == (1, -1)
    assert series.coefficient((1, 1)) == tpoly.ZERO
    with pytest.raises(OutOfWindow):
        series.coefficient((1, 0))
    with pytest.raises(OutOfWindow):
        series.coefficient((-1, -1))


def test_addition_needs_same_base(a1):
    f = one(a1, 2, 2)
    g = monomial(a1, Window((2,), 2, 2), (2,))
    with pytest.raises(WindowMismatch):
        f + g
    assert (f + f).coefficient((0,)) == (2,)
    assert (f - f).is_zero()


def test_geometric_factor_with_t(a1):
    window = Window((0,), 3, 2)
    factor = geometric_factor(a1, window, (1,), mult=1, with_t=True, exponent=-1)
    assert dict(factor.terms) == {(0,): (1,), (1,): (0, 1), (2,): (0, 0, 1)}


def test_binomial_factor(affine_a2):
    window = Window(zero_weight(affine_a2), 6, 6)
    factor = geometric_factor(affine_a2, window, (1, 1, 1), mult=2, with_t=True, exponent=1)
    assert dict(factor.terms) == {(0, 0, 0): (1,), (1, 1, 1): (0, -2), (2, 2, 2): (0, 0, 1)}


def test_multiply_and_invert(a1):
    window = Window((0,), 4, 0)
    one_minus = monomial(a1, window, (0,)) - monomial(a1, window, (-2,))
    inverse = invert(one_minus)
    assert all(inverse.coefficient_at((k,)) == (1,) for k in range(5))
    assert multiply(one_minus, inverse) == one(a1, 4, 0)


def test_invert_moves_the_base(a1):
    f = monomial(a1, Window((2,), 2, 2), (2,))
    inv = invert(f)
    assert inv.base == (-2,)
    assert inv.coefficient((-2,)) == (1,)


def test_invert_needs_unit_lead(a1):
    f = monomial(a1, Window((0,), 2, 2), (0,), (2,))
    with pytest.raises(NonUnitLeadingTerm):
        invert(f)


def test_times_factor_and_product(a2):
    series = one(a2, 2, 2)
    series = times_factor(series, (1, 0), 1, with_t=True, exponent=1)
    series = times_factor(series, (0, 1), 1, with_t=True, exponent=1)
    assert series.coefficient_at((1, 1)) == (0, 0, 1)
    assert product([one(a2, 2, 2), series]) == series


def test_apply_J_on_a1_monomial(a1):
    rho = a1.rho
    result = apply_J(a1, rho, monomial(a1, Window(rho, 2, 0), rho))
    assert dict(result.terms) == {(0,): (1,), (1,): (-1,)}


def test_apply_J_checks_base_and_dominance(a1):
    with pytest.raises(WindowMismatch):
        apply_J(a1, (3,), monomial(a1, Window((1,), 2, 0), (1,)))
    with pytest.raises(NotStrictlyDominant):
        apply_J(a1, (0,), monomial(a1, Window((0,), 2, 0), (0,)))


def test_shift_raise_rebase(a1):
    series = CharacterSeries(a1, Window((0,), 2, 1), {(0,): (1,), (1,): (0, 1)})
    shifted = series.shift_weight((2,))
    assert shifted.base == (2,)
    assert shifted.coefficient((0,)) == (0, 1)
    raised = CharacterSeries(a1, Window((0,), 2, 1), {(1,): (1,)}).raise_by((1,))
    assert raised.coefficient((0,)) == (1,)
    with pytest.raises(OutOfWindow):
        series.raise_by((1,))
    rebased = series.rebase((2,))
    assert rebased.window.depth == 3
    assert rebased.coefficient_at((2,)) == (0, 1)
    with pytest.raises(WindowMismatch):
        series.rebase((1,))


def test_truncate_and_t_zero(a1):
    series = CharacterSeries(a1, Window((0,), 2, 2), {(0,): (1, 1, 1), (2,): (0, 1)})
    small = series.truncate(1, 1)
    assert dict(small.terms) == {(0,): (1, 1)}
    assert dict(series.at_t_zero().terms) == {(0,): (1,)}
    with pytest.raises(WindowMismatch):
        series.truncate(3, 2)


def test_rows_use_weights(a1):
    series = CharacterSeries(a1, Window((2,), 2, 1), {(0,): (1,), (1,): (1, -1)})
    rows = series.to_rows()
    assert rows == [{"weight": [2], "coeffs": [1]}, {"weight": [0], "coeffs": [1, -1]}]
    assert CharacterSeries.from_rows(a1, Window((2,), 2, 1), rows) == series
