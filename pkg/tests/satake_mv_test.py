import pytest

from src import tpoly
from src.characters import weyl_kac_character
from src.charseries import Window
from src.errors import NotBelow, NotDominant
from src.gcm_core import dual_datum
from src.satake_mv import (
    chart_stratification,
    coroot_step_witness,
    coroot_sum_closure,
    gamma_count,
    grS_nonempty_window,
    grT_chart_nonempty,
    grT_vanishing,
    interval_summary,
    mv_count_series,
    mv_prediction,
    rho_pairing,
    satake_transform,
    st_nonempty,
    strata_interval,
)
from src.roots import enumerate_roots
from src.selftest import coweight_grid


# ---------------------------------------------------------------------------
# Satake transform and MV predictions
# ---------------------------------------------------------------------------
def test_satake_a1(a1):
    sat = satake_transform(a1, (1,), 2, 2)
    assert sat.shift == 1
    assert [(list(nu), p) for nu, p in sat.terms.items()] == [([1], (1,)), ([0], (1, -1)), ([-1], (1,))]
    assert sat.q_laurent((0,)) == [(1, 1), (0, -1)]
    assert sat.rows()[1] == {"weight": [0], "coeffs": [1, -1], "q_laurent": [[1, 1], [0, -1]]}


def test_satake_needs_dominant_coweight(a2):
    with pytest.raises(NotDominant):
        satake_transform(a2, (1, -1), 2, 2)


def test_mv_prediction_a1(a1):
    prediction = mv_prediction(a1, (1,), (0,), 2)
    assert prediction.dimension == 1
    assert prediction.top_components == 1
    assert prediction.count_series == (1, -1)
    assert prediction.count_laurent() == [(1, 1), (0, -1)]
    assert prediction.to_dict()["count_laurent"] == [[1, 1], [0, -1]]
    assert mv_count_series(a1, (1,), (-1,), 2) == (1,)


def test_mv_prediction_at_the_top(a1):
    prediction = mv_prediction(a1, (1,), (1,), 2)
    assert prediction.dimension == 0
    assert prediction.top_components == 1


def test_mv_prediction_above_lambda(a1):
    with pytest.raises(NotBelow):
        mv_prediction(a1, (1,), (2,), 2)


def test_mv_prediction_a2(a2):
    prediction = mv_prediction(a2, (1, 1), (0, 0), 3)
    assert prediction.dimension == 2
    assert prediction.top_components == 2
    assert prediction.count_series == (2, -1, -1)


# ---------------------------------------------------------------------------
# Gamma counts
# ---------------------------------------------------------------------------
def test_gamma_affine_a1(affine_a1):
    gamma, count = gamma_count(affine_a1, None, (0, 0, 1), (0, 1))
    assert gamma == frozenset({((1, 2), 0)})
    assert count == 1


def test_gamma_a2_longest_element(a2):
    _, count = gamma_count(a2, None, (1, 1), (0, 1, 0))
    assert count == 4
    assert count == rho_pairing(a2, (2, 2))


def test_gamma_of_identity(a2):
    assert gamma_count(a2, None, (1, 1), ()) == (frozenset(), 0)


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------
def test_necessary_conditions(a1, a2):
    assert st_nonempty(a2, (1, 1), (0, 0))
    assert not grT_vanishing(a1, (1,), (2,))
    assert grS_nonempty_window(a1, (1,), (0,), (0,))
    assert not grT_chart_nonempty(a1, (1,), (0,), (0,))


def test_strata_interval(a2):
    assert strata_interval(a2, (0, 0), (2, 2)) == [(2, 2), (1, 2), (2, 1), (1, 1), (0, 0)]


def test_chart_stratification(a1):
    assert chart_stratification(a1, (1,), (0,)) == {0: [(1,)], 1: [(0,)], 2: [(-1,)]}


def test_coroot_step_witness(a2):
    assert coroot_step_witness(a2, (0, 0), (1, 1)) == (0, 1)
    assert coroot_step_witness(a2, (0, 0), (1, 1), dominant_step=True) == (1, 1)
    with pytest.raises(NotBelow):
        coroot_step_witness(a2, (1, 1), (1, 1))


def test_dominant_coroot_step_can_be_imaginary(hyperbolic):
    assert coroot_step_witness(hyperbolic, (-1, -1), (0, 0)) == (0, 1)
    assert coroot_step_witness(hyperbolic, (-1, -1), (0, 0), dominant_step=True) == (1, 1)
    assert interval_summary(hyperbolic, (-1, -1), (0, 0)).witness == (1, 1)


def test_coroot_sum_closure(a2, affine_a1):
    assert coroot_sum_closure(a2) == []
    assert coroot_sum_closure(affine_a1, depth=4) == []


def test_interval_summary(a2):
    summary = interval_summary(a2, (0, 0), (1, 1))
    assert summary.to_dict() == {"interval": [[1, 1], [0, 0]], "witness": [1, 1]}
    assert interval_summary(a2, (1, 1), (1, 1)).witness is None


# ---------------------------------------------------------------------------
# Windows and the t = 0 limit
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("fixture", ["a2", "affine_a1"])
def test_satake_window_monotonicity(request, fixture):
    datum = request.getfixturevalue(fixture)
    for lam in coweight_grid(datum, 3):
        deep = satake_transform(datum, lam, 5, 4)
        shallow = satake_transform(datum, lam, 3, 2)
        assert deep.shift == shallow.shift
        assert deep.terms.truncate(3, 2) == shallow.terms


@pytest.mark.parametrize("fixture, depth", [("affine_a1", 5), ("hyperbolic", 4)])
def test_satake_at_t_zero_is_the_dual_character(request, fixture, depth):
    datum = request.getfixturevalue(fixture)
    dual = dual_datum(datum)
    dual_table = enumerate_roots(dual, depth)
    for lam in coweight_grid(datum, 3):
        sat = satake_transform(datum, lam, depth, 2, dual_table)
        chi = weyl_kac_character(dual, dual_table, lam, Window(lam, depth, 0))
        limit = {b: tpoly.at_zero(p) for b, p in sat.terms.terms.items() if tpoly.at_zero(p)}
        dims = {b: tpoly.at_zero(p) for b, p in chi.terms.items()}
        assert limit == dims, lam
