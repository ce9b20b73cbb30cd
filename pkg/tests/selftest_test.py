import pytest

from src.selftest import (
    brute_force_identity,
    coweight_grid,
    datum_settings,
    finite_weyl_group,
    level_settings,
    run_selftest,
    weight_grid,
)


def test_weight_grid(a2, affine_a1):
    assert weight_grid(a2, 4) == [(0, 0), (0, 1), (1, 0), (0, 2)]
    assert weight_grid(affine_a1, 2) == [(0, 0, 0), (0, 1, 0)]


def test_coweight_grid_is_dominant(a2):
    grid = coweight_grid(a2, 3)
    assert grid[0] == (0, 0)
    assert len(set(grid)) == 3


def test_finite_weyl_group_sizes(a1, a2, b2):
    assert len(finite_weyl_group(a1)) == 2
    assert len(finite_weyl_group(a2)) == 6
    assert len(finite_weyl_group(b2)) == 8


def test_brute_force_identity_a2(a2):
    assert brute_force_identity(a2, (1, 1), 3, 3) == []


@pytest.mark.parametrize("suite", ["denominator", "characters", "macdonald", "gamma", "poset"])
def test_single_suites_pass(config, suite):
    report = run_selftest("quick", config, suites=[suite])
    assert report.checks
    assert report.passed, [c.detail for c in report.failed]


@pytest.mark.slow
def test_quick_level(config):
    report = run_selftest("quick", config)
    assert report.passed, [c.to_dict() for c in report.failed]
    assert report.to_dict()["failed"] == 0


def test_full_level_windows_per_datum(config):
    settings = level_settings("full", config)
    assert datum_settings(settings, "A2")["depth"] == 6
    affine = datum_settings(settings, "affine_A1")
    assert (affine["depth"], affine["tdeg"]) == (8, 8)
    assert datum_settings(settings, "hyperbolic_3")["depth"] == 5
    assert "overrides" not in affine


def test_overrides_reach_the_suites(config):
    custom = dict(config)
    custom["selftest"] = {
        "quick": {"data": ["hyperbolic_3"], "samples": 30, "overrides": {"hyperbolic_3": {"depth": 5, "tdeg": 3}}}
    }
    report = run_selftest("quick", custom, suites=["poset"])
    assert report.passed, [c.detail for c in report.failed]
    assert {c.datum for c in report.checks} == {"hyperbolic_3"}
