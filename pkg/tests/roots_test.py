import pytest

from src.errors import DimensionMismatch, NotARoot, NotSymmetrizable, OutOfWindow
from src.gcm_core import build_simply_connected_datum
from src.roots import (
    compositions,
    ensure_table,
    enumerate_roots,
    is_real,
    multiplicity,
    real_roots_by_orbit,
    reflect_root_coords,
)
from src.weyl import act_on_root_coords, elements_up_to_length


def test_compositions_in_lex_order():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(3, 3))) == 10


@pytest.mark.parametrize(
    "fixture, roots",
    [
        ("a2", [(0, 1), (1, 0), (1, 1)]),
        ("b2", [(0, 1), (1, 0), (1, 1), (2, 1)]),
        ("g2", [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 3)]),
    ],
)
def test_finite_positive_roots(request, fixture, roots):
    datum = request.getfixturevalue(fixture)
    table = enumerate_roots(datum, 12)
    assert table.positive_roots == roots
    assert all(m == 1 for m in table.mults.values())
    assert set(table.real) == set(roots)


def test_affine_a1_roots(affine_a1):
    table = enumerate_roots(affine_a1, 6)
    assert len(table.positive_roots) == 9
    for k in (1, 2, 3):
        assert multiplicity(table, (k, k)) == 1
        assert not is_real(table, (k, k))
    assert is_real(table, (2, 1))
    assert is_real(table, (1, 2))
    assert multiplicity(table, (2, 0)) == 0


def test_affine_a2_null_root_has_multiplicity_two(affine_a2):
    table = enumerate_roots(affine_a2, 3)
    assert multiplicity(table, (1, 1, 1)) == 2
    assert not is_real(table, (1, 1, 1))


def test_hyperbolic_low_roots(hyperbolic):
    table = enumerate_roots(hyperbolic, 4)
    assert multiplicity(table, (1, 1)) == 1
    assert multiplicity(table, (1, 2)) == 1
    assert is_real(table, (1, 3))
    assert is_real(table, (3, 1))
    assert not is_real(table, (1, 1))


def test_multiplicity_of_negative_root(a2):
    table = enumerate_roots(a2, 3)
    assert multiplicity(table, (-1, -1)) == 1
    assert multiplicity(table, (1, -1)) == 0


def test_multiplicity_outside_window(affine_a1):
    table = enumerate_roots(affine_a1, 2)
    with pytest.raises(OutOfWindow):
        multiplicity(table, (2, 2))
    with pytest.raises(DimensionMismatch):
        multiplicity(table, (1, 1, 1))


def test_is_real_requires_a_root(a2):
    with pytest.raises(NotARoot):
        is_real(enumerate_roots(a2, 3), (2, 0))


def test_real_roots_agree_with_orbit(affine_a1, hyperbolic):
    for datum in (affine_a1, hyperbolic):
        table = enumerate_roots(datum, 6)
        assert table.real == real_roots_by_orbit(datum, 6)


def test_reflect_root_coords(a2):
    rows = a2.cartan.entries
    assert reflect_root_coords(rows, 0, (0, 1)) == (1, 1)
    assert reflect_root_coords(rows, 0, (1, 0)) == (-1, 0)


def test_tables_extend_and_restrict(affine_a1):
    deep = enumerate_roots(affine_a1, 6)
    shallow = deep.restrict(3)
    assert shallow.depth == 3
    assert shallow.positive_roots == [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    assert enumerate_roots(affine_a1, 3).mults == shallow.mults
    assert ensure_table(affine_a1, deep, 4) is deep
    assert ensure_table(affine_a1, shallow, 5).depth == 5


def test_rows(a2):
    rows = enumerate_roots(a2, 2).rows()
    assert rows[-1] == {"coords": [1, 1], "height": 2, "mult": 1, "real": True}


def test_multiples_of_real_roots_keep_the_recursion_exact(a2):
    # (β, β − 2ρ) vanishes at 2(α_1 + α_2)
    table = enumerate_roots(a2, 10)
    assert multiplicity(table, (2, 2)) == 0
    assert multiplicity(table, (5, 5)) == 0
    assert len(table.mults) == 3


def test_affine_a1_roots_deep(affine_a1):
    table = enumerate_roots(affine_a1, 12)
    assert len(table.positive_roots) == 18
    for k in range(1, 7):
        assert multiplicity(table, (k, k)) == 1
        assert not is_real(table, (k, k))
    for k in range(0, 6):
        assert is_real(table, (k, k + 1))
        assert is_real(table, (k + 1, k))
    assert multiplicity(table, (3, 6)) == 0
    assert multiplicity(table, (2, 4)) == 0


def test_affine_a2_imaginary_roots_deep(affine_a2):
    table = enumerate_roots(affine_a2, 9)
    for k in (1, 2, 3):
        assert multiplicity(table, (k, k, k)) == 2
    assert is_real(table, (2, 1, 1))
    assert multiplicity(table, (2, 2, 0)) == 0


@pytest.mark.parametrize("fixture, depth", [("affine_a1", 12), ("affine_a2", 7), ("hyperbolic", 8)])
def test_multiplicities_are_weyl_invariant(request, fixture, depth):
    datum = request.getfixturevalue(fixture)
    table = enumerate_roots(datum, depth)
    elements = elements_up_to_length(datum, 6)
    for alpha, mult in table.mults.items():
        for w in elements:
            image = act_on_root_coords(datum, w, alpha)
            if sum(abs(x) for x in image) <= depth:
                assert multiplicity(table, image) == mult, (alpha, w.word)


def test_non_symmetrizable_datum_has_no_root_table():
    datum = build_simply_connected_datum([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]])
    with pytest.raises(NotSymmetrizable):
        enumerate_roots(datum, 1)
