from fractions import Fraction

import pytest

from src.errors import (
    AsymmetricZero,
    DiagonalNotTwo,
    DimensionMismatch,
    InvalidDatumFile,
    NotSymmetrizable,
    PositiveOffDiagonal,
)
from src.gcm_core import (
    AFFINE,
    FINITE,
    INDEFINITE,
    bilinear_form,
    build_simply_connected_datum,
    check_datum,
    classify,
    components,
    datum_to_mapping,
    dual_datum,
    invariant_form_gram,
    load_datum_file,
    pairing,
    symmetrize,
    validate_gcm,
    weight_form,
    weight_root_form,
    with_symmetrizer,
)
from src.roots import enumerate_roots


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------
def test_asymmetric_zero_reports_one_based_position():
    with pytest.raises(AsymmetricZero) as info:
        validate_gcm([[2, -1], [0, 2]])
    assert (info.value.i, info.value.j) == (2, 1)


def test_diagonal_and_sign_axioms():
    with pytest.raises(DiagonalNotTwo) as info:
        validate_gcm([[2, -1], [-1, 3]])
    assert info.value.i == 2
    with pytest.raises(PositiveOffDiagonal):
        validate_gcm([[2, 1], [-1, 2]])
    with pytest.raises(DimensionMismatch):
        validate_gcm([[2, -1], [-1]])


def test_symmetrizer_minimal_and_coprime():
    assert symmetrize(validate_gcm([[2, -4], [-1, 2]])).d == (1, 4)
    assert symmetrize(validate_gcm([[2, -1], [-3, 2]])).d == (3, 1)
    assert symmetrize(validate_gcm([[2, 0], [0, 2]])).d == (1, 1)


def test_non_symmetrizable_cycle():
    gcm = validate_gcm([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]])
    with pytest.raises(NotSymmetrizable):
        symmetrize(gcm)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "matrix, kind",
    [
        ([[2]], FINITE),
        ([[2, -1], [-1, 2]], FINITE),
        ([[2, -1], [-3, 2]], FINITE),
        ([[2, -2], [-2, 2]], AFFINE),
        ([[2, -4], [-1, 2]], AFFINE),
        ([[2, -3], [-3, 2]], INDEFINITE),
        ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], AFFINE),
    ],
)
def test_classify(matrix, kind):
    assert classify(validate_gcm(matrix)).kind == kind


def test_affine_null_vector():
    assert classify(validate_gcm([[2, -2], [-2, 2]])).delta == (1, 1)
    assert classify(validate_gcm([[2, -4], [-1, 2]])).delta == (2, 1)


def test_classify_takes_worst_component():
    gcm = validate_gcm([[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -2], [0, 0, -2, 2]])
    cls = classify(gcm)
    assert cls.kind == AFFINE
    assert cls.delta == (0, 0, 1, 1)
    assert components(gcm) == [(0, 1), (2, 3)]


# ---------------------------------------------------------------------------
# Root data
# ---------------------------------------------------------------------------
def test_affine_a1_datum(affine_a1):
    assert affine_a1.lattice_rank == 3
    assert affine_a1.simple_roots == ((2, -2, 1), (-2, 2, 0))
    assert affine_a1.simple_coroots == ((1, 0, 0), (0, 1, 0))
    assert affine_a1.rho == (1, 1, 0)
    assert affine_a1.rho_check == (Fraction(-1, 2), 0, 2)
    check_datum(affine_a1)


def test_a1_rho_check_is_rational(a1):
    assert a1.rho_check == (Fraction(1, 2),)
    assert pairing(a1, a1.simple_roots[0], a1.rho_check) == 1


def test_pairing_realizes_cartan(g2):
    for i in range(2):
        for j in range(2):
            assert pairing(g2, g2.simple_roots[j], g2.simple_coroots[i]) == g2.cartan[i, j]


def test_pairing_dimension_mismatch(a2):
    with pytest.raises(DimensionMismatch):
        pairing(a2, (1, 0, 0), (1, 0))


def test_dual_datum_is_an_involution(b2, affine_a1):
    for datum in (b2, affine_a1):
        dual = dual_datum(datum)
        check_datum(dual)
        assert dual.cartan == datum.cartan.transpose()
        assert dual.rho == datum.rho_check
        back = dual_datum(dual)
        assert back.simple_roots == datum.simple_roots
        assert back.rho == datum.rho
        assert back.name == datum.name


def test_with_symmetrizer_validates(b2):
    assert with_symmetrizer(b2, (2, 4)).symmetrizer == (2, 4)
    with pytest.raises(NotSymmetrizable):
        with_symmetrizer(b2, (1, 1))


# ---------------------------------------------------------------------------
# Invariant forms
# ---------------------------------------------------------------------------
def test_bilinear_form_on_roots(b2):
    assert b2.symmetrizer == (1, 2)
    assert bilinear_form(b2, (1, 0), (1, 0)) == 2
    assert bilinear_form(b2, (0, 1), (0, 1)) == 4
    assert bilinear_form(b2, (1, 0), (0, 1)) == -2


def test_invariant_form_gram_extends_root_form(affine_a1):
    gram = invariant_form_gram(affine_a1)
    assert all(gram[a][b] == gram[b][a] for a in range(3) for b in range(3))
    for i, root in enumerate(affine_a1.simple_roots):
        coroot = affine_a1.simple_coroots[i]
        for c in range(3):
            lhs = sum(root[a] * gram[a][c] for a in range(3))
            assert lhs == affine_a1.symmetrizer[i] * coroot[c]


def test_weight_form_gauge_independent_on_roots(affine_a1):
    lam = (1, 0, 0)
    alpha = affine_a1.simple_roots[0]
    assert weight_form(affine_a1, lam, alpha, gauge=0) == weight_form(affine_a1, lam, alpha, gauge=3)
    assert weight_root_form(affine_a1, lam, (1, 0)) == weight_form(affine_a1, lam, alpha)


# ---------------------------------------------------------------------------
# Datum files
# ---------------------------------------------------------------------------
def test_load_datum_file(data_dir):
    datum = load_datum_file(data_dir / "a2.json")
    assert datum.name == "A2"
    assert datum.cartan.to_list() == [[2, -1], [-1, 2]]


def test_load_datum_file_with_symmetrizer(data_dir):
    assert load_datum_file(data_dir / "b2_scaled.json").symmetrizer == (2, 4)


def test_load_datum_file_errors(data_dir):
    with pytest.raises(AsymmetricZero):
        load_datum_file(data_dir / "asymmetric_zero.json")
    with pytest.raises(InvalidDatumFile):
        load_datum_file(data_dir / "not_json.json")
    with pytest.raises(InvalidDatumFile):
        load_datum_file("no_such_datum")


def test_load_datum_from_catalog(config):
    datum = load_datum_file("affine_A1", config["catalog"])
    assert datum.name == "affine_A1"
    assert datum.lattice_rank == 3


def test_datum_to_mapping(affine_a1):
    doc = datum_to_mapping(affine_a1)
    assert doc["class"] == AFFINE
    assert doc["delta"] == [1, 1]
    assert doc["rho_check"] == ["-1/2", 0, 2]


def test_build_rejects_invalid_gcm():
    with pytest.raises(AsymmetricZero):
        build_simply_connected_datum([[2, -1], [0, 2]])


def test_non_symmetrizable_gcm_still_builds_a_datum():
    datum = build_simply_connected_datum([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]], name="cycle")
    check_datum(datum)
    assert datum.symmetrizer is None
    assert datum.lattice_rank == 3
    assert datum_to_mapping(datum)["symmetrizer"] is None
    assert dual_datum(datum).symmetrizer is None
    with pytest.raises(NotSymmetrizable):
        bilinear_form(datum, (1, 0, 0), (0, 1, 0))
    with pytest.raises(NotSymmetrizable):
        weight_root_form(datum, (1, 0, 0), (1, 0, 0))
    with pytest.raises(NotSymmetrizable):
        enumerate_roots(datum, 2)
