import numpy as np
import pytest

from shifthull.errors import NotInLanguageError, UsageError
from shifthull.groupoid import alpha_apply, build_sample
from shifthull.hull import d_map, element, identity, invert, mul, theta
from shifthull.matrices import (
    SparseOp,
    compact_difference_columns,
    diag_expectation,
    export_coordinates,
    is_partial_isometry,
    matrix_unit,
    pi_matrix,
    point_rep,
    product_check,
    t_matrix,
    tensor_rep,
    vacuum_projection,
    word_basis,
)
from shifthull.settings import Settings
from shifthull.words import UNIT, EvPeriodicWord

MATRIX_SIZES = Settings().matrix_sizes


def shift_sizes(names):
    # ex4 has five letters, its truncations grow fastest
    return [(name, n) for name in names for n in MATRIX_SIZES if name != "ex4" or n <= 6]


@pytest.mark.parametrize("name, n", shift_sizes(["golden", "abc", "ex4"]))
def test_truncated_shifts_are_partial_isometries(shifts, name, n):
    aut = shifts[name]
    for mu in aut.alphabet:
        if aut.accepts(mu):
            assert is_partial_isometry(t_matrix(aut, mu, n))
            assert is_partial_isometry(t_matrix(aut, mu, n, unitized=True))
            assert is_partial_isometry(pi_matrix(aut, invert(theta(aut, mu)), n))


@pytest.mark.parametrize("n", [n for n in MATRIX_SIZES if n <= 6])
def test_hull_elements_act_as_partial_isometries(ex4, n):
    for alpha in (element(ex4, "1", {"1", "2"}, "2"), element(ex4, UNIT, {UNIT, "3"}, UNIT), identity(ex4)):
        assert is_partial_isometry(pi_matrix(ex4, alpha, n))


def test_t_matrix_needs_a_word_of_the_language(golden):
    with pytest.raises(NotInLanguageError):
        t_matrix(golden, "11", 3)


@pytest.mark.parametrize("name, n", shift_sizes(["golden", "full2", "abc", "ex4"]))
def test_vacuum_projection_has_rank_one(shifts, name, n):
    p = vacuum_projection(shifts[name], n)
    assert p.entries == frozenset({(0, 0)})
    assert p.basis.labels[0] == UNIT


def test_vacuum_needs_unitized_basis(golden):
    with pytest.raises(UsageError):
        vacuum_projection(golden, 3, unitized=False)


@pytest.mark.parametrize("n", MATRIX_SIZES)
def test_matrix_units(golden, n):
    basis = word_basis(golden, n, True)
    unit = matrix_unit(golden, "01", "10", n)
    assert unit.entries == frozenset({(basis.index["01"], basis.index["10"])})
    assert matrix_unit(golden, "0", "0", n).trace() == 1


@pytest.mark.parametrize("n", MATRIX_SIZES)
def test_diagonal_expectation(golden, n):
    assert diag_expectation(t_matrix(golden, "0", n)).is_zero
    ident = pi_matrix(golden, identity(golden), n)
    assert diag_expectation(ident) == ident
    e = pi_matrix(golden, mul(invert(theta(golden, "1")), theta(golden, "1")), n)
    assert diag_expectation(e) == e


def test_tensor_grading(golden):
    shifted = tensor_rep(golden, theta(golden, "0"), 3, radius=1)
    assert shifted.diagonal_blocks_zero(golden.alphabet)
    assert not tensor_rep(golden, identity(golden), 3, radius=1).diagonal_blocks_zero(golden.alphabet)
    product = shifted @ tensor_rep(golden, invert(theta(golden, "0")), 3, radius=1)
    assert product.grade.is_identity
    with pytest.raises(UsageError):
        tensor_rep(golden, identity(golden), 3, radius=0)


@pytest.mark.parametrize("n", MATRIX_SIZES)
def test_product_check_needs_the_wider_truncation(golden, n):
    a, b = invert(theta(golden, "0")), theta(golden, "0")
    check = product_check(golden, a, b, n)
    assert not check.safe
    assert not check.truncated
    assert check.guarded
    check = product_check(golden, b, a, n)
    assert check.safe and check.truncated and check.guarded


def test_from_matrix_rejects_other_entries(golden):
    basis = word_basis(golden, 1)
    with pytest.raises(ValueError):
        SparseOp.from_matrix(basis, np.array([[2, 0], [0, 1]]))
    assert SparseOp.from_matrix(basis, np.eye(2, dtype=np.int64)) == SparseOp.identity(basis)


def test_export_coordinates(golden):
    text = export_coordinates(t_matrix(golden, "0", 2))
    assert word_basis(golden, 2).labels == ("0", "1", "00", "01", "10")
    assert text == "5 5 2\n3 1 1\n4 2 1\n"


@pytest.mark.parametrize("n", MATRIX_SIZES)
def test_compact_difference(golden, n):
    assert compact_difference_columns(golden, "0", n) == 1


def test_point_representation(golden):
    sample = build_sample(golden, budget=2)
    rep = point_rep(golden, "1", sample)
    zero, one_zero = EvPeriodicWord("", "0"), EvPeriodicWord("1", "0")
    assert rep.op.image(zero) == one_zero
    assert one_zero in rep.undefined
    assert rep.op.image(EvPeriodicWord("", "01")) == EvPeriodicWord("", "10")
    assert is_partial_isometry(rep.op)


def test_point_representation_follows_the_action(golden):
    sample = build_sample(golden, budget=2)
    for mu in ("0", "1", "01"):
        rep = point_rep(golden, mu, sample)
        g = d_map(theta(golden, mu))
        for x in sample:
            y = alpha_apply(golden, g, x)
            if y is None:
                assert x in rep.undefined
            elif y in sample:
                assert rep.op.image(x) == y
            else:
                assert x in rep.outside_sample
