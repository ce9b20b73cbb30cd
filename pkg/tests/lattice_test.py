from fractions import Fraction

import pytest
import sympy

from src import lattice


def test_to_number_normalizes_scalars():
    assert lattice.to_number(sympy.Rational(4, 2)) == 2
    assert isinstance(lattice.to_number(sympy.Rational(4, 2)), int)
    assert lattice.to_number(sympy.Rational(1, 2)) == Fraction(1, 2)
    assert lattice.to_number(Fraction(3, 1)) == 3


def test_vector_helpers():
    assert lattice.add((1, 2), (3, -2)) == (4, 0)
    assert lattice.sub((1, Fraction(1, 2)), (1, Fraction(1, 2))) == (0, 0)
    assert lattice.dot((1, 2, 3), (1, 0, -1)) == -2
    assert lattice.combine((2, -1), ((1, 0), (1, 1)), 2) == (1, -1)


def test_rank_and_nullspace():
    assert lattice.rank([[2, -2], [-2, 2]]) == 1
    (vec,) = lattice.nullspace([[2, -2], [-2, 2]])
    assert vec[0] == vec[1]


def test_particular_solution_sets_free_parameters():
    sol = lattice.particular_solution([[2, -2, 1], [-2, 2, 0]], [1, 1])
    assert sol == (Fraction(-1, 2), 0, 2)


def test_particular_solution_inconsistent():
    with pytest.raises(ValueError):
        lattice.particular_solution([[1, 1], [1, 1]], [1, 2])


def test_span_solver():
    solver = lattice.SpanSolver([(2, -1), (-1, 2)])
    assert solver.solve((1, 1)) == (1, 1)
    assert solver.solve((1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    partial = lattice.SpanSolver([(2, -2, 1)])
    assert partial.solve((4, -4, 2)) == (2,)
    assert partial.solve((1, 0, 0)) is None


def test_span_solver_rejects_dependent_rows():
    with pytest.raises(ValueError):
        lattice.SpanSolver([(1, 2), (2, 4)])
