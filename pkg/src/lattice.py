#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exact rational linear algebra on integer lattices.

Thin helpers around sympy matrices; all results come back as tuples of
Python ``int`` / ``fractions.Fraction`` so the rest of the package never
handles sympy numbers.
"""

from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import sympy

Number = Union[int, Fraction]
Vector = Tuple[Number, ...]


def to_number(x) -> Number:
    """Convert a sympy/Fraction/int scalar to ``int`` when integral, else ``Fraction``."""
    if isinstance(x, (sympy.Rational, sympy.Integer)):
        x = Fraction(int(x.p), int(x.q))
    elif not isinstance(x, Fraction):
        x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def normalize(v: Sequence) -> Vector:
    return tuple(to_number(x) for x in v)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return to_number(sum((a * b for a, b in zip(u, v)), 0))


def add(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    return normalize(a + b for a, b in zip(u, v))


def sub(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    return normalize(a - b for a, b in zip(u, v))


def combine(coeffs: Sequence[Number], rows: Sequence[Sequence[Number]], width: int) -> Vector:
    """``sum_i coeffs[i] * rows[i]`` as a vector of length ``width``."""
    acc = np.zeros(width, dtype=object)
    for c, row in zip(coeffs, rows):
        if c:
            acc = acc + c * np.array(row, dtype=object)
    return normalize(acc)


def rank(rows: Sequence[Sequence[Number]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def nullspace(rows: Sequence[Sequence[Number]]) -> list:
    """Basis of the right null space, each vector as a tuple of numbers."""
    return [normalize(vec) for vec in sympy.Matrix(rows).nullspace()]


def particular_solution(
    rows: Sequence[Sequence[Number]], rhs: Sequence[Number], gauge: Number = 0
) -> Vector:
    """Solve ``rows @ x = rhs`` with every free parameter set to ``gauge``.

    Raises:
        ValueError: the system is inconsistent.
    """
    mat = sympy.Matrix(rows)
    b = sympy.Matrix(list(rhs))
    sol, params = mat.gauss_jordan_solve(b)[:2]
    sol = sol.subs({p: gauge for p in params})
    return normalize(list(sol))


class SpanSolver:
    """Coordinates of vectors in the span of independent integer rows.

    ``solve(v)`` returns ``c`` with ``sum_i c_i rows[i] == v`` or ``None``
    when ``v`` is outside the rational span.
    """

    def __init__(self, rows: Sequence[Sequence[Number]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.k = len(self.rows)
        mat = sympy.Matrix(self.rows)
        _, pivots = mat.rref()
        if len(pivots) != self.k:
            raise ValueError("rows are not linearly independent")
        self.pivots = tuple(pivots)
        sub_inv = mat.extract(list(range(self.k)), list(self.pivots)).inv()
        self._inv = np.array(
            [[to_number(sub_inv[i, j]) for j in range(self.k)] for i in range(self.k)],
            dtype=object,
        )
        self._rows = np.array(self.rows, dtype=object)

    def solve(self, v: Sequence[Number]) -> Optional[Vector]:
        if self.k == 0:
            return () if not any(v) else None
        picked = np.array([v[p] for p in self.pivots], dtype=object)
        coeffs = normalize(picked.dot(self._inv))
        back = normalize(np.array(coeffs, dtype=object).dot(self._rows))
        if back != normalize(v):
            return None
        return coeffs
