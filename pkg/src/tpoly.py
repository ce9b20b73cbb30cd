#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Truncated integer polynomials in ``t``.

A polynomial is a tuple of Python ints, lowest degree first, with trailing
zeros removed; the zero polynomial is the empty tuple. All products are cut
at a t-degree ``tdeg``. Products, inverses and powers are carried out in
sympy's univariate ring ``ZZ[t]`` with its truncated series routines, so
coefficients are exact integers of any size.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from .errors import NonUnitLeadingTerm

Poly = Tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
T: Poly = (0, 1)

_RING, _T = ring("t", ZZ)


def trim(coeffs: Iterable[int]) -> Poly:
    """Return ``coeffs`` as a canonical polynomial tuple."""
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def truncate(a: Sequence[int], tdeg: int) -> Poly:
    return trim(a[: tdeg + 1])


def monomial(k: int, coeff: int = 1) -> Poly:
    """``coeff * t**k``."""
    if coeff == 0:
        return ZERO
    return trim([0] * k + [coeff])


def add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return trim(out)


def neg(a: Sequence[int]) -> Poly:
    return tuple(-c for c in a)


def sub(a: Sequence[int], b: Sequence[int]) -> Poly:
    return add(a, neg(b))


def scale(a: Sequence[int], k: int) -> Poly:
    if k == 0:
        return ZERO
    return tuple(k * c for c in a)


def _to_ring(a: Sequence[int]) -> PolyElement:
    return _RING.from_dict({(k,): int(c) for k, c in enumerate(a) if c})


def _from_ring(p: PolyElement) -> Poly:
    if not p:
        return ZERO
    out = [0] * (p.degree() + 1)
    for (k,), c in p.items():
        out[k] = int(c)
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int], tdeg: int) -> Poly:
    """Product of ``a`` and ``b`` truncated at degree ``tdeg``."""
    if not a or not b:
        return ZERO
    return _from_ring(rs_mul(_to_ring(a), _to_ring(b), _T, tdeg + 1))


def shift(a: Sequence[int], k: int, tdeg: int) -> Poly:
    """Multiply by ``t**k``."""
    if not a:
        return ZERO
    return truncate([0] * k + list(a), tdeg)


def inverse(a: Sequence[int], tdeg: int) -> Poly:
    """Inverse of ``a`` modulo ``t**(tdeg+1)``; needs constant term +-1."""
    if not a or a[0] not in (1, -1):
        raise NonUnitLeadingTerm(trim(a))
    return _from_ring(rs_series_inversion(rs_trunc(_to_ring(a), _T, tdeg + 1), _T, tdeg + 1))


def power(a: Sequence[int], m: int, tdeg: int) -> Poly:
    """``a**m`` for integer ``m``; negative powers go through :func:`inverse`."""
    if m < 0:
        return power(inverse(a, tdeg), -m, tdeg)
    if m == 0:
        return ONE
    if not a:
        return ZERO
    return _from_ring(rs_pow(_to_ring(a), m, _T, tdeg + 1))


def at_zero(a: Sequence[int]) -> int:
    return a[0] if a else 0


def evaluate(a: Sequence[int], x: Union[int, Fraction]) -> Union[int, Fraction]:
    acc: Union[int, Fraction] = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def negate_variable(a: Sequence[int]) -> Poly:
    """Substitute ``t -> -t``."""
    return tuple(c if k % 2 == 0 else -c for k, c in enumerate(a))


def degree(a: Sequence[int]) -> int:
    """Degree of ``a``; -1 for the zero polynomial."""
    return len(trim(a)) - 1


def to_str(a: Sequence[int], var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, term))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out
