#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Irreducible characters and weight multiplicities.

Two independent routes to ``dim L(λ)_ν``: the Weyl-Kac formula evaluated
through :func:`charseries.apply_J`, and the Freudenthal recursion using the
root multiplicities of a :class:`RootTable`.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import lattice, tpoly
from .charseries import CharacterSeries, Window, apply_J, monomial, times_factor
from .debug_utils import Debug
from .errors import NonIntegralMultiplicity, NotBelowHighestWeight, NotDominant, OracleMismatch, WindowMismatch
from .gcm_core import RootDatum
from .helper_classes import config_value, import_config, json_vector
from .lattice import Number, Vector
from .roots import Coords, RootTable, compositions, ensure_table, height
from .weyl import integral_pairings, root_difference


def _check_dominant(datum: RootDatum, lam: Sequence[Number]) -> Vector:
    lam = datum.check_weight(lam)
    if any(p < 0 for p in integral_pairings(datum, lam)):
        raise NotDominant(list(lam))
    return lam


def _depth_below(datum: RootDatum, lam: Vector, nu: Sequence[Number]) -> Coords:
    b = root_difference(datum, nu, lam)
    if b is None:
        raise NotBelowHighestWeight(list(nu), list(lam))
    return b


# ---------------------------------------------------------------------------
# Weyl-Kac
# ---------------------------------------------------------------------------
def weyl_kac_character(
    datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window
) -> CharacterSeries:
    """``χ_λ = J(e^{λ+ρ}) · e^{−ρ} Π_{α>0} (1 − e^{−α})^{−m_α}`` within ``window``.

    The window must be based at ``λ``. Only roots of height at most the window
    depth enter the denominator.
    """
    lam = _check_dominant(datum, lam)
    if window.base != lam:
        raise WindowMismatch(f"character window must be based at {list(lam)}")
    depth = window.depth
    table = ensure_table(datum, table, depth)
    top = lattice.add(lam, datum.rho)
    series = apply_J(datum, top, monomial(datum, Window(top, depth, 0), top))
    for alpha, mult in table.roots_up_to(depth):
        series = times_factor(series, alpha, mult, with_t=False, exponent=-1)
    series = series.shift_weight(tuple(-x for x in datum.rho))
    return CharacterSeries(datum, window, series.terms)


# ---------------------------------------------------------------------------
# Freudenthal
# ---------------------------------------------------------------------------
class _FreudenthalState:
    """Multiplicities of one highest weight, filled height by height."""

    def __init__(self, datum: RootDatum, pairings: Tuple[int, ...]):
        self.n = datum.size
        self.rows = datum.cartan.entries
        self.sym = datum.require_symmetrizer()
        self.form = [[int(x) for x in row] for row in datum.form_matrix]
        self.pairings = pairings
        self.mults: Dict[Coords, int] = {(0,) * self.n: 1}
        self.height = 0
        self.lock = threading.Lock()

    def weight_root(self, c: Coords, alpha: Coords) -> int:
        """``(λ − Σ c_j α_j, α)`` via ``(x, α_j) = d_j ⟨x, α̌_j⟩``."""
        total = 0
        for j in range(self.n):
            if alpha[j]:
                inner = self.pairings[j] - sum(a * x for a, x in zip(self.rows[j], c))
                total += alpha[j] * self.sym[j] * inner
        return total

    def norm_gap(self, b: Coords) -> int:
        """``|λ+ρ|² − |λ+ρ−β|² = 2(β, λ+ρ) − (β, β)``."""
        cross = sum(b[i] * self.sym[i] * (self.pairings[i] + 1) for i in range(self.n))
        square = sum(b[i] * self.form[i][j] * b[j] for i in range(self.n) for j in range(self.n))
        return 2 * cross - square

    def extend(self, target: int, roots: List[Tuple[Coords, int]]) -> None:
        for h in range(self.height + 1, target + 1):
            usable = [(a, m) for a, m in roots if height(a) <= h]
            for b in compositions(h, self.n):
                numerator = 0
                for alpha, mult in usable:
                    k = 1
                    while True:
                        c = tuple(x - k * y for x, y in zip(b, alpha))
                        if min(c) < 0:
                            break
                        m_c = self.mults.get(c, 0)
                        if m_c:
                            numerator += mult * self.weight_root(c, alpha) * m_c
                        k += 1
                numerator *= 2
                gap = self.norm_gap(b)
                if gap == 0:
                    if numerator != 0:
                        raise NonIntegralMultiplicity(f"Freudenthal: zero norm gap with non-zero sum at {b}")
                    continue
                value, rest = divmod(numerator, gap)
                if rest or value < 0:
                    raise NonIntegralMultiplicity(f"Freudenthal: {numerator}/{gap} at {b} is not a multiplicity")
                if value:
                    self.mults[b] = value
            self.height = h
        Debug.debug(f"Freudenthal table for pairings {self.pairings}: height {self.height}")


_STATES: Dict[Tuple, _FreudenthalState] = {}
_STATES_LOCK = threading.Lock()


def _freudenthal_state(datum: RootDatum, lam: Vector) -> _FreudenthalState:
    pairings = integral_pairings(datum, lam)
    key = (datum.cartan, datum.require_symmetrizer(), pairings)
    with _STATES_LOCK:
        state = _STATES.get(key)
        if state is None:
            state = _STATES[key] = _FreudenthalState(datum, pairings)
    return state


def freudenthal_multiplicity(
    datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], nu: Sequence[Number]
) -> int:
    """``dim L(λ)_ν`` by the Freudenthal recursion, memoized per highest weight.

    Raises:
        NotDominant: ``λ`` is not dominant.
        NotBelowHighestWeight: ``ν ≰ λ``.
        NonIntegralMultiplicity: a division was not exact.
    """
    lam = _check_dominant(datum, lam)
    b = _depth_below(datum, lam, nu)
    h = height(b)
    state = _freudenthal_state(datum, lam)
    with state.lock:
        if state.height < h:
            roots = ensure_table(datum, table, h).roots_up_to(h)
            state.extend(h, roots)
        return state.mults.get(b, 0)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------
@lru_cache(maxsize=1)
def _cross_validate_default() -> bool:
    return bool(config_value(import_config(), "characters", "cross_validate", default=False))


def weight_multiplicity(
    datum: RootDatum,
    lam: Sequence[Number],
    nu: Sequence[Number],
    table: Optional[RootTable] = None,
    cross_validate: Optional[bool] = None,
) -> int:
    """``dim L(λ)_ν`` from the Weyl-Kac character.

    With ``cross_validate`` (default from ``characters.cross_validate`` in the
    configuration) the Freudenthal value is computed as well.

    Raises:
        OracleMismatch: the two methods disagree.
    """
    lam = _check_dominant(datum, lam)
    b = _depth_below(datum, lam, nu)
    depth = height(b)
    table = ensure_table(datum, table, depth)
    chi = weyl_kac_character(datum, table, lam, Window(lam, depth, 0))
    value = tpoly.at_zero(chi.coefficient_at(b))
    if cross_validate is None:
        cross_validate = _cross_validate_default()
    if cross_validate:
        other = freudenthal_multiplicity(datum, table, lam, nu)
        if other != value:
            raise OracleMismatch(f"dim L({list(lam)})_{list(nu)}: Weyl-Kac {value}, Freudenthal {other}")
    return value


@dataclass(frozen=True)
class CharacterTable:
    lam: Vector
    window: Window
    mults: Mapping[Vector, int]

    def multiplicity(self, nu: Sequence[Number]) -> int:
        return self.mults.get(lattice.normalize(nu), 0)

    def rows(self) -> List[dict]:
        return [{"weight": json_vector(nu), "mult": m} for nu, m in self.mults.items()]


def character_table(
    datum: RootDatum,
    table: Optional[RootTable],
    lam: Sequence[Number],
    window: Window,
    cross_validate: bool = False,
) -> CharacterTable:
    """All non-zero multiplicities of ``L(λ)`` inside ``window``, ordered by (depth, weight)."""
    chi = weyl_kac_character(datum, table, lam, window)
    mults = {}
    for nu, poly in chi.items():
        value = tpoly.at_zero(poly)
        if cross_validate:
            other = freudenthal_multiplicity(datum, table, chi.base, nu)
            if other != value:
                raise OracleMismatch(f"dim L({list(chi.base)})_{list(nu)}: Weyl-Kac {value}, Freudenthal {other}")
        mults[nu] = value
    return CharacterTable(lam=chi.base, window=window, mults=MappingProxyType(mults))
