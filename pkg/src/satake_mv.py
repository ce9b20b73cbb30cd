#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Satake transform, MV-cycle predictions and the poset combinatorics behind them.

Coweights of the group are weights of the dual datum: every Hall-Littlewood
and character computation here runs on :func:`gcm_core.dual_datum`, while
inputs and outputs stay coweights of the datum the caller passed in.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import lattice, tpoly
from .characters import weight_multiplicity
from .charseries import CharacterSeries, Window, invert, multiply
from .debug_utils import Debug
from .errors import GammaCountMismatch, InconsistentLimit, NotBelow, NotDominant, WindowTooSmall
from .gcm_core import RootDatum, dual_datum, pairing
from .hall_littlewood import hl_function
from .helper_classes import json_vector
from .lattice import Number, Vector
from .roots import Coords, RootTable, ensure_table, height, is_real
from .weyl import act_coweight, coroot_difference, dominance_leq, inversion_set, is_dominant

Laurent = List[Tuple[int, int]]


def _dominant_coweight(datum: RootDatum, lam: Sequence[Number]) -> Vector:
    lam = datum.check_weight(lam, "coweight")
    if not is_dominant(datum, lam):
        raise NotDominant(list(lam))
    return lam


def _below(datum: RootDatum, nu: Sequence[Number], lam: Sequence[Number]) -> Coords:
    c = coroot_difference(datum, nu, lam)
    if c is None:
        raise NotBelow(list(nu), list(lam))
    return c


def rho_pairing(datum: RootDatum, coweight: Sequence[Number]) -> int:
    """``⟨ρ, μ̌⟩``, integral for coweights in the lattice."""
    return int(pairing(datum, datum.rho, coweight))


def _laurent(poly: tpoly.Poly, top: int) -> Laurent:
    """``q^{top} · poly(q^{-1})`` as ``(exponent, coefficient)`` pairs, highest first."""
    return [(top - k, c) for k, c in enumerate(poly) if c]


# ---------------------------------------------------------------------------
# Satake transform
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SatakeTransform:
    lam: Vector
    window: Window
    shift: int
    terms: CharacterSeries

    def term(self, nu: Sequence[Number]) -> tpoly.Poly:
        return self.terms.coefficient(nu)

    def q_laurent(self, nu: Sequence[Number]) -> Laurent:
        """The coefficient of ``e^ν``, ``q^{⟨ρ,λ⟩} · term_ν(q^{-1})``."""
        return _laurent(self.term(nu), self.shift)

    def rows(self) -> List[dict]:
        return [
            {"weight": json_vector(nu), "coeffs": list(p), "q_laurent": [list(x) for x in _laurent(p, self.shift)]}
            for nu, p in self.terms.items()
        ]


def _p_lambda_over_p_zero(
    dual: RootDatum, table: Optional[RootTable], lam: Vector, depth: int, tdeg: int
) -> CharacterSeries:
    table = ensure_table(dual, table, depth)
    zero = (0,) * dual.lattice_rank
    p_lam = hl_function(dual, table, lam, Window(lam, depth, tdeg))
    p_zero = hl_function(dual, table, zero, Window(zero, depth, tdeg))
    return multiply(p_lam, invert(p_zero))


def satake_transform(
    datum: RootDatum,
    lam: Sequence[Number],
    depth: int,
    tdeg: int,
    table: Optional[RootTable] = None,
) -> SatakeTransform:
    """``q^{⟨ρ,λ⟩} P_λ(q^{-1}) / P_0(q^{-1})`` with terms as polynomials in ``t = q^{-1}``.

    ``table`` holds the roots of the dual datum when given.
    """
    lam = _dominant_coweight(datum, lam)
    dual = dual_datum(datum)
    terms = _p_lambda_over_p_zero(dual, table, lam, depth, tdeg)
    window = Window(lam, depth, tdeg)
    return SatakeTransform(
        lam=lam,
        window=window,
        shift=rho_pairing(datum, lam),
        terms=CharacterSeries(dual, window, terms.terms),
    )


# ---------------------------------------------------------------------------
# MV-cycle predictions
# ---------------------------------------------------------------------------
def mv_count_series(
    datum: RootDatum,
    lam: Sequence[Number],
    nu: Sequence[Number],
    tdeg: int,
    table: Optional[RootTable] = None,
) -> tpoly.Poly:
    """``N_λν(t)``, the coefficient of ``e^ν`` in ``P_λ(t) P_0(t)^{-1}``.

    ``N_λν(q^{-1}) = ♯(Gr_λ ∩ T_ν)(F_q) · q^{⟨ρ,ν−λ⟩}``.
    """
    lam = _dominant_coweight(datum, lam)
    c = _below(datum, nu, lam)
    dual = dual_datum(datum)
    series = _p_lambda_over_p_zero(dual, table, lam, height(c), tdeg)
    return series.coefficient_at(c)


@dataclass(frozen=True)
class MvPrediction:
    lam: Vector
    nu: Vector
    dimension: int
    top_components: int
    count_series: tpoly.Poly
    tdeg: int

    def count_laurent(self) -> Laurent:
        """The predicted point count ``q^{dim} · N(q^{-1})`` up to the truncation."""
        return _laurent(self.count_series, self.dimension)

    def to_dict(self) -> dict:
        return {
            "lambda": json_vector(self.lam),
            "nu": json_vector(self.nu),
            "dimension": self.dimension,
            "top_components": self.top_components,
            "count_series": list(self.count_series),
            "count_laurent": [list(x) for x in self.count_laurent()],
            "tdeg": self.tdeg,
        }


def mv_prediction(
    datum: RootDatum,
    lam: Sequence[Number],
    nu: Sequence[Number],
    tdeg: int,
    table: Optional[RootTable] = None,
) -> MvPrediction:
    """Dimension ``⟨ρ,λ−ν⟩``, top components ``dim L(λ)_ν`` and the count series of ``Gr_λ ∩ T_ν``.

    Raises:
        InconsistentLimit: ``N(0)`` differs from ``dim L(λ)_ν``.
    """
    lam = _dominant_coweight(datum, lam)
    nu = datum.check_weight(nu, "coweight")
    c = _below(datum, nu, lam)
    dual = dual_datum(datum)
    table = ensure_table(dual, table, height(c))
    series = mv_count_series(datum, lam, nu, tdeg, table)
    top = weight_multiplicity(dual, lam, nu, table)
    if tpoly.at_zero(series) != top:
        raise InconsistentLimit(
            f"N(0) = {tpoly.at_zero(series)} but dim L({list(lam)})_{list(nu)} = {top}"
        )
    return MvPrediction(
        lam=lam,
        nu=nu,
        dimension=rho_pairing(datum, lattice.sub(lam, nu)),
        top_components=top,
        count_series=series,
        tdeg=tdeg,
    )


# ---------------------------------------------------------------------------
# Poset checks
# ---------------------------------------------------------------------------
def st_nonempty(datum: RootDatum, mu: Sequence[Number], nu: Sequence[Number]) -> bool:
    """``S_μ ∩ T_ν ≠ ∅`` exactly when ``ν ≤ μ``."""
    return dominance_leq(datum, nu, mu)


def grT_vanishing(datum: RootDatum, lam: Sequence[Number], nu: Sequence[Number]) -> bool:
    """Necessary condition ``ν ≤ λ`` for ``Gr_λ ∩ T_ν`` to be non-empty."""
    lam = _dominant_coweight(datum, lam)
    return dominance_leq(datum, nu, lam)


def grS_nonempty_window(datum: RootDatum, lam: Sequence[Number], mu: Sequence[Number], w: Sequence[int]) -> bool:
    """Necessary condition ``μ ≥ wλ`` for ``Gr°_{wλ} ∩ S_μ ≠ ∅``."""
    lam = _dominant_coweight(datum, lam)
    return dominance_leq(datum, act_coweight(datum, w, lam), mu)


def grT_chart_nonempty(datum: RootDatum, lam: Sequence[Number], nu: Sequence[Number], w: Sequence[int]) -> bool:
    """Necessary condition ``ν ≤ wλ`` for ``Gr°_{wλ} ∩ T_ν ≠ ∅``."""
    lam = _dominant_coweight(datum, lam)
    return dominance_leq(datum, nu, act_coweight(datum, w, lam))


def _box(upper: Coords):
    return itertools.product(*(range(c + 1) for c in upper))


def strata_interval(datum: RootDatum, mu: Sequence[Number], lam: Sequence[Number]) -> List[Vector]:
    """Dominant ``ν`` with ``μ ≤ ν ≤ λ``, ordered by depth below ``λ`` then coordinates."""
    lam = _dominant_coweight(datum, lam)
    mu = _dominant_coweight(datum, mu)
    c = _below(datum, mu, lam)
    found = []
    for k in _box(c):
        nu = lattice.sub(lam, datum.coweight_from_coroot_coords(k))
        if is_dominant(datum, nu):
            found.append((sum(k), nu))
    found.sort()
    return [nu for _, nu in found]


def chart_stratification(datum: RootDatum, lam: Sequence[Number], w: Sequence[int]) -> Dict[int, List[Vector]]:
    """Coweights ``μ`` with ``wλ ≤ μ ≤ λ`` grouped by codimension ``⟨ρ, λ−μ⟩``."""
    lam = _dominant_coweight(datum, lam)
    low = act_coweight(datum, w, lam)
    c = _below(datum, low, lam)
    strata: Dict[int, List[Vector]] = {}
    for k in _box(c):
        mu = lattice.sub(lam, datum.coweight_from_coroot_coords(k))
        strata.setdefault(rho_pairing(datum, lattice.sub(lam, mu)), []).append(mu)
    return {codim: sorted(strata[codim]) for codim in sorted(strata)}


def coroot_step_witness(
    datum: RootDatum,
    mu: Sequence[Number],
    lam: Sequence[Number],
    table: Optional[RootTable] = None,
    dominant_step: bool = False,
) -> Coords:
    """A positive coroot ``α̌`` (simple-coroot coordinates) with ``μ ≤ λ − α̌ < λ``.

    Coroots are searched by increasing height through the roots of the dual
    datum. With ``dominant_step`` the step must also keep ``λ − α̌`` dominant.

    Raises:
        NotBelow: ``μ`` is not strictly below ``λ``.
        WindowTooSmall: no coroot of height at most ``hgt(λ−μ)`` qualifies.
    """
    lam = _dominant_coweight(datum, lam)
    mu = _dominant_coweight(datum, mu)
    c = _below(datum, mu, lam)
    if not any(c):
        raise NotBelow(list(mu), list(lam))
    dual = dual_datum(datum)
    table = ensure_table(dual, table, height(c))
    for alpha in table.positive_roots:
        if height(alpha) > height(c):
            break
        if any(a > x for a, x in zip(alpha, c)):
            continue
        if dominant_step:
            step = lattice.sub(lam, datum.coweight_from_coroot_coords(alpha))
            if not is_dominant(datum, step):
                continue
        return alpha
    raise WindowTooSmall(f"no coroot step from {list(lam)} towards {list(mu)} within height {height(c)}")


def coroot_sum_closure(datum: RootDatum, table: Optional[RootTable] = None, depth: int = 6) -> List[Tuple[Coords, Coords]]:
    """Pairs of positive real coroots ``α̌, β̌`` with ``⟨β, α̌⟩ < 0`` whose sum is not a coroot.

    Only pairs whose sum lies within the table depth are checked; an empty
    list means the closure property holds there.
    """
    dual = dual_datum(datum)
    table = ensure_table(dual, table, depth)
    form = [[int(x) for x in row] for row in dual.form_matrix]
    real = sorted(table.real, key=lambda a: (height(a), a))
    failures = []
    for a, b in itertools.product(real, repeat=2):
        if height(a) + height(b) > table.depth:
            continue
        inner = sum(a[i] * form[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))
        if inner >= 0:
            continue
        total = tuple(x + y for x, y in zip(a, b))
        if table.mults.get(total, 0) == 0:
            failures.append((a, b))
    Debug.debug(f"coroot sum closure on {datum.name}: {len(real)} real coroots, {len(failures)} failures")
    return failures


def gamma_count(
    datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], w: Sequence[int]
) -> Tuple[FrozenSet[Tuple[Coords, int]], int]:
    """``Γ = {(α, n) : α ∈ N(w), 0 ≤ n < ⟨α, λ⟩}`` and its size.

    Inversions are checked to be real roots when ``table`` reaches their height.

    Raises:
        GammaCountMismatch: ``♯Γ ≠ ⟨ρ, λ − wλ⟩``.
    """
    lam = _dominant_coweight(datum, lam)
    inv = inversion_set(datum, w)
    if inv and table is not None and table.depth >= max(height(a) for a in inv):
        for alpha in inv:
            if not is_real(table, alpha):
                raise GammaCountMismatch(f"inversion {alpha} is not a real root")
    pairings = datum.root_pairings(lam)
    gamma = set()
    for alpha in inv:
        bound = sum(a * p for a, p in zip(alpha, pairings))
        gamma.update((alpha, n) for n in range(int(bound)))
    expected = rho_pairing(datum, lattice.sub(lam, act_coweight(datum, w, lam)))
    if len(gamma) != expected:
        raise GammaCountMismatch(f"|Γ| = {len(gamma)} but ⟨ρ, λ − wλ⟩ = {expected} for w = {list(w)}")
    return frozenset(gamma), len(gamma)


@dataclass(frozen=True)
class PosetSummary:
    interval: Tuple[Vector, ...]
    witness: Optional[Coords]

    def to_dict(self) -> dict:
        return {
            "interval": [json_vector(v) for v in self.interval],
            "witness": list(self.witness) if self.witness is not None else None,
        }


def interval_summary(datum: RootDatum, mu: Sequence[Number], lam: Sequence[Number]) -> PosetSummary:
    interval = strata_interval(datum, mu, lam)
    witness = None
    if lattice.normalize(mu) != lattice.normalize(lam):
        witness = coroot_step_witness(datum, mu, lam, dominant_step=True)
    return PosetSummary(interval=tuple(interval), witness=witness)

