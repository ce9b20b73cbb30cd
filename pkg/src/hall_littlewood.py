#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Hall-Littlewood functions and their expansion in irreducible characters.

``P_λ(t) = W_λ(t)^{-1} J(e^ρ)^{-1} J(f_λ)`` with
``f_λ = e^{λ+ρ} Π_{α>0} (1 − t e^{−α})^{m_α}``.

``J(f_λ)`` is summed in product form: for an orbit element ``w``,
``w(f_λ) = e^{w(λ+ρ)} Π_{γ∈N(w^{-1})} (1 − t e^{γ})(1 − t e^{−γ})^{-1} · Δ_t``
where ``Δ_t = Π_{α>0}(1 − t e^{−α})^{m_α}``. Every raising factor costs a power
of ``t``, so inside a window of depth ``D`` and t-degree ``T`` only elements
with ``depth(w(λ+ρ))`` minus the ``T`` largest heights in ``N(w^{-1})`` at most
``D`` contribute, and those all have ``ℓ(w) ≤ D + T``. The same bound limits
the direct coefficient formula and the MacDonald sum.
"""

from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import lattice, tpoly
from .characters import weyl_kac_character
from .charseries import (
    CharacterSeries,
    Window,
    apply_J,
    invert,
    monomial,
    multiply,
    times_factor,
    zero_weight,
)
from .debug_utils import Debug
from .errors import InternalInvariantError, NotBelow, NotDominant, OutOfWindow, WindowMismatch
from .gcm_core import RootDatum
from .helper_classes import json_vector
from .lattice import Number, Vector
from .parallel import get_threads, parallel_map
from .roots import Coords, RootTable, compositions, ensure_table, height
from .weyl import (
    act_displacement,
    elements_up_to_length,
    integral_pairings,
    inversion_set_of_inverse,
    is_dominant_weight,
    orbit_by_length,
    root_difference,
    stabilizer_poincare,
)


def _dominant(datum: RootDatum, lam: Sequence[Number]) -> Vector:
    lam = datum.check_weight(lam)
    if any(p < 0 for p in integral_pairings(datum, lam)):
        raise NotDominant(list(lam))
    return lam


def _expect_base(window: Window, base: Vector, what: str) -> None:
    if window.base != lattice.normalize(base):
        raise WindowMismatch(f"{what} needs a window based at {list(base)}, got {list(window.base)}")


def _accumulate(acc: Dict[Coords, tpoly.Poly], terms: Mapping[Coords, tpoly.Poly], sign: int = 1) -> None:
    for b, p in terms.items():
        acc[b] = tpoly.add(acc.get(b, tpoly.ZERO), p if sign > 0 else tpoly.neg(p))


def _lower_bound(depth: int, inv_heights: Sequence[int], tdeg: int) -> int:
    """Smallest depth any term of the product-form summand can reach."""
    return depth - sum(sorted(inv_heights, reverse=True)[:tdeg])


def delta_t(datum: RootDatum, table: Optional[RootTable], depth: int, tdeg: int) -> CharacterSeries:
    """``Π_{α>0, hgt(α)≤D} (1 − t e^{−α})^{m_α}`` based at 0."""
    table = ensure_table(datum, table, depth)
    series = monomial(datum, Window(zero_weight(datum), depth, tdeg), zero_weight(datum))
    for alpha, mult in table.roots_up_to(depth):
        series = times_factor(series, alpha, mult, with_t=True, exponent=1)
    return series


def j_of_e_rho(datum: RootDatum, depth: int, tdeg: int) -> CharacterSeries:
    rho = datum.rho
    return apply_J(datum, rho, monomial(datum, Window(rho, depth, tdeg), rho))


def f_lambda(datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window) -> CharacterSeries:
    """``e^{λ+ρ} Π_{α>0} (1 − t e^{−α})^{m_α}`` in a window based at ``λ+ρ``."""
    lam = _dominant(datum, lam)
    top = lattice.add(lam, datum.rho)
    _expect_base(window, top, "f_lambda")
    table = ensure_table(datum, table, window.depth)
    series = monomial(datum, window, top)
    for alpha, mult in table.roots_up_to(window.depth):
        series = times_factor(series, alpha, mult, with_t=True, exponent=1)
    return series


def _raise(raw: Dict[Coords, tpoly.Poly], gamma: Coords, tdeg: int) -> Dict[Coords, tpoly.Poly]:
    """``raw · (1 − t e^{γ})`` on displacements."""
    out = dict(raw)
    for b, p in raw.items():
        q = tpoly.shift(p, 1, tdeg)
        if not q:
            continue
        nb = tuple(x - y for x, y in zip(b, gamma))
        if min(nb) < 0:
            raise InternalInvariantError(f"raising by {gamma} left the cone below the base at {b}")
        out[nb] = tpoly.sub(out.get(nb, tpoly.ZERO), q)
    return {b: p for b, p in out.items() if p}


def j_of_f_lambda(
    datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window
) -> CharacterSeries:
    """``J(f_λ)`` in a window based at ``λ+ρ``, summed in product form."""
    lam = _dominant(datum, lam)
    top = lattice.add(lam, datum.rho)
    _expect_base(window, top, "J(f_lambda)")
    depth, tdeg = window.depth, window.tdeg
    table = ensure_table(datum, table, depth)
    orbit = orbit_by_length(datum, top, depth + tdeg)

    def summand(entry):
        inv = inversion_set_of_inverse(datum, entry.word)
        if _lower_bound(entry.depth, [height(g) for g in inv], tdeg) > depth:
            return None
        raw = {entry.displacement: tpoly.ONE}
        for gamma in inv:
            raw = _raise(raw, gamma, tdeg)
        series = CharacterSeries(datum, window, raw)
        for gamma in inv:
            if height(gamma) <= depth:
                series = times_factor(series, gamma, 1, with_t=True, exponent=-1)
        return entry.sign, series.terms

    acc: Dict[Coords, tpoly.Poly] = {}
    used = 0
    for result in parallel_map(summand, orbit.entries, get_threads()):
        if result is not None:
            used += 1
            _accumulate(acc, result[1], result[0])
    Debug.debug(f"J(f_lambda) at {list(lam)}: {used} of {len(orbit)} orbit elements contribute")
    return multiply(CharacterSeries(datum, window, acc), delta_t(datum, table, depth, tdeg))


def _stabilizer_inverse(datum: RootDatum, lam: Vector, tdeg: int) -> tpoly.Poly:
    return tpoly.inverse(stabilizer_poincare(datum, lam, tdeg), tdeg)


def hl_function(datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window) -> CharacterSeries:
    """``P_λ(t)`` in a window based at ``λ``."""
    lam = _dominant(datum, lam)
    _expect_base(window, lam, "hl_function")
    depth, tdeg = window.depth, window.tdeg
    table = ensure_table(datum, table, depth)
    top = lattice.add(lam, datum.rho)
    numerator = j_of_f_lambda(datum, table, lam, Window(top, depth, tdeg))
    series = multiply(invert(j_of_e_rho(datum, depth, tdeg)), numerator)
    series = series.scale(_stabilizer_inverse(datum, lam, tdeg))
    return CharacterSeries(datum, window, series.terms)


# ---------------------------------------------------------------------------
# Coefficients in the character basis
# ---------------------------------------------------------------------------
def partition_polynomial(table: RootTable, gamma: Sequence[int], tdeg: int) -> tpoly.Poly:
    """``p_γ(x) = Σ_A x^{♯A}`` over multisets ``A`` of positive roots summing to ``γ``.

    Each root ``α`` is taken at most ``m_α`` times, ``k`` copies counted
    ``C(m_α, k)`` times; degrees above ``tdeg`` are dropped.
    """
    gamma = tuple(gamma)
    if min(gamma, default=0) < 0:
        return tpoly.ZERO
    states: Dict[Coords, tpoly.Poly] = {(0,) * len(gamma): tpoly.ONE}
    for alpha, mult in table.roots_up_to(height(gamma)):
        if any(a > g for a, g in zip(alpha, gamma)):
            continue
        updated = dict(states)
        for v, p in states.items():
            for k in range(1, min(mult, tdeg) + 1):
                w = tuple(x + k * a for x, a in zip(v, alpha))
                if any(x > g for x, g in zip(w, gamma)):
                    break
                term = tpoly.shift(tpoly.scale(p, comb(mult, k)), k, tdeg)
                if not term:
                    break
                updated[w] = tpoly.add(updated.get(w, tpoly.ZERO), term)
        states = updated
    return states.get(gamma, tpoly.ZERO)


def hl_coeff_direct(
    datum: RootDatum,
    table: Optional[RootTable],
    lam: Sequence[Number],
    mu: Sequence[Number],
    window: Window,
) -> tpoly.Poly:
    """``c_{λμ}(t) = W_λ(t)^{-1} Σ_w (−1)^{ℓ(w)} p_{γ_w}(−t)``, ``γ_w = λ+ρ − w^{-1}(μ+ρ)``.

    Raises:
        NotDominant: ``λ`` or ``μ`` is not dominant.
        NotBelow: ``μ ≰ λ``.
        OutOfWindow: ``hgt(λ−μ)`` exceeds the window depth.
    """
    lam = _dominant(datum, lam)
    mu = _dominant(datum, mu)
    g = root_difference(datum, mu, lam)
    if g is None:
        raise NotBelow(list(mu), list(lam))
    depth, tdeg = height(g), window.tdeg
    if depth > window.depth:
        raise OutOfWindow(list(mu), window.depth)
    top = lattice.add(lam, datum.rho)
    pairings = integral_pairings(datum, top)
    rows = datum.cartan.entries
    orbit = orbit_by_length(datum, top, depth + tdeg)

    terms: List[Tuple[int, Coords]] = []
    for entry in orbit.entries:
        inv = inversion_set_of_inverse(datum, entry.word)
        if _lower_bound(entry.depth, [height(x) for x in inv], tdeg) > depth:
            continue
        gamma = act_displacement(rows, pairings, tuple(reversed(entry.word)), g)
        if min(gamma) < 0:
            continue
        terms.append((entry.sign, gamma))
    if not terms:
        return tpoly.ZERO
    table = ensure_table(datum, table, max(height(x) for _, x in terms))

    polys = parallel_map(lambda sg: partition_polynomial(table, sg[1], tdeg), terms, get_threads())
    total = tpoly.ZERO
    for (sign, _), p in zip(terms, polys):
        p = tpoly.negate_variable(p)
        total = tpoly.add(total, p if sign > 0 else tpoly.neg(p))
    return tpoly.mul(total, _stabilizer_inverse(datum, lam, tdeg), tdeg)


@dataclass(frozen=True)
class HlExpansion:
    datum: RootDatum
    lam: Vector
    window: Window
    coeffs: Mapping[Vector, tpoly.Poly]

    def coefficient(self, mu: Sequence[Number]) -> tpoly.Poly:
        return self.coeffs.get(lattice.normalize(mu), tpoly.ZERO)

    def rows(self) -> List[dict]:
        return [{"mu": json_vector(mu), "coeffs": list(c)} for mu, c in self.coeffs.items()]


def _dominant_displacements(datum: RootDatum, lam: Vector, depth: int) -> List[Coords]:
    pairings = integral_pairings(datum, lam)
    rows = datum.cartan.entries
    out = [(0,) * datum.size]
    for h in range(1, depth + 1):
        for b in compositions(h, datum.size):
            if all(pairings[i] - sum(a * x for a, x in zip(rows[i], b)) >= 0 for i in range(datum.size)):
                out.append(b)
    return out


def character_expansion(datum: RootDatum, table: Optional[RootTable], series: CharacterSeries) -> HlExpansion:
    """Coefficients of ``series = Σ_μ c_μ χ_μ`` over dominant ``μ`` in its window.

    Reads the coefficient at the shallowest unprocessed dominant weight and
    subtracts that multiple of ``χ_μ``; exact inside the window.
    """
    lam = _dominant(datum, series.base)
    depth, tdeg = series.window.depth, series.window.tdeg
    table = ensure_table(datum, table, depth)
    remainder = series
    coeffs: Dict[Vector, tpoly.Poly] = {}
    for b in _dominant_displacements(datum, lam, depth):
        c = remainder.coefficient_at(b)
        if not c:
            continue
        mu = remainder.weight_of(b)
        coeffs[mu] = c
        chi = weyl_kac_character(datum, table, mu, Window(mu, depth - height(b), tdeg))
        remainder = remainder - chi.rebase(lam, depth).scale(c)
    return HlExpansion(datum=datum, lam=lam, window=series.window, coeffs=MappingProxyType(coeffs))


def hl_coeff_triangular(
    datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window
) -> HlExpansion:
    """``P_λ = Σ_μ c_{λμ} χ_μ`` by top-down subtraction of characters."""
    lam = _dominant(datum, lam)
    _expect_base(window, lam, "hl_coeff_triangular")
    table = ensure_table(datum, table, window.depth)
    return character_expansion(datum, table, hl_function(datum, table, lam, window))


# ---------------------------------------------------------------------------
# MacDonald side
# ---------------------------------------------------------------------------
def macdonald_H(datum: RootDatum, table: Optional[RootTable], lam: Sequence[Number], window: Window) -> CharacterSeries:
    """``H_λ(t) = W_λ(t)^{-1} Σ_{w∈W} w(Δ) e^{wλ}`` in a window based at ``λ``.

    ``Δ = Π_{α>0} ((1 − t e^{−α}) / (1 − e^{−α}))^{m_α}``. For ``γ ∈ N(w^{-1})``
    the factor at ``−γ`` is rewritten as ``(t − e^{−γ})(1 − e^{−γ})^{-1}``, so
    ``w(Δ) = Δ · Π_{γ∈N(w^{-1})} (t − e^{−γ})(1 − t e^{−γ})^{-1}``. A factor
    with ``hgt(γ) > D`` reduces to ``t`` inside the window.
    """
    lam = _dominant(datum, lam)
    _expect_base(window, lam, "macdonald_H")
    depth, tdeg = window.depth, window.tdeg
    n = datum.size
    table = ensure_table(datum, table, depth)
    pairings = integral_pairings(datum, lam)
    rows = datum.cartan.entries
    elements = elements_up_to_length(datum, depth + tdeg)

    def summand(w):
        d = act_displacement(rows, pairings, w.word, (0,) * n)
        if height(d) > depth or w.length + height(d) > depth + tdeg:
            return None
        inv = inversion_set_of_inverse(datum, w.word)
        tall = sum(1 for g in inv if height(g) > depth)
        raw = {d: tpoly.monomial(tall)} if tall <= tdeg else {}
        for gamma in inv:
            if height(gamma) > depth:
                continue
            nxt: Dict[Coords, tpoly.Poly] = {}
            for b, p in raw.items():
                q = tpoly.shift(p, 1, tdeg)
                if q:
                    nxt[b] = tpoly.add(nxt.get(b, tpoly.ZERO), q)
                nb = tuple(x + y for x, y in zip(b, gamma))
                if height(nb) <= depth:
                    nxt[nb] = tpoly.sub(nxt.get(nb, tpoly.ZERO), p)
            raw = {b: p for b, p in nxt.items() if p}
        series = CharacterSeries(datum, window, raw)
        for gamma in inv:
            if height(gamma) <= depth:
                series = times_factor(series, gamma, 1, with_t=True, exponent=-1)
        return series.terms

    acc: Dict[Coords, tpoly.Poly] = {}
    used = 0
    for terms in parallel_map(summand, elements, get_threads()):
        if terms is not None:
            used += 1
            _accumulate(acc, terms)
    Debug.debug(f"macdonald_H at {list(lam)}: {used} of {len(elements)} Weyl elements contribute")
    series = CharacterSeries(datum, window, acc)
    for alpha, mult in table.roots_up_to(depth):
        series = times_factor(series, alpha, mult, with_t=True, exponent=1)
        series = times_factor(series, alpha, mult, with_t=False, exponent=-1)
    return series.scale(_stabilizer_inverse(datum, lam, tdeg))


# ---------------------------------------------------------------------------
# Properties of the coefficients
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class CPropReport:
    integral: bool
    supported: bool
    leading: bool
    vanishing: bool
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.integral and self.supported and self.leading and self.vanishing

    def to_dict(self) -> dict:
        return {
            "integral": self.integral,
            "supported": self.supported,
            "leading": self.leading,
            "vanishing": self.vanishing,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def check_cprop(expansion: HlExpansion) -> CPropReport:
    """Integrality and support, ``c_{λλ} = 1``, and ``c_{λμ}(0) = 0`` below ``λ``."""
    datum, lam = expansion.datum, expansion.lam
    failures = []
    integral = all(isinstance(x, int) for c in expansion.coeffs.values() for x in c)
    if not integral:
        failures.append("non-integer coefficient")
    supported = True
    for mu in expansion.coeffs:
        if not is_dominant_weight(datum, mu) or root_difference(datum, mu, lam) is None:
            supported = False
            failures.append(f"coefficient at {list(mu)} outside the dominant interval below {list(lam)}")
    leading = expansion.coefficient(lam) == tpoly.ONE
    if not leading:
        failures.append(f"c at the highest weight is {tpoly.to_str(expansion.coefficient(lam))}")
    vanishing = True
    for mu, c in expansion.coeffs.items():
        if mu != lam and tpoly.at_zero(c) != 0:
            vanishing = False
            failures.append(f"c at {list(mu)} does not vanish at t=0")
    return CPropReport(integral, supported, leading, vanishing, tuple(failures))


def observed_degree(expansion: HlExpansion) -> Dict[Vector, int]:
    """Top t-degree of each coefficient; equal to the tdeg when it may not have stabilized."""
    return {mu: tpoly.degree(c) for mu, c in expansion.coeffs.items()}


def degrees_stable(expansion: HlExpansion) -> bool:
    return all(tpoly.degree(c) < expansion.window.tdeg for c in expansion.coeffs.values())
