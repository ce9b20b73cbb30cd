#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The truncated character ring.

A :class:`CharacterSeries` is a finite sum ``Σ c_ν(t) e^ν`` with every ``ν``
below a base weight ``β``: terms are stored by their displacement
``b = β − ν`` in simple-root coordinates, ``b ≥ 0`` and ``hgt(b) ≤ depth``,
and every coefficient is an integer polynomial of degree ``≤ tdeg``.

Everything computed here lives in some ``λ − Q^+``, and every factor used to
build series (``(1 − t e^{−α})^{±m}``, ``(1 − e^{−α})^{−m}``) only moves terms
down, so truncating by height after each product never discards anything
that could reach back into the window.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import lattice, tpoly
from .errors import NonUnitLeadingTerm, NotStrictlyDominant, OutOfWindow, WindowError, WindowMismatch
from .gcm_core import RootDatum
from .helper_classes import json_vector
from .lattice import Number, Vector
from .parallel import get_threads, parallel_map
from .roots import Coords, compositions, height
from .weyl import act_on_root_coords, integral_pairings, orbit_within_depth


@dataclass(frozen=True)
class Window:
    base: Vector
    depth: int
    tdeg: int

    def __post_init__(self):
        if self.depth < 0 or self.tdeg < 0:
            raise WindowError(f"window needs depth >= 0 and tdeg >= 0, got {self.depth}, {self.tdeg}")
        object.__setattr__(self, "base", lattice.normalize(self.base))

    def with_base(self, base: Sequence[Number]) -> "Window":
        return Window(tuple(base), self.depth, self.tdeg)


def zero_weight(datum: RootDatum) -> Vector:
    return (0,) * datum.lattice_rank


def _add_into(acc: Dict[Coords, tpoly.Poly], b: Coords, poly: tpoly.Poly) -> None:
    acc[b] = tpoly.add(acc.get(b, tpoly.ZERO), poly)


class CharacterSeries:
    """An immutable element of the truncated character ring."""

    __slots__ = ("datum", "window", "_terms")

    def __init__(self, datum: RootDatum, window: Window, terms: Optional[Mapping[Coords, Sequence[int]]] = None):
        self.datum = datum
        self.window = window
        clean: Dict[Coords, tpoly.Poly] = {}
        for b, poly in (terms or {}).items():
            b = tuple(int(x) for x in b)
            if len(b) != datum.size:
                raise WindowMismatch(f"displacement {b} has the wrong length")
            if min(b, default=0) < 0:
                raise OutOfWindow(list(self._weight(b)), window.depth)
            if height(b) > window.depth:
                continue
            p = tpoly.truncate(poly, window.tdeg)
            if p:
                clean[b] = p
        self._terms = MappingProxyType(clean)

    # -- basic access -------------------------------------------------------
    @property
    def terms(self) -> Mapping[Coords, tpoly.Poly]:
        return self._terms

    @property
    def base(self) -> Vector:
        return self.window.base

    def _weight(self, b: Coords) -> Vector:
        return lattice.sub(self.window.base, self.datum.weight_from_root_coords(b))

    def weight_of(self, b: Coords) -> Vector:
        return self._weight(tuple(b))

    def displacement_of(self, weight: Sequence[Number]) -> Coords:
        """``β − ν`` in simple-root coordinates.

        Raises:
            OutOfWindow: ``ν`` is not below the base or deeper than the window.
        """
        diff = lattice.sub(self.window.base, self.datum.check_weight(weight))
        coords = self.datum.root_coords(diff)
        if coords is None or any(not isinstance(c, int) or c < 0 for c in coords):
            raise OutOfWindow(list(weight), self.window.depth)
        if height(coords) > self.window.depth:
            raise OutOfWindow(list(weight), self.window.depth)
        return tuple(coords)

    def coefficient(self, weight: Sequence[Number]) -> tpoly.Poly:
        return self._terms.get(self.displacement_of(weight), tpoly.ZERO)

    def coefficient_at(self, b: Sequence[int]) -> tpoly.Poly:
        return self._terms.get(tuple(b), tpoly.ZERO)

    def items(self) -> List[Tuple[Vector, tpoly.Poly]]:
        """``(weight, coefficient)`` pairs ordered by (depth, weight)."""
        out = [(height(b), self._weight(b), p) for b, p in self._terms.items()]
        out.sort(key=lambda x: (x[0], x[1]))
        return [(w, p) for _, w, p in out]

    def displacement_items(self) -> List[Tuple[Coords, tpoly.Poly]]:
        return sorted(self._terms.items(), key=lambda bp: (height(bp[0]), self._weight(bp[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterSeries):
            return NotImplemented
        return self.datum == other.datum and self.window == other.window and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((self.window, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        shown = ", ".join(f"{list(w)}: {tpoly.to_str(p)}" for w, p in self.items()[:6])
        more = " ..." if len(self) > 6 else ""
        return f"CharacterSeries(base={list(self.base)}, D={self.window.depth}, T={self.window.tdeg}, {{{shown}{more}}})"

    # -- arithmetic -----------------------------------------------------------
    def _same_shape(self, other: "CharacterSeries") -> Window:
        if self.datum != other.datum:
            raise WindowMismatch("series belong to different root data")
        if self.window.base != other.window.base:
            raise WindowMismatch(f"bases differ: {list(self.base)} vs {list(other.base)}")
        return Window(
            self.window.base,
            min(self.window.depth, other.window.depth),
            min(self.window.tdeg, other.window.tdeg),
        )

    def __add__(self, other: "CharacterSeries") -> "CharacterSeries":
        window = self._same_shape(other)
        acc = dict(self._terms)
        for b, p in other._terms.items():
            _add_into(acc, b, p)
        return CharacterSeries(self.datum, window, acc)

    def __neg__(self) -> "CharacterSeries":
        return CharacterSeries(self.datum, self.window, {b: tpoly.neg(p) for b, p in self._terms.items()})

    def __sub__(self, other: "CharacterSeries") -> "CharacterSeries":
        return self + (-other)

    def __mul__(self, other: "CharacterSeries") -> "CharacterSeries":
        return multiply(self, other)

    def scale(self, poly: Sequence[int]) -> "CharacterSeries":
        """Multiply every coefficient by the t-polynomial ``poly``."""
        tdeg = self.window.tdeg
        return CharacterSeries(self.datum, self.window, {b: tpoly.mul(p, poly, tdeg) for b, p in self._terms.items()})

    def truncate(self, depth: int, tdeg: int) -> "CharacterSeries":
        if depth > self.window.depth or tdeg > self.window.tdeg:
            raise WindowMismatch("cannot truncate to a larger window")
        return CharacterSeries(self.datum, Window(self.base, depth, tdeg), self._terms)

    def shift_weight(self, weight: Sequence[Number]) -> "CharacterSeries":
        """Multiply by ``e^ν``; the base moves by ``ν``."""
        base = lattice.add(self.base, self.datum.check_weight(weight))
        return CharacterSeries(self.datum, self.window.with_base(base), self._terms)

    def raise_by(self, gamma: Sequence[int]) -> "CharacterSeries":
        """Multiply by ``e^{γ}`` for ``γ ∈ Q^+`` keeping the base.

        Raises:
            OutOfWindow: a term would rise above the base.
        """
        gamma = tuple(gamma)
        out = {}
        for b, p in self._terms.items():
            nb = tuple(x - y for x, y in zip(b, gamma))
            if min(nb) < 0:
                raise OutOfWindow(list(self._weight(b)), self.window.depth)
            out[nb] = p
        return CharacterSeries(self.datum, self.window, out)

    def rebase(self, base: Sequence[Number], depth: Optional[int] = None) -> "CharacterSeries":
        """Same series measured from a higher base; terms deeper than ``depth`` drop."""
        shift = self.datum.root_coords(lattice.sub(self.datum.check_weight(base), self.base))
        if shift is None or any(not isinstance(c, int) or c < 0 for c in shift):
            raise WindowMismatch(f"{list(base)} is not above {list(self.base)}")
        depth = self.window.depth + height(shift) if depth is None else depth
        out = {tuple(x + s for x, s in zip(b, shift)): p for b, p in self._terms.items()}
        return CharacterSeries(self.datum, Window(tuple(base), depth, self.window.tdeg), out)

    def at_t_zero(self) -> "CharacterSeries":
        return CharacterSeries(self.datum, self.window, {b: tpoly.trim(p[:1]) for b, p in self._terms.items()})

    # -- serialization ----------------------------------------------------------
    def to_rows(self) -> List[dict]:
        return [{"weight": json_vector(w), "coeffs": list(p)} for w, p in self.items()]

    @classmethod
    def from_rows(cls, datum: RootDatum, window: Window, rows: Iterable[Mapping]) -> "CharacterSeries":
        frame = cls(datum, window)
        terms: Dict[Coords, tpoly.Poly] = {}
        for row in rows:
            weight = tuple(Fraction(x) if isinstance(x, str) else x for x in row["weight"])
            _add_into(terms, frame.displacement_of(weight), tpoly.trim(row["coeffs"]))
        return cls(datum, window, terms)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------
def monomial(datum: RootDatum, window: Window, weight: Sequence[Number], poly: Sequence[int] = tpoly.ONE) -> CharacterSeries:
    """``poly · e^ν``.

    Raises:
        OutOfWindow: ``ν`` is not inside ``window``.
    """
    empty = CharacterSeries(datum, window)
    b = empty.displacement_of(weight)
    return CharacterSeries(datum, window, {b: tpoly.trim(poly)})


def one(datum: RootDatum, depth: int, tdeg: int) -> CharacterSeries:
    return CharacterSeries(datum, Window(zero_weight(datum), depth, tdeg), {(0,) * datum.size: tpoly.ONE})


def multiply(f: CharacterSeries, g: CharacterSeries) -> CharacterSeries:
    """Product; bases add, depth and tdeg take the minimum."""
    if f.datum != g.datum:
        raise WindowMismatch("series belong to different root data")
    depth = min(f.window.depth, g.window.depth)
    tdeg = min(f.window.tdeg, g.window.tdeg)
    base = lattice.add(f.base, g.base)
    acc: Dict[Coords, tpoly.Poly] = {}
    g_items = list(g.terms.items())
    for b1, p1 in f.terms.items():
        h1 = height(b1)
        if h1 > depth:
            continue
        for b2, p2 in g_items:
            if h1 + height(b2) > depth:
                continue
            prod = tpoly.mul(p1, p2, tdeg)
            if prod:
                _add_into(acc, tuple(x + y for x, y in zip(b1, b2)), prod)
    return CharacterSeries(f.datum, Window(base, depth, tdeg), acc)


def product(series: Iterable[CharacterSeries]) -> CharacterSeries:
    it = iter(series)
    out = next(it)
    for s in it:
        out = multiply(out, s)
    return out


def invert(f: CharacterSeries) -> CharacterSeries:
    """Inverse of ``u e^β (1 + lower terms)`` with ``u(0) = ±1``.

    The result is based at ``−β`` with the same depth and tdeg.

    Raises:
        NonUnitLeadingTerm: the coefficient at the base is not a unit.
    """
    n = f.datum.size
    depth, tdeg = f.window.depth, f.window.tdeg
    lead = f.coefficient_at((0,) * n)
    if not lead or lead[0] not in (1, -1):
        raise NonUnitLeadingTerm(lead)
    lead_inv = tpoly.inverse(lead, tdeg)
    lower = [(b, p) for b, p in f.terms.items() if any(b)]
    g: Dict[Coords, tpoly.Poly] = {(0,) * n: lead_inv}
    for h in range(1, depth + 1):
        for b in compositions(h, n):
            acc = tpoly.ZERO
            for b1, p1 in lower:
                rest = tuple(x - y for x, y in zip(b, b1))
                if min(rest) < 0:
                    continue
                q = g.get(rest)
                if q:
                    acc = tpoly.add(acc, tpoly.mul(p1, q, tdeg))
            if acc:
                val = tpoly.neg(tpoly.mul(lead_inv, acc, tdeg))
                if val:
                    g[b] = val
    base = tuple(-x for x in f.base)
    return CharacterSeries(f.datum, Window(base, depth, tdeg), g)


def geometric_factor(
    datum: RootDatum,
    window: Window,
    alpha: Sequence[int],
    mult: int = 1,
    with_t: bool = True,
    exponent: int = 1,
) -> CharacterSeries:
    """``e^{base} · (1 − t^ε e^{−α})^{±m}`` with ``ε = 1`` if ``with_t``.

    ``exponent`` is ``+1`` for the finite binomial power and ``−1`` for the
    geometric series.
    """
    alpha = tuple(int(a) for a in alpha)
    h = height(alpha)
    if h < 1:
        raise ValueError("geometric factors need a positive root")
    eps = 1 if with_t else 0
    terms: Dict[Coords, tpoly.Poly] = {}
    k = 0
    while k * h <= window.depth:
        if exponent > 0:
            if k > mult:
                break
            coeff = comb(mult, k) * (-1) ** k
        else:
            coeff = comb(mult + k - 1, k) if mult > 0 else (1 if k == 0 else 0)
        if eps * k > window.tdeg:
            break
        if coeff:
            terms[tuple(k * a for a in alpha)] = tpoly.monomial(eps * k, coeff)
        k += 1
    return CharacterSeries(datum, window, terms)


def times_factor(
    f: CharacterSeries, alpha: Sequence[int], mult: int = 1, with_t: bool = True, exponent: int = 1
) -> CharacterSeries:
    """``f · (1 − t^ε e^{−α})^{±m}`` within ``f``'s window."""
    factor = geometric_factor(f.datum, Window(zero_weight(f.datum), f.window.depth, f.window.tdeg), alpha, mult, with_t, exponent)
    return multiply(f, factor)


# ---------------------------------------------------------------------------
# The J operator
# ---------------------------------------------------------------------------
def apply_J(datum: RootDatum, beta: Sequence[Number], tail: CharacterSeries) -> CharacterSeries:
    """``Σ_w (−1)^{ℓ(w)} w(tail)`` for a tail based at the strictly dominant ``β``.

    Orbit elements are enumerated to depth ``2D``; each term of the tail is
    moved by ``w`` and kept when it lands in the window. Exact for monomial
    tails and for every tail whose images under deeper orbit elements leave
    the window.

    Raises:
        NotStrictlyDominant: some ``⟨β, α̌_i⟩ < 1``.
        WindowMismatch: ``tail`` is not based at ``β``.
    """
    beta = datum.check_weight(beta)
    if tail.base != beta:
        raise WindowMismatch(f"tail based at {list(tail.base)}, expected {list(beta)}")
    if any(p < 1 for p in integral_pairings(datum, beta)):
        raise NotStrictlyDominant(list(beta))
    depth = tail.window.depth
    orbit = orbit_within_depth(datum, beta, 2 * depth)
    tail_items = list(tail.terms.items())

    def images(entry):
        out = []
        for b, p in tail_items:
            moved = act_on_root_coords(datum, entry.word, b)
            nb = tuple(x + y for x, y in zip(entry.displacement, moved))
            if min(nb) < 0 or height(nb) > depth:
                continue
            out.append((nb, p if entry.sign > 0 else tpoly.neg(p)))
        return out

    acc: Dict[Coords, tpoly.Poly] = {}
    for group in parallel_map(images, orbit.entries, get_threads()):
        for nb, p in group:
            _add_into(acc, nb, p)
    return CharacterSeries(datum, tail.window, acc)


def coefficient(f: CharacterSeries, weight: Sequence[Number]) -> tpoly.Poly:
    return f.coefficient(weight)


def sum_series(datum: RootDatum, window: Window, parts: Iterable[Mapping[Coords, tpoly.Poly]]) -> CharacterSeries:
    acc: Dict[Coords, tpoly.Poly] = defaultdict(tuple)
    for part in parts:
        for b, p in part.items():
            acc[b] = tpoly.add(acc[b], p)
    return CharacterSeries(datum, window, acc)
