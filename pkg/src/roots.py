#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Positive roots and their multiplicities up to a height cutoff.

Multiplicities come from the Peterson recursion over ``Q^+`` ordered by
height, then lexicographically::

    c_β = Σ_{k≥1} m_{β/k} / k
    (β, β − 2ρ) c_β = Σ_{β'+β''=β} (β', β'') c_{β'} c_{β''}

with ``(ρ, α_i) = d_i``. Simple roots are the base case and vectors with a
disconnected support are never roots. Both divisions must be exact;
anything else aborts with :class:`NonIntegralMultiplicity`.

Computed heights are kept per GCM/symmetrizer pair and extended on demand, so
asking for a deeper table resumes the recursion instead of restarting it.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .debug_utils import Debug
from .errors import DimensionMismatch, NonIntegralMultiplicity, NotARoot, OutOfWindow
from .gcm_core import RootDatum, dynkin_graph

Coords = Tuple[int, ...]


@dataclass(frozen=True)
class Root:
    coords: Coords

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)


def height(coords: Sequence[int]) -> int:
    return sum(coords)


def compositions(total: int, parts: int) -> Iterator[Coords]:
    """All non-negative integer vectors of length ``parts`` summing to ``total``, lex ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def vectors_by_height(parts: int, max_height: int) -> Iterator[Coords]:
    for h in range(1, max_height + 1):
        yield from compositions(h, parts)


@dataclass(frozen=True, eq=False)
class RootTable:
    """Positive roots of height at most ``depth`` with multiplicities."""

    datum: RootDatum
    depth: int
    mults: Mapping[Coords, int]
    real: frozenset

    @property
    def positive_roots(self) -> List[Coords]:
        return sorted(self.mults, key=lambda a: (height(a), a))

    def roots_up_to(self, max_height: int) -> List[Tuple[Coords, int]]:
        return [(a, self.mults[a]) for a in self.positive_roots if height(a) <= max_height]

    def restrict(self, depth: int) -> "RootTable":
        if depth >= self.depth:
            return self
        mults = {a: m for a, m in self.mults.items() if height(a) <= depth}
        return RootTable(
            datum=self.datum,
            depth=depth,
            mults=MappingProxyType(mults),
            real=frozenset(a for a in self.real if height(a) <= depth),
        )

    def rows(self) -> List[dict]:
        return [
            {"coords": list(a), "height": height(a), "mult": self.mults[a], "real": a in self.real}
            for a in self.positive_roots
        ]


class _PetersonState:
    """Recursion state for one GCM/symmetrizer pair, extended height by height."""

    def __init__(self, datum: RootDatum):
        self.n = datum.size
        self.form = [[int(x) for x in row] for row in datum.form_matrix]
        self.sym = datum.require_symmetrizer()
        self.graph = dynkin_graph(datum.cartan)
        self.depth = 0
        self.c: Dict[Coords, Fraction] = {}
        self.mults: Dict[Coords, int] = {}
        self.real: set = set()
        self._connected: Dict[frozenset, bool] = {}
        self.lock = threading.Lock()

    def image(self, x: Coords) -> Coords:
        """``B x`` so that ``(x, y) = Σ_j (Bx)_j y_j``."""
        return tuple(sum(row[k] * x[k] for k in range(self.n)) for row in self.form)

    def pair(self, x: Coords, y: Coords) -> int:
        return sum(a * b for a, b in zip(self.image(x), y))

    def _support_connected(self, beta: Coords) -> bool:
        support = frozenset(i for i, b in enumerate(beta) if b)
        if support not in self._connected:
            self._connected[support] = nx.is_connected(self.graph.subgraph(support))
        return self._connected[support]

    def _divisor_sum(self, beta: Coords, h: int) -> Fraction:
        """``Σ_{k≥2} m_{β/k} / k``."""
        total = Fraction(0)
        for k in range(2, h + 1):
            if all(b % k == 0 for b in beta):
                total += Fraction(self.mults.get(tuple(b // k for b in beta), 0), k)
        return total

    def extend(self, depth: int) -> None:
        for h in range(self.depth + 1, depth + 1):
            self._height(h)
            self.depth = h
            Debug.debug(f"Peterson recursion: height {h} done, {len(self.mults)} positive roots")

    def _height(self, h: int) -> None:
        known = [(g, self.image(g), c) for g, c in self.c.items()]
        for beta in compositions(h, self.n):
            if h == 1:
                self.c[beta] = Fraction(1)
                self.mults[beta] = 1
                self.real.add(beta)
                continue
            if not self._support_connected(beta):
                continue
            coef = self.pair(beta, beta) - 2 * sum(d * b for d, b in zip(self.sym, beta))
            rhs = Fraction(0)
            for gamma, b_gamma, c_gamma in known:
                delta = tuple(b - g for b, g in zip(beta, gamma))
                if min(delta) < 0:
                    continue
                c_delta = self.c.get(delta)
                if c_delta:
                    rhs += sum(a * b for a, b in zip(b_gamma, delta)) * c_gamma * c_delta
            if coef == 0:
                # β = h·α with α real of height h, or not a multiple of a root at all
                if rhs != 0:
                    raise NonIntegralMultiplicity(
                        f"Peterson recursion: (β,β-2ρ)=0 with non-zero right side at {beta}"
                    )
                c_beta = self._divisor_sum(beta, h)
                if c_beta:
                    self.c[beta] = c_beta
                continue
            c_beta = rhs / coef
            if c_beta == 0:
                continue
            self.c[beta] = c_beta
            mult = c_beta - self._divisor_sum(beta, h)
            if mult.denominator != 1 or mult < 0:
                raise NonIntegralMultiplicity(
                    f"Peterson recursion: multiplicity {mult} of {beta} is not a non-negative integer"
                )
            if mult:
                self.mults[beta] = int(mult)
                if self.pair(beta, beta) > 0:
                    self.real.add(beta)
                    if mult != 1:
                        raise NonIntegralMultiplicity(
                            f"real root {beta} has multiplicity {mult}"
                        )


_STATES: Dict[Tuple, _PetersonState] = {}
_STATES_LOCK = threading.Lock()


def enumerate_roots(datum: RootDatum, depth: int) -> RootTable:
    """Positive roots of height at most ``depth``, exact for every height in range.

    Raises:
        NotSymmetrizable: the datum has no invariant form.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    key = (datum.cartan, datum.require_symmetrizer())
    with _STATES_LOCK:
        state = _STATES.get(key)
        if state is None:
            state = _STATES[key] = _PetersonState(datum)
    with state.lock:
        if state.depth < depth:
            state.extend(depth)
        mults = {a: m for a, m in state.mults.items() if height(a) <= depth}
        real = frozenset(a for a in state.real if height(a) <= depth)
    return RootTable(datum=datum, depth=depth, mults=MappingProxyType(mults), real=real)


def _absolute(table: RootTable, alpha: Sequence[int]) -> Coords:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != table.datum.size:
        raise DimensionMismatch(table.datum.size, len(alpha), "root coordinates")
    if all(a <= 0 for a in alpha):
        alpha = tuple(-a for a in alpha)
    return alpha


def multiplicity(table: RootTable, alpha: Sequence[int]) -> int:
    """``m_α``; zero when ``α`` is not a root.

    Raises:
        OutOfWindow: ``hgt(|α|)`` exceeds the table depth.
    """
    alpha = _absolute(table, alpha)
    if any(a < 0 for a in alpha):
        return 0
    if height(alpha) > table.depth:
        raise OutOfWindow(list(alpha), table.depth)
    return table.mults.get(alpha, 0)


def is_real(table: RootTable, alpha: Sequence[int]) -> bool:
    """Whether ``α`` is a real root, i.e. ``(α, α) > 0``.

    Raises:
        NotARoot: ``α`` has multiplicity zero.
    """
    if multiplicity(table, alpha) == 0:
        raise NotARoot(alpha)
    return _absolute(table, alpha) in table.real


def reflect_root_coords(cartan_rows: Sequence[Sequence[int]], i: int, x: Sequence[int]) -> Coords:
    """``s_i`` on a root-lattice vector in simple-root coordinates."""
    pairing = sum(a * b for a, b in zip(cartan_rows[i], x))
    out = list(x)
    out[i] -= pairing
    return tuple(out)


def real_roots_by_orbit(datum: RootDatum, depth: int) -> frozenset:
    """Positive real roots of height at most ``depth`` as the orbit of the simple roots."""
    n = datum.size
    rows = datum.cartan.entries
    frontier = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n):
                y = reflect_root_coords(rows, i, x)
                if min(y) < 0 or height(y) > depth or y in seen:
                    continue
                seen.add(y)
                nxt.append(y)
        frontier = nxt
    return frozenset(x for x in seen if height(x) <= depth)


def ensure_table(datum: RootDatum, table: Optional[RootTable], depth: int) -> RootTable:
    """``table`` if it belongs to ``datum`` and reaches ``depth``, a fresh enumeration otherwise."""
    if table is not None and table.datum.cartan == datum.cartan and table.depth >= depth:
        if table.datum.symmetrizer == datum.symmetrizer:
            return table
    return enumerate_roots(datum, depth)
