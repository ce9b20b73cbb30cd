#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weyl group combinatorics.

Weights in orbit computations are tracked as displacements: for an anchor
weight ``β`` with coroot pairings ``p`` the point ``β − Σ g_j α_j`` is stored
as ``g``. The reflection ``s_i`` then only needs ``p_i − (A g)_i``, so all
orbit work happens on integer vectors regardless of the lattice basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import lattice, tpoly
from .debug_utils import Debug
from .errors import InputError, InvalidWord, NotDominant, NotStrictlyDominant
from .gcm_core import RootDatum
from .lattice import Number, Vector
from .parallel import get_threads, parallel_map
from .roots import Coords, height, reflect_root_coords

Word = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Displacement primitives
# ---------------------------------------------------------------------------
def _cartan_rows(datum: RootDatum) -> Tuple[Tuple[int, ...], ...]:
    return datum.cartan.entries


def reflect_displacement(
    rows: Sequence[Sequence[int]], pairings: Sequence[int], i: int, g: Sequence[int]
) -> Tuple[Coords, int]:
    """Apply ``s_i`` to the point with displacement ``g``; returns the new displacement and the pairing used."""
    q = pairings[i] - sum(a * b for a, b in zip(rows[i], g))
    out = list(g)
    out[i] += q
    return tuple(out), q


def act_displacement(
    rows: Sequence[Sequence[int]], pairings: Sequence[int], word: Sequence[int], g: Sequence[int]
) -> Coords:
    """Apply ``w = s_{i1}...s_{ik}`` (rightmost first) to the point with displacement ``g``."""
    g = tuple(g)
    for i in reversed(word):
        g, _ = reflect_displacement(rows, pairings, i, g)
    return g


def integral_pairings(datum: RootDatum, weight: Sequence[Number]) -> Tuple[int, ...]:
    pairings = datum.coroot_pairings(weight)
    if any(isinstance(x, Fraction) for x in pairings):
        raise InputError(f"{list(weight)} is not an integral weight")
    return tuple(int(x) for x in pairings)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------
def _check_word(datum: RootDatum, word: Iterable[int]) -> Word:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 0 <= i < datum.size:
            raise InvalidWord(f"reflection index {i} outside 0..{datum.size - 1}")
    return word


def reduce_word(datum: RootDatum, word: Iterable[int]) -> Word:
    """ShortLex-minimal reduced word of the element represented by ``word``.

    Uses the action on ``ρ``: ``s_i`` is a left descent of ``w`` exactly when
    ``⟨wρ, α̌_i⟩ < 0``; peeling the smallest descent each time gives the
    lexicographically smallest reduced word.
    """
    word = _check_word(datum, word)
    rows = _cartan_rows(datum)
    ones = (1,) * datum.size
    g = act_displacement(rows, ones, word, (0,) * datum.size)
    out: List[int] = []
    while any(g):
        for i in range(datum.size):
            q = 1 - sum(a * b for a, b in zip(rows[i], g))
            if q < 0:
                g, _ = reflect_displacement(rows, ones, i, g)
                out.append(i)
                break
        else:  # pragma: no cover - g != 0 always has a descent
            raise InputError("descent search failed")
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    """An element of ``W`` stored as its ShortLex-minimal reduced word."""

    word: Word = ()

    @classmethod
    def from_word(cls, datum: RootDatum, word: Iterable[int]) -> "WeylElement":
        return cls(reduce_word(datum, word))

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def inverse(self, datum: RootDatum) -> "WeylElement":
        return WeylElement.from_word(datum, reversed(self.word))

    def __mul__(self, other: "WeylElement") -> Word:
        """Concatenated (unreduced) word; reduce with :meth:`from_word`."""
        return self.word + other.word


def _word_of(w: Union[WeylElement, Sequence[int]]) -> Word:
    return w.word if isinstance(w, WeylElement) else tuple(w)


def length_and_sign(datum: RootDatum, word: Sequence[int]) -> Tuple[int, int]:
    ell = len(reduce_word(datum, word))
    return ell, (-1 if ell % 2 else 1)


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------
def reflect(datum: RootDatum, i: int, weight: Sequence[Number]) -> Vector:
    """``s_i(λ) = λ − ⟨λ, α̌_i⟩ α_i``."""
    weight = datum.check_weight(weight)
    p = lattice.dot(weight, datum.simple_coroots[i])
    return lattice.normalize(x - p * a for x, a in zip(weight, datum.simple_roots[i]))


def reflect_coweight(datum: RootDatum, i: int, coweight: Sequence[Number]) -> Vector:
    """``s_i(μ̌) = μ̌ − ⟨α_i, μ̌⟩ α̌_i``."""
    coweight = datum.check_weight(coweight, "coweight")
    p = lattice.dot(datum.simple_roots[i], coweight)
    return lattice.normalize(x - p * a for x, a in zip(coweight, datum.simple_coroots[i]))


def act(datum: RootDatum, w: Union[WeylElement, Sequence[int]], weight: Sequence[Number]) -> Vector:
    out = datum.check_weight(weight)
    for i in reversed(_check_word(datum, _word_of(w))):
        out = reflect(datum, i, out)
    return out


def act_coweight(datum: RootDatum, w: Union[WeylElement, Sequence[int]], coweight: Sequence[Number]) -> Vector:
    out = datum.check_weight(coweight, "coweight")
    for i in reversed(_check_word(datum, _word_of(w))):
        out = reflect_coweight(datum, i, out)
    return out


def act_on_root_coords(datum: RootDatum, w: Union[WeylElement, Sequence[int]], coords: Sequence[int]) -> Coords:
    rows = _cartan_rows(datum)
    out = tuple(coords)
    for i in reversed(_check_word(datum, _word_of(w))):
        out = reflect_root_coords(rows, i, out)
    return out


def act_on_coroot_coords(datum: RootDatum, w: Union[WeylElement, Sequence[int]], coords: Sequence[int]) -> Coords:
    """``w`` on the coroot lattice in simple-coroot coordinates (the transposed Cartan matrix)."""
    rows = datum.cartan.transpose().entries
    out = tuple(coords)
    for i in reversed(_check_word(datum, _word_of(w))):
        out = reflect_root_coords(rows, i, out)
    return out


def _sorted_roots(roots: Iterable[Coords]) -> Tuple[Coords, ...]:
    return tuple(sorted(roots, key=lambda a: (height(a), a)))


def inversion_set(datum: RootDatum, w: Union[WeylElement, Sequence[int]]) -> Tuple[Coords, ...]:
    """``{α > 0 : wα < 0}`` for a reduced word, in simple-root coordinates."""
    word = _check_word(datum, _word_of(w))
    rows = _cartan_rows(datum)
    n = datum.size
    out = []
    for k in range(len(word)):
        root = tuple(1 if j == word[k] else 0 for j in range(n))
        for i in word[k + 1:]:
            root = reflect_root_coords(rows, i, root)
        out.append(root)
    return _sorted_roots(out)


def inversion_set_of_inverse(datum: RootDatum, w: Union[WeylElement, Sequence[int]]) -> Tuple[Coords, ...]:
    """``N(w^{-1}) = {γ > 0 : w^{-1}γ < 0}``."""
    return inversion_set(datum, tuple(reversed(_word_of(w))))


# ---------------------------------------------------------------------------
# Orbits
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class OrbitEntry:
    weight: Vector
    displacement: Coords
    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    @property
    def depth(self) -> int:
        return height(self.displacement)


@dataclass(frozen=True)
class OrbitSlice:
    base: Vector
    depth: Optional[int]
    max_length: Optional[int]
    entries: Tuple[OrbitEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def weights(self) -> List[Vector]:
        return [e.weight for e in self.entries]

    def by_weight(self, weight: Sequence[Number]) -> Optional[OrbitEntry]:
        weight = lattice.normalize(weight)
        for e in self.entries:
            if e.weight == weight:
                return e
        return None


def _children(rows, pairings, node, max_depth):
    g, word = node
    out = []
    for i in range(len(pairings)):
        child, q = reflect_displacement(rows, pairings, i, g)
        if q <= 0:
            continue
        if max_depth is not None and height(child) > max_depth:
            continue
        out.append((child, (i,) + word))
    return out


def regular_orbit(
    rows: Sequence[Sequence[int]],
    pairings: Sequence[int],
    max_depth: Optional[int] = None,
    max_length: Optional[int] = None,
) -> List[Tuple[Coords, Word]]:
    """BFS over the orbit of a strictly dominant point, level = length.

    Returns ``(displacement, reduced word)`` pairs ordered by (length, depth,
    displacement). Along length-increasing steps the depth strictly grows, so
    a depth bound prunes without losing elements.
    """
    if max_depth is None and max_length is None:
        raise ValueError("an unbounded orbit needs a depth or length bound")
    if any(p < 1 for p in pairings):
        raise NotStrictlyDominant(list(pairings))
    n = len(pairings)
    start = ((0,) * n, ())
    result = [start]
    seen = {start[0]}
    frontier = [start]
    level = 0
    threads = get_threads()
    while frontier and (max_length is None or level < max_length):
        kids = parallel_map(lambda node: _children(rows, pairings, node, max_depth), frontier, threads)
        nxt = []
        for group in kids:
            for child, word in group:
                if child not in seen:
                    seen.add(child)
                    nxt.append((child, word))
        nxt.sort(key=lambda cw: (height(cw[0]), cw[0]))
        result.extend(nxt)
        frontier = nxt
        level += 1
        Debug.debug(f"orbit BFS level {level}: {len(nxt)} new elements")
    return result


def _slice(datum, base, pairings, max_depth, max_length) -> OrbitSlice:
    entries = []
    for g, word in regular_orbit(_cartan_rows(datum), pairings, max_depth, max_length):
        weight = lattice.sub(base, datum.weight_from_root_coords(g))
        entries.append(OrbitEntry(weight=weight, displacement=g, word=word))
    return OrbitSlice(base=base, depth=max_depth, max_length=max_length, entries=tuple(entries))


def orbit_within_depth(datum: RootDatum, beta: Sequence[Number], depth: int) -> OrbitSlice:
    """Every ``w(β)`` with ``β − w(β) ∈ Q^+`` of height at most ``depth``.

    Raises:
        NotStrictlyDominant: some ``⟨β, α̌_i⟩ < 1``.
    """
    base = datum.check_weight(beta)
    pairings = integral_pairings(datum, base)
    if any(p < 1 for p in pairings):
        raise NotStrictlyDominant(list(base))
    return _slice(datum, base, pairings, depth, None)


def orbit_by_length(
    datum: RootDatum, beta: Sequence[Number], max_length: int, max_depth: Optional[int] = None
) -> OrbitSlice:
    """Every ``w(β)`` with ``ℓ(w) ≤ max_length`` (and depth bound if given)."""
    base = datum.check_weight(beta)
    pairings = integral_pairings(datum, base)
    if any(p < 1 for p in pairings):
        raise NotStrictlyDominant(list(base))
    return _slice(datum, base, pairings, max_depth, max_length)


def elements_up_to_length(datum: RootDatum, max_length: int) -> List[WeylElement]:
    """All ``w`` with ``ℓ(w) ≤ max_length``, ordered by length."""
    nodes = regular_orbit(_cartan_rows(datum), (1,) * datum.size, None, max_length)
    return [WeylElement.from_word(datum, word) for _, word in nodes]


# ---------------------------------------------------------------------------
# Stabilizers and dominance
# ---------------------------------------------------------------------------
def stabilizer_indices(datum: RootDatum, vector: Sequence[Number], coweight: bool = False) -> Tuple[int, ...]:
    if coweight:
        pairings = datum.root_pairings(vector)
    else:
        pairings = datum.coroot_pairings(vector)
    if any(p < 0 for p in pairings):
        raise NotDominant(list(vector))
    return tuple(i for i, p in enumerate(pairings) if p == 0)


def stabilizer_poincare(
    datum: RootDatum, vector: Sequence[Number], tdeg: int, coweight: bool = False
) -> tpoly.Poly:
    """``W_λ(t) = Σ_{σ ∈ W_λ} t^{ℓ(σ)}`` truncated at degree ``tdeg``.

    ``W_λ`` is the parabolic subgroup generated by the simple reflections
    fixing ``λ``. Set ``coweight`` to pair against simple roots instead.
    """
    indices = stabilizer_indices(datum, vector, coweight)
    if not indices:
        return tpoly.ONE
    sub_rows = tuple(tuple(datum.cartan[i, j] for j in indices) for i in indices)
    counts = [0] * (tdeg + 1)
    for _, word in regular_orbit(sub_rows, (1,) * len(indices), None, tdeg):
        counts[len(word)] += 1
    return tpoly.trim(counts)


def _span_coords(datum: RootDatum, diff: Vector, coweight: bool) -> Optional[Vector]:
    return datum.coroot_coords(diff) if coweight else datum.root_coords(diff)


def _nonneg_integral(coords: Optional[Vector]) -> bool:
    if coords is None:
        return False
    return all(not isinstance(c, Fraction) and c >= 0 for c in coords)


def dominance_leq(datum: RootDatum, lower: Sequence[Number], upper: Sequence[Number]) -> bool:
    """``μ̌ ≤ λ̌``: the difference is an N-combination of simple coroots."""
    diff = lattice.sub(datum.check_weight(upper, "coweight"), datum.check_weight(lower, "coweight"))
    return _nonneg_integral(_span_coords(datum, diff, True))


def weight_dominance_leq(datum: RootDatum, lower: Sequence[Number], upper: Sequence[Number]) -> bool:
    """``μ ≤ λ`` for weights: the difference is an N-combination of simple roots."""
    diff = lattice.sub(datum.check_weight(upper), datum.check_weight(lower))
    return _nonneg_integral(_span_coords(datum, diff, False))


def coroot_difference(datum: RootDatum, lower: Sequence[Number], upper: Sequence[Number]) -> Optional[Coords]:
    """Simple-coroot coordinates of ``upper − lower`` when it lies in ``Q̌^+``."""
    diff = lattice.sub(datum.check_weight(upper, "coweight"), datum.check_weight(lower, "coweight"))
    coords = datum.coroot_coords(diff)
    if not _nonneg_integral(coords):
        return None
    return tuple(int(c) for c in coords)


def root_difference(datum: RootDatum, lower: Sequence[Number], upper: Sequence[Number]) -> Optional[Coords]:
    """Simple-root coordinates of ``upper − lower`` when it lies in ``Q^+``."""
    diff = lattice.sub(datum.check_weight(upper), datum.check_weight(lower))
    coords = datum.root_coords(diff)
    if not _nonneg_integral(coords):
        return None
    return tuple(int(c) for c in coords)


def is_dominant(datum: RootDatum, coweight: Sequence[Number]) -> bool:
    """``⟨α_i, λ̌⟩ ≥ 0`` for all ``i``."""
    return all(p >= 0 for p in datum.root_pairings(coweight))


def is_dominant_weight(datum: RootDatum, weight: Sequence[Number]) -> bool:
    return all(p >= 0 for p in datum.coroot_pairings(weight))
