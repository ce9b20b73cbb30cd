#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Generalized Cartan matrices and simply-connected Kac-Moody root data.

Conventions used throughout the package:

* Indices are 0-based in the API; validation errors report 1-based positions.
* ``Λ`` and ``Λ̌`` are both ``Z^r`` in mutually dual bases, so the pairing is
  the dot product. The simple coroots of a simply-connected datum are the
  first ``n`` standard basis vectors of ``Λ̌``; row ``i`` of the simple-root
  matrix is ``(a_1i, ..., a_ni | E_i)`` with ``E`` a block of standard basis
  columns completing the rank.
* ``ω_i = e_i`` and ``ρ = (1, ..., 1, 0, ..., 0)``; ``ρ̌`` and the fundamental
  coweights are rational in general and are fixed by setting every free
  direction to zero.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import sympy

from . import lattice
from .debug_utils import Debug
from .errors import (
    AsymmetricZero,
    DiagonalNotTwo,
    DimensionMismatch,
    InputError,
    InvalidDatumFile,
    InternalInvariantError,
    NotSymmetrizable,
    PositiveOffDiagonal,
)
from .lattice import Number, Vector

FINITE = "Finite"
AFFINE = "Affine"
INDEFINITE = "Indefinite"
_KIND_ORDER = {FINITE: 0, AFFINE: 1, INDEFINITE: 2}


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def transpose(self) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix(tuple(zip(*self.entries)))

    def submatrix(self, indices: Sequence[int]) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix(
            tuple(tuple(self.entries[i][j] for j in indices) for i in indices)
        )

    def to_list(self) -> list:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class Symmetrizer:
    d: Tuple[int, ...]

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i: int) -> int:
        return self.d[i]

    def __len__(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class GcmClass:
    """Vinberg class of a GCM.

    ``kind`` is the worst class over the connected components. ``delta`` is
    set when ``kind`` is Affine: the sum of the primitive positive null vectors
    of the affine components, zero on finite components.
    """

    kind: str
    delta: Optional[Tuple[int, ...]] = None
    components: Tuple[Tuple[Tuple[int, ...], str], ...] = ()


# ---------------------------------------------------------------------------
# GCM validation and symmetrization
# ---------------------------------------------------------------------------
def validate_gcm(matrix) -> GeneralizedCartanMatrix:
    """Check the GCM axioms and return a frozen matrix.

    Raises:
        DimensionMismatch: matrix is not square.
        DiagonalNotTwo, PositiveOffDiagonal, AsymmetricZero: axiom failures,
            reported with 1-based positions.
    """
    if isinstance(matrix, GeneralizedCartanMatrix):
        matrix = matrix.entries
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise InputError("empty Cartan matrix")
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch(n, len(row), "Cartan matrix row")
        for x in row:
            if isinstance(x, bool) or int(x) != x:
                raise InputError(f"non-integer Cartan entry {x!r}")
    a = [[int(x) for x in row] for row in rows]

    for i in range(n):
        if a[i][i] != 2:
            raise DiagonalNotTwo(i + 1)
    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise PositiveOffDiagonal(i + 1, j + 1)
    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] == 0 and a[j][i] != 0:
                raise AsymmetricZero(i + 1, j + 1)
    return GeneralizedCartanMatrix(tuple(tuple(row) for row in a))


def dynkin_graph(gcm: GeneralizedCartanMatrix) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(gcm.size))
    for i in range(gcm.size):
        for j in range(i + 1, gcm.size):
            if gcm[i, j] != 0:
                graph.add_edge(i, j)
    return graph


def components(gcm: GeneralizedCartanMatrix) -> list:
    """Connected components of the Dynkin graph as sorted index tuples."""
    comps = [tuple(sorted(c)) for c in nx.connected_components(dynkin_graph(gcm))]
    return sorted(comps)


def symmetrize(gcm: GeneralizedCartanMatrix) -> Symmetrizer:
    """Minimal positive symmetrizer, coprime per connected component.

    Raises:
        NotSymmetrizable: some cycle of the Dynkin graph forces contradictory ratios.
    """
    gcm = validate_gcm(gcm)
    graph = dynkin_graph(gcm)
    d: list = [None] * gcm.size
    for comp in components(gcm):
        root = comp[0]
        d[root] = Fraction(1)
        for i, j in nx.bfs_edges(graph, root):
            d[j] = d[i] * gcm[i, j] / gcm[j, i]
        denom_lcm = reduce(lambda x, y: x * y // gcd(x, y), (d[i].denominator for i in comp), 1)
        ints = [int(d[i] * denom_lcm) for i in comp]
        g = reduce(gcd, ints)
        for i, val in zip(comp, ints):
            d[i] = val // g

    for i in range(gcm.size):
        for j in range(gcm.size):
            if d[i] * gcm[i, j] != d[j] * gcm[j, i]:
                raise NotSymmetrizable(
                    f"NotSymmetrizable: d_{i + 1}*a_{i + 1}{j + 1} != d_{j + 1}*a_{j + 1}{i + 1}"
                )
    return Symmetrizer(tuple(d))


def check_symmetrizer(gcm: GeneralizedCartanMatrix, values: Sequence[int]) -> Symmetrizer:
    """Validate a user supplied symmetrizer."""
    if len(values) != gcm.size:
        raise DimensionMismatch(gcm.size, len(values), "symmetrizer")
    if any(int(v) != v or v <= 0 for v in values):
        raise NotSymmetrizable("NotSymmetrizable: symmetrizer entries must be positive integers")
    values = tuple(int(v) for v in values)
    for i in range(gcm.size):
        for j in range(gcm.size):
            if values[i] * gcm[i, j] != values[j] * gcm[j, i]:
                raise NotSymmetrizable(
                    f"NotSymmetrizable: given symmetrizer fails at ({i + 1},{j + 1})"
                )
    return Symmetrizer(values)


def _optional_symmetrizer(gcm: GeneralizedCartanMatrix) -> Optional[Tuple[int, ...]]:
    try:
        return symmetrize(gcm).d
    except NotSymmetrizable as exc:
        Debug.debug(f"no symmetrizer, the invariant form is unavailable: {exc}")
        return None


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------
def _classify_component(sub: GeneralizedCartanMatrix) -> Tuple[str, Optional[Tuple[int, ...]]]:
    mat = sympy.Matrix(sub.entries)
    k = sub.size
    minors_positive = all(
        mat.extract(list(idx), list(idx)).det() > 0
        for size in range(1, k + 1)
        for idx in combinations(range(k), size)
    )
    if minors_positive:
        return FINITE, None
    null = mat.nullspace()
    if len(null) == 1:
        vec = lattice.normalize(null[0])
        if all(x < 0 for x in vec):
            vec = tuple(-x for x in vec)
        if all(x > 0 for x in vec):
            denom = reduce(
                lambda x, y: x * y // gcd(x, y),
                (Fraction(x).denominator for x in vec),
                1,
            )
            ints = [int(x * denom) for x in vec]
            g = reduce(gcd, ints)
            return AFFINE, tuple(x // g for x in ints)
    return INDEFINITE, None


def classify(gcm: GeneralizedCartanMatrix) -> GcmClass:
    """Finite / Affine / Indefinite, componentwise."""
    gcm = validate_gcm(gcm)
    comp_info = []
    delta = [0] * gcm.size
    worst = FINITE
    for comp in components(gcm):
        kind, vec = _classify_component(gcm.submatrix(comp))
        comp_info.append((comp, kind))
        if kind == AFFINE:
            for i, c in zip(comp, vec):
                delta[i] = c
        if _KIND_ORDER[kind] > _KIND_ORDER[worst]:
            worst = kind
    return GcmClass(
        kind=worst,
        delta=tuple(delta) if worst == AFFINE else None,
        components=tuple(comp_info),
    )


# ---------------------------------------------------------------------------
# Root data
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RootDatum:
    """A Kac-Moody root datum realised on ``Z^r`` with the dot-product pairing."""

    name: str
    cartan: GeneralizedCartanMatrix
    symmetrizer: Optional[Tuple[int, ...]]
    lattice_rank: int
    simple_roots: Tuple[Vector, ...]
    simple_coroots: Tuple[Vector, ...]
    fundamental_weights: Tuple[Vector, ...]
    fundamental_coweights: Tuple[Vector, ...]
    rho: Vector
    rho_check: Vector

    @property
    def size(self) -> int:
        """Number ``n`` of simple roots."""
        return self.cartan.size

    @property
    def pairing_matrix(self) -> np.ndarray:
        return np.eye(self.lattice_rank, dtype=object)

    def require_symmetrizer(self) -> Tuple[int, ...]:
        """The symmetrizer ``d``.

        Raises:
            NotSymmetrizable: the GCM has no symmetrizer, so there is no invariant form.
        """
        if self.symmetrizer is None:
            raise NotSymmetrizable(f"NotSymmetrizable: datum {self.name} has no invariant form")
        return self.symmetrizer

    @cached_property
    def form_matrix(self) -> np.ndarray:
        """``B_ij = d_i a_ij``, the Gram matrix of the invariant form on ``Q``."""
        n = self.size
        d = self.require_symmetrizer()
        return np.array(
            [[d[i] * self.cartan[i, j] for j in range(n)] for i in range(n)],
            dtype=object,
        )

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return self.cartan.as_array()

    @cached_property
    def _root_solver(self) -> lattice.SpanSolver:
        return lattice.SpanSolver(self.simple_roots)

    @cached_property
    def _coroot_solver(self) -> lattice.SpanSolver:
        return lattice.SpanSolver(self.simple_coroots)

    def check_weight(self, v: Sequence[Number], what: str = "weight") -> Vector:
        if len(v) != self.lattice_rank:
            raise DimensionMismatch(self.lattice_rank, len(v), what)
        return lattice.normalize(v)

    def coroot_pairings(self, weight: Sequence[Number]) -> Vector:
        """``(⟨λ, α̌_i⟩)_i``."""
        weight = self.check_weight(weight)
        return tuple(lattice.dot(weight, c) for c in self.simple_coroots)

    def root_pairings(self, coweight: Sequence[Number]) -> Vector:
        """``(⟨α_i, μ̌⟩)_i``."""
        coweight = self.check_weight(coweight, "coweight")
        return tuple(lattice.dot(r, coweight) for r in self.simple_roots)

    def weight_from_root_coords(self, coords: Sequence[Number]) -> Vector:
        return lattice.combine(coords, self.simple_roots, self.lattice_rank)

    def coweight_from_coroot_coords(self, coords: Sequence[Number]) -> Vector:
        return lattice.combine(coords, self.simple_coroots, self.lattice_rank)

    def root_coords(self, v: Sequence[Number]) -> Optional[Vector]:
        """Coordinates of a weight in the simple-root basis, or ``None``."""
        return self._root_solver.solve(self.check_weight(v))

    def coroot_coords(self, v: Sequence[Number]) -> Optional[Vector]:
        return self._coroot_solver.solve(self.check_weight(v, "coweight"))

    def rho_pairing(self, coweight: Sequence[Number]) -> Number:
        return pairing(self, self.rho, coweight)


def pairing(datum: RootDatum, weight: Sequence[Number], coweight: Sequence[Number]) -> Number:
    """``⟨λ, μ̌⟩``.

    Raises:
        DimensionMismatch: a vector does not have length ``r``.
    """
    weight = datum.check_weight(weight)
    coweight = datum.check_weight(coweight, "coweight")
    return lattice.dot(weight, coweight)


def build_simply_connected_datum(gcm, name: str = "") -> RootDatum:
    """Simply-connected root datum with ``r = n + corank(A)``."""
    gcm = validate_gcm(gcm)
    n = gcm.size
    a_t = [list(col) for col in zip(*gcm.entries)]
    corank = n - lattice.rank(gcm.entries)
    r = n + corank

    extra_cols = []
    current = [row[:] for row in a_t]
    for j in range(n):
        if len(extra_cols) == corank:
            break
        trial = [row + [1 if i == j else 0] for i, row in enumerate(current)]
        if lattice.rank(trial) > lattice.rank(current):
            current = trial
            extra_cols.append(j)
    if lattice.rank(current) != n:
        raise InternalInvariantError("could not complete simple roots to full rank")

    simple_roots = tuple(tuple(int(x) for x in row) for row in current)
    simple_coroots = tuple(tuple(1 if k == i else 0 for k in range(r)) for i in range(n))
    fundamental_weights = simple_coroots
    rho = tuple(1 if k < n else 0 for k in range(r))

    fundamental_coweights = tuple(
        lattice.particular_solution(simple_roots, [1 if k == i else 0 for k in range(n)])
        for i in range(n)
    )
    rho_check = lattice.particular_solution(simple_roots, [1] * n)

    datum = RootDatum(
        name=name or f"gcm{n}",
        cartan=gcm,
        symmetrizer=_optional_symmetrizer(gcm),
        lattice_rank=r,
        simple_roots=simple_roots,
        simple_coroots=simple_coroots,
        fundamental_weights=fundamental_weights,
        fundamental_coweights=fundamental_coweights,
        rho=rho,
        rho_check=rho_check,
    )
    Debug.debug(f"built datum {datum.name}: n={n}, corank={corank}, r={r}, E columns={extra_cols}")
    return datum


def with_symmetrizer(datum: RootDatum, values: Sequence[int]) -> RootDatum:
    """Replace the symmetrizer after validating it against the GCM."""
    sym = check_symmetrizer(datum.cartan, values)
    return RootDatum(
        name=datum.name,
        cartan=datum.cartan,
        symmetrizer=sym.d,
        lattice_rank=datum.lattice_rank,
        simple_roots=datum.simple_roots,
        simple_coroots=datum.simple_coroots,
        fundamental_weights=datum.fundamental_weights,
        fundamental_coweights=datum.fundamental_coweights,
        rho=datum.rho,
        rho_check=datum.rho_check,
    )


_DUAL_SUFFIX = "^dual"


def dual_datum(datum: RootDatum) -> RootDatum:
    """Exchange roots and coroots; the GCM is transposed."""
    if datum.name.endswith(_DUAL_SUFFIX):
        name = datum.name[: -len(_DUAL_SUFFIX)]
    else:
        name = datum.name + _DUAL_SUFFIX
    cartan = validate_gcm(datum.cartan.transpose())
    return RootDatum(
        name=name,
        cartan=cartan,
        symmetrizer=_optional_symmetrizer(cartan),
        lattice_rank=datum.lattice_rank,
        simple_roots=datum.simple_coroots,
        simple_coroots=datum.simple_roots,
        fundamental_weights=datum.fundamental_coweights,
        fundamental_coweights=datum.fundamental_weights,
        rho=datum.rho_check,
        rho_check=datum.rho,
    )


def check_datum(datum: RootDatum) -> None:
    """Verify every root datum invariant.

    Raises:
        InternalInvariantError: naming the first violated invariant.
    """
    n, r = datum.size, datum.lattice_rank
    corank = n - lattice.rank(datum.cartan.entries)
    if r != n + corank:
        raise InternalInvariantError(f"rank {r} != n + corank = {n + corank}")
    for i in range(n):
        for j in range(n):
            if pairing(datum, datum.simple_roots[j], datum.simple_coroots[i]) != datum.cartan[i, j]:
                raise InternalInvariantError(f"<alpha_{j}, coroot_{i}> != a_{i}{j}")
    if lattice.rank(datum.simple_roots) != n or lattice.rank(datum.simple_coroots) != n:
        raise InternalInvariantError("simple roots or coroots are dependent")
    for i in range(n):
        for j in range(n):
            want = 1 if i == j else 0
            if pairing(datum, datum.fundamental_weights[i], datum.simple_coroots[j]) != want:
                raise InternalInvariantError(f"<omega_{i}, coroot_{j}> != {want}")
            if pairing(datum, datum.simple_roots[j], datum.fundamental_coweights[i]) != want:
                raise InternalInvariantError(f"<alpha_{j}, coweight_{i}> != {want}")
        if pairing(datum, datum.rho, datum.simple_coroots[i]) != 1:
            raise InternalInvariantError(f"<rho, coroot_{i}> != 1")
        if pairing(datum, datum.simple_roots[i], datum.rho_check) != 1:
            raise InternalInvariantError(f"<alpha_{i}, rho_check> != 1")
    d = datum.symmetrizer
    if d is None:
        return
    for i in range(n):
        for j in range(n):
            if d[i] * datum.cartan[i, j] != d[j] * datum.cartan[j, i]:
                raise InternalInvariantError("symmetrizer relation fails")


# ---------------------------------------------------------------------------
# Invariant forms
# ---------------------------------------------------------------------------
def bilinear_form(datum: RootDatum, x: Sequence[Number], y: Sequence[Number]) -> Number:
    """``(x, y)`` for root-lattice vectors given in simple-root coordinates."""
    n = datum.size
    if len(x) != n:
        raise DimensionMismatch(n, len(x), "root-lattice vector")
    if len(y) != n:
        raise DimensionMismatch(n, len(y), "root-lattice vector")
    vx = np.array(x, dtype=object)
    vy = np.array(y, dtype=object)
    return lattice.to_number(vx.dot(datum.form_matrix).dot(vy))


def weight_root_form(datum: RootDatum, weight: Sequence[Number], coords: Sequence[Number]) -> Number:
    """``(λ, β)`` for a weight and a root-lattice vector, via ``(λ, α_i) = d_i⟨λ, α̌_i⟩``."""
    d = datum.require_symmetrizer()
    p = datum.coroot_pairings(weight)
    return lattice.to_number(sum(c * d[i] * p[i] for i, c in enumerate(coords)))


def invariant_form_gram(datum: RootDatum, gauge: Number = 0) -> Tuple[Vector, ...]:
    """A symmetric Gram matrix ``G`` on ``Λ⊗Q`` with ``(α_i, x) = d_i⟨x, α̌_i⟩``.

    The condition leaves a family of solutions; every free parameter is set
    to ``gauge``.
    """
    n, r = datum.size, datum.lattice_rank
    d = datum.require_symmetrizer()
    slots = {}
    for a_idx in range(r):
        for b_idx in range(a_idx, r):
            slots[(a_idx, b_idx)] = len(slots)

    def slot(a_idx: int, b_idx: int) -> int:
        return slots[(min(a_idx, b_idx), max(a_idx, b_idx))]

    rows, rhs = [], []
    for i in range(n):
        coroot = datum.simple_coroots[i]
        for c in range(r):
            row = [0] * len(slots)
            for b in range(r):
                coeff = datum.simple_roots[i][b]
                if coeff:
                    row[slot(b, c)] += coeff
            rows.append(row)
            rhs.append(d[i] * coroot[c])
    try:
        sol = lattice.particular_solution(rows, rhs, gauge)
    except ValueError as exc:
        raise InternalInvariantError(f"no invariant form extension: {exc}") from exc
    return tuple(tuple(sol[slot(a_idx, b_idx)] for b_idx in range(r)) for a_idx in range(r))


def weight_form(
    datum: RootDatum, x: Sequence[Number], y: Sequence[Number], gauge: Number = 0
) -> Number:
    gram = np.array(invariant_form_gram(datum, gauge), dtype=object)
    vx = np.array(datum.check_weight(x), dtype=object)
    vy = np.array(datum.check_weight(y), dtype=object)
    return lattice.to_number(vx.dot(gram).dot(vy))


# ---------------------------------------------------------------------------
# Datum files
# ---------------------------------------------------------------------------
def datum_from_mapping(doc: Mapping, default_name: str = "") -> RootDatum:
    """Build a datum from ``{"name", "cartan", "symmetrizer"?}``."""
    if not isinstance(doc, Mapping) or "cartan" not in doc:
        raise InvalidDatumFile("datum document needs a 'cartan' entry")
    cartan = doc["cartan"]
    if not isinstance(cartan, list) or not all(isinstance(row, list) for row in cartan):
        raise InvalidDatumFile("'cartan' must be a list of integer rows")
    name = doc.get("name") or default_name
    datum = build_simply_connected_datum(cartan, name=str(name))
    if doc.get("symmetrizer") is not None:
        datum = with_symmetrizer(datum, doc["symmetrizer"])
    return datum


def load_datum_file(source: Union[str, Path], catalog: Optional[Mapping] = None) -> RootDatum:
    """Load a datum from a JSON file, or by name from the configured catalog.

    Raises:
        InvalidDatumFile: unreadable file, bad JSON, or unknown name.
    """
    path = Path(source)
    if path.exists():
        try:
            with open(path, "r", encoding="utf-8") as f:
                doc = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidDatumFile(f"cannot read datum file {path}: {exc}") from exc
        Debug.info(f"Loaded datum file {path}")
        return datum_from_mapping(doc, default_name=path.stem)
    if catalog and str(source) in catalog:
        entry = catalog[str(source)]
        if isinstance(entry, list):
            entry = {"cartan": entry}
        return datum_from_mapping(dict(entry), default_name=str(source))
    raise InvalidDatumFile(f"datum '{source}' is neither a file nor a catalog name")


def datum_to_mapping(datum: RootDatum) -> dict:
    """Serializable description of a datum, used by ``validate``."""
    cls = classify(datum.cartan)
    return {
        "name": datum.name,
        "cartan": datum.cartan.to_list(),
        "symmetrizer": list(datum.symmetrizer) if datum.symmetrizer is not None else None,
        "class": cls.kind,
        "delta": list(cls.delta) if cls.delta else None,
        "components": [{"indices": list(c), "class": k} for c, k in cls.components],
        "lattice_rank": datum.lattice_rank,
        "simple_roots": [list(v) for v in datum.simple_roots],
        "simple_coroots": [list(v) for v in datum.simple_coroots],
        "rho": list(datum.rho),
        "rho_check": [str(x) if isinstance(x, Fraction) else x for x in datum.rho_check],
    }
