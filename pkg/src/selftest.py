#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Oracle suites run by ``km-satake selftest``.

Each suite compares two independent computations of the same quantity on a
small grid of highest weights and reports one :class:`Check` per case. A
suite that raises is reported as failed with the exception text.
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import lattice, tpoly
from .characters import freudenthal_multiplicity, weight_multiplicity, weyl_kac_character
from .charseries import CharacterSeries, Window, one, times_factor
from .debug_utils import Debug
from .errors import KmSatakeError, WindowTooSmall
from .gcm_core import FINITE, INDEFINITE, RootDatum, classify, dual_datum, load_datum_file
from .hall_littlewood import (
    check_cprop,
    hl_coeff_direct,
    hl_coeff_triangular,
    hl_function,
    j_of_e_rho,
    macdonald_H,
)
from .helper_classes import config_value, import_config
from .lattice import Vector
from .parallel import get_threads, parallel_map
from .roots import RootTable, compositions, enumerate_roots
from .satake_mv import (
    coroot_step_witness,
    coroot_sum_closure,
    gamma_count,
    mv_prediction,
    satake_transform,
    strata_interval,
)
from .weyl import dominance_leq, elements_up_to_length, is_dominant

DEFAULT_LEVELS = {
    "quick": {"depth": 4, "tdeg": 4, "data": ["A1"], "grid": 3, "max_length": 3, "samples": 20},
    "full": {
        "depth": 6,
        "tdeg": 6,
        "data": ["A1", "A2", "affine_A1", "hyperbolic_3"],
        "grid": 5,
        "max_length": 6,
        "samples": 100,
        "overrides": {"affine_A1": {"depth": 8, "tdeg": 8}, "hyperbolic_3": {"depth": 5, "tdeg": 5}},
    },
}


@dataclass(frozen=True)
class Check:
    suite: str
    datum: str
    case: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"suite": self.suite, "datum": self.datum, "case": self.case, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteContext:
    datum: RootDatum
    table: RootTable
    depth: int
    tdeg: int
    grid: int
    max_length: int
    samples: int


@dataclass
class SelftestReport:
    level: str
    checks: List[Check] = field(default_factory=list)

    @property
    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "total": len(self.checks),
            "failed": len(self.failed),
            "passed": self.passed,
        }


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------
def weight_grid(datum: RootDatum, size: int) -> List[Vector]:
    """Dominant weights ``Σ p_i ω_i`` with small ``p``, ordered by ``Σ p_i``."""
    n, r = datum.size, datum.lattice_rank
    out = []
    for total in range(0, 3):
        for p in compositions(total, n):
            out.append(tuple(p) + (0,) * (r - n))
    return out[:size]


def coweight_grid(datum: RootDatum, size: int, radius: int = 2) -> List[Vector]:
    """Distinct dominant integral coweights from a small box, ordered by ``Σ⟨α_i, λ̌⟩``."""
    seen = {}
    for v in itertools.product(range(-radius, radius + 1), repeat=datum.lattice_rank):
        if not is_dominant(datum, v):
            continue
        key = datum.root_pairings(v)
        best = seen.get(key)
        if best is None or (sum(abs(x) for x in v), v) < (sum(abs(x) for x in best), best):
            seen[key] = v
    ordered = sorted(seen.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return [tuple(v) for _, v in ordered[:size]]


def _displacements(n: int, depth: int):
    for h in range(depth + 1):
        yield from compositions(h, n)


# ---------------------------------------------------------------------------
# Finite-type brute force
# ---------------------------------------------------------------------------
def finite_weyl_group(datum: RootDatum, limit: int = 5000) -> List[Tuple[np.ndarray, int]]:
    """All elements of a finite Weyl group as integer matrices acting on row vectors, with signs."""
    r = datum.lattice_rank
    gens = []
    for alpha, coroot in zip(datum.simple_roots, datum.simple_coroots):
        m = np.eye(r, dtype=np.int64) - np.outer(np.array(coroot, dtype=np.int64), np.array(alpha, dtype=np.int64))
        gens.append(m)
    start = np.eye(r, dtype=np.int64)
    seen = {start.tobytes(): (start, 1)}
    frontier = [(start, 1)]
    while frontier:
        nxt = []
        for mat, sign in frontier:
            for g in gens:
                prod = mat @ g
                key = prod.tobytes()
                if key not in seen:
                    seen[key] = (prod, -sign)
                    nxt.append((prod, -sign))
        if len(seen) > limit:
            raise KmSatakeError(f"Weyl group of {datum.name} has more than {limit} elements")
        frontier = nxt
    return list(seen.values())


def _act(vec: Sequence[int], mat: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(x) for x in np.array(vec, dtype=np.int64) @ mat)


def brute_force_identity(datum: RootDatum, lam: Vector, depth: int, tdeg: int) -> List[str]:
    """Compare ``P_λ · J(e^ρ) · W_λ(t)`` with ``J(f_λ)`` summed over the whole finite group."""
    group = finite_weyl_group(datum)
    simple = [tuple(a) for a in datum.simple_roots]
    roots = {_act(a, m) for a in simple for m, _ in group}
    positive = [a for a in roots if all(c >= 0 for c in datum.root_coords(a))]

    def length(mat):
        return sum(1 for a in positive if any(c < 0 for c in datum.root_coords(_act(a, mat))))

    top = lattice.add(lam, datum.rho)
    f = {top: tpoly.ONE}
    for alpha in positive:
        nxt = dict(f)
        for w, p in f.items():
            key = lattice.sub(w, alpha)
            nxt[key] = tpoly.sub(nxt.get(key, tpoly.ZERO), tpoly.shift(p, 1, tdeg))
        f = {w: p for w, p in nxt.items() if p}

    j_f: Dict[Vector, tpoly.Poly] = {}
    j_rho: Dict[Vector, int] = {}
    stab = [0] * (tdeg + 1)
    for mat, sign in group:
        for w, p in f.items():
            key = _act(w, mat)
            j_f[key] = tpoly.add(j_f.get(key, tpoly.ZERO), p if sign > 0 else tpoly.neg(p))
        key = _act(datum.rho, mat)
        j_rho[key] = j_rho.get(key, 0) + sign
        if _act(lam, mat) == tuple(lam):
            ell = length(mat)
            if ell <= tdeg:
                stab[ell] += 1

    window = Window(datum.rho, depth, tdeg)
    frame = CharacterSeries(datum, window)
    rho_terms = {}
    for w, c in j_rho.items():
        coords = datum.root_coords(lattice.sub(datum.rho, w))
        if c and coords is not None and all(x >= 0 for x in coords) and sum(coords) <= depth:
            rho_terms[frame.displacement_of(w)] = (c,)
    j_rho_series = CharacterSeries(datum, window, rho_terms)

    p_lam = hl_function(datum, None, lam, Window(lam, depth, tdeg))
    left = (p_lam * j_rho_series).scale(tpoly.trim(stab))
    mismatches = []
    for b in _displacements(datum.size, depth):
        nu = left.weight_of(b)
        want = tpoly.truncate(j_f.get(nu, tpoly.ZERO), tdeg)
        got = left.coefficient_at(b)
        if got != want:
            mismatches.append(f"{list(nu)}: {tpoly.to_str(got)} != {tpoly.to_str(want)}")
    return mismatches


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------
def _check(suite: str, ctx: SuiteContext, case: str, problems: List[str]) -> Check:
    return Check(suite, ctx.datum.name, case, not problems, "; ".join(problems[:3]))


def suite_finite_oracle(ctx: SuiteContext) -> List[Check]:
    if classify(ctx.datum.cartan).kind != FINITE:
        return []
    out = []
    for lam in weight_grid(ctx.datum, ctx.grid):
        out.append(_check("finite_oracle", ctx, f"lambda={list(lam)}", brute_force_identity(ctx.datum, lam, ctx.depth, ctx.tdeg)))
    return out


def suite_denominator(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    left = j_of_e_rho(datum, ctx.depth, 0).shift_weight(tuple(-x for x in datum.rho))
    right = one(datum, ctx.depth, 0)
    for alpha, mult in ctx.table.roots_up_to(ctx.depth):
        right = times_factor(right, alpha, mult, with_t=False, exponent=1)
    problems = [] if dict(left.terms) == dict(right.terms) else ["e^{-rho} J(e^rho) differs from the root product"]
    return [_check("denominator", ctx, f"depth={ctx.depth}", problems)]


def suite_characters(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    out = []
    for lam in weight_grid(datum, ctx.grid):
        chi = weyl_kac_character(datum, ctx.table, lam, Window(lam, ctx.depth, 0))
        problems = []
        for b in _displacements(datum.size, ctx.depth):
            nu = chi.weight_of(b)
            wk = tpoly.at_zero(chi.coefficient_at(b))
            fr = freudenthal_multiplicity(datum, ctx.table, lam, nu)
            if wk != fr:
                problems.append(f"{list(nu)}: Weyl-Kac {wk}, Freudenthal {fr}")
        out.append(_check("characters", ctx, f"lambda={list(lam)}", problems))
    return out


def suite_cprop(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    out = []
    for lam in weight_grid(datum, ctx.grid):
        window = Window(lam, ctx.depth, ctx.tdeg)
        expansion = hl_coeff_triangular(datum, ctx.table, lam, window)
        report = check_cprop(expansion)
        out.append(_check("cprop", ctx, f"lambda={list(lam)}", list(report.failures)))
        if classify(datum.cartan).kind == INDEFINITE:
            continue
        problems = []
        for mu, c in expansion.coeffs.items():
            direct = hl_coeff_direct(datum, ctx.table, lam, mu, window)
            if direct != c:
                problems.append(f"mu={list(mu)}: direct {tpoly.to_str(direct)}, triangular {tpoly.to_str(c)}")
        out.append(_check("direct_vs_triangular", ctx, f"lambda={list(lam)}", problems))
    return out


def suite_macdonald(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    out = []
    for lam in weight_grid(datum, ctx.grid):
        window = Window(lam, ctx.depth, ctx.tdeg)
        same = macdonald_H(datum, ctx.table, lam, window) == hl_function(datum, ctx.table, lam, window)
        out.append(_check("macdonald", ctx, f"lambda={list(lam)}", [] if same else ["H_lambda differs from P_lambda"]))
    return out


def suite_monotonicity(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    out = []
    for lam in weight_grid(datum, ctx.grid)[:2]:
        small = hl_function(datum, ctx.table, lam, Window(lam, ctx.depth, ctx.tdeg))
        large = hl_function(datum, None, lam, Window(lam, ctx.depth + 2, ctx.tdeg + 2))
        same = large.truncate(ctx.depth, ctx.tdeg) == small
        out.append(_check("monotonicity", ctx, f"lambda={list(lam)}", [] if same else ["truncated deeper window differs"]))
    return out


def suite_mv_limit(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    dual = dual_datum(datum)
    dual_table = enumerate_roots(dual, ctx.depth)
    out = []
    for lam in coweight_grid(datum, ctx.grid):
        sat = satake_transform(datum, lam, ctx.depth, ctx.tdeg, dual_table)
        chi = weyl_kac_character(dual, dual_table, lam, Window(lam, ctx.depth, 0))
        problems = []
        for b in _displacements(datum.size, ctx.depth):
            n0 = tpoly.at_zero(sat.terms.coefficient_at(b))
            mult = tpoly.at_zero(chi.coefficient_at(b))
            if n0 != mult:
                problems.append(f"{list(sat.terms.weight_of(b))}: N(0)={n0}, dim={mult}")
        nu = lattice.sub(lam, datum.coweight_from_coroot_coords((1,) + (0,) * (datum.size - 1)))
        prediction = mv_prediction(datum, lam, nu, ctx.tdeg, dual_table)
        if prediction.top_components != weight_multiplicity(dual, lam, nu, dual_table):
            problems.append("mv_prediction disagrees with the character")
        out.append(_check("mv_limit", ctx, f"lambda={list(lam)}", problems))
    return out


def suite_gamma(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    elements = elements_up_to_length(datum, ctx.max_length)
    out = []
    for lam in coweight_grid(datum, ctx.grid):
        problems = []
        for w in elements:
            try:
                gamma_count(datum, ctx.table, lam, w.word)
            except KmSatakeError as exc:
                problems.append(str(exc))
        out.append(_check("gamma", ctx, f"lambda={list(lam)}, {len(elements)} elements", problems))
    return out


def _brute_interval(datum: RootDatum, mu: Vector, lam: Vector) -> List[Vector]:
    ranges = [range(min(a, b) - 1, max(a, b) + 2) for a, b in zip(mu, lam)]
    found = []
    for v in itertools.product(*ranges):
        if is_dominant(datum, v) and dominance_leq(datum, mu, v) and dominance_leq(datum, v, lam):
            found.append(tuple(v))
    return sorted(found)


def suite_poset(ctx: SuiteContext) -> List[Check]:
    datum = ctx.datum
    rng = random.Random(0)
    grid = coweight_grid(datum, ctx.grid)
    problems = []
    pairs = 0
    for _ in range(ctx.samples):
        lam = rng.choice(grid)
        k = tuple(rng.randint(0, 2) for _ in range(datum.size))
        if not any(k):
            continue
        mu = lattice.sub(lam, datum.coweight_from_coroot_coords(k))
        if not is_dominant(datum, mu):
            continue
        pairs += 1
        interval = strata_interval(datum, mu, lam)
        if sorted(interval) != _brute_interval(datum, mu, lam):
            problems.append(f"interval [{list(mu)}, {list(lam)}] differs from the box search")
        try:
            alpha = coroot_step_witness(datum, mu, lam, dominant_step=True)
        except WindowTooSmall as exc:
            problems.append(str(exc))
            continue
        step = lattice.sub(lam, datum.coweight_from_coroot_coords(alpha))
        if not (dominance_leq(datum, mu, step) and step != lam and is_dominant(datum, step)):
            problems.append(f"witness {alpha} invalid for [{list(mu)}, {list(lam)}]")
    closure = coroot_sum_closure(datum, depth=ctx.depth)
    if closure:
        problems.append(f"coroot sums missing: {closure[:3]}")
    return [_check("poset", ctx, f"{pairs} pairs", problems)]


SUITES: Dict[str, Callable[[SuiteContext], List[Check]]] = {
    "finite_oracle": suite_finite_oracle,
    "denominator": suite_denominator,
    "characters": suite_characters,
    "cprop": suite_cprop,
    "macdonald": suite_macdonald,
    "monotonicity": suite_monotonicity,
    "mv_limit": suite_mv_limit,
    "gamma": suite_gamma,
    "poset": suite_poset,
}


def _run_suite(job) -> List[Check]:
    name, ctx = job
    try:
        return SUITES[name](ctx)
    except KmSatakeError as exc:
        Debug.error(f"suite {name} on {ctx.datum.name} raised {exc}")
        return [Check(name, ctx.datum.name, "raised", False, str(exc))]


def level_settings(level: str, config: Optional[dict] = None) -> dict:
    """Built-in settings of ``level`` overlaid with the ``selftest`` config section."""
    config = import_config() if config is None else config
    settings = dict(DEFAULT_LEVELS.get(level, DEFAULT_LEVELS["quick"]))
    settings.update(config_value(config, "selftest", level, default={}) or {})
    return settings


def datum_settings(settings: dict, name: str) -> dict:
    """``settings`` with the ``overrides`` entry of datum ``name`` applied."""
    local = {k: v for k, v in settings.items() if k != "overrides"}
    local.update((settings.get("overrides") or {}).get(name, {}))
    return local


def run_selftest(level: str = "quick", config: Optional[dict] = None, suites: Optional[Sequence[str]] = None) -> SelftestReport:
    """Run the oracle suites of ``level`` on every datum it lists."""
    config = import_config() if config is None else config
    settings = level_settings(level, config)
    catalog = config_value(config, "catalog", default={}) or {}
    jobs = []
    for name in settings["data"]:
        datum = load_datum_file(name, catalog)
        local = datum_settings(settings, name)
        ctx = SuiteContext(
            datum=datum,
            table=enumerate_roots(datum, local["depth"]),
            depth=local["depth"],
            tdeg=local["tdeg"],
            grid=local["grid"],
            max_length=local["max_length"],
            samples=local["samples"],
        )
        jobs.extend((suite, ctx) for suite in (suites or SUITES))
    report = SelftestReport(level=level)
    for checks in parallel_map(_run_suite, jobs, get_threads()):
        report.checks.extend(checks)
    Debug.info(f"selftest {level}: {len(report.checks)} checks, {len(report.failed)} failed")
    return report
