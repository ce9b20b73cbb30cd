#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Command line front end.

Every command loads a datum (file or catalog name), computes one result and
renders it through :class:`OutputManager`. Library errors are mapped onto
exit codes: 1 for input errors, 2 for window errors, 3 for internal
invariant violations.
"""

import argparse
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from . import lattice
from .characters import character_table
from .charseries import Window
from .debug_utils import Debug
from .errors import InputError, KmSatakeError, WindowError
from .gcm_core import RootDatum, check_datum, datum_to_mapping, load_datum_file
from .hall_littlewood import (
    HlExpansion,
    character_expansion,
    hl_coeff_direct,
    hl_coeff_triangular,
    hl_function,
    macdonald_H,
)
from .helper_classes import OutputManager, config_value, import_config, json_vector, parse_coords, parse_word
from .parallel import ENV_VAR, resolve_threads, set_threads
from .roots import enumerate_roots, height
from .satake_mv import gamma_count, interval_summary, mv_prediction, rho_pairing, satake_transform
from .selftest import run_selftest

BASIS_NOTE = "weights and coweights are integer vectors in the fixed basis of Z^r; simple roots and coroots are listed by 'validate'"

COMMANDS = ("validate", "roots", "char", "hl", "satake", "mv", "gamma", "interval", "selftest")


class _Parser(argparse.ArgumentParser):
    """Argument errors become input errors so they share exit code 1."""

    def error(self, message):
        raise InputError(message)


def build_parser(config: dict) -> argparse.ArgumentParser:
    depth = config_value(config, "window", "depth", default=6)
    tdeg = config_value(config, "window", "tdeg", default=6)

    common = _Parser(add_help=False)
    common.add_argument("--datum", help="datum JSON file or catalog name")
    common.add_argument("--depth", type=int, default=depth, help=f"height cutoff (default {depth})")
    common.add_argument("--tdeg", type=int, default=tdeg, help=f"t-degree cutoff (default {tdeg})")
    common.add_argument("--format", choices=OutputManager.FORMATS, default="json")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--out", default=None, help="also write the result to this file")
    common.add_argument("--debug", choices=("off", "error", "info", "verbose"), default=None)

    parser = _Parser(prog="km-satake", description="Kac-Moody Hall-Littlewood and Satake combinatorics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("validate", parents=[common], help="check a GCM and print the realized root datum")
    sub.add_parser("roots", parents=[common], help="positive roots with multiplicities")

    p = sub.add_parser("char", parents=[common], help="weight multiplicities of L(lambda)")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--cross-validate", action="store_true")

    p = sub.add_parser("hl", parents=[common], help="Hall-Littlewood function P_lambda")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--basis", choices=("chi", "mono"), default="chi")
    p.add_argument("--method", choices=("hlw", "macdonald", "direct"), default="hlw")

    p = sub.add_parser("satake", parents=[common], help="Satake transform of a dominant coweight")
    p.add_argument("--lambda", dest="lam", default=None)

    p = sub.add_parser("mv", parents=[common], help="MV-cycle prediction for Gr_lambda and T_nu")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--nu", default=None)

    p = sub.add_parser("gamma", parents=[common], help="Gamma-count identity for a Weyl word")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--word", default="")

    p = sub.add_parser("interval", parents=[common], help="dominant coweights between mu and lambda")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)

    p = sub.add_parser("selftest", parents=[common], help="run the oracle suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _datum(args, config) -> RootDatum:
    if not args.datum:
        raise InputError(f"'{args.command}' needs --datum")
    datum = load_datum_file(args.datum, config_value(config, "catalog", default={}))
    check_datum(datum)
    return datum


def _vector(text: Optional[str], datum: RootDatum, default_zero: bool = True) -> tuple:
    if text is None:
        if default_zero:
            return (0,) * datum.lattice_rank
        raise InputError("missing coordinates")
    return parse_coords(text, datum.lattice_rank)


def _header(config, args, datum: Optional[RootDatum], description: str, **extra) -> dict:
    fields = {"command": args.command}
    if datum is not None:
        fields["datum"] = datum.name
    fields["window"] = {"depth": args.depth, "tdeg": args.tdeg}
    fields["basis"] = BASIS_NOTE
    fields.update(extra)
    creator = config_value(config, "application", "name", default="km_satake")
    return OutputManager.create_metadata(title=f"km-satake {args.command}", creator=creator, description=description, extra=fields)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------
def cmd_validate(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    doc = datum_to_mapping(datum)
    rows = [
        {
            "index": i,
            "simple_root": json_vector(datum.simple_roots[i]),
            "simple_coroot": json_vector(datum.simple_coroots[i]),
            "d": datum.symmetrizer[i] if datum.symmetrizer is not None else None,
        }
        for i in range(datum.size)
    ]
    header = _header(config, args, datum, "validated generalized Cartan matrix and its root datum")
    return out.render(header, rows, ["index", "simple_root", "simple_coroot", "d"], body={"datum": doc})


def cmd_roots(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    table = enumerate_roots(datum, args.depth)
    header = _header(config, args, datum, "positive roots in simple-root coordinates")
    return out.render(header, table.rows(), ["coords", "height", "mult", "real"])


def cmd_char(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    table = enumerate_roots(datum, args.depth)
    result = character_table(datum, table, lam, Window(lam, args.depth, 0), cross_validate=args.cross_validate)
    header = _header(config, args, datum, "weight multiplicities dim L(lambda)_nu", **{"lambda": json_vector(lam)})
    return out.render(header, result.rows(), ["weight", "mult"])


def _depth(coords) -> int:
    return int(height(coords))


def _expansion_rows(expansion: HlExpansion) -> List[dict]:
    datum, lam = expansion.datum, expansion.lam
    return [dict(row, depth=_depth(datum.root_coords(lattice.sub(lam, mu)))) for row, mu in zip(expansion.rows(), expansion.coeffs)]


def cmd_hl(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    table = enumerate_roots(datum, args.depth)
    window = Window(lam, args.depth, args.tdeg)
    header = _header(
        config, args, datum, "Hall-Littlewood function P_lambda(t)",
        **{"lambda": json_vector(lam), "basis_kind": args.basis, "method": args.method},
    )
    if args.basis == "mono":
        if args.method == "direct":
            raise InputError("the direct method only produces the character basis")
        series = macdonald_H(datum, table, lam, window) if args.method == "macdonald" else hl_function(datum, table, lam, window)
        return out.render(header, series.to_rows(), ["weight", "coeffs"])
    if args.method == "direct":
        shape = hl_coeff_triangular(datum, table, lam, window)
        coeffs = {mu: hl_coeff_direct(datum, table, lam, mu, window) for mu in shape.coeffs}
        expansion = HlExpansion(datum=datum, lam=shape.lam, window=window, coeffs={k: v for k, v in coeffs.items() if v})
    elif args.method == "macdonald":
        expansion = character_expansion(datum, table, macdonald_H(datum, table, lam, window))
    else:
        expansion = hl_coeff_triangular(datum, table, lam, window)
    return out.render(header, _expansion_rows(expansion), ["mu", "depth", "coeffs"])


def cmd_satake(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    result = satake_transform(datum, lam, args.depth, args.tdeg)
    header = _header(
        config, args, datum, "Satake transform q^<rho,lambda> P_lambda(1/q) / P_0(1/q), terms in t = 1/q",
        **{"lambda": json_vector(lam), "shift": result.shift},
    )
    return out.render(header, result.rows(), ["weight", "coeffs", "q_laurent"])


def cmd_mv(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    nu = _vector(args.nu, datum, default_zero=False)
    prediction = mv_prediction(datum, lam, nu, args.tdeg)
    header = _header(config, args, datum, "dimension, top components and point count of Gr_lambda and T_nu")
    return out.render(header, [], [], body={"prediction": prediction.to_dict()})


def cmd_gamma(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    word = parse_word(args.word, datum.size)
    gamma, count = gamma_count(datum, None, lam, word)
    rows = [{"root": list(alpha), "n": n} for alpha, n in sorted(gamma, key=lambda x: (height(x[0]), x[0], x[1]))]
    header = _header(config, args, datum, "Gamma set of an inversion set against a dominant coweight", word=list(word))
    body = {"count": count, "rho_pairing": rho_pairing(datum, lam)}
    return out.render(header, rows, ["root", "n"], body=body)


def cmd_interval(args, config, out: OutputManager) -> str:
    datum = _datum(args, config)
    lam = _vector(args.lam, datum)
    mu = _vector(args.mu, datum)
    summary = interval_summary(datum, mu, lam)
    rows = [{"coweight": json_vector(nu), "depth": _depth(datum.coroot_coords(lattice.sub(lam, nu)))} for nu in summary.interval]
    header = _header(config, args, datum, "dominant coweights nu with mu <= nu <= lambda")
    return out.render(header, rows, ["coweight", "depth"], body={"witness": summary.to_dict()["witness"]})


def cmd_selftest(args, config, out: OutputManager) -> Tuple[str, bool]:
    report = run_selftest(args.level, config)
    header = _header(config, args, None, "oracle suites", level=args.level)
    rows = [c.to_dict() for c in report.checks]
    text = out.render(header, rows, ["suite", "datum", "case", "passed", "detail"], body={"summary": report.to_dict()})
    if not report.passed:
        message = config_value(config, "messages", "selftest_failed", default="Self-test failed: {} of {} checks")
        Debug.error(message.format(len(report.failed), len(report.checks)))
    else:
        message = config_value(config, "messages", "selftest_passed", default="Self-test passed: {} checks")
        Debug.info(message.format(len(report.checks)))
    return text, report.passed


HANDLERS = {
    "validate": cmd_validate,
    "roots": cmd_roots,
    "char": cmd_char,
    "hl": cmd_hl,
    "satake": cmd_satake,
    "mv": cmd_mv,
    "gamma": cmd_gamma,
    "interval": cmd_interval,
    "selftest": cmd_selftest,
}


def _message(config, exc: KmSatakeError) -> str:
    key = {1: "input_error", 2: "window_error", 3: "internal_error"}.get(exc.exit_code, "input_error")
    template = config_value(config, "messages", key, default="{}")
    return template.format(f"{type(exc).__name__}: {exc}")


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, config: Optional[dict] = None) -> int:
    """Parse ``argv``, run one command and return the process exit code."""
    stdout = stdout or sys.stdout
    config = import_config() if config is None else config
    try:
        args = build_parser(config).parse_args(list(argv))
        if args.debug:
            Debug.init(debug_level=Debug.level_from_name(args.debug), app_name=config_value(config, "application", "name", default="km_satake"))
        set_threads(
            resolve_threads(
                args.threads,
                config_value(config, "parallel", "threads", default=1),
                env_var=config_value(config, "parallel", "env_var", default=ENV_VAR),
            )
        )
        if args.depth < 0 or args.tdeg < 0:
            raise WindowError("--depth and --tdeg must be non-negative")
        out = OutputManager(args.format, args.out)
        result = HANDLERS[args.command](args, config, out)
        passed = True
        if isinstance(result, tuple):
            result, passed = result
        stdout.write(result)
        out.save(result)
        return 0 if passed else 3
    except KmSatakeError as exc:
        Debug.error(_message(config, exc))
        return exc.exit_code

