#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Repository launcher: ``python main.py selftest --level quick``.

``src.main`` is executed with ``runpy`` so that its relative imports resolve
inside the package; an installed ``km_satake`` is used when the source tree
is not importable.
"""

from __future__ import annotations
import runpy
import sys
from importlib.util import find_spec

MODULE_CANDIDATES = ["src.main", "km_satake.main"]


def _run_first(module_names: list[str]) -> None:
    """Run the first module of ``module_names`` that can be found as ``__main__``."""
    missing: ModuleNotFoundError | None = None
    for mod in module_names:
        try:
            spec = find_spec(mod)
        except ModuleNotFoundError as exc:
            missing = exc
            continue
        if spec is None:
            missing = ModuleNotFoundError(f"No module named {mod!r}", name=mod)
            continue
        runpy.run_module(mod, run_name="__main__", alter_sys=True)
        return
    if missing:
        raise missing


if __name__ == "__main__":
    try:
        _run_first(MODULE_CANDIDATES)
    except ModuleNotFoundError:
        print("km-satake not found; tried modules:", MODULE_CANDIDATES, file=sys.stderr)
        raise
