#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Order-preserving thread fan-out for independent summands."""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .debug_utils import Debug

ENV_VAR = "KM_SATAKE_THREADS"

_A = TypeVar("_A")
_R = TypeVar("_R")

_threads = 1


def resolve_threads(
    cli_value: Optional[int] = None, config_value: Optional[int] = None, env_var: str = ENV_VAR
) -> int:
    """Thread count: the environment variable ``env_var`` wins over the flag, the flag over the config."""
    env = os.environ.get(env_var)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            Debug.error(f"ignoring non-integer {env_var}={env!r}")
    if cli_value:
        return max(1, int(cli_value))
    if config_value:
        return max(1, int(config_value))
    return 1


def set_threads(count: int) -> None:
    global _threads
    _threads = max(1, int(count))


def get_threads() -> int:
    return _threads


def parallel_map(fn: Callable[[_A], _R], items: Iterable[_A], threads: Optional[int] = None) -> List[_R]:
    """``[fn(x) for x in items]``, evaluated on a thread pool when ``threads > 1``."""
    items = list(items)
    count = threads if threads is not None else _threads
    if count <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items))
