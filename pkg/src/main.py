#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
km-satake - entry point of the ``km-satake`` console script.

Works as an installed package (``km-satake ...``), as a module
(``python -m src``) and as a plain script (``python src/main.py``). In the
script case ``__package__`` is None, so the repository root is put on
``sys.path`` and the package name is set by hand before the relative imports.
"""

import sys
import os

if __package__ is None:
    package_dir = os.path.dirname(__file__)
    repo_root = os.path.dirname(package_dir)
    if repo_root not in sys.path:
        sys.path.insert(0, repo_root)
    __package__ = "src"

from .debug_utils import Debug
from .helper_classes import config_value, import_config
from . import cli

CONFIG = import_config()


def main(argv=None):
    """
    Initialise logging from the configuration and run one CLI command.
    The process exits with the command's exit code.
    """
    Debug.init(
        debug_level=Debug.level_from_name(config_value(CONFIG, "debug", "level_default", default="error")),
        app_name=config_value(CONFIG, "application", "name", default="km_satake"),
        log_to_file=bool(config_value(CONFIG, "debug", "log_to_file", default=False)),
    )

    # Uncaught exceptions go to the log as critical records
    sys.excepthook = Debug.exception_hook

    args = sys.argv[1:] if argv is None else list(argv)
    sys.exit(cli.run(args, config=CONFIG))


if __name__ == "__main__":
    main()
