#!/usr/bin/env python
# -*- coding: utf-8 -*-

import inspect
import logging
import os
import sys
import traceback
from datetime import datetime


class Debug:
    """
    Class-level logging facade shared by every km-satake module.

    Diagnostics go to stderr so that results on stdout stay machine readable.
    Library code logs progress (Peterson heights, orbit sizes, window sizes)
    through :meth:`debug`; the command line reports failures through
    :meth:`error`. A log file is only written when asked for.

    Attributes:
        logger: The underlying :class:`logging.Logger`, ``None`` before :meth:`init`
        DEBUG_LEVEL: Current level, one of the ``DEBUG_*`` constants
        LOG_FILE: Path of the log file, if one is open
    """

    DEBUG_OFF = 0  # Nothing but critical records
    DEBUG_ERROR = 1  # Input, window and invariant errors
    DEBUG_INFO = 2  # Plus selftest summaries and saved files
    DEBUG_VERBOSE = 3  # Plus per-height progress with a caller prefix

    LEVEL_NAMES = {
        "off": DEBUG_OFF,
        "error": DEBUG_ERROR,
        "info": DEBUG_INFO,
        "verbose": DEBUG_VERBOSE,
    }

    _CONSOLE_LEVELS = {
        DEBUG_OFF: logging.CRITICAL,
        DEBUG_ERROR: logging.ERROR,
        DEBUG_INFO: logging.INFO,
        DEBUG_VERBOSE: logging.DEBUG,
    }

    DEBUG_LEVEL = DEBUG_OFF
    LOG_FILE = None
    logger = None

    @classmethod
    def level_from_name(cls, name):
        """``"off" | "error" | "info" | "verbose"`` to a level constant; unknown names mean off."""
        return cls.LEVEL_NAMES.get(str(name).lower(), cls.DEBUG_OFF)

    @classmethod
    def _default_log_directory(cls, app_name):
        """
        Platform log directory for ``app_name``.

        Windows uses ``%LOCALAPPDATA%\\<app>\\logs``, macOS
        ``~/Library/Logs/<app>`` and everything else
        ``$XDG_DATA_HOME/<app>/logs`` (default ``~/.local/share``).
        """
        if sys.platform == "win32":
            base = os.environ.get("LOCALAPPDATA") or os.path.expanduser(os.path.join("~", "AppData", "Local"))
            return os.path.join(base, app_name, "logs")
        if sys.platform == "darwin":
            return os.path.expanduser(os.path.join("~", "Library", "Logs", app_name))
        base = os.environ.get("XDG_DATA_HOME") or os.path.expanduser(os.path.join("~", ".local", "share"))
        return os.path.join(base, app_name, "logs")

    @classmethod
    def init(cls, debug_level=DEBUG_OFF, log_dir=None, app_name="km_satake", log_to_file=False):
        """
        Set the level and (re)build the handlers.

        Calling ``init`` again replaces the handlers of the previous call, so
        ``--debug`` on the command line can override the configured level.

        Args:
            debug_level: One of the ``DEBUG_*`` constants
            log_dir: Directory for the log file; implies ``log_to_file``
            app_name: Logger name and log file suffix
            log_to_file: Also write every record to a timestamped file
        """
        cls.DEBUG_LEVEL = debug_level
        cls.logger = logging.getLogger(app_name)
        cls.logger.setLevel(logging.DEBUG)
        cls.logger.propagate = False
        for handler in list(cls.logger.handlers):
            cls.logger.removeHandler(handler)
            handler.close()

        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        console.setLevel(cls._CONSOLE_LEVELS.get(min(debug_level, cls.DEBUG_VERBOSE), logging.CRITICAL))
        cls.logger.addHandler(console)

        cls.LOG_FILE = None
        if not (log_to_file or log_dir):
            return

        directory = log_dir or cls._default_log_directory(app_name)
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            cls.logger.error(f"Cannot create log directory {directory}: {e}")
            return

        stamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        cls.LOG_FILE = os.path.join(directory, f"{stamp}_{app_name}.txt")
        file_handler = logging.FileHandler(cls.LOG_FILE, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s: %(message)s"))
        file_handler.setLevel(logging.DEBUG)
        cls.logger.addHandler(file_handler)
        cls.info(f"Log file created: {cls.LOG_FILE}")

    @classmethod
    def _emit(cls, level, message, exc_info=None):
        if cls.DEBUG_LEVEL >= cls.DEBUG_VERBOSE:
            message = f"{cls._caller()} {message}"
        if cls.logger is None:
            # Before init only errors and critical records reach stderr
            if level >= logging.ERROR or cls._CONSOLE_LEVELS.get(cls.DEBUG_LEVEL, logging.CRITICAL) <= level:
                print(f"{logging.getLevelName(level)}: {message}", file=sys.stderr)
            return
        cls.logger.log(level, message, exc_info=exc_info)

    @classmethod
    def error(cls, message, exc_info=None):
        cls._emit(logging.ERROR, message, exc_info)

    @classmethod
    def info(cls, message):
        cls._emit(logging.INFO, message)

    @classmethod
    def debug(cls, message):
        """Progress records; skipped cheaply unless verbose or logging to a file."""
        if cls.DEBUG_LEVEL < cls.DEBUG_VERBOSE and cls.LOG_FILE is None:
            return
        cls._emit(logging.DEBUG, message)

    @classmethod
    def critical(cls, message):
        cls._emit(logging.CRITICAL, message)

    @classmethod
    def exception_hook(cls, exc_type, exc_value, exc_traceback):
        """``sys.excepthook`` replacement: log the traceback, then defer to the default hook."""
        text = "".join(traceback.format_exception(exc_type, exc_value, exc_traceback))
        cls.critical(f"Unhandled exception: {text}")
        sys.__excepthook__(exc_type, exc_value, exc_traceback)

    @classmethod
    def _caller(cls):
        """``[Class.function]`` of the code that called the public log method."""
        stack = inspect.stack()
        # 0 _caller, 1 _emit, 2 error/info/debug/critical, 3 the caller
        if len(stack) <= 3:
            return ""
        frame_info = stack[3]
        owner = frame_info.frame.f_locals.get("self")
        if owner is not None:
            return f"[{owner.__class__.__name__}.{frame_info.function}]"
        return f"[{frame_info.function}]"
