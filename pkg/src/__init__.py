"""
km-satake
=========

Exact combinatorics of the Kac-Moody geometric Satake correspondence:
generalized Cartan matrices, root data, Weyl groups, Weyl-Kac characters,
Hall-Littlewood functions, Satake transforms and MV-cycle predictions.
"""

__version__ = "0.3.0"
__author__ = "km-satake developers"

from .main import main

__all__ = ["main", "__version__", "__author__"]
