#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exception hierarchy for km-satake.

Every error carries an ``exit_code`` so the command line front end can map
families of failures onto process exit codes without inspecting messages:

* ``InputError`` (1): malformed GCMs, coordinates, words or datum files.
* ``WindowError`` (2): a request that does not fit the truncation window.
* ``InternalInvariantError`` (3): a proven identity failed to hold, which
  always indicates a bug in the computation.
"""

from typing import Any, Sequence


class KmSatakeError(Exception):
    """Base class of all library errors."""

    exit_code = 1


# ---------------------------------------------------------------------------
# Input errors
# ---------------------------------------------------------------------------
class InputError(KmSatakeError):
    exit_code = 1


class InvalidDatumFile(InputError):
    pass


class DiagonalNotTwo(InputError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"DiagonalNotTwo({i}): a_{i}{i} must be 2")


class PositiveOffDiagonal(InputError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"PositiveOffDiagonal({i},{j}): a_{i}{j} must be <= 0")


class AsymmetricZero(InputError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(
            f"AsymmetricZero({i},{j}): a_{i}{j} = 0 but a_{j}{i} != 0"
        )


class NotSymmetrizable(InputError):
    pass


class DimensionMismatch(InputError):
    def __init__(self, expected: int, got: int, what: str = "vector"):
        self.expected, self.got = expected, got
        super().__init__(f"DimensionMismatch: {what} of length {got}, expected {expected}")


class NotARoot(InputError):
    def __init__(self, coords: Sequence[int]):
        self.coords = tuple(coords)
        super().__init__(f"NotARoot: {list(self.coords)} is not a root")


class NotStrictlyDominant(InputError):
    def __init__(self, weight: Any):
        self.weight = weight
        super().__init__(f"NotStrictlyDominant: {weight} has a pairing < 1")


class NotDominant(InputError):
    def __init__(self, weight: Any):
        self.weight = weight
        super().__init__(f"NotDominant: {weight} has a negative pairing")


class NotBelow(InputError):
    def __init__(self, lower: Any, upper: Any):
        self.lower, self.upper = lower, upper
        super().__init__(f"NotBelow: {lower} is not <= {upper} in dominance order")


NotBelowHighestWeight = NotBelow


class NonUnitLeadingTerm(InputError):
    def __init__(self, leading: Any):
        self.leading = leading
        super().__init__(
            f"NonUnitLeadingTerm: leading coefficient {leading} has constant term != +-1"
        )


class InvalidWord(InputError):
    pass


# ---------------------------------------------------------------------------
# Window errors
# ---------------------------------------------------------------------------
class WindowError(KmSatakeError):
    exit_code = 2


class OutOfWindow(WindowError):
    def __init__(self, weight: Any, depth: int):
        self.weight, self.depth = weight, depth
        super().__init__(f"OutOfWindow: {weight} lies outside the window of depth {depth}")


class WindowMismatch(WindowError):
    pass


class WindowTooSmall(WindowError):
    pass


# ---------------------------------------------------------------------------
# Internal invariant violations
# ---------------------------------------------------------------------------
class InternalInvariantError(KmSatakeError):
    exit_code = 3


class NonIntegralMultiplicity(InternalInvariantError):
    pass


class InconsistentLimit(InternalInvariantError):
    pass


class GammaCountMismatch(InternalInvariantError):
    pass


class OracleMismatch(InternalInvariantError):
    pass
