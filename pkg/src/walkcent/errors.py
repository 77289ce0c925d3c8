"""Exception types raised across the package."""

from __future__ import annotations


class WalkcentError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(WalkcentError):
    """An edge joins a node to itself."""


class DuplicateEdgeError(WalkcentError):
    """The same unordered node pair appears more than once."""


class NonPositiveWeightError(WalkcentError):
    """An edge weight is zero or negative."""


class IsolatedNodeError(WalkcentError):
    """A construction requiring positive degrees met a degree-zero node."""


class UnknownNodeError(WalkcentError):
    """A node label is not present in the graph."""


class DisconnectedGraphError(WalkcentError):
    """The operation requires a connected graph."""


class DimensionMismatchError(WalkcentError):
    """Matrix or vector dimensions are inconsistent."""


class NodeSetMismatchError(WalkcentError):
    """Two vectors are indexed over different node sets."""


class InvalidConfigError(WalkcentError):
    """A configuration value violates its constraints."""


class UnstableStepError(WalkcentError):
    """The requested time step violates the integrator's stability bound."""


class EigensolverError(WalkcentError):
    """The symmetric eigensolver failed to produce a usable decomposition."""


class KTooLargeError(WalkcentError):
    """A top-k cutoff exceeds the number of nodes."""


class ParseError(WalkcentError):
    """An input file is malformed.

    Carries the 1-based line number of the offending row when known.
    """

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        prefix = ""
        if path is not None:
            prefix += f"{path}: "
        if line is not None:
            prefix += f"line {line}: "
        super().__init__(prefix + message)
