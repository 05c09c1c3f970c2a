"""Exception hierarchy shared by all graphspectra modules.

Every error carries a stable ``code`` (the class name) and a ``witness``
payload describing the offending input, so that failures can be rendered
as machine-readable JSON by the CLI.
"""

from __future__ import annotations


class GraphSpectraError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness

    @property
    def code(self) -> str:
        return type(self).__name__


# graphs
class InvalidGraph(GraphSpectraError):
    pass


class InvalidRank(GraphSpectraError):
    pass


# ktheory
class InvalidTransitionMatrix(GraphSpectraError):
    pass


# shift
class RequiresIrreducible(GraphSpectraError):
    pass


class NotAdmissible(GraphSpectraError):
    pass


class EnumerationBudgetExceeded(GraphSpectraError):
    pass


# triples
class TruncationTooSmall(GraphSpectraError):
    pass


class InvalidParameter(GraphSpectraError):
    pass


class SummabilityViolation(GraphSpectraError):
    pass


class InsufficientSpectrum(GraphSpectraError):
    pass


class RequiresEvenTriple(GraphSpectraError):
    pass


# buildings
class PresentationInvalid(GraphSpectraError):
    pass


class RequiresSquares(GraphSpectraError):
    pass


class NotBMReducible(GraphSpectraError):
    pass


class InvalidPolygon(GraphSpectraError):
    pass


class DegenerateEuclidean(GraphSpectraError):
    pass


class BracketFailure(GraphSpectraError):
    pass


class InvalidTable(GraphSpectraError):
    pass


# cli
class UsageError(GraphSpectraError):
    pass
