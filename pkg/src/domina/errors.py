"""Exception hierarchy shared by every domina module."""

from __future__ import annotations


class DominaError(Exception):
    """Base class for all errors raised by domina."""


# graph core

class InvalidVertex(DominaError, ValueError):
    pass


class LoopRejected(DominaError, ValueError):
    pass


class MalformedGraph6(DominaError, ValueError):
    """Raised for an undecodable graph6 line; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedOrder(DominaError, ValueError):
    pass


class InvalidProbability(DominaError, ValueError):
    pass


class EnumerationTooLarge(DominaError, ValueError):
    pass


# domination solver

class EmptyGraph(DominaError, ValueError):
    pass


class NotInSet(DominaError, ValueError):
    pass


class NotDominating(DominaError, ValueError):
    pass


class TotalDominationUndefined(DominaError, ValueError):
    pass


class ConnectedDominationUndefined(DominaError, ValueError):
    pass


# classifier

class TooSmall(DominaError, ValueError):
    pass


# family F

class FamilyStructureError(DominaError, ValueError):
    """A decomposition violates one of the structural rules of the family."""


class PartitionInvalid(FamilyStructureError):
    pass


class SizeBoundViolated(FamilyStructureError):
    pass


class EmptyPartForNonIsolated(FamilyStructureError):
    pass


class CrossEdgeViolation(FamilyStructureError):
    pass


class VLastUnderConnected(FamilyStructureError):
    pass


class ProblemTooLarge(DominaError, ValueError):
    pass


class NotGammaSet(DominaError, ValueError):
    pass


class WrongCardinality(DominaError, ValueError):
    pass


class GraphTooSmall(DominaError, ValueError):
    pass


class Disconnected(DominaError, ValueError):
    pass


# harness

class ScanTooLarge(DominaError, ValueError):
    pass
