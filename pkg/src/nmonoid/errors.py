"""Exception types raised by the package.

Every error derives from :class:`NMonoidError`, which itself is a
``ValueError`` so callers that only care about bad input can catch that.
"""


class NMonoidError(ValueError):
    """Base class for all errors raised here."""


class ContextMismatch(NMonoidError):
    pass


class InvalidWord(NMonoidError):
    pass


class NotAnInitialFactor(NMonoidError):
    pass


class EqualWords(NMonoidError):
    pass


class EnumerationCapExceeded(NMonoidError):
    pass


class LevelTooSmall(NMonoidError):
    pass


class NotJoinless(NMonoidError):
    pass


class ElementNotInCode(NMonoidError):
    pass


class BadCoordinate(NMonoidError):
    pass


class DomainNotAntichain(NMonoidError):
    pass


class DuplicateKey(NMonoidError):
    pass


class InconsistentTable(NMonoidError):
    """Two keys with a common upper bound disagree on it."""


class StarConditionViolated(NMonoidError):
    pass


class OutsideDomain(NMonoidError):
    pass


class UnknownGenerator(NMonoidError):
    pass


class ZeroMorphism(NMonoidError):
    pass


class DimensionTooSmall(NMonoidError):
    pass


class UnknownGate(NMonoidError):
    pass


class InvalidCircuit(NMonoidError):
    pass


class ArityMismatch(NMonoidError):
    pass


class ParseError(NMonoidError):
    """Syntax error in a text file, with a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}, column {column}: {message}")


class CrossCheckFailed(NMonoidError):
    """Two independent computations of the same answer disagree."""
