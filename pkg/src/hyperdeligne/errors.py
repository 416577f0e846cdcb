"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ArrangementError(Exception):
    """Base class for all errors raised by hyperdeligne."""


class ZeroNormal(ArrangementError):
    pass


class DimensionMismatch(ArrangementError):
    pass


class DuplicateHyperplane(ArrangementError):
    pass


class UnknownGenerator(ArrangementError):
    pass


class ParseError(ArrangementError):
    """Malformed arrangement file or path literal; carries a 1-based position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ChamberNotFound(ArrangementError):
    pass


class UnknownChamber(ArrangementError):
    pass


class NotSimplicial(ArrangementError):
    pass


class NotAWall(ArrangementError):
    """A crossing that is not a facet hyperplane of the current chamber."""

    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(message)


class EndpointMismatch(ArrangementError):
    pass


class EmptyPath(ArrangementError):
    pass


class CapExceeded(ArrangementError):
    """An equivalence-class search grew past its member cap."""


class NoGreedyAtom(ArrangementError):
    pass


class WrongStart(ArrangementError):
    pass


class InvalidSimple(ArrangementError):
    pass


class RecursionMismatch(ArrangementError):
    pass
