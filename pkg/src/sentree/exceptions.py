"""Exception types raised across the package."""

from __future__ import annotations


class SenTreeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(SenTreeError, ValueError):
    """A depth-scored sentence failed validation.

    Carries the full violation list so callers can report every problem,
    not just the first one.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        detail = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid depthed sentence: {detail}")


class DepthsFileError(SenTreeError, ValueError):
    """A depths-file line could not be parsed or failed validation."""

    def __init__(self, line_no: int, message: str, violations=()):
        self.line_no = line_no
        self.violations = tuple(violations)
        super().__init__(f"line {line_no}: {message}")


class MalformedSequence(SenTreeError, ValueError):
    """A tree sequence violates the layered grammar.

    ``position`` is the index of the offending entry and ``reason`` is a
    stable machine-readable tag, one of: DanglingITN, SlotCountMismatch,
    TrailingEntries, ReservedTokenCollision, EmptyToken, RootVacancy,
    ChildlessInternal.
    """

    def __init__(self, position: int, reason: str, message: str):
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at entry {position}: {message}")


class UnescapableToken(SenTreeError, ValueError):
    """A token cannot be written to the text wire format unambiguously."""


class EmptyTree(SenTreeError, ValueError):
    """The operation requires a non-empty tree."""


class InvalidDimension(SenTreeError, ValueError):
    """Decay curves need an even integer dimension >= 2."""


class InvalidWindow(SenTreeError, ValueError):
    """Decay comparison windows are malformed or not ordered near-before-far."""


class LengthMismatch(SenTreeError, ValueError):
    """Parallel inputs differ in length."""


class EmptyReferences(SenTreeError, ValueError):
    """A candidate sentence has no reference translations."""


class LineCountMismatch(SenTreeError, ValueError):
    """Aligned corpus files differ in line count."""
