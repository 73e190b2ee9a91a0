"""Exception types for probe extraction."""

from __future__ import annotations


class ProbeExtractError(Exception):
    """Base class for all errors raised by this package."""


class ProbeParamsError(ProbeExtractError, ValueError):
    """The probe parameter file is missing, malformed, or inconsistent
    with the encoder."""


class ModelLoadError(ProbeExtractError, RuntimeError):
    """The encoder or its tokenizer could not be loaded."""


class TokenizationMismatch(ProbeExtractError, ValueError):
    """Subword-to-word alignment failed for one sentence.

    Raised per line; extraction skips and reports the line rather than
    aborting the run.
    """

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
