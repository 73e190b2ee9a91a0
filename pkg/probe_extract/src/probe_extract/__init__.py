"""Structural-probe depth extraction from pretrained encoders.

Feeds the sentree toolchain: given an encoder and a trained linear
probe B, each word's depth is the squared norm of B applied to the
word's pooled hidden vector, written in the depths file format the
sentree CLI validates and encodes.
"""

from __future__ import annotations

from .exceptions import (
    ModelLoadError,
    ProbeExtractError,
    ProbeParamsError,
    TokenizationMismatch,
)
from .params import ProbeParams, load_probe_matrix, load_probe_params

__version__ = "0.1.0"

__all__ = [
    "ModelLoadError",
    "ProbeExtractError",
    "ProbeParams",
    "ProbeParamsError",
    "TokenizationMismatch",
    "load_probe_matrix",
    "load_probe_params",
]
