"""Probe parameters: a linear map whose output norm scores word depth."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ProbeParamsError


@dataclass(frozen=True)
class ProbeParams:
    """A trained linear probe over encoder hidden states.

    ``matrix`` has shape (probe_rank, hidden_dim); the depth of a word
    with pooled hidden vector h is the squared norm of ``matrix @ h``.
    ``layer`` indexes the encoder hidden state to probe (0 = embedding
    output, 1..num_layers = transformer layers).
    """

    matrix: np.ndarray
    layer: int
    model_id: str

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2:
            raise ProbeParamsError(
                f"probe matrix must be 2-D (rank x hidden), got shape"
                f" {matrix.shape}"
            )
        if matrix.shape[0] > matrix.shape[1]:
            raise ProbeParamsError(
                f"probe rank {matrix.shape[0]} exceeds hidden dimension"
                f" {matrix.shape[1]}"
            )
        if not np.isfinite(matrix).all():
            raise ProbeParamsError("probe matrix has non-finite entries")
        if not isinstance(self.layer, int) or isinstance(self.layer, bool):
            raise ProbeParamsError(f"layer must be an integer, got {self.layer!r}")
        if self.layer < 0:
            raise ProbeParamsError(f"layer must be >= 0, got {self.layer}")
        object.__setattr__(self, "matrix", matrix)

    @property
    def probe_rank(self) -> int:
        return self.matrix.shape[0]

    @property
    def hidden_dim(self) -> int:
        return self.matrix.shape[1]


def load_probe_matrix(path) -> np.ndarray:
    """Read the probe matrix from a .npy array or a .npz with key 'B'."""
    try:
        loaded = np.load(path, allow_pickle=False)
    except (OSError, ValueError) as exc:
        raise ProbeParamsError(f"cannot read probe file {path}: {exc}") from exc
    if isinstance(loaded, np.lib.npyio.NpzFile):
        try:
            if "B" not in loaded.files:
                raise ProbeParamsError(
                    f"probe archive {path} has no array named 'B'"
                    f" (found: {', '.join(loaded.files) or 'none'})"
                )
            return np.asarray(loaded["B"])
        finally:
            loaded.close()
    return np.asarray(loaded)


def load_probe_params(path, layer: int, model_id: str) -> ProbeParams:
    return ProbeParams(load_probe_matrix(path), layer, model_id)
