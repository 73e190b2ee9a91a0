"""Run a pretrained encoder and score word depths with a linear probe.

Pipeline per sentence: whitespace words -> subword encoding -> hidden
states of the configured layer -> subword-to-word pooling (mean over a
word's subwords by default, or the first subword) -> depth = squared
norm of the probed vector B @ h. One JSON line per sentence, matching
the depths file format consumed by the sentree CLI:

    {"tokens": ["the", "cat"], "depths": [1.25, 0.5]}

Sentences whose words cannot be aligned one-to-one with pooled vectors
(truncation, characters the tokenizer drops) are skipped and reported,
never silently mis-scored. Everything runs in inference mode; output is
deterministic for fixed weights, probe, and batch size.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
import torch
from transformers import AutoModel, AutoTokenizer
from transformers.utils import logging as hf_logging

from .exceptions import ModelLoadError, ProbeExtractError, ProbeParamsError, TokenizationMismatch
from .params import ProbeParams

hf_logging.set_verbosity_error()
hf_logging.disable_progress_bar()

POOLINGS = ("mean", "first")


@dataclass(frozen=True)
class EncodedSentence:
    """Word tokens paired with one pooled hidden vector per word."""

    tokens: tuple[str, ...]
    vectors: np.ndarray  # shape (len(tokens), hidden_dim)

    def __post_init__(self):
        if self.vectors.shape[0] != len(self.tokens):
            raise ValueError(
                f"{len(self.tokens)} tokens but {self.vectors.shape[0]} vectors"
            )


def load_encoder(model_id: str, local_files_only: bool = True):
    """Load tokenizer and encoder; inference mode, hidden states on."""
    try:
        tokenizer = AutoTokenizer.from_pretrained(
            model_id, local_files_only=local_files_only
        )
        model = AutoModel.from_pretrained(
            model_id, output_hidden_states=True, local_files_only=local_files_only
        )
    except Exception as exc:
        raise ModelLoadError(f"cannot load encoder {model_id!r}: {exc}") from exc
    if not getattr(tokenizer, "is_fast", False):
        raise ModelLoadError(
            f"tokenizer for {model_id!r} is not a fast tokenizer;"
            " word alignment needs word_ids()"
        )
    model.eval()
    return tokenizer, model


def check_compatibility(model, params: ProbeParams) -> None:
    hidden_size = getattr(model.config, "hidden_size", None)
    if hidden_size is not None and params.hidden_dim != hidden_size:
        raise ProbeParamsError(
            f"probe expects hidden dimension {params.hidden_dim} but the"
            f" encoder produces {hidden_size}"
        )
    num_layers = getattr(model.config, "num_hidden_layers", None)
    if num_layers is not None and not (0 <= params.layer <= num_layers):
        raise ProbeParamsError(
            f"layer {params.layer} out of range: encoder has hidden states"
            f" 0..{num_layers}"
        )


def _length_limit(tokenizer, model) -> int | None:
    limits = []
    for value in (
        getattr(model.config, "max_position_embeddings", None),
        getattr(tokenizer, "model_max_length", None),
    ):
        if isinstance(value, int) and 0 < value < 1_000_000:
            limits.append(value)
    return min(limits) if limits else None


def pool_words(
    hidden: np.ndarray,
    word_ids: Sequence[int | None],
    n_words: int,
    pooling: str,
    line_no: int,
) -> np.ndarray:
    """Pool subword vectors into one vector per word.

    Raises :class:`TokenizationMismatch` unless every word index in
    0..n_words-1 owns at least one subword.
    """
    if pooling not in POOLINGS:
        raise ValueError(f"pooling must be one of {POOLINGS}, got {pooling!r}")
    groups: list[list[int]] = [[] for _ in range(n_words)]
    for position, word_id in enumerate(word_ids):
        if word_id is None:
            continue
        if word_id >= n_words:
            raise TokenizationMismatch(
                line_no, f"tokenizer produced word index {word_id} for"
                f" {n_words} words"
            )
        groups[word_id].append(position)
    missing = [i for i, group in enumerate(groups) if not group]
    if missing:
        raise TokenizationMismatch(
            line_no,
            f"{len(missing)} of {n_words} words have no subword vectors"
            f" (first missing word index {missing[0]}; truncated or"
            " dropped by the tokenizer)",
        )
    if pooling == "first":
        return hidden[[group[0] for group in groups]]
    return np.stack([hidden[group].mean(axis=0) for group in groups])


def probe_depths(params: ProbeParams, vectors: np.ndarray) -> np.ndarray:
    """Squared norms of the probed vectors, one per word."""
    projected = params.matrix @ np.asarray(vectors, dtype=np.float64).T
    return np.square(projected).sum(axis=0)


def encode_batch(
    tokenizer,
    model,
    layer: int,
    batch: Sequence[tuple[int, list[str]]],
    pooling: str,
    length_limit: int | None,
) -> list[tuple[int, EncodedSentence | TokenizationMismatch]]:
    """Encode a batch of (line_no, words); alignment failures are
    returned per line, not raised."""
    words = [w for _, w in batch]
    kwargs = {"padding": True, "return_tensors": "pt"}
    if length_limit is not None:
        kwargs.update(truncation=True, max_length=length_limit)
    encoding = tokenizer(words, is_split_into_words=True, **kwargs)
    with torch.no_grad():
        output = model(**encoding)
    hidden = output.hidden_states[layer].to(torch.float64).numpy()

    results: list[tuple[int, EncodedSentence | TokenizationMismatch]] = []
    for i, (line_no, sentence_words) in enumerate(batch):
        try:
            vectors = pool_words(
                hidden[i], encoding.word_ids(i), len(sentence_words),
                pooling, line_no,
            )
        except TokenizationMismatch as err:
            results.append((line_no, err))
            continue
        results.append(
            (line_no, EncodedSentence(tuple(sentence_words), vectors))
        )
    return results


def format_depths_line(tokens: Sequence[str], depths: Sequence[float]) -> str:
    return json.dumps(
        {"tokens": list(tokens), "depths": [float(d) for d in depths]},
        ensure_ascii=False,
        separators=(",", ":"),
    )


def extract_depths(
    lines: Sequence[str],
    tokenizer,
    model,
    params: ProbeParams,
    pooling: str = "mean",
    batch_size: int = 32,
) -> Iterator[tuple[int, str | TokenizationMismatch]]:
    """Yield (line_no, depths-file line or per-line error) in input order.

    Empty input lines pass through as empty sentences without touching
    the encoder.
    """
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")
    check_compatibility(model, params)
    length_limit = _length_limit(tokenizer, model)

    # Empty lines ride along in the batch queue (they skip the encoder)
    # so that output order always matches input order.
    pending: list[tuple[int, list[str]]] = []

    def flush():
        nonempty = [(n, w) for n, w in pending if w]
        encoded = dict(
            encode_batch(
                tokenizer, model, params.layer, nonempty, pooling, length_limit
            )
        ) if nonempty else {}
        for line_no, words in pending:
            if not words:
                yield line_no, format_depths_line([], [])
                continue
            result = encoded[line_no]
            if isinstance(result, TokenizationMismatch):
                yield line_no, result
                continue
            depths = probe_depths(params, result.vectors)
            if not (np.isfinite(depths).all() and (depths >= 0).all()):
                raise ProbeExtractError(
                    f"line {line_no}: probe produced an invalid depth"
                    " (non-finite or negative); encoder output is corrupt"
                )
            yield line_no, format_depths_line(result.tokens, depths)
        pending.clear()

    for line_no, line in enumerate(lines, start=1):
        pending.append((line_no, line.split()))
        if sum(1 for _, w in pending if w) >= batch_size:
            yield from flush()
    if pending:
        yield from flush()
