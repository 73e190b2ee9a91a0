"""Fallback depth scores from corpus token frequency.

When no probe-produced depths are available, depth(w) = ln(1 + count(w))
over a training corpus stands in: frequent function words sink deep into
the tree, rare content-bearing words stay near the root. Unseen tokens
get count 0, i.e. depth 0 (shallowest). This is a deterministic proxy
only; it makes no claim of syntactic fidelity.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import DepthedSentence


@dataclass(frozen=True)
class FrequencyTable:
    """Token occurrence counts over a corpus; every count is >= 1."""

    counts: Mapping[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, token: str) -> int:
        return self.counts.get(token, 0)


def build_frequency_table(corpus: Iterable[Sequence[str]]) -> FrequencyTable:
    """Exact occurrence counts over an iterable of token sequences.

    Deterministic, and independent of the ordering of the corpus (two
    corpora with equal token multisets give equal tables).
    """
    counts: Counter = Counter()
    for tokens in corpus:
        counts.update(tokens)
    return FrequencyTable(dict(counts))


def assign_depths(tokens: Sequence[str], table: FrequencyTable) -> DepthedSentence:
    """Pair each token with its log-frequency depth ln(1 + count)."""
    counts = table.counts
    return DepthedSentence(
        tuple(tokens),
        tuple(math.log1p(counts.get(token, 0)) for token in tokens),
    )


def save_frequency_table(table: FrequencyTable, path) -> None:
    """Persist as a JSON object mapping token to count."""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(dict(table.counts), handle, ensure_ascii=False)
        handle.write("\n")


def load_frequency_table(path) -> FrequencyTable:
    with open(path, encoding="utf-8") as handle:
        obj = json.load(handle)
    if not isinstance(obj, dict):
        raise ValueError("frequency table must be a JSON object {token: count}")
    for token, count in obj.items():
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise ValueError(
                f"count for token {token!r} must be a positive integer, got {count!r}"
            )
    return FrequencyTable(obj)
