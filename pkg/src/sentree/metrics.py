"""Corpus-level BLEU for scoring decoded sentences against references.

Classic unsmoothed corpus BLEU: modified n-gram precision with
per-sentence clipping against the maximum reference count, a brevity
penalty of exp(1 - r/c) when the candidate corpus is not longer than the
effective reference length, and a geometric mean over n-gram orders.

Two edge rules are made explicit because tooling differs on them:

  * If the corpus has no candidate n-grams at some order n <= max_order
    (every candidate shorter than n), the order is reduced to the largest
    n with a nonzero total rather than scoring 0.
  * Zero matches at any used order still score 0 (no smoothing).

Token matching is exact and case-sensitive on opaque tokens.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .exceptions import EmptyReferences, LengthMismatch

Tokens = Sequence[str]


@dataclass(frozen=True)
class BleuReport:
    """Corpus statistics and the final score in [0, 1].

    ``precisions[n-1]`` is the (matched, total) n-gram count pair for
    each used order n. ``max_order`` is the order actually used after
    any reduction; 0 when the candidate corpus is empty.
    """

    precisions: tuple[tuple[int, int], ...]
    brevity_penalty: float
    candidate_length: int
    reference_length: int
    score: float
    max_order: int


def _ngram_counts(tokens: Tokens, n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(
    candidates: Sequence[Tokens],
    references: Sequence[Sequence[Tokens]],
    max_order: int = 4,
) -> BleuReport:
    """Score a candidate corpus against per-sentence reference sets.

    ``references[i]`` is the non-empty list of reference token lists for
    ``candidates[i]``. The effective reference length sums, per sentence,
    the reference length closest to the candidate length (ties go to the
    shorter reference). Aggregation is order-independent.
    """
    if len(candidates) != len(references):
        raise LengthMismatch(
            f"{len(candidates)} candidates but {len(references)} reference sets"
        )
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    for i, refs in enumerate(references):
        if len(refs) == 0:
            raise EmptyReferences(f"sentence {i} has no references")

    matches = [0] * max_order
    totals = [0] * max_order
    cand_len = 0
    ref_len = 0
    for cand, refs in zip(candidates, references):
        cand_len += len(cand)
        ref_len += min((len(r) for r in refs), key=lambda L: (abs(L - len(cand)), L))
        for n in range(1, max_order + 1):
            counts = _ngram_counts(cand, n)
            if not counts:
                continue
            max_ref: Counter = Counter()
            for ref in refs:
                ref_counts = _ngram_counts(ref, n)
                for ngram in counts:
                    if ref_counts[ngram] > max_ref[ngram]:
                        max_ref[ngram] = ref_counts[ngram]
            totals[n - 1] += sum(counts.values())
            matches[n - 1] += sum(
                min(count, max_ref[ngram]) for ngram, count in counts.items()
            )

    if cand_len == 0:
        # Every candidate empty: score defined as 0; no penalty is meaningful.
        return BleuReport((), 0.0, cand_len, ref_len, 0.0, 0)

    used = max(n for n in range(1, max_order + 1) if totals[n - 1] > 0)
    precisions = tuple((matches[n - 1], totals[n - 1]) for n in range(1, used + 1))
    brevity = 1.0 if cand_len > ref_len else math.exp(1.0 - ref_len / cand_len)
    if any(m == 0 for m, _ in precisions):
        score = 0.0
    else:
        log_mean = math.fsum(math.log(m / t) for m, t in precisions) / used
        score = brevity * math.exp(log_mean)
    return BleuReport(precisions, brevity, cand_len, ref_len, score, used)
