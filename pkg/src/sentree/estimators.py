"""Scikit-learn compatible facade over the conversion core.

Both transformers operate on plain Python sequences rather than arrays:
X is a list of token lists (or of :class:`DepthedSentence` for the
sequencer). They compose in a ``sklearn.pipeline.Pipeline``::

    Pipeline([
        ("depths", FrequencyDepthTransformer()),
        ("sequences", TreeSequenceTransformer()),
    ]).fit_transform(corpus_tokens)

turns a token-list corpus into rendered tree-sequence lines.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import DepthedSentence
from .heuristic import FrequencyTable, assign_depths, build_frequency_table
from .treebuild import build_tree, linearize
from .treeseq import deserialize, deserialize_prefix, parse, render, serialize


class FrequencyDepthTransformer(TransformerMixin, BaseEstimator):
    """Learn token counts on fit, emit depth-scored sentences on transform.

    Parameters
    ----------
    table : FrequencyTable, optional
        Pre-built counts. When given, fit is a no-op on the data and the
        transformer is usable without fitting.

    Attributes
    ----------
    table_ : FrequencyTable
        Counts used by transform.
    """

    def __init__(self, table: FrequencyTable | None = None):
        self.table = table

    def fit(self, X, y=None):
        """X: a sequence of token sequences (reused by transform, so not
        a one-shot generator)."""
        self.table_ = self.table if self.table is not None else build_frequency_table(X)
        return self

    def transform(self, X) -> list[DepthedSentence]:
        check_is_fitted(self, "table_")
        return [assign_depths(tokens, self.table_) for tokens in X]


class TreeSequenceTransformer(TransformerMixin, BaseEstimator):
    """Depth-scored sentences in, rendered tree-sequence lines out.

    Stateless; fit only returns self. ``inverse_transform`` decodes
    rendered lines back to token lists.

    Parameters
    ----------
    lenient : bool, default=False
        When decoding, recover the longest grammatical layer prefix of a
        malformed line instead of raising.
    """

    def __init__(self, lenient: bool = False):
        self.lenient = lenient

    def fit(self, X, y=None):
        return self

    def transform(self, X) -> list[str]:
        """X: a sequence of DepthedSentence."""
        return [render(serialize(build_tree(sentence))) for sentence in X]

    def inverse_transform(self, X) -> list[list[str]]:
        """X: a sequence of rendered tree-sequence lines."""
        out = []
        for line in X:
            entries = parse(line)
            if self.lenient:
                tree, _ = deserialize_prefix(entries)
            else:
                tree = deserialize(entries)
            out.append(linearize(tree))
        return out
