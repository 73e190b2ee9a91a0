"""Depth-ordered binary trees over sentences.

A sentence whose tokens carry numeric depths determines a unique binary
tree: the in-order traversal recovers the sentence, and every node's
depth is the minimum of its subtree (ties resolved leftmost). The tree
in turn serializes to a layer-order token sequence that plain
sequence-to-sequence models can emit, and that sequence decodes back to
the exact sentence.

The package covers the full loop - validation, tree building, the
sequence codec, per-layer position-range analysis, a rotary-embedding
distance-decay curve, corpus BLEU, a log-frequency depth heuristic, and
scikit-learn transformer wrappers - plus a file-level CLI (``sentree``).
"""

from __future__ import annotations

from .core import (
    RESERVED_TOKENS,
    VIOLATION_CODES,
    DepthedSentence,
    ValidationResult,
    Violation,
    format_depths_line,
    iter_depths,
    load_depths,
    parse_depths_line,
    validate_sentence,
)
from .decay import DecayCurve, check_decay, decay_curve, window_mean
from .estimators import FrequencyDepthTransformer, TreeSequenceTransformer
from .exceptions import (
    DepthsFileError,
    EmptyReferences,
    EmptyTree,
    InvalidDimension,
    InvalidInput,
    InvalidWindow,
    LengthMismatch,
    LineCountMismatch,
    MalformedSequence,
    SenTreeError,
    UnescapableToken,
)
from .heuristic import (
    FrequencyTable,
    assign_depths,
    build_frequency_table,
    load_frequency_table,
    save_frequency_table,
)
from .metrics import BleuReport, corpus_bleu
from .spectra import (
    LayerSpectrum,
    RevealedNode,
    SpectrumReport,
    check_spectrum_laws,
    layer_spectra,
    spectrum_rows,
)
from .treebuild import (
    Node,
    SenTree,
    build_tree,
    iter_inorder,
    iter_levels,
    linearize,
    trees_equal,
)
from .treeseq import (
    ITN,
    VAC,
    Entry,
    Marker,
    deserialize,
    deserialize_prefix,
    parse,
    render,
    serialize,
)

__version__ = "0.1.0"

__all__ = [
    "BleuReport",
    "DecayCurve",
    "DepthedSentence",
    "DepthsFileError",
    "EmptyReferences",
    "EmptyTree",
    "Entry",
    "FrequencyDepthTransformer",
    "FrequencyTable",
    "ITN",
    "InvalidDimension",
    "InvalidInput",
    "InvalidWindow",
    "LayerSpectrum",
    "LengthMismatch",
    "LineCountMismatch",
    "MalformedSequence",
    "Marker",
    "Node",
    "RESERVED_TOKENS",
    "RevealedNode",
    "SenTree",
    "SenTreeError",
    "SpectrumReport",
    "TreeSequenceTransformer",
    "UnescapableToken",
    "VAC",
    "VIOLATION_CODES",
    "ValidationResult",
    "Violation",
    "assign_depths",
    "build_frequency_table",
    "build_tree",
    "check_decay",
    "check_spectrum_laws",
    "corpus_bleu",
    "decay_curve",
    "deserialize",
    "deserialize_prefix",
    "format_depths_line",
    "iter_depths",
    "iter_inorder",
    "iter_levels",
    "layer_spectra",
    "linearize",
    "load_depths",
    "load_frequency_table",
    "parse",
    "parse_depths_line",
    "render",
    "save_frequency_table",
    "serialize",
    "spectrum_rows",
    "trees_equal",
    "validate_sentence",
    "window_mean",
]
