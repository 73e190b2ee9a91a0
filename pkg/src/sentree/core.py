"""Shared domain types, token validation, and the depths file format.

A sentence is an ordered sequence of opaque, non-empty token strings; no
tokenization happens here. A :class:`DepthedSentence` pairs each token
with one finite, non-negative depth score (smaller depth = closer to the
root of the tree built from it).

Depths file format: UTF-8 text, one JSON object per line, of the shape

    {"tokens": ["the", "cat"], "depths": [2.0, 1.0]}

Line order defines sentence order. Lines violating the invariants are
rejected with the line number in the error.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import DepthsFileError

#: Strings that may never appear as token text; they are reserved for the
#: tree-sequence wire format.
RESERVED_TOKENS = ("<ITN>", "<VAC>")

#: Violation codes emitted by :func:`validate_sentence`.
VIOLATION_CODES = (
    "EmptyToken",
    "ReservedTokenCollision",
    "LengthMismatch",
    "NonFiniteDepth",
    "NegativeDepth",
)


@dataclass(frozen=True)
class DepthedSentence:
    """Tokens of one sentence paired with a per-token depth score.

    The constructor coerces its arguments to tuples but performs no
    invariant checking; use :func:`validate_sentence` for that, so that
    invalid instances can be represented and reported.
    """

    tokens: tuple[str, ...]
    depths: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "depths", tuple(float(d) for d in self.depths))

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by :func:`validate_sentence`.

    ``index`` is the offending token/depth position, or None for
    whole-sentence violations such as LengthMismatch.
    """

    code: str
    index: int | None
    message: str


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)


def validate_sentence(sentence: DepthedSentence) -> ValidationResult:
    """Check every token and depth invariant; never raises.

    Returns an ok result iff all invariants hold, otherwise one
    :class:`Violation` per problem, with the token index where it applies.
    """
    violations: list[Violation] = []
    for i, token in enumerate(sentence.tokens):
        if token == "":
            violations.append(Violation("EmptyToken", i, f"token {i} is empty"))
        elif token in RESERVED_TOKENS:
            violations.append(
                Violation(
                    "ReservedTokenCollision",
                    i,
                    f"token {i} equals reserved string {token!r}",
                )
            )
    if len(sentence.depths) != len(sentence.tokens):
        violations.append(
            Violation(
                "LengthMismatch",
                None,
                f"{len(sentence.tokens)} tokens but {len(sentence.depths)} depths",
            )
        )
    for i, depth in enumerate(sentence.depths):
        if not math.isfinite(depth):
            violations.append(
                Violation("NonFiniteDepth", i, f"depth {i} is {depth!r}")
            )
        elif depth < 0:
            violations.append(
                Violation("NegativeDepth", i, f"depth {i} is negative ({depth!r})")
            )
    return ValidationResult(tuple(violations))


def parse_depths_line(line: str, line_no: int = 1) -> DepthedSentence:
    """Parse and validate one depths-file line.

    Raises :class:`DepthsFileError` (carrying ``line_no`` and any
    validation violations) for malformed JSON, wrong shape, or invariant
    violations.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise DepthsFileError(line_no, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise DepthsFileError(line_no, "expected a JSON object")
    for key in ("tokens", "depths"):
        if key not in obj:
            raise DepthsFileError(line_no, f"missing key {key!r}")
    tokens = obj["tokens"]
    depths = obj["depths"]
    if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
        raise DepthsFileError(line_no, "'tokens' must be an array of strings")
    if not isinstance(depths, list) or not all(
        isinstance(d, (int, float)) and not isinstance(d, bool) for d in depths
    ):
        raise DepthsFileError(line_no, "'depths' must be an array of numbers")
    sentence = DepthedSentence(tuple(tokens), tuple(float(d) for d in depths))
    result = validate_sentence(sentence)
    if not result.ok:
        raise DepthsFileError(
            line_no,
            "; ".join(v.message for v in result.violations),
            violations=result.violations,
        )
    return sentence


def iter_depths(lines: Iterable[str]) -> Iterator[DepthedSentence]:
    """Parse an iterable of depths-file lines, numbering from 1."""
    for line_no, line in enumerate(lines, start=1):
        yield parse_depths_line(line, line_no)


def load_depths(path) -> list[DepthedSentence]:
    """Load a whole depths file, failing on the first bad line."""
    with open(path, encoding="utf-8") as handle:
        return list(iter_depths(line.rstrip("\n") for line in handle))


def format_depths_line(sentence: DepthedSentence) -> str:
    """Render one sentence in the depths file format (no trailing newline)."""
    return json.dumps(
        {"tokens": list(sentence.tokens), "depths": list(sentence.depths)},
        ensure_ascii=False,
        separators=(",", ":"),
    )
