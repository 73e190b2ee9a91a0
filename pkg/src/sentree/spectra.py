"""Per-layer position spectra of a tree-ordered generation process.

Revealing a tree level by level fixes each revealed token's final
position only gradually. With N total tokens and k of them revealed, an
observer who knows N and the in-order arrangement of the revealed nodes
can bound a revealed node's final position to a closed interval:

    range_low  = number of revealed nodes strictly before it (in-order)
    range_high = (N - 1) - number of revealed nodes strictly after it

Every such interval has width N - k (uniform width law), the true final
position always lies inside (containment), consecutive intervals
intersect exactly while at least one node remains unrevealed (overlap
law), and widths shrink strictly with every layer that reveals a node.
:func:`check_spectrum_laws` verifies all four on computed spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .exceptions import EmptyTree
from .treebuild import SenTree


class RevealedNode(NamedTuple):
    token: str
    final_position: int
    range_low: int
    range_high: int

    @property
    def width(self) -> int:
        return self.range_high - self.range_low


@dataclass(frozen=True)
class LayerSpectrum:
    """All nodes revealed once layers 0..layer_index are generated."""

    layer_index: int
    revealed: tuple[RevealedNode, ...]
    total_n: int

    @property
    def revealed_count(self) -> int:
        return len(self.revealed)


@dataclass(frozen=True)
class SpectrumReport:
    uniform_width_ok: bool
    containment_ok: bool
    overlap_ok: bool
    shrinking_ok: bool
    failures: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return (
            self.uniform_width_ok
            and self.containment_ok
            and self.overlap_ok
            and self.shrinking_ok
        )


def layer_spectra(tree: SenTree) -> list[LayerSpectrum]:
    """One spectrum per tree level; the last one has width 0 everywhere."""
    if tree.root is None:
        raise EmptyTree("cannot compute spectra of an empty tree")

    # In-order walk recording (final_position, level); grouping by level
    # keeps each group sorted by position for the merges below.
    by_level: dict[int, list[tuple[int, str]]] = {}
    stack: list = []
    node, level = tree.root, 0
    position = 0
    while stack or node is not None:
        while node is not None:
            stack.append((node, level))
            node, level = node.left, level + 1
        node, level = stack.pop()
        by_level.setdefault(level, []).append((position, node.token))
        position += 1
        node, level = node.right, level + 1

    total = position
    spectra: list[LayerSpectrum] = []
    revealed: list[tuple[int, str]] = []
    for layer in range(max(by_level) + 1):
        new = by_level.get(layer, ())
        revealed = _merge_by_position(revealed, new)
        k = len(revealed)
        width = total - k
        entries = tuple(
            RevealedNode(token, pos, rank, rank + width)
            for rank, (pos, token) in enumerate(revealed)
        )
        spectra.append(LayerSpectrum(layer, entries, total))
    return spectra


def _merge_by_position(old, new):
    if not new:
        return old
    merged = []
    i = j = 0
    while i < len(old) and j < len(new):
        if old[i][0] < new[j][0]:
            merged.append(old[i])
            i += 1
        else:
            merged.append(new[j])
            j += 1
    merged.extend(old[i:])
    merged.extend(new[j:])
    return merged


def check_spectrum_laws(spectra: Sequence[LayerSpectrum]) -> SpectrumReport:
    """Verify the four interval laws on computed spectra; report-only."""
    failures: list[str] = []
    uniform = containment = overlap = shrinking = True

    for sp in spectra:
        expected_width = sp.total_n - sp.revealed_count
        unrevealed = sp.total_n - sp.revealed_count
        for node in sp.revealed:
            if node.width != expected_width:
                uniform = False
                failures.append(
                    f"layer {sp.layer_index}: {node.token!r} width {node.width},"
                    f" expected {expected_width}"
                )
            if not (node.range_low <= node.final_position <= node.range_high):
                containment = False
                failures.append(
                    f"layer {sp.layer_index}: {node.token!r} final position"
                    f" {node.final_position} outside"
                    f" [{node.range_low}, {node.range_high}]"
                )
        for a, b in zip(sp.revealed, sp.revealed[1:]):
            intersects = b.range_low <= a.range_high
            if intersects != (unrevealed >= 1):
                overlap = False
                failures.append(
                    f"layer {sp.layer_index}: ranges of {a.token!r}/{b.token!r}"
                    f" {'intersect' if intersects else 'are disjoint'} with"
                    f" {unrevealed} unrevealed"
                )

    for prev, cur in zip(spectra, spectra[1:]):
        if cur.revealed_count > prev.revealed_count:
            prev_width = prev.total_n - prev.revealed_count
            cur_width = cur.total_n - cur.revealed_count
            if not cur_width < prev_width:
                shrinking = False
                failures.append(
                    f"layer {cur.layer_index}: width {cur_width} did not shrink"
                    f" from {prev_width}"
                )

    return SpectrumReport(uniform, containment, overlap, shrinking, tuple(failures))


def spectrum_rows(spectra: Sequence[LayerSpectrum]) -> Iterator[tuple]:
    """Flatten spectra into plottable rows.

    Columns: layer, in_order_rank, token, range_low, range_high,
    final_position.
    """
    for sp in spectra:
        for rank, node in enumerate(sp.revealed):
            yield (
                sp.layer_index,
                rank,
                node.token,
                node.range_low,
                node.range_high,
                node.final_position,
            )
