"""Layer-order serialization of trees with <ITN>/<VAC> entries.

Wire grammar, layer by layer:

  * Layer 0 holds exactly one node entry (empty tree -> empty sequence).
  * A node entry is either the ITN flag followed by a token (an internal
    node, i.e. one with at least one child) or a bare token (a leaf).
  * Layer k+1 holds exactly two slots per internal node of layer k, in
    layer order: left slot then right slot. A slot is a node entry or the
    VAC marker for an absent child.

Leaves contribute no slots, so the encoding stays linear in the node
count even for fully skewed trees: with N tokens, I internal nodes and
V vacancy markers, V = 2I - (N - 1) and the total entry count is 3I + 1.

Depth scores are not carried on the wire. Decoding assigns each node a
depth equal to its tree level (root 0), which satisfies the heap
invariant of the tree type.

The text rendering joins entries with single spaces; the reserved
literals are exactly "<ITN>" and "<VAC>", case-sensitive. Tokens
containing whitespace cannot be rendered (no escape syntax; upstream
tokenizers do not produce such tokens).
"""

from __future__ import annotations

from typing import Iterable, Union

from .core import RESERVED_TOKENS
from .exceptions import MalformedSequence, UnescapableToken
from .treebuild import Node, SenTree


class Marker:
    """A reserved non-token entry; exactly two singletons exist."""

    __slots__ = ("literal",)

    def __init__(self, literal: str):
        self.literal = literal

    def __repr__(self) -> str:
        return self.literal

    def __reduce__(self):
        # Unpickling must return the singleton: decoding compares by identity.
        return (_marker_from_literal, (self.literal,))


#: Flag marking the next token as an internal node.
ITN = Marker("<ITN>")
#: Marker filling the slot of an absent child.
VAC = Marker("<VAC>")

Entry = Union[str, Marker]
TreeSequence = list  # list[Entry]

_MARKERS = {ITN.literal: ITN, VAC.literal: VAC}


def _marker_from_literal(literal: str) -> Marker:
    return _MARKERS[literal]


def serialize(tree: SenTree) -> list[Entry]:
    """Emit the layer-order entry list for a tree. Deterministic."""
    if tree.root is None:
        return []
    entries: list[Entry] = []
    slots: list[Node | None] = [tree.root]
    while slots:
        next_slots: list[Node | None] = []
        for node in slots:
            if node is None:
                entries.append(VAC)
            elif node.left is None and node.right is None:
                entries.append(node.token)
            else:
                entries.append(ITN)
                entries.append(node.token)
                next_slots.append(node.left)
                next_slots.append(node.right)
        slots = next_slots
    return entries


def _checked_token(entry, position: int) -> str:
    if not isinstance(entry, str):
        raise TypeError(
            f"entry {position} is {type(entry).__name__}, expected str or Marker"
        )
    if entry == "":
        raise MalformedSequence(position, "EmptyToken", "empty token text")
    if entry in RESERVED_TOKENS:
        raise MalformedSequence(
            position,
            "ReservedTokenCollision",
            f"token equals reserved literal {entry!r} (use the marker object)",
        )
    return entry


def _read_slot(entries, pos: int, level: int):
    """Read one slot entry starting at ``pos``.

    Returns (node_or_None, is_internal, flag_pos, next_pos). ``flag_pos``
    is the index of the ITN flag for internal nodes, else None.
    """
    entry = entries[pos]
    if entry is VAC:
        return None, False, None, pos + 1
    if entry is ITN:
        if pos + 1 >= len(entries):
            raise MalformedSequence(
                pos, "DanglingITN", "internal-node flag at end of sequence"
            )
        nxt = entries[pos + 1]
        if isinstance(nxt, Marker):
            raise MalformedSequence(
                pos,
                "DanglingITN",
                f"internal-node flag followed by {nxt!r}, expected a token",
            )
        token = _checked_token(nxt, pos + 1)
        return Node(token, float(level)), True, pos, pos + 2
    token = _checked_token(entry, pos)
    return Node(token, float(level)), False, None, pos + 1


def _decode(entries: list, lenient: bool):
    """Shared decoder. Returns (tree, error-or-None).

    Strict mode raises the error instead. Lenient mode keeps the longest
    prefix of fully grammatical layers and reports the first error.
    """
    if not entries:
        return SenTree(None, 0), None

    try:
        root, internal, flag_pos, pos = _read_slot(entries, 0, 0)
        if root is None:
            raise MalformedSequence(
                0, "RootVacancy", "vacancy marker in the root slot"
            )
    except MalformedSequence as err:
        if lenient:
            return SenTree(None, 0), err
        raise

    count = 1
    level = 0
    error: MalformedSequence | None = None
    # Parents still owed child slots: (node, position of its ITN flag).
    parents: list[tuple[Node, int]] = [(root, flag_pos)] if internal else []

    while parents:
        level += 1
        expected = 2 * len(parents)
        slots_read = 0
        staged: list[tuple[Node, Node | None, Node | None, list]] = []
        try:
            for parent, parent_flag in parents:
                children = []
                for _ in range(2):
                    if pos >= len(entries):
                        raise MalformedSequence(
                            len(entries),
                            "SlotCountMismatch",
                            f"layer {level} has {slots_read} slot entries,"
                            f" expected {expected}",
                        )
                    child, child_internal, child_flag, pos = _read_slot(
                        entries, pos, level
                    )
                    slots_read += 1
                    children.append((child, child_internal, child_flag))
                if children[0][0] is None and children[1][0] is None:
                    raise MalformedSequence(
                        parent_flag,
                        "ChildlessInternal",
                        f"node {parent.token!r} is flagged internal but both"
                        " of its child slots are vacant",
                    )
                staged.append((parent, children[0][0], children[1][0], children))
        except MalformedSequence as err:
            if not lenient:
                raise
            error = err
            break
        next_parents: list[tuple[Node, int]] = []
        for parent, left, right, children in staged:
            parent.left = left
            parent.right = right
            for child, child_internal, child_flag in children:
                if child is not None:
                    count += 1
                    if child_internal:
                        next_parents.append((child, child_flag))
        parents = next_parents

    if error is None and pos < len(entries):
        error = MalformedSequence(
            pos,
            "TrailingEntries",
            f"{len(entries) - pos} entries after the final layer closed",
        )
        if not lenient:
            raise error

    return SenTree(root, count), error


def deserialize(entries: Iterable[Entry]) -> SenTree:
    """Rebuild the unique tree whose serialization is ``entries``.

    Raises :class:`MalformedSequence` (with position and reason) when no
    such tree exists; never raises anything else for str/Marker input.
    """
    tree, _ = _decode(list(entries), lenient=False)
    return tree


def deserialize_prefix(entries: Iterable[Entry]):
    """Best-effort decode of the longest grammatical layer prefix.

    Returns ``(tree, error)`` where ``error`` is None for fully
    grammatical input. Layers are kept atomically: a layer that fails to
    parse is dropped entirely, along with everything after it, so nodes
    flagged internal at the cut become leaves.
    """
    return _decode(list(entries), lenient=True)


def render(entries: Iterable[Entry]) -> str:
    """Join entries into one text line, markers as their literals.

    Raises :class:`UnescapableToken` for tokens that would corrupt the
    format: whitespace-bearing, empty, or equal to a reserved literal.
    """
    parts: list[str] = []
    for entry in entries:
        if isinstance(entry, Marker):
            parts.append(entry.literal)
            continue
        if entry == "" or entry in RESERVED_TOKENS or any(c.isspace() for c in entry):
            raise UnescapableToken(f"token {entry!r} cannot be rendered")
        parts.append(entry)
    return " ".join(parts)


def parse(line: str) -> list[Entry]:
    """Split one text line back into entries; exact inverse of render.

    Reserved literals always parse as markers, so a parsed sequence can
    never contain a reserved string as a token.
    """
    return [_MARKERS.get(piece, piece) for piece in line.split()]
