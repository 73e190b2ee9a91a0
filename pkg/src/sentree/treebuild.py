"""Build the depth-ordered binary tree over a sentence and flatten it back.

The tree over a depth-scored sentence is the unique binary tree whose
in-order traversal is the sentence, whose depths satisfy a min-heap
property along every root-to-leaf path, and whose every node carries the
leftmost minimum-depth token of its in-order span. Equivalently: pick the
leftmost shallowest token as root, then recurse on the tokens to its left
and to its right.

Construction uses the stack-based treap/Cartesian scheme, O(N) instead of
the O(N^2) recursive definition, with identical output under the leftmost
tie-break. All traversals here are iterative: trees can be chains of 10^4+
nodes, far beyond the interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import DepthedSentence, validate_sentence
from .exceptions import InvalidInput


@dataclass(eq=False, repr=False)
class Node:
    """A single tree node. Treat as read-only once its tree is returned."""

    token: str
    depth: float
    left: Node | None = None
    right: Node | None = None

    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    def __repr__(self) -> str:  # non-recursive on purpose
        kind = "leaf" if self.is_leaf() else "internal"
        return f"Node({self.token!r}, depth={self.depth}, {kind})"


@dataclass(eq=False, repr=False)
class SenTree:
    """A (possibly empty) binary tree over sentence tokens."""

    root: Node | None
    node_count: int

    @classmethod
    def from_root(cls, root: Node | None) -> SenTree:
        """Wrap an existing node graph, counting its nodes."""
        count = 0
        stack = [root] if root is not None else []
        while stack:
            node = stack.pop()
            count += 1
            if node.left is not None:
                stack.append(node.left)
            if node.right is not None:
                stack.append(node.right)
        return cls(root, count)

    def __repr__(self) -> str:
        return f"SenTree(node_count={self.node_count})"


def build_tree(sentence: DepthedSentence) -> SenTree:
    """Build the depth-heap tree for a validated sentence.

    Deterministic: equal inputs produce structurally identical trees.
    Raises :class:`InvalidInput` when the sentence fails validation.
    """
    result = validate_sentence(sentence)
    if not result.ok:
        raise InvalidInput(result.violations)

    # Rightmost-spine stack. Strict `>` keeps an equal-depth predecessor
    # on the spine, which makes the leftmost minimum of any span the root
    # of that span.
    spine: list[Node] = []
    for token, depth in zip(sentence.tokens, sentence.depths):
        node = Node(token, depth)
        displaced: Node | None = None
        while spine and spine[-1].depth > depth:
            displaced = spine.pop()
        node.left = displaced
        if spine:
            spine[-1].right = node
        spine.append(node)
    return SenTree(spine[0] if spine else None, len(sentence.tokens))


def linearize(tree: SenTree) -> list[str]:
    """In-order traversal: recovers the original token list."""
    out: list[str] = []
    stack: list[Node] = []
    node = tree.root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        out.append(node.token)
        node = node.right
    return out


def iter_inorder(tree: SenTree) -> Iterator[Node]:
    """Yield nodes in sentence (in-order) order."""
    stack: list[Node] = []
    node = tree.root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        yield node
        node = node.right


def iter_levels(tree: SenTree) -> Iterator[list[Node]]:
    """Yield the nodes of each tree level, top to bottom, left to right."""
    level = [tree.root] if tree.root is not None else []
    while level:
        yield level
        level = [
            child
            for node in level
            for child in (node.left, node.right)
            if child is not None
        ]


def trees_equal(a: SenTree, b: SenTree, check_depths: bool = True) -> bool:
    """Structural equality; optionally compares depth values too."""
    if a.node_count != b.node_count:
        return False
    stack = [(a.root, b.root)]
    while stack:
        x, y = stack.pop()
        if x is None and y is None:
            continue
        if x is None or y is None:
            return False
        if x.token != y.token:
            return False
        if check_depths and x.depth != y.depth:
            return False
        stack.append((x.left, y.left))
        stack.append((x.right, y.right))
    return True
