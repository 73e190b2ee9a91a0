"""Independent reference implementations used as test oracles.

These favor obviousness over speed: the tree builder is the quadratic
recursive leftmost-argmin construction, and the shape enumerator walks
every in-order root split. Production code must agree with them.
"""

from __future__ import annotations

from sentree import Node, SenTree


def reference_build(tokens, depths):
    """Recursive construction: root = leftmost minimum depth, recurse on
    both sides. Quadratic, for small inputs only."""

    def build(lo, hi):
        if lo >= hi:
            return None
        best = lo
        for i in range(lo + 1, hi):
            if depths[i] < depths[best]:
                best = i
        node = Node(tokens[best], float(depths[best]))
        node.left = build(lo, best)
        node.right = build(best + 1, hi)
        return node

    return SenTree.from_root(build(0, len(tokens)))


def iter_shapes(n, lo=0, level=0):
    """Yield the root node of every binary tree shape with n nodes.

    Tokens are named t<in-order index> and depths equal the node level,
    which always satisfies the min-heap rule.
    """
    hi = lo + n
    if n == 0:
        yield None
        return
    for root in range(lo, hi):
        for left in iter_shapes(root - lo, lo, level + 1):
            for right in iter_shapes(hi - root - 1, root + 1, level + 1):
                node = Node(f"t{root}", float(level))
                node.left = left
                node.right = right
                yield node
