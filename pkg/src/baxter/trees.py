"""Planar binary trees, labeled and unlabeled.

A tree is ``None`` (the leaf) or a ``Node(left, right)``; labeled trees
use ``LNode(label, left, right)``.  Both are immutable and hashable, so
trees double as dictionary keys.

Node positions are always the 1-based infix index (left subtree, node,
right subtree).  Text form: ``.`` for the leaf, ``(L R)`` for a node,
``(label L R)`` for a labeled node; a pair of trees prints as
``[ T | T' ]``.  Round-trips are bit-exact.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional


class Node(NamedTuple):
    left: Optional["Node"]
    right: Optional["Node"]


class LNode(NamedTuple):
    label: int
    left: Optional["LNode"]
    right: Optional["LNode"]


LEAF = None


def size(t) -> int:
    """Number of internal nodes.

    >>> size(Node(Node(None, None), None))
    2
    """
    return 0 if t is None else 1 + size(t.left) + size(t.right)


def unlabel(t):
    """Forget labels, keeping the shape."""
    if t is None:
        return None
    return Node(unlabel(t.left), unlabel(t.right))


# ---------------------------------------------------------------------------
# serialization


def tree_str(t) -> str:
    """Canonical text form of an unlabeled tree.

    >>> tree_str(Node(Node(None, None), None))
    '((. .) .)'
    """
    if t is None:
        return "."
    return f"({tree_str(t.left)} {tree_str(t.right)})"


def ltree_str(t) -> str:
    """Canonical text form of a labeled tree.

    >>> ltree_str(LNode(3, LNode(1, None, None), None))
    '(3 (1 . .) .)'
    """
    if t is None:
        return "."
    return f"({t.label} {ltree_str(t.left)} {ltree_str(t.right)})"


def pair_str(pair) -> str:
    """Canonical text form of a pair of unlabeled trees.

    >>> pair_str((None, None))
    '[ . | . ]'
    """
    return f"[ {tree_str(pair[0])} | {tree_str(pair[1])} ]"


class ParseError(ValueError):
    """Malformed tree text; ``position`` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer label", start)
        return int(self.text[start : self.pos])

    def done(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError("trailing input", self.pos)


def _parse_tree(sc: _Scanner):
    ch = sc.peek()
    if ch == ".":
        sc.pos += 1
        return None
    if ch != "(":
        raise ParseError("expected '(' or '.'", sc.pos)
    sc.pos += 1
    left = _parse_tree(sc)
    right = _parse_tree(sc)
    sc.expect(")")
    return Node(left, right)


def _parse_ltree(sc: _Scanner):
    ch = sc.peek()
    if ch == ".":
        sc.pos += 1
        return None
    if ch != "(":
        raise ParseError("expected '(' or '.'", sc.pos)
    sc.pos += 1
    label = sc.integer()
    left = _parse_ltree(sc)
    right = _parse_ltree(sc)
    sc.expect(")")
    return LNode(label, left, right)


def parse_tree(text: str):
    """Parse an unlabeled tree; inverse of :func:`tree_str`.

    >>> parse_tree("((. .) .)") == Node(Node(None, None), None)
    True
    """
    sc = _Scanner(text)
    t = _parse_tree(sc)
    sc.done()
    return t


def parse_labeled_tree(text: str):
    """Parse a labeled tree; inverse of :func:`ltree_str`."""
    sc = _Scanner(text)
    t = _parse_ltree(sc)
    sc.done()
    return t


def parse_pair(text: str):
    """Parse ``[ T | T' ]``; inverse of :func:`pair_str`."""
    sc = _Scanner(text)
    sc.expect("[")
    left = _parse_tree(sc)
    sc.expect("|")
    right = _parse_tree(sc)
    sc.expect("]")
    sc.done()
    return (left, right)


# ---------------------------------------------------------------------------
# grafting and rotations


def graft_over(t0, t1):
    """``t0 / t1``: ``t1``'s root on top, ``t0`` replacing its leftmost leaf.

    >>> tree_str(graft_over(Node(None, None), Node(None, None)))
    '((. .) .)'
    """
    if t1 is None:
        return t0
    return Node(graft_over(t0, t1.left), t1.right)


def graft_under(t0, t1):
    """``t0 \\ t1``: ``t0``'s root on top, ``t1`` replacing its rightmost leaf.

    >>> tree_str(graft_under(Node(None, None), Node(None, None)))
    '(. (. .))'
    """
    if t0 is None:
        return t1
    return Node(t0.left, graft_under(t0.right, t1))


def _node_at(t, i):
    """Subtree rooted at infix index i (1-based)."""
    if t is None:
        raise ValueError(f"infix index {i} out of range")
    k = size(t.left) + 1
    if i == k:
        return t
    if i < k:
        return _node_at(t.left, i)
    return _node_at(t.right, i - k)


def right_rotate(t, i):
    """Right rotation whose pivot is the node at infix index ``i``.

    The pivot's left child moves up: (A x B) y C  becomes  A x (B y C).
    The pivot must have a nonempty left subtree.
    """
    if t is None:
        raise ValueError(f"infix index {i} out of range")
    k = size(t.left) + 1
    if i < k:
        return Node(right_rotate(t.left, i), t.right)
    if i > k:
        return Node(t.left, right_rotate(t.right, i - k))
    x = t.left
    if x is None:
        raise ValueError(f"node {i} has no left subtree; cannot rotate right")
    return Node(x.left, Node(x.right, t.right))


def left_rotate(t, i):
    """Left rotation whose pivot is the node at infix index ``i``.

    The pivot's right child moves up: A x (B y C)  becomes  (A x B) y C.
    The pivot must have a nonempty right subtree.  Inverse to
    :func:`right_rotate` applied at the promoted node.
    """
    if t is None:
        raise ValueError(f"infix index {i} out of range")
    k = size(t.left) + 1
    if i < k:
        return Node(left_rotate(t.left, i), t.right)
    if i > k:
        return Node(t.left, left_rotate(t.right, i - k))
    y = t.right
    if y is None:
        raise ValueError(f"node {i} has no right subtree; cannot rotate left")
    return Node(Node(t.left, y.left), y.right)


# ---------------------------------------------------------------------------
# canopy and the rotation (Tamari) order


def canopy(t) -> str:
    """Orientation word of the leaves, first and last dropped.

    Browsing leaves left to right, a leaf that is a right child
    contributes ``0`` and a left child contributes ``1``.

    >>> canopy(parse_tree("(((. .) ((. .) .)) ((. .) (. .)))"))
    '0100101'
    >>> canopy(Node(None, None))
    ''
    """
    if t is None:
        raise ValueError("canopy of the empty tree is undefined")
    bits = []

    def walk(node):
        if node.left is None:
            bits.append("1")
        else:
            walk(node.left)
        if node.right is None:
            bits.append("0")
        else:
            walk(node.right)

    walk(t)
    return "".join(bits[1:-1])


def complement_canopy(c: str) -> str:
    """Flip every bit.

    >>> complement_canopy("0100101")
    '1011010'
    """
    return "".join("1" if b == "0" else "0" for b in c)


def canopies_complementary(c0: str, c1: str) -> bool:
    """True iff the words have equal length and differ in every position."""
    return len(c0) == len(c1) and all(a != b for a, b in zip(c0, c1))


def tamari_vector(t) -> tuple:
    """For each node (infix order), the smallest infix index in its subtree.

    Componentwise comparison of these vectors is the rotation order:
    right rotations increase the vector.

    >>> tamari_vector(parse_tree("(((. .) .) .)"))
    (1, 1, 1)
    >>> tamari_vector(parse_tree("(. (. (. .)))"))
    (1, 2, 3)
    """
    if t is None:
        return ()
    out = [0] * size(t)

    def walk(node, offset):
        if node is None:
            return 0
        nl = walk(node.left, offset)
        out[offset + nl] = offset + 1
        nr = walk(node.right, offset + nl + 1)
        return nl + 1 + nr

    walk(t, 0)
    return tuple(out)


def tamari_leq(t0, t1) -> bool:
    """Rotation order on equal-sized trees, via vector comparison.

    >>> tamari_leq(parse_tree("((. .) (. .))"), parse_tree("((. (. .)) .)"))
    False
    """
    if size(t0) != size(t1):
        raise ValueError("sizes differ")
    return all(a <= b for a, b in zip(tamari_vector(t0), tamari_vector(t1)))


# ---------------------------------------------------------------------------
# binary search tree insertions


def leaf_insert(t, a: int, flavor: str):
    """Insert ``a`` as a new leaf of a labeled binary search tree.

    ``flavor="left"`` keeps strictly smaller letters in left subtrees
    (ties go right); ``flavor="right"`` keeps ties left.
    """
    if flavor not in ("left", "right"):
        raise ValueError(f"flavor must be 'left' or 'right', got {flavor!r}")
    if t is None:
        return LNode(a, None, None)
    go_left = a < t.label if flavor == "left" else a <= t.label
    if go_left:
        return LNode(t.label, leaf_insert(t.left, a, flavor), t.right)
    return LNode(t.label, t.left, leaf_insert(t.right, a, flavor))


def _restrict_le(t, b, key):
    # keep nodes with key <= b; a dropped node sheds its right subtree too
    if t is None:
        return None
    if key(t.label) <= b:
        return LNode(t.label, t.left, _restrict_le(t.right, b, key))
    return _restrict_le(t.left, b, key)


def _restrict_gt(t, b, key):
    # keep nodes with key > b; a dropped node sheds its left subtree too
    if t is None:
        return None
    if key(t.label) > b:
        return LNode(t.label, _restrict_gt(t.left, b, key), t.right)
    return _restrict_gt(t.right, b, key)


def restricted_trees(t, b: int):
    """Split a right binary search tree into its <= b and > b parts.

    Both parts keep the ancestor relations of the original tree.

    >>> t = parse_labeled_tree("(4 (1 (1 . .) (3 (2 . (3 . .)) .)) (5 . .))")
    >>> ltree_str(restricted_trees(t, 2)[0])
    '(1 (1 . .) (2 . .))'
    >>> ltree_str(restricted_trees(t, 2)[1])
    '(4 (3 (3 . .) .) (5 . .))'
    """
    ident = lambda x: x
    return _restrict_le(t, b, ident), _restrict_gt(t, b, ident)


def _root_insert_keyed(t, label, b, key):
    return LNode(label, _restrict_le(t, b, key), _restrict_gt(t, b, key))


def root_insert(t, a: int):
    """Insert ``a`` at the root of a right binary search tree.

    The old tree splits into its <= a and > a parts, which become the
    left and right subtrees of the new root.

    >>> ltree_str(root_insert(LNode(5, None, None), 4))
    '(4 . (5 . .))'
    """
    ident = lambda x: x
    return _root_insert_keyed(t, a, a, ident)


def infix_labeling(t):
    """Label the nodes of a shape 1..n in infix order.

    >>> ltree_str(infix_labeling(parse_tree("((. .) (. .))")))
    '(2 (1 . .) (3 . .))'
    """
    counter = [0]

    def walk(node):
        if node is None:
            return None
        left = walk(node.left)
        counter[0] += 1
        label = counter[0]
        return LNode(label, left, walk(node.right))

    return walk(t)


# ---------------------------------------------------------------------------
# structural predicates (used heavily by the test suites)


def _bounds_ok(t, lo, hi, tie_left):
    if t is None:
        return True
    a = t.label
    if not (lo <= a <= hi):
        return False
    if tie_left:  # right flavor: left subtree <= a, right subtree > a
        return _bounds_ok(t.left, lo, a, tie_left) and _bounds_ok(
            t.right, a + 1, hi, tie_left
        )
    # left flavor: left subtree < a, right subtree >= a
    return _bounds_ok(t.left, lo, a - 1, tie_left) and _bounds_ok(
        t.right, a, hi, tie_left
    )


def is_left_bst(t) -> bool:
    """Left flavor: strictly smaller labels left, ties right."""
    return _bounds_ok(t, float("-inf"), float("inf"), tie_left=False)


def is_right_bst(t) -> bool:
    """Right flavor: ties left, strictly larger labels right."""
    return _bounds_ok(t, float("-inf"), float("inf"), tie_left=True)


def is_decreasing(t) -> bool:
    """Every child label is smaller than its parent label."""
    if t is None:
        return True
    for child in (t.left, t.right):
        if child is not None and child.label >= t.label:
            return False
    return is_decreasing(t.left) and is_decreasing(t.right)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def all_trees(n: int):
    """All shapes with ``n`` nodes, in a fixed order (Catalan many)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in all_trees(k):
            for right in all_trees(n - 1 - k):
                out.append(Node(left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def trees_by_canopy(n: int):
    """Shapes with ``n`` nodes grouped by canopy word."""
    groups = {}
    for t in all_trees(n):
        groups.setdefault(canopy(t) if n else "", []).append(t)
    return {c: tuple(ts) for c, ts in groups.items()}
