"""Insertion of words into pairs of twin binary search trees.

Reading a word left to right, each letter is simultaneously leaf-inserted
into a left binary search tree and root-inserted into a right binary
search tree.  The resulting pair is the P-symbol; the recording of the
right tree's creation order is the Q-symbol, a decreasing tree.  Two
words are baxter-congruent exactly when their P-symbols agree, and the
unlabeled P-symbol shapes of permutations are exactly the twin pairs:
equal size, complementary canopies.

A twin pair here is a plain ``(left_shape, right_shape)`` tuple of
unlabeled trees.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InternalInvariantError
from .perms import check_permutation, is_baxter
from .trees import (
    LNode,
    _root_insert_keyed,
    canopies_complementary,
    canopy,
    infix_labeling,
    leaf_insert,
    pair_str,
    root_insert,
    size,
    unlabel,
)
from .words import check_word


def p_symbol(u):
    """The pair (left BST by leaf insertion, right BST by root insertion).

    >>> from .trees import ltree_str
    >>> left, right = p_symbol((2, 3, 1))
    >>> ltree_str(left), ltree_str(right)
    ('(2 (1 . .) (3 . .))', '(1 . (3 (2 . .) .))')
    """
    w = check_word(u)
    left = None
    right = None
    for a in w:
        left = leaf_insert(left, a, "left")
        right = root_insert(right, a)
    return (left, right)


def q_symbol(u):
    """The decreasing tree recording when each right-tree node was made.

    Root insertion moves nodes around but never re-creates them; node
    number k of the Q-symbol sits where the letter inserted at step k
    ended up.

    >>> from .trees import ltree_str
    >>> ltree_str(q_symbol((1, 2)))
    '(2 (1 . .) .)'
    """
    w = check_word(u)
    t = None
    for step, a in enumerate(w, start=1):
        t = _root_insert_keyed(t, (a, step), a, lambda lab: lab[0])

    def strip(node):
        if node is None:
            return None
        return LNode(node.label[1], strip(node.left), strip(node.right))

    return strip(t)


def is_twin_pair(pair) -> bool:
    """Equal sizes and complementary canopies (vacuous below size 2)."""
    left, right = pair
    n = size(left)
    if size(right) != n:
        return False
    if n == 0:
        return True
    return canopies_complementary(canopy(left), canopy(right))


def shape(labeled_pair):
    """Unlabeled shape of a P-symbol, checked to be a twin pair."""
    left, right = labeled_pair
    out = (unlabel(left), unlabel(right))
    if not is_twin_pair(out):
        raise InternalInvariantError(
            f"insertion produced non-complementary canopies: {pair_str(out)}"
        )
    return out


@lru_cache(maxsize=None)
def p_shape(u):
    """Unlabeled shape of the P-symbol of ``u`` (cached)."""
    return shape(p_symbol(u))


def _edges(lt):
    out = []

    def walk(node):
        for child in (node.left, node.right):
            if child is not None:
                out.append((node.label, child.label))
                walk(child)

    if lt is not None:
        walk(lt)
    return out


def _linear_extensions(n, preds):
    """All orderings of 1..n in which each value follows its ``preds``."""
    succs = {v: [] for v in range(1, n + 1)}
    indeg = {v: 0 for v in range(1, n + 1)}
    for v, ps in preds.items():
        for p in ps:
            succs[p].append(v)
            indeg[v] += 1
    avail = {v for v in range(1, n + 1) if indeg[v] == 0}
    prefix = []
    out = []

    def backtrack():
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in sorted(avail):
            avail.discard(v)
            prefix.append(v)
            opened = []
            for w in succs[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    avail.add(w)
                    opened.append(w)
            backtrack()
            for w in opened:
                avail.discard(w)
            for w in succs[v]:
                indeg[w] += 1
            prefix.pop()
            avail.add(v)

    backtrack()
    return out


@lru_cache(maxsize=None)
def class_of_pair(pair) -> frozenset:
    """All permutations whose P-symbol has the given twin shape.

    A permutation fits iff, labeling both trees 1..n in infix order,
    every left-tree node appears after its parent and every right-tree
    node appears before its parent.

    >>> sorted(class_of_pair(p_shape((2, 1, 4, 3))))
    [(2, 1, 4, 3), (2, 4, 1, 3)]
    """
    if not is_twin_pair(pair):
        raise ValueError(f"not a twin pair: {pair_str(pair)}")
    n = size(pair[0])
    preds = {v: set() for v in range(1, n + 1)}
    for parent, child in _edges(infix_labeling(pair[0])):
        preds[child].add(parent)  # left tree: ancestors first
    for parent, child in _edges(infix_labeling(pair[1])):
        preds[parent].add(child)  # right tree: ancestors last
    return frozenset(_linear_extensions(n, preds))


@lru_cache(maxsize=None)
def sylvester_class_of_tree(t) -> frozenset:
    """All permutations whose root-insertion (right BST) shape is ``t``."""
    n = size(t)
    preds = {v: set() for v in range(1, n + 1)}
    for parent, child in _edges(infix_labeling(t)):
        preds[parent].add(child)
    return frozenset(_linear_extensions(n, preds))


def baxter_representative(pair) -> tuple:
    """The unique Baxter (2-41-3 and 3-14-2 avoiding) member of the class.

    >>> baxter_representative(p_shape((2, 4, 1, 3)))
    (2, 1, 4, 3)
    """
    found = [s for s in class_of_pair(pair) if is_baxter(s)]
    if len(found) != 1:
        raise InternalInvariantError(
            f"class of {pair_str(pair)} has {len(found)} Baxter members, expected 1"
        )
    return found[0]


def min_perm(pair) -> tuple:
    """The weak-order least member of the class.

    Classes are intervals of the right weak order, and on an interval
    the order refines the lexicographic one, so this is the lex-least
    member.

    >>> min_perm(p_shape((5, 2, 7, 3, 6, 4, 1)))
    (5, 2, 3, 7, 6, 4, 1)
    """
    return min(class_of_pair(pair))


def max_perm(pair) -> tuple:
    """The weak-order greatest member of the class.

    >>> max_perm(p_shape((5, 2, 7, 3, 6, 4, 1)))
    (5, 7, 6, 2, 3, 4, 1)
    """
    return max(class_of_pair(pair))
