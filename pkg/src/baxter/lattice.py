"""The lattice of twin binary trees.

Vertices are twin pairs (equal size, complementary canopies); the order
compares rotation vectors contravariantly on the left tree and
covariantly on the right tree.  It is the image of the right weak order
under insertion: covers rotate one tree keeping its canopy, or both
trees at the same canopy position.  Meets and joins project the weak
order meet/join of class extremes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import config
from .insertion import class_of_pair, is_twin_pair, max_perm, min_perm, p_shape
from .perms import weak_order_join, weak_order_meet
from .trees import (
    canopy,
    complement_canopy,
    left_rotate,
    pair_str,
    right_rotate,
    size,
    tamari_vector,
    trees_by_canopy,
)


class PairCover(NamedTuple):
    """A cover move in the lattice: the target pair and which case fired."""

    target: tuple
    case: str  # "left-only" | "right-only" | "simultaneous"


@lru_cache(maxsize=None)
def enumerate_tbt(n: int) -> frozenset:
    """All twin pairs of size ``n`` (Baxter many).

    >>> [len(enumerate_tbt(k)) for k in range(5)]
    [1, 1, 2, 6, 22]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    config.check_enum_degree(n)
    if n == 0:
        return frozenset({(None, None)})
    groups = trees_by_canopy(n)
    out = set()
    for c, lefts in groups.items():
        rights = groups.get(complement_canopy(c), ())
        for tl in lefts:
            for tr in rights:
                out.add((tl, tr))
    return frozenset(out)


def baxter_leq(j0, j1) -> bool:
    """Order on twin pairs: left vectors decrease, right vectors increase.

    >>> j12, j21 = p_shape((1, 2)), p_shape((2, 1))
    >>> baxter_leq(j12, j21), baxter_leq(j21, j12)
    (True, False)
    """
    if size(j0[0]) != size(j1[0]):
        raise ValueError("sizes differ")
    v0l, v1l = tamari_vector(j0[0]), tamari_vector(j1[0])
    v0r, v1r = tamari_vector(j0[1]), tamari_vector(j1[1])
    return all(a >= b for a, b in zip(v0l, v1l)) and all(
        a <= b for a, b in zip(v0r, v1r)
    )


def _diff_bit(c0: str, c1: str) -> int:
    diffs = [i for i, (a, b) in enumerate(zip(c0, c1)) if a != b]
    if len(diffs) != 1:
        raise RuntimeError("rotation changed more than one canopy bit")
    return diffs[0]


def baxter_covers(j) -> frozenset:
    """The covers of ``j``: canopy-preserving left rotations of the left
    tree, canopy-preserving right rotations of the right tree, and
    simultaneous canopy-changing rotations at a shared position.

    >>> [c.case for c in baxter_covers(p_shape((1, 2)))]
    ['simultaneous']
    """
    if not is_twin_pair(j):
        raise ValueError(f"not a twin pair: {pair_str(j)}")
    tl, tr = j
    n = size(tl)
    if n < 2:
        return frozenset()
    cl, cr = canopy(tl), canopy(tr)
    covers = set()
    changing_left = {}
    for i in range(1, n + 1):
        try:
            rotated = left_rotate(tl, i)
        except ValueError:
            continue
        c2 = canopy(rotated)
        if c2 == cl:
            covers.add(PairCover((rotated, tr), "left-only"))
        else:
            changing_left[_diff_bit(cl, c2)] = rotated
    changing_right = {}
    for i in range(1, n + 1):
        try:
            rotated = right_rotate(tr, i)
        except ValueError:
            continue
        c2 = canopy(rotated)
        if c2 == cr:
            covers.add(PairCover((tl, rotated), "right-only"))
        else:
            changing_right[_diff_bit(cr, c2)] = rotated
    for bit, new_left in changing_left.items():
        new_right = changing_right.get(bit)
        if new_right is not None:
            covers.add(PairCover((new_left, new_right), "simultaneous"))
    return frozenset(covers)


def baxter_meet(j0, j1):
    """Greatest lower bound: project the weak-order meet of the least
    class members.

    >>> j = baxter_meet(p_shape((2, 1, 3)), p_shape((1, 3, 2)))
    >>> j == p_shape((1, 2, 3))
    True
    """
    if size(j0[0]) != size(j1[0]):
        raise ValueError("sizes differ")
    return p_shape(weak_order_meet(min_perm(j0), min_perm(j1)))


def baxter_join(j0, j1):
    """Least upper bound: project the weak-order join of the greatest
    class members."""
    if size(j0[0]) != size(j1[0]):
        raise ValueError("sizes differ")
    return p_shape(weak_order_join(max_perm(j0), max_perm(j1)))


def hasse_dot(n: int) -> str:
    """The cover digraph in DOT form, vertices and edges sorted."""
    config.check_enum_degree(n)
    pairs = sorted(enumerate_tbt(n), key=pair_str)
    lines = [f'digraph "twin_tree_lattice_{n}" {{']
    for j in pairs:
        lines.append(f'  "{pair_str(j)}";')
    edges = []
    for j in pairs:
        for cover in baxter_covers(j):
            edges.append(f'  "{pair_str(j)}" -> "{pair_str(cover.target)}";')
    lines.extend(sorted(edges))
    lines.append("}")
    return "\n".join(lines)
