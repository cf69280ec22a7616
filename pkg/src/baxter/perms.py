"""Permutations in one-line notation, as tuples of values 1..n.

The right weak (permutohedron) order is handled through co-inversion
sets: ``(i, j)`` with ``i < j`` is a co-inversion of ``sigma`` when the
value ``j`` appears before the value ``i``.  Covers swap an adjacent
ascent; the order is co-inversion-set inclusion; joins close the union
of co-inversion sets under transitivity and meets are joins of value
complements.

Also here: the Baxter vincular-pattern test, the two size-graded
concatenations, and connectedness (indecomposability).
"""

from __future__ import annotations

from functools import cmp_to_key

from .words import is_permutation


def check_permutation(sigma) -> tuple:
    s = tuple(sigma)
    if not is_permutation(s):
        raise ValueError(f"not a permutation: {s}")
    return s


def inverse(sigma) -> tuple:
    """The inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    s = check_permutation(sigma)
    inv = [0] * len(s)
    for pos, val in enumerate(s, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def co_inversions(sigma) -> frozenset:
    """The set of pairs (i, j), i < j, whose larger value occurs first.

    >>> sorted(co_inversions((3, 1, 2)))
    [(1, 3), (2, 3)]
    """
    s = check_permutation(sigma)
    pos = {val: i for i, val in enumerate(s)}
    n = len(s)
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i] > pos[j]
    )


def permutohedron_leq(sigma, nu) -> bool:
    """Right weak order: co-inversion-set inclusion.

    >>> permutohedron_leq((2, 1, 3), (2, 3, 1))
    True
    >>> permutohedron_leq((2, 1, 3), (1, 3, 2))
    False
    """
    s, t = check_permutation(sigma), check_permutation(nu)
    if len(s) != len(t):
        raise ValueError("sizes differ")
    return co_inversions(s) <= co_inversions(t)


def permutohedron_covers(sigma) -> set:
    """The permutations covering ``sigma``: swap any adjacent ascent.

    >>> sorted(permutohedron_covers((1, 2, 3)))
    [(1, 3, 2), (2, 1, 3)]
    """
    s = check_permutation(sigma)
    out = set()
    for i in range(len(s) - 1):
        if s[i] < s[i + 1]:
            out.add(s[:i] + (s[i + 1], s[i]) + s[i + 2 :])
    return out


def _transitive_closure(pairs, n):
    """Close a co-inversion set: (i,j) and (j,k) present force (i,k)."""
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        by_low = {}
        for i, j in closed:
            by_low.setdefault(i, set()).add(j)
        for i, j in list(closed):
            for k in by_low.get(j, ()):
                if (i, k) not in closed:
                    closed.add((i, k))
                    changed = True
    return closed


def _from_co_inversions(n, pairs) -> tuple:
    """The permutation whose co-inversion set is ``pairs`` (must exist)."""

    def precedes(a, b):
        if a == b:
            return 0
        i, j = min(a, b), max(a, b)
        first = j if (i, j) in pairs else i
        return -1 if a == first else 1

    result = tuple(sorted(range(1, n + 1), key=cmp_to_key(precedes)))
    return result


def weak_order_join(sigma, nu) -> tuple:
    """Least upper bound in the right weak order.

    The join's co-inversion set is the transitive closure of the union.

    >>> weak_order_join((2, 1, 3), (2, 1, 3))
    (2, 1, 3)
    """
    s, t = check_permutation(sigma), check_permutation(nu)
    if len(s) != len(t):
        raise ValueError("sizes differ")
    n = len(s)
    pairs = _transitive_closure(co_inversions(s) | co_inversions(t), n)
    result = _from_co_inversions(n, pairs)
    if co_inversions(result) != frozenset(pairs):
        raise RuntimeError("closed co-inversion set is not realizable")
    return result


def weak_order_meet(sigma, nu) -> tuple:
    """Greatest lower bound; dual of the join under value complement.

    >>> weak_order_meet((2, 1, 3), (1, 3, 2))
    (1, 2, 3)
    """
    s, t = check_permutation(sigma), check_permutation(nu)
    if len(s) != len(t):
        raise ValueError("sizes differ")
    n = len(s)
    comp = lambda p: tuple(n + 1 - a for a in p)
    return comp(weak_order_join(comp(s), comp(t)))


def is_baxter(sigma) -> bool:
    """True iff ``sigma`` avoids the vincular patterns 2-41-3 and 3-14-2.

    A hit is a subword at positions p1 < p2 < p2+1 < p4 whose middle pair
    is adjacent and whose standardization is 2413 or 3142.  Brute-force
    scan; n stays small here.

    >>> is_baxter((4, 3, 6, 9, 7, 5, 1, 2, 8))
    True
    >>> is_baxter((2, 4, 1, 3))
    False
    """
    s = check_permutation(sigma)
    n = len(s)
    for p2 in range(n - 1):
        b, c = s[p2], s[p2 + 1]
        for p1 in range(p2):
            a = s[p1]
            for p4 in range(p2 + 2, n):
                d = s[p4]
                if c < a < d < b:  # pattern 2413
                    return False
                if b < d < a < c:  # pattern 3142
                    return False
    return True


def perm_over(sigma, nu) -> tuple:
    """Concatenate with the right factor shifted up by |sigma|.

    >>> perm_over((3, 1, 2), (2, 3, 1, 4))
    (3, 1, 2, 5, 6, 4, 7)
    """
    s, t = check_permutation(sigma), check_permutation(nu)
    return s + tuple(a + len(s) for a in t)


def perm_under(sigma, nu) -> tuple:
    """Concatenate with the left factor shifted up by |nu|.

    >>> perm_under((3, 1, 2), (2, 3, 1, 4))
    (7, 5, 6, 2, 3, 1, 4)
    """
    s, t = check_permutation(sigma), check_permutation(nu)
    return tuple(a + len(t) for a in s) + t


def is_connected(sigma) -> bool:
    """True iff no proper prefix of length k is a permutation of {1..k}.

    Connected permutations are exactly those that are not ``perm_over``
    of two smaller ones.

    >>> is_connected((2, 4, 1, 3))
    True
    >>> is_connected((2, 1, 3))
    False
    """
    s = check_permutation(sigma)
    top = 0
    for k in range(1, len(s)):
        top = max(top, s[k - 1])
        if top == k:
            return False
    return True
