"""Words over the ordered alphabet of positive integers 1 < 2 < 3 < ...

A word is a tuple of letters, each an ``int >= 1``; a permutation is a
word in which every letter of {1..n} appears exactly once.  This module
holds the letter-level operations everything else is built on:
standardization, evaluation, restriction to a letter interval, the
reverse-complement (Schuetzenberger) transform, shuffles, and the shifted
shuffle of permutations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable

Word = tuple


def check_word(u) -> tuple:
    """Validate and normalize ``u`` to a tuple of letters >= 1."""
    w = tuple(u)
    for a in w:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValueError(f"letters must be integers >= 1, got {a!r}")
    return w


def is_permutation(u) -> bool:
    """True iff ``u`` is a permutation of {1..n} in one-line notation.

    >>> is_permutation((3, 1, 2))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    w = tuple(u)
    return sorted(w) == list(range(1, len(w) + 1))


def standardize(u) -> tuple:
    """The standardized permutation of ``u``.

    Equal letters are ranked left to right, so ``std(u)[i] < std(u)[j]``
    for ``i < j`` exactly when ``u[i] <= u[j]``.

    >>> standardize((3, 1, 4, 2, 5, 7, 4, 2, 3))
    (4, 1, 6, 2, 8, 9, 7, 3, 5)
    >>> standardize(())
    ()
    """
    w = check_word(u)
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    std = [0] * len(w)
    for val, i in enumerate(order, start=1):
        std[i] = val
    return tuple(std)


def evaluation(u) -> tuple:
    """Letter multiplicities up to the largest letter present.

    >>> evaluation((3, 1, 3, 3))
    (1, 0, 3)
    >>> evaluation(())
    ()
    """
    w = check_word(u)
    if not w:
        return ()
    counts = [0] * max(w)
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


def restrict(u, lo: int, hi: int) -> tuple:
    """The subword of letters in the interval [lo, hi], order preserved.

    >>> restrict((5, 2, 7, 3, 6, 4, 1), 2, 4)
    (2, 3, 4)
    """
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    w = check_word(u)
    return tuple(a for a in w if lo <= a <= hi)


def schuetzenberger(u) -> tuple:
    """Reverse ``u`` and complement each letter against max(u) + 1.

    An involution on words whose smallest letter is 1.

    >>> schuetzenberger((5, 3, 1, 1, 5, 2))
    (4, 1, 5, 5, 3, 1)
    >>> schuetzenberger(())
    ()
    """
    w = check_word(u)
    if not w:
        return ()
    m = max(w) + 1
    return tuple(m - a for a in reversed(w))


def shuffle(u, v) -> Counter:
    """Multiset of all interleavings of ``u`` and ``v``.

    The result counts each interleaving once per way of carving its
    positions into a ``u``-part and a ``v``-part, so the multiplicities
    sum to C(|u|+|v|, |u|).

    >>> sorted(shuffle((1, 2), (3,)).items())
    [((1, 2, 3), 1), ((1, 3, 2), 1), ((3, 1, 2), 1)]
    >>> shuffle((1,), (1,))
    Counter({(1, 1): 2})
    """
    a, b = check_word(u), check_word(v)
    n, m = len(a), len(b)
    out = Counter()
    for positions in itertools.combinations(range(n + m), n):
        word = [0] * (n + m)
        taken = set(positions)
        for letter, pos in zip(a, positions):
            word[pos] = letter
        rest = (i for i in range(n + m) if i not in taken)
        for letter, pos in zip(b, rest):
            word[pos] = letter
        out[tuple(word)] += 1
    return out


def shifted_shuffle(sigma, nu) -> set:
    """All interleavings of ``sigma`` with ``nu`` shifted up by |sigma|.

    Both arguments must be permutations; the result is a set of
    permutations of size |sigma| + |nu| (shifting makes letters disjoint,
    so no interleaving repeats).

    >>> sorted(shifted_shuffle((1, 2), (2, 1)))[:2]
    [(1, 2, 4, 3), (1, 4, 2, 3)]
    >>> len(shifted_shuffle((1, 2), (2, 1)))
    6
    """
    s, t = tuple(sigma), tuple(nu)
    for w in (s, t):
        if not is_permutation(w):
            raise ValueError(f"not a permutation: {w}")
    shifted = tuple(a + len(s) for a in t)
    return set(shuffle(s, shifted))


def word_str(u) -> str:
    """Canonical text form: compact digits when all letters are <= 9,
    otherwise space-separated integers.

    >>> word_str((5, 2, 7, 3, 6, 4, 1))
    '5273641'
    >>> word_str((12, 3))
    '12 3'
    >>> word_str(())
    'e'
    """
    w = check_word(u)
    if not w:
        return "e"
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return " ".join(str(a) for a in w)


def parse_word(text: str) -> tuple:
    """Parse a word from text.

    Whitespace- or comma-separated integers always work; a bare digit
    string of letters 1-9 is read one letter per digit, so ``"5273641"``
    is the word (5, 2, 7, 3, 6, 4, 1).

    >>> parse_word("5 2 7 3 6 4 1") == parse_word("5273641")
    True
    >>> parse_word("12, 3")
    (12, 3)
    >>> parse_word("e")
    ()
    """
    if text.strip() == "e":
        return ()
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty word text")
    if len(parts) == 1 and parts[0].isdigit() and len(parts[0]) > 1:
        if "0" not in parts[0]:
            return check_word(int(c) for c in parts[0])
        # a 0 digit cannot be a letter; fall through to integer parsing
    try:
        letters = [int(p) for p in parts]
    except ValueError:
        bad = next(p for p in parts if not p.lstrip("-").isdigit())
        at = text.index(bad)
        raise ValueError(f"not an integer: {bad!r} (at position {at})") from None
    return check_word(letters)
