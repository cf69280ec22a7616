import itertools

import pytest

from baxter.congruence import congruence_class
from baxter.insertion import (
    baxter_representative,
    class_of_pair,
    is_twin_pair,
    max_perm,
    min_perm,
    p_shape,
    p_symbol,
    q_symbol,
    shape,
    sylvester_class_of_tree,
)
from baxter.perms import is_baxter, permutohedron_leq
from baxter.trees import (
    canopy,
    is_decreasing,
    leaf_insert,
    ltree_str,
    pair_str,
    root_insert,
    tree_str,
    unlabel,
)


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


WORKED_WORD = (5, 4, 2, 5, 4, 2, 4)


def test_p_symbol_of_worked_word():
    left, right = p_symbol(WORKED_WORD)
    assert ltree_str(left) == "(5 (4 (2 . (2 . .)) (4 . (4 . .))) (5 . .))"
    assert ltree_str(right) == "(4 (2 (2 . .) (4 (4 . .) .)) (5 (5 . .) .))"


def test_q_symbol_of_worked_word():
    q = q_symbol(WORKED_WORD)
    assert ltree_str(q) == "(7 (6 (3 . .) (5 (2 . .) .)) (4 (1 . .) .))"
    assert is_decreasing(q)


def test_shape_drops_labels():
    left, right = shape(p_symbol(WORKED_WORD))
    assert tree_str(left) == "(((. (. .)) (. (. .))) (. .))"
    assert tree_str(right) == "(((. .) ((. .) .)) ((. .) .))"
    assert (left, right) == p_shape(WORKED_WORD)


def test_p_symbol_trees_come_from_the_two_insertions():
    for w in [WORKED_WORD, (3, 1, 2), (1,), (2, 2, 1)]:
        left, right = p_symbol(w)
        built = None
        for a in w:
            built = leaf_insert(built, a, "left")
        assert left == built
        rooted = None
        for a in w:
            rooted = root_insert(rooted, a)
        assert right == rooted


def test_empty_word_symbols():
    assert p_symbol(()) == (None, None)
    assert q_symbol(()) is None
    assert p_shape(()) == (None, None)


def test_is_twin_pair():
    assert is_twin_pair(p_shape((2, 1, 4, 3)))
    assert is_twin_pair((None, None))
    left, _ = p_shape((1, 2, 3))
    assert not is_twin_pair((left, left))


def test_every_shape_has_complementary_canopies():
    for p in all_perms(5):
        left, right = p_shape(p)
        assert is_twin_pair((left, right))
        assert canopy(left) != canopy(right) or len(p) == 1


def test_class_of_pair_matches_rewrite_closure():
    for n in range(1, 6):
        for p in all_perms(n):
            assert class_of_pair(p_shape(p)) == frozenset(congruence_class(p, "baxter"))


def test_class_of_pair_crossing_example():
    assert class_of_pair(p_shape((2, 1, 4, 3))) == frozenset({(2, 1, 4, 3), (2, 4, 1, 3)})
    assert class_of_pair(p_shape((3, 1, 4, 2))) == frozenset({(3, 1, 4, 2), (3, 4, 1, 2)})


def test_class_of_pair_rejects_non_twin_input():
    left, _ = p_shape((1, 2, 3))
    with pytest.raises(ValueError):
        class_of_pair((left, left))


def test_min_and_max_perm_bound_the_class():
    for p in all_perms(5):
        pair = p_shape(p)
        lo, hi = min_perm(pair), max_perm(pair)
        cls = class_of_pair(pair)
        assert lo in cls and hi in cls
        for q in cls:
            assert permutohedron_leq(lo, q) and permutohedron_leq(q, hi)


def test_baxter_representative_is_the_unique_baxter_member():
    for p in all_perms(5):
        pair = p_shape(p)
        rep = baxter_representative(pair)
        cls = class_of_pair(pair)
        assert rep in cls
        assert is_baxter(rep)
        assert sum(1 for q in cls if is_baxter(q)) == 1


def test_sylvester_class_of_tree():
    _, right = p_shape((1, 3, 2))
    got = sylvester_class_of_tree(right)
    assert got == frozenset(congruence_class((1, 3, 2), "sylvester"))
    for p in all_perms(4):
        _, right = p_shape(p)
        assert sylvester_class_of_tree(right) == frozenset(
            congruence_class(p, "sylvester"))


def test_p_symbol_equality_is_class_membership_on_words():
    words = [
        (1, 2, 1), (2, 1, 1), (1, 1, 2),
        (5, 4, 2, 5, 4, 2, 4), (5, 4, 5, 2, 4, 2, 4),
    ]
    for u in words:
        for v in words:
            same = p_symbol(u) == p_symbol(v)
            assert same == (v in congruence_class(u, "baxter"))


def test_insertion_separates_permutations_with_recording():
    seen = {}
    for p in all_perms(5):
        key = (p_symbol(p), unlabel(q_symbol(p)), tuple(sorted(_labels(q_symbol(p)))))
        sig = (ltree_str(key[0][0]), ltree_str(key[0][1]), ltree_str(q_symbol(p)))
        assert sig not in seen, f"collision between {seen.get(sig)} and {p}"
        seen[sig] = p


def _labels(t):
    if t is None:
        return []
    return _labels(t.left) + [t.label] + _labels(t.right)


def test_pair_str_of_shape():
    assert pair_str(p_shape((1, 2))) == "[ (. (. .)) | ((. .) .) ]"
    assert pair_str(p_shape(())) == "[ . | . ]"
