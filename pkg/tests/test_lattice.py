import itertools

from baxter.insertion import min_perm, p_shape
from baxter.lattice import (
    PairCover,
    baxter_covers,
    baxter_join,
    baxter_leq,
    baxter_meet,
    enumerate_tbt,
    hasse_dot,
)
from baxter.perms import permutohedron_leq
from baxter.trees import pair_str, parse_pair


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def test_enumeration_counts():
    assert [len(enumerate_tbt(n)) for n in range(6)] == [1, 1, 2, 6, 22, 92]


def test_enumeration_matches_insertion_shapes():
    for n in range(6):
        assert set(enumerate_tbt(n)) == {p_shape(p) for p in all_perms(n)}


def test_bottom_and_top():
    for n in range(1, 6):
        bottom = p_shape(tuple(range(1, n + 1)))
        top = p_shape(tuple(range(n, 0, -1)))
        for pair in enumerate_tbt(n):
            assert baxter_leq(bottom, pair)
            assert baxter_leq(pair, top)


def test_leq_examples():
    j12 = parse_pair("[ (. (. .)) | ((. .) .) ]")
    j21 = parse_pair("[ ((. .) .) | (. (. .)) ]")
    assert baxter_leq(j12, j21)
    assert not baxter_leq(j21, j12)
    assert baxter_leq(j12, j12)


def test_order_transports_the_weak_order():
    for n in range(1, 6):
        pairs = enumerate_tbt(n)
        for a in pairs:
            for b in pairs:
                if baxter_leq(a, b):
                    assert permutohedron_leq(min_perm(a), min_perm(b))


def test_covers_report_their_case():
    j12 = parse_pair("[ (. (. .)) | ((. .) .) ]")
    covers = baxter_covers(j12)
    assert covers == frozenset(
        {PairCover(parse_pair("[ ((. .) .) | (. (. .)) ]"), "simultaneous")})
    for n in range(1, 6):
        for pair in enumerate_tbt(n):
            for cov in baxter_covers(pair):
                assert cov.case in {"left-only", "right-only", "simultaneous"}
                assert baxter_leq(pair, cov.target)
                assert pair != cov.target


def test_covers_generate_the_order():
    for n in range(1, 6):
        pairs = enumerate_tbt(n)
        reach = {p: {p} for p in pairs}
        for p in pairs:
            frontier = {p}
            while frontier:
                new = set()
                for q in frontier:
                    for cov in baxter_covers(q):
                        if cov.target not in reach[p]:
                            new.add(cov.target)
                reach[p] |= new
                frontier = new
        for a in pairs:
            for b in pairs:
                assert baxter_leq(a, b) == (b in reach[a])


def test_meet_and_join_are_bounds():
    for n in range(1, 5):
        pairs = enumerate_tbt(n)
        for a in pairs:
            for b in pairs:
                m = baxter_meet(a, b)
                j = baxter_join(a, b)
                assert baxter_leq(m, a) and baxter_leq(m, b)
                assert baxter_leq(a, j) and baxter_leq(b, j)
                for c in pairs:
                    if baxter_leq(c, a) and baxter_leq(c, b):
                        assert baxter_leq(c, m)
                    if baxter_leq(a, c) and baxter_leq(b, c):
                        assert baxter_leq(j, c)


def test_meet_join_idempotent_and_commutative():
    pairs = enumerate_tbt(4)
    for a in pairs:
        assert baxter_meet(a, a) == a
        assert baxter_join(a, a) == a
    for a, b in itertools.combinations(pairs, 2):
        assert baxter_meet(a, b) == baxter_meet(b, a)
        assert baxter_join(a, b) == baxter_join(b, a)


def test_hasse_dot_output():
    dot = hasse_dot(2)
    assert dot.startswith("digraph")
    assert '"[ (. (. .)) | ((. .) .) ]" -> "[ ((. .) .) | (. (. .)) ]"' in dot
    assert dot.rstrip().endswith("}")
    for pair in enumerate_tbt(2):
        assert pair_str(pair) in dot
