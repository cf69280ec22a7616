import pytest

from baxter.verify import (
    SUITES,
    baxter_number_formula,
    congruence_partition,
    partitions_equal,
    run,
    words_up_to,
)


def test_suite_registry():
    assert set(SUITES) == {
        "exactlin", "words", "perms", "trees", "congruence",
        "insertion", "lattice", "hopf", "series",
    }


def test_run_all_passes_at_small_bound():
    results = run(("all",), max_n=3)
    assert [name for name, _ in results] == list(SUITES)
    for name, checks in results:
        assert checks, name
        for check in checks:
            assert check.ok, (name, check.name, check.detail)


def test_run_selects_single_suite():
    results = run(("words",), max_n=3)
    assert len(results) == 1 and results[0][0] == "words"


def test_run_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run(("frobnicate",), max_n=3)


def test_baxter_number_formula():
    assert [baxter_number_formula(n) for n in range(8)] == [
        1, 1, 2, 6, 22, 92, 422, 2074,
    ]


def test_words_up_to_counts():
    words = words_up_to(3, 2)
    assert set(words) == {(a,) for a in (1, 2, 3)} | {
        (a, b) for a in (1, 2, 3) for b in (1, 2, 3)
    }


def test_partitions_equal_detects_refinement():
    ids_a = {"x": 1, "y": 1, "z": 2}
    same = {"x": "a", "y": "a", "z": "b"}
    finer = {"x": "a", "y": "b", "z": "c"}
    assert partitions_equal(ids_a, same)
    assert not partitions_equal(ids_a, finer)
    assert not partitions_equal(same, ids_a) or partitions_equal(ids_a, same)


def test_congruence_partition_groups_classes():
    words = [(1, 3, 2), (3, 1, 2), (2, 1, 3)]
    ids = congruence_partition(words, "sylvester")
    assert ids[(1, 3, 2)] == ids[(3, 1, 2)]
    assert ids[(2, 1, 3)] != ids[(1, 3, 2)]
