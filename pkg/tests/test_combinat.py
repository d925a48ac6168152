from math import comb, factorial

import pytest

from qsymb.combinat import (Letter, WeakComposition, beta_set, coloured, comp_coloured, compose,
                            conjugate, descent_class, descent_set, descent_set_signed, empty_two_core,
                            enumerate_group, epsilon, format_coloured, format_descent_set,
                            format_partition, from_beta_set, group_order, has_empty_two_core, inverse,
                            is_canonical, is_snp, parse_coloured, parse_descent_set, parse_partition,
                            parse_permutation, parse_signed, parse_weak_composition, partitions_of,
                            shuffle_coloured, shuffle_plain, shuffle_signed, total_colour,
                            wc_descent_set)
from qsymb.config import caps_override
from qsymb.errors import MalformedInput, SizeLimit
from qsymb.tableaux import tilings


@pytest.mark.parametrize("word, expected", [((3, 1, 2), {1}), ((1, 2, 3), set()), ((3, 2, 1), {1, 2})])
def test_descent_set(word, expected):
    assert descent_set(word) == frozenset(expected)


@pytest.mark.parametrize("word, expected", [((-2, 1), {0}), ((1, 2), set()), ((2, -1), {1})])
def test_descent_set_signed(word, expected):
    assert descent_set_signed(word) == frozenset(expected)


@pytest.mark.parametrize("word, tc", [((-2, 1), 1), ((1, 2), 0), ((-1, -2), 2)])
def test_total_colour(word, tc):
    assert total_colour(word) == tc


def test_inverse_examples():
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert inverse((1, 2, 3)) == (1, 2, 3)
    assert inverse((-2, 1)) == (2, -1)
    assert compose((-2, 1), inverse((-2, 1))) == (1, 2)


def test_inverse_rejects_non_permutations():
    with pytest.raises(MalformedInput):
        inverse((1, 1))
    with pytest.raises(MalformedInput):
        inverse((2, -2))


def test_shuffle_plain_examples():
    assert shuffle_plain((1,), (1,)) == {(1, 2), (2, 1)}
    assert len(shuffle_plain((3, 1, 2), (2, 1))) == 10
    assert shuffle_plain((), (2, 1)) == {(2, 1)}


def test_shuffle_signed_examples():
    assert shuffle_signed((-1,), (1,)) == {(-1, 2), (2, -1)}
    assert shuffle_signed((1,), (-1,)) == {(1, -2), (-2, 1)}
    assert len(shuffle_signed((-2, 1, 3), (1, -2))) == comb(5, 2)


WORKED_SHUFFLE_LIST = [
    "4 3 ~1 ~2 5", "4 3 ~2 ~1 5", "4 ~2 3 ~1 5", "~2 4 3 ~1 5", "4 3 ~2 5 ~1",
    "4 ~2 3 5 ~1", "~2 4 3 5 ~1", "4 ~2 5 3 ~1", "~2 4 5 3 ~1", "~2 5 4 3 ~1",
]


def test_shuffle_coloured_worked_pair():
    got = shuffle_coloured(parse_coloured("3 2 ~1"), parse_coloured("~1 2"))
    assert sorted(format_coloured(w) for w in got) == sorted(WORKED_SHUFFLE_LIST)


def test_shuffle_coloured_small():
    e = epsilon(1)
    assert {format_coloured(w) for w in shuffle_coloured(e, e)} == {"~1 ~2", "~2 ~1"}
    b = parse_coloured("~1 2")
    assert shuffle_coloured((), b) == {b}


def test_shuffle_coloured_requires_membership():
    with pytest.raises(MalformedInput):
        shuffle_coloured(parse_coloured("3 ~2 ~1"), parse_coloured("1"))
    with pytest.raises(MalformedInput):
        # overlined values must be the smallest ones
        shuffle_coloured(parse_coloured("~2 1"), parse_coloured("1"))


def test_is_snp():
    assert is_snp(parse_coloured("5 9 7 ~1 ~2 6 ~3 8 ~4")) == (5, 4)
    assert is_snp(parse_coloured("3 ~2 ~1")) is None
    assert is_snp(parse_coloured("1 2 3")) == (3, 0)


def test_comp_coloured():
    assert comp_coloured(parse_coloured("5 9 7 ~1 ~2 6 ~3 8 ~4")).entries == (2, 1, 0, 0, 1, 0, 1, 0)
    assert comp_coloured(epsilon(3)).entries == (0, 0, 0)
    assert comp_coloured(parse_coloured("1 2 3")).entries == (3,)
    with pytest.raises(MalformedInput):
        comp_coloured(parse_coloured("3 ~2 ~1"))


def test_weak_composition_statistics():
    a = WeakComposition((2, 1, 0, 0, 1, 0, 1, 0))
    assert (a.weight, a.length, a.zero_length, a.total_weight) == (5, 8, 4, 9)
    assert wc_descent_set(a) == {2, 3, 6, 8}
    assert wc_descent_set((0, 0, 0)) == frozenset()
    assert wc_descent_set((1, 0)) == {1}
    with pytest.raises(MalformedInput):
        WeakComposition((1, -1))


def test_enumerate_group_sizes():
    assert len(list(enumerate_group("A", 3))) == 6
    assert len(list(enumerate_group("B", 2))) == 8
    assert len(list(enumerate_group("B", 3))) == 48
    for n in range(4):
        for p in range(3):
            assert len(list(enumerate_group("coloured", n, p))) == group_order("coloured", n, p)


def test_enumerate_group_deterministic():
    assert list(enumerate_group("B", 2)) == sorted(enumerate_group("B", 2))
    assert list(enumerate_group("coloured", 2, 1)) == list(enumerate_group("coloured", 2, 1))


def test_enumeration_caps():
    with caps_override(max_n_b=2):
        with pytest.raises(SizeLimit):
            list(enumerate_group("B", 3))
    with caps_override(max_n_a=3):
        with pytest.raises(SizeLimit):
            list(enumerate_group("A", 4))


def test_descent_class_examples():
    assert descent_class("A", set(), 3) == {(1, 2, 3)}
    assert descent_class("A", {1, 2}, 3) == {(3, 2, 1)}
    assert descent_class("B", {0}, 1) == {(-1,)}
    with pytest.raises(MalformedInput):
        descent_class("A", {0}, 3)


@pytest.mark.parametrize("n", range(5))
def test_descent_classes_partition_groups(n):
    total_a = sum(len(descent_class("A", I, n)) for I in _subsets(range(1, n)))
    assert total_a == factorial(n)
    if n <= 3:
        total_b = sum(len(descent_class("B", I, n)) for I in _subsets(range(n)))
        assert total_b == 2 ** n * factorial(n)


def _subsets(ground):
    ground = list(ground)
    return [{g for i, g in enumerate(ground) if mask >> i & 1} for mask in range(2 ** len(ground))]


def test_partitions_and_two_core():
    assert len(partitions_of(4)) == 5
    assert set(empty_two_core(1)) == {(2,), (1, 1)}
    assert set(empty_two_core(2)) == set(partitions_of(4))
    assert partitions_of(0) == [()]
    assert empty_two_core(0) == [()]


@pytest.mark.parametrize("n", range(1, 5))
def test_two_core_agrees_with_tiler(n):
    for lam in partitions_of(2 * n):
        tileable = bool(tilings(lam)) if has_empty_two_core(lam) else _brute_tileable(lam)
        assert tileable == (lam in empty_two_core(n))


def _brute_tileable(shape) -> bool:
    cells = {(r, c) for r, part in enumerate(shape) for c in range(part)}

    def go(cells):
        if not cells:
            return True
        r, c = min(cells)
        return any(other in cells and go(cells - {(r, c), other}) for other in ((r, c + 1), (r + 1, c)))

    return go(frozenset(cells))


def test_beta_set_round_trip():
    for n in range(7):
        for lam in partitions_of(n):
            assert from_beta_set(beta_set(lam)) == lam
            assert conjugate(conjugate(lam)) == lam


def test_text_formats():
    assert parse_partition("5,5,4,1,1") == (5, 5, 4, 1, 1)
    assert format_partition((5, 5, 4, 1, 1)) == "5,5,4,1,1"
    assert str(parse_weak_composition("2,1,0,0,1,0,1,0")) == "2,1,0,0,1,0,1,0"
    assert parse_permutation("3 1 2") == (3, 1, 2)
    assert parse_signed("-2 1") == (-2, 1)
    word = "5 9 7 ~1 ~2 6 ~3 8 ~4"
    assert format_coloured(parse_coloured(word)) == word
    assert parse_descent_set("{0,3,5,6}") == {0, 3, 5, 6}
    assert format_descent_set({6, 0, 5, 3}) == "{0,3,5,6}"
    assert parse_descent_set("{}") == frozenset()
    with pytest.raises(MalformedInput):
        parse_partition("1,2")
    with pytest.raises(MalformedInput):
        parse_permutation("1 3")


def test_coloured_constructor():
    assert coloured([(2, False), (1, True)]) == (Letter(2), Letter(1, True))
    assert is_canonical(coloured([(2, False), (1, True)]))
    with pytest.raises(MalformedInput):
        coloured([(1, False), (3, True)])
