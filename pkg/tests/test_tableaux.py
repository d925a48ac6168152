from collections import Counter
from itertools import permutations
from math import comb, factorial

import pytest

from qsymb.combinat import empty_two_core, partitions_of
from qsymb.errors import MalformedInput, SizeLimit
from qsymb.config import caps_override
from qsymb.harness import FIG_T1, FIG_T2, FIG_T3
from qsymb.tableaux import (Domino, DominoTableau, PTableau, comp_tableau, descent_set_domino,
                            descent_set_tableau, enum_sbt, enum_sdt, enum_sdt_by_labelling,
                            enum_ssbt, enum_ssdt, enum_ssyt, enum_syt, format_domino_tableau,
                            format_ptableau, format_tableau, is_semistandard, is_standard,
                            is_standard_ptableau, is_valid_ssdt, parse_domino_tableau,
                            parse_tableau, spin, standardize, tilings, two_quotient_shape)


def _brute_syt(shape):
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for part in shape:
            rows.append(perm[k:k + part])
            k += part
        t = tuple(rows)
        if is_standard(t):
            out.append(t)
    return sorted(out)


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 1, 1), (3, 1, 1)])
def test_syt_against_brute_force(shape):
    assert sorted(enum_syt(shape)) == _brute_syt(shape)


def test_syt_examples():
    tabs = enum_syt((2, 1))
    assert len(tabs) == 2
    assert {descent_set_tableau(t) for t in tabs} == {frozenset({1}), frozenset({2})}
    (row,) = enum_syt((4,))
    assert descent_set_tableau(row) == frozenset()
    assert len(enum_ssyt((1,), 5)) == 5


def test_descent_set_tableau_examples():
    assert descent_set_tableau(((1, 3), (2,))) == {1}
    assert descent_set_tableau(((1, 2, 3),)) == frozenset()
    assert descent_set_tableau(((1,), (2,), (3,), (4,))) == {1, 2, 3}
    with pytest.raises(MalformedInput):
        descent_set_tableau(((1, 1),))


@pytest.mark.parametrize("n", range(1, 7))
def test_syt_square_sum(n):
    assert sum(len(enum_syt(lam)) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_ssyt_are_semistandard_and_distinct():
    tabs = enum_ssyt((2, 1), 3)
    assert len(tabs) == len(set(tabs)) == 8
    assert all(is_semistandard(t) for t in tabs)


@pytest.mark.parametrize("shape, p, M", [((1,), 1, 3), ((2, 1), 2, 3), ((), 2, 4), ((1, 1), 0, 3)])
def test_ssbt_count(shape, p, M):
    assert len(enum_ssbt(shape, p, M)) == comb(M + p - 1, p) * len(enum_ssyt(shape, M))


def test_sbt_examples():
    assert enum_sbt((), 3) == [PTableau((1, 2, 3), ())]
    assert sorted(enum_sbt((1,), 1)) == sorted([PTableau((1,), ((2,),)), PTableau((2,), ((1,),))])
    for t in enum_sbt((2, 1), 2):
        assert is_standard_ptableau(t)


def test_standardize_worked_example():
    t = PTableau((2, 4, 4), ((1, 4), (5, 5), (9,)))
    st = standardize(t)
    assert st == PTableau((2, 3, 4), ((1, 5), (6, 7), (8,)))
    assert format_ptableau(st) == "2 3 4 | 1 5/6 7/8"
    assert str(comp_tableau(st)) == "1,0,0,0,1,2,1"


def test_standardize_small_cases():
    assert standardize(PTableau((1,), ((1,),))) == PTableau((1,), ((2,),))
    for t in enum_sbt((2, 1), 1):
        assert standardize(t) == t
    # equal entries in different rows of the plus component
    assert standardize(PTableau((), ((1, 2), (2,)))) == PTableau((), ((1, 3), (2,)))


@pytest.mark.parametrize("shape, p", [((2, 1), 1), ((1, 1), 2), ((3,), 1), ((2,), 2)])
def test_standardisation_fibres_partition_ssbt(shape, p):
    M = 3
    fibres = Counter(standardize(t) for t in enum_ssbt(shape, p, M))
    assert set(fibres) <= set(enum_sbt(shape, p))
    assert sum(fibres.values()) == len(enum_ssbt(shape, p, M))
    assert all(is_standard_ptableau(t) for t in fibres)


def test_comp_tableau_trivial():
    assert comp_tableau(PTableau((), ((1, 2, 3),))).entries == (3,)
    assert comp_tableau(PTableau((1, 2), ())).entries == (0, 0)
    for t in enum_sbt((2, 1), 2):
        c = comp_tableau(t)
        assert c.weight == 3 and c.zero_length == 2


def test_domino_function_small_shapes():
    (h,) = enum_sdt((2,))
    assert spin(h) == 0 and descent_set_domino(h) == frozenset()
    (v,) = enum_sdt((1, 1))
    assert spin(v) == 1 and descent_set_domino(v) == {0}


def test_sdt_square_sum_two():
    assert sum(len(enum_sdt(lam)) ** 2 for lam in empty_two_core(2)) == 8


@pytest.mark.parametrize("n", range(1, 5))
def test_sdt_square_sum_is_group_order(n):
    assert sum(len(enum_sdt(lam)) ** 2 for lam in empty_two_core(n)) == 2 ** n * factorial(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_sdt_growth_matches_labelling_oracle(n):
    for lam in empty_two_core(n):
        got, oracle = enum_sdt(lam), enum_sdt_by_labelling(lam)
        assert len(got) == len(set(got)) and set(got) == set(oracle)


@pytest.mark.parametrize("n", range(1, 5))
def test_spin_parity_constant_per_shape(n):
    for lam in empty_two_core(n):
        assert len({t.spin2 % 2 for t in enum_sdt(lam)}) == 1


def test_zero_label_rule():
    assert all(d.label >= 1 for t in enum_ssdt((1, 1), 3) for d in t.dominoes)
    bad = DominoTableau((1, 1), (Domino(1, 1, True, 0),))
    assert not is_valid_ssdt(bad)
    assert len(enum_ssdt((2,), 3)) == 4
    assert len(enum_ssdt((1, 1), 3)) == 3


def test_ssdt_valid_and_distinct():
    tabs = enum_ssdt((3, 1), 2)
    assert len(tabs) == len(set(tabs))
    assert all(is_valid_ssdt(t) for t in tabs)


def test_figure_tableaux():
    for t in (FIG_T1, FIG_T2):
        assert t in enum_sdt((5, 5, 4, 1, 1))
        assert descent_set_domino(t) == {0, 3, 5, 6}
        assert t.spin2 == 4
    assert FIG_T3.weight() == (2, 0, 2, 0, 0, 4, 0, 1)
    assert FIG_T3.spin2 == 4
    assert FIG_T3 in enum_ssdt((5, 5, 4, 3, 1), 7, weight=FIG_T3.weight())


def test_tilings_count_small():
    assert len(tilings((2, 2))) == 2
    assert len(tilings((4, 4))) == 5
    assert len(tilings((3, 1))) == 1
    assert tilings((2, 1)) == []
    with pytest.raises(MalformedInput):
        enum_sdt((2, 1))
    with pytest.raises(MalformedInput):
        enum_ssdt((3, 2, 1), 2)


def test_two_quotient_examples():
    assert two_quotient_shape((2,)) == ((), (1,))
    assert two_quotient_shape((1, 1)) == ((1,), ())
    minus, plus = two_quotient_shape((5, 5, 4, 1, 1))
    assert sum(minus) + sum(plus) == 8
    with pytest.raises(MalformedInput):
        two_quotient_shape((2, 1))


@pytest.mark.parametrize("n", range(6))
def test_two_quotient_is_bijection(n):
    pairs = [two_quotient_shape(lam) for lam in empty_two_core(n)]
    expected = {(a, b) for k in range(n + 1) for a in partitions_of(k) for b in partitions_of(n - k)}
    assert len(pairs) == len(set(pairs)) and set(pairs) == expected


def test_tableau_text_round_trips():
    t = ((1, 3), (2,))
    assert format_tableau(t) == "1 3/2"
    assert parse_tableau("1 3/2") == t
    text = format_domino_tableau(FIG_T1)
    assert parse_domino_tableau(text) == FIG_T1
    assert text.startswith("(1,1,V,1) (1,2,V,2)")


def test_item_cap():
    with caps_override(max_items=10):
        with pytest.raises(SizeLimit):
            enum_ssyt((2, 1), 4)
