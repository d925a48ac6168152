"""Property-based checks on random inputs."""
from collections import defaultdict
from itertools import combinations
from math import comb

from hypothesis import given, settings, strategies as st

from qsymb.combinat import (Letter, comp_coloured, descent_set, descent_set_signed, empty_two_core,
                            inverse, is_canonical, is_snp, partitions_of, shuffle_coloured,
                            shuffle_plain, shuffle_signed)
from qsymb.expand import expand_in_fundamental_A, expand_in_fundamental_B
from qsymb.qpoly import domino_function, fundamental_A, fundamental_B, schur, xy_alphabet

PROPERTY_EXAMPLES = 100

permutations_ = st.integers(0, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1))))
signed_ = permutations_.flatmap(
    lambda w: st.lists(st.booleans(), min_size=len(w), max_size=len(w)).map(
        lambda signs: tuple(-x if s else x for x, s in zip(w, signs))))


def coloured_(n_max=3, p_max=3):
    """Canonical coloured permutations: bars 1..p increasing, plain p+1..p+n in any order."""
    @st.composite
    def build(draw):
        n, p = draw(st.integers(0, n_max)), draw(st.integers(0, p_max))
        plain = draw(st.permutations(list(range(p + 1, p + n + 1))))
        slots = sorted(draw(st.lists(st.integers(0, n + p - 1), min_size=p, max_size=p, unique=True))
                       if n + p else [])
        word, bars, rest = [], iter(range(1, p + 1)), iter(plain)
        for k in range(n + p):
            word.append(Letter(next(bars), True) if k in slots else Letter(next(rest)))
        return tuple(word)
    return build()


def _quasisymmetric(poly, fixed: int) -> bool:
    """Coefficient depends only on the compressed exponent sequence.

    The first ``fixed`` slots are kept in place (x0 for type B); the rest may
    be shifted by any order-preserving map.
    """
    nv = poly.alphabet.nvars
    free = list(range(fixed, nv))
    if not poly.alphabet.include_x0 and fixed == 0:
        free = list(range(1, nv))
    by_pattern = defaultdict(dict)
    for (exps, t), c in poly.terms.items():
        head = exps[:fixed]
        nz = tuple(exps[i] for i in free if exps[i])
        by_pattern[(head, nz, t)][exps] = c
    for (head, nz, t), seen in by_pattern.items():
        coeffs = set(seen.values())
        if len(coeffs) != 1:
            return False
        expected = comb(len(free), len(nz))
        if len(seen) != expected:
            return False
    return True


@st.composite
def constructed_function(draw):
    kind = draw(st.sampled_from(["A", "B", "schur", "domino"]))
    n = draw(st.integers(1, 4))
    M = draw(st.integers(n, 4))
    if kind == "A":
        I = draw(st.frozensets(st.integers(1, n - 1))) if n > 1 else frozenset()
        return fundamental_A(I, n, M), 0
    if kind == "B":
        I = draw(st.frozensets(st.integers(0, n - 1)))
        return fundamental_B(I, n, M), 1
    if kind == "schur":
        return schur(draw(st.sampled_from(partitions_of(n))), M), 0
    n = min(n, 3)
    return domino_function(draw(st.sampled_from(empty_two_core(n))), max(M, n)), 1


@settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
@given(constructed_function())
def test_quasisymmetry_shift_property(sample):
    poly, fixed = sample
    assert poly
    assert _quasisymmetric(poly, fixed)


def test_shift_checker_rejects_non_quasisymmetric():
    p = fundamental_A({1}, 2, 3)
    terms = p.terms
    terms.pop(next(iter(sorted(terms))))
    from qsymb.qpoly import SparsePoly
    assert not _quasisymmetric(SparsePoly(p.alphabet, terms), 0)


@given(permutations_)
def test_inverse_is_involution(w):
    w = tuple(w)
    assert inverse(inverse(w)) == w


@given(signed_)
def test_signed_inverse_is_involution(w):
    assert inverse(inverse(w)) == w
    assert (0 in descent_set_signed(w)) == bool(w and w[0] < 0)


@settings(max_examples=50, deadline=None)
@given(permutations_, permutations_)
def test_shuffle_size_and_unique_decomposition(a, b):
    a, b = tuple(a), tuple(b)
    out = shuffle_plain(a, b)
    assert len(out) == comb(len(a) + len(b), len(a))
    n = len(a)
    for w in out:
        assert tuple(x for x in w if x <= n) == a
        assert tuple(x - n for x in w if x > n) == b


@settings(max_examples=50, deadline=None)
@given(signed_, signed_)
def test_signed_shuffle_size(a, b):
    assert len(shuffle_signed(a, b)) == comb(len(a) + len(b), len(a))


@settings(max_examples=50, deadline=None)
@given(coloured_(), coloured_(2, 2))
def test_coloured_shuffle_is_canonical(a, b):
    out = shuffle_coloured(a, b)
    assert len(out) == comb(len(a) + len(b), len(a))
    (n, p), (m, q) = is_snp(a), is_snp(b)
    for g in out:
        # overlined letters may appear out of order, but the value layout stays canonical
        assert is_canonical(g)
        assert sorted(l.value for l in g if l.bar) == list(range(1, p + q + 1))
        assert len(g) == n + m + p + q


@settings(max_examples=PROPERTY_EXAMPLES, deadline=None)
@given(coloured_())
def test_comp_coloured_invariants(pi):
    alpha = comp_coloured(pi)
    n, p = is_snp(pi)
    assert alpha.weight == n and alpha.zero_length == p
    # a plain word reduces to the ordinary descent composition
    if p == 0 and n:
        cuts = [sum(alpha.entries[:k]) for k in range(1, len(alpha.entries))]
        assert set(cuts) == descent_set([l.value for l in pi])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.dictionaries(st.frozensets(st.integers(1, n - 1)) if n > 1 else st.just(frozenset()),
                                st.integers(-3, 3), max_size=4))))
def test_mobius_round_trip_A(data):
    n, coeffs = data
    coeffs = {I: c for I, c in coeffs.items() if c}
    M = n
    p = sum((fundamental_A(I, n, M) * c for I, c in coeffs.items()), fundamental_A(set(), n, M) * 0)
    assert expand_in_fundamental_A(p, n, M) == coeffs


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.dictionaries(st.frozensets(st.integers(0, n - 1)), st.integers(-3, 3), max_size=4))))
def test_mobius_round_trip_B(data):
    n, coeffs = data
    coeffs = {I: c for I, c in coeffs.items() if c}
    M = n
    p = sum((fundamental_B(I, n, M) * c for I, c in coeffs.items()), fundamental_B(set(), n, M) * 0)
    assert expand_in_fundamental_B(p, n, M) == coeffs


def test_product_alphabet_slots():
    J = xy_alphabet(2, 3, True, False)
    assert J.nvars == 3 + 4
    assert [name for name in J.names() if name] == ["x0", "x1", "x2", "y1", "y2", "y3"]


def test_small_shuffle_counts():
    for n, m in combinations(range(5), 2):
        a, b = tuple(range(1, n + 1)), tuple(range(m, 0, -1))
        assert len(shuffle_plain(a, b)) == comb(n + m, n)
