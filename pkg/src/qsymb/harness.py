"""Identity registry and exact verification reports.

Every identity is reduced to two *sides*: dicts from a key string (sub-case plus
monomial or statistic) to an exact value.  A report compares the two sides key
by key, so a failure names the offending monomial rather than returning a bare
boolean.
"""
from __future__ import annotations

import hashlib
import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Any, Callable, Iterable, Mapping

from .combinat import (Letter, as_partition, compose, comp_coloured, descent_set,
                       descent_set_signed, empty_two_core, enumerate_group, epsilon,
                       format_coloured, format_descent_set, format_partition, format_word,
                       from_plain, inverse, partitions_of, shuffle_coloured, shuffle_plain,
                       snp_elements, total_colour)
from .config import Caps, get_caps, use_caps
from .errors import InvalidParams, MalformedInput
from .expand import (NotExpandable, expand_in_domino_basis, expand_in_fundamental_B, knuth_class,
                     lr_coeff, lr_expand)
from .qpoly import (AlphabetSpec, Laurent, SparsePoly, domino_function, fundamental_A,
                    fundamental_A_XY, fundamental_B, fundamental_WC, gamma, poly_sum, schur,
                    schur_XY, schur_p, xy_alphabet)
from .tableaux import (Domino, DominoTableau, PTableau, comp_tableau, descent_set_domino,
                       descent_set_tableau, enum_sbt, enum_sdt, enum_ssdt, enum_syt,
                       format_ptableau, is_standard_domino, is_valid_ssdt, standardize,
                       two_quotient_shape)

Side = dict[str, Any]

STATUSES = ("verified", "failed", "not-expandable")
MAX_MISMATCHES = 10


@dataclass(frozen=True)
class IdentityCase:
    id: str
    params: Mapping[str, Any] = field(default_factory=dict)
    description: str = ""


@dataclass
class Mismatch:
    monomial: str
    lhs: str
    rhs: str


@dataclass
class IdentityReport:
    case: IdentityCase
    status: str
    lhs_terms: int
    rhs_terms: int
    lhs_digest: str
    rhs_digest: str
    mismatches: list[Mismatch]
    ms: float
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "identity": self.case.id,
            "params": _params_json(self.case.params),
            "status": self.status,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "lhs_digest": self.lhs_digest,
            "rhs_digest": self.rhs_digest,
            "mismatches": [vars(m) for m in self.mismatches],
            "ms": round(self.ms, 3),
        }

    def to_text(self) -> str:
        head = (f"{self.case.id:9s} {self.status:15s} lhs={self.lhs_terms} rhs={self.rhs_terms} "
                f"{self.ms:.1f} ms")
        lines = [head] + [f"    {m.monomial}: {m.lhs} != {m.rhs}" for m in self.mismatches]
        if self.note:
            lines.append(f"    {self.note}")
        return "\n".join(lines)


class _NotExpandableSignal(Exception):
    def __init__(self, report: NotExpandable, lhs: Side, rhs: Side):
        super().__init__(report.reason)
        self.report, self.lhs, self.rhs = report, lhs, rhs


# -- side helpers ----------------------------------------------------------

def _add_poly(side: Side, label: str, poly: SparsePoly):
    for key, v in poly.sorted_terms():
        side[f"{label} | {poly.monomial_text(key)}"] = v


def _digest(side: Side) -> str:
    text = "\n".join(f"{k}\t{side[k]}" for k in sorted(side))
    return hashlib.sha256(text.encode()).hexdigest()


def _compare(lhs: Side, rhs: Side) -> list[Mismatch]:
    out = []
    for k in sorted(set(lhs) | set(rhs)):
        a, b = lhs.get(k, 0), rhs.get(k, 0)
        if a != b:
            out.append(Mismatch(k, str(a), str(b)))
    return out


def _t(k: int) -> Laurent:
    return Laurent({k: 1})


def _values(v) -> list:
    return list(v) if isinstance(v, list) else [v]


def _fmt(shape) -> str:
    return format_partition(shape) or "()"


def _pairs_of_sizes(params) -> list[tuple[int, int]]:
    n, m = params["n"], params["m"]
    if not isinstance(n, list) and not isinstance(m, list):
        return [(n, m)]
    return [(a, b) for a in _values(n) for b in _values(m) if a + b <= params["total"]]


def _shape_pairs(params, shapes: Callable[[int], list]) -> list[tuple[tuple, tuple]]:
    if params.get("lambda") is not None or params.get("mu") is not None:
        return [(params.get("lambda") or (), params.get("mu") or ())]
    return [(lam, mu) for a, b in _pairs_of_sizes(params) for lam in shapes(a) for mu in shapes(b)]


def _shapes_up_to(params, shapes: Callable[[int], list]) -> list[tuple]:
    if params.get("lambda") is not None:
        return [params["lambda"]]
    return [lam for k in _values(params["n"]) for lam in shapes(k)]


# -- type A ----------------------------------------------------------------

def _fund_sum(descents: Iterable[frozenset[int]], n: int, M: int) -> SparsePoly:
    counts = Counter(descents)
    alphabet = AlphabetSpec(M)
    return poly_sum((fundamental_A(I, n, M) * c for I, c in sorted(counts.items(), key=lambda kv: sorted(kv[0]))),
                    alphabet)


def _eq2(params) -> tuple[Side, Side]:
    M = params["M"]
    lhs, rhs = {}, {}
    for lam in _shapes_up_to(params, partitions_of):
        n = sum(lam)
        _add_poly(lhs, _fmt(lam), schur(lam, M))
        _add_poly(rhs, _fmt(lam), _fund_sum((descent_set_tableau(T) for T in enum_syt(lam)), n, M))
    return lhs, rhs


class _XY:
    """Cache of one-alphabet functions embedded into a product alphabet."""

    def __init__(self, Mx: int, My: int, typeB: bool = False):
        self.Mx, self.My, self.typeB = Mx, My, typeB
        self.joint = xy_alphabet(Mx, My, typeB, typeB)
        self._cache: dict = {}

    def fund(self, I: frozenset[int], n: int, block: str) -> SparsePoly:
        key = ("F", I, n, block)
        if key not in self._cache:
            M = self.Mx if block == "x" else self.My
            f = fundamental_B(I, n, M) if self.typeB else fundamental_A(I, n, M)
            self._cache[key] = f.embed(self.joint, block)
        return self._cache[key]

    def pair(self, I: frozenset[int], J: frozenset[int], n: int) -> SparsePoly:
        key = ("P", I, J, n)
        if key not in self._cache:
            self._cache[key] = self.fund(I, n, "x") * self.fund(J, n, "y")
        return self._cache[key]

    def pair_sum(self, counts: Counter, n: int) -> SparsePoly:
        """Σ c·F_I(X)F_J(Y) over ``counts[(I, J, t)] = c``."""
        terms = sorted(counts.items(), key=lambda kv: (sorted(kv[0][0]), sorted(kv[0][1]), kv[0][2]))
        return poly_sum((self.pair(I, J, n) * (_t(s) * c) for (I, J, s), c in terms), self.joint)


def _eq3(params):
    xy = _XY(params["M"], params["My"])
    lhs, rhs = {}, {}
    for n in _values(params["n"]):
        group = list(enumerate_group("A", n))
        for pi in group:
            counts = Counter()
            for s in group:
                r = compose(pi, inverse(s))
                counts[(descent_set(s), descent_set(r), 0)] += 1
            label = f"pi={format_word(pi) or '()'}"
            _add_poly(lhs, label, fundamental_A_XY(descent_set(pi), n, xy.Mx, xy.My))
            _add_poly(rhs, label, xy.pair_sum(counts, n))
    return lhs, rhs


def _eq4(params):
    Mx, My = params["M"], params["My"]
    joint = xy_alphabet(Mx, My)
    lhs, rhs = {}, {}
    for n in _values(params["n"]):
        total = poly_sum((schur(lam, Mx).embed(joint, "x") * schur(lam, My).embed(joint, "y")
                          for lam in partitions_of(n)), joint)
        _add_poly(lhs, f"n={n}", total)
        _add_poly(rhs, f"n={n}", schur_XY((n,) if n else (), Mx, My))
    return lhs, rhs


def _eq5(params):
    xy = _XY(params["M"], params["My"])
    lhs, rhs = {}, {}
    for n in _values(params["n"]):
        tab = Counter()
        for lam in partitions_of(n):
            des = [descent_set_tableau(T) for T in enum_syt(lam)]
            tab.update((I, J, 0) for I in des for J in des)
        perm = Counter((descent_set(pi), descent_set(inverse(pi)), 0) for pi in enumerate_group("A", n))
        mid = fundamental_A_XY(frozenset(), n, xy.Mx, xy.My)
        _add_poly(lhs, f"n={n} tableaux~chain", xy.pair_sum(tab, n))
        _add_poly(rhs, f"n={n} tableaux~chain", mid)
        _add_poly(lhs, f"n={n} chain~permutations", mid)
        _add_poly(rhs, f"n={n} chain~permutations", xy.pair_sum(perm, n))
    return lhs, rhs


def _eq6(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for total in _values(params["n"]):
        for a in range(total + 1):
            b = total - a
            for alpha in enumerate_group("A", a):
                for beta in enumerate_group("A", b):
                    label = f"[{format_word(alpha)}]*[{format_word(beta)}]"
                    prod = fundamental_A(descent_set(alpha), a, M) * fundamental_A(descent_set(beta), b, M)
                    _add_poly(lhs, label, prod)
                    _add_poly(rhs, label, _fund_sum((descent_set(g) for g in shuffle_plain(alpha, beta)),
                                                    total, M))
    return lhs, rhs


def _eq7(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam, mu in _shape_pairs(params, partitions_of):
        n, m = sum(lam), sum(mu)
        s_prod = schur(lam, M) * schur(mu, M)
        for T in enum_syt(lam):
            CT = sorted(knuth_class(T, n).members)
            fT = _fund_sum((descent_set(a) for a in CT), n, M)
            for U in enum_syt(mu):
                CU = sorted(knuth_class(U, m).members)
                fU = _fund_sum((descent_set(b) for b in CU), m, M)
                shuffled = (descent_set(g) for a in CT for b in CU for g in shuffle_plain(a, b))
                label = f"{_fmt(lam)};{_fmt(mu)};T={T};U={U}"
                _add_poly(lhs, label + " schur~classes", s_prod)
                _add_poly(rhs, label + " schur~classes", fT * fU)
                _add_poly(lhs, label + " classes~shuffle", fT * fU)
                _add_poly(rhs, label + " classes~shuffle", _fund_sum(shuffled, n + m, M))
    return lhs, rhs


def _subsets(ground: list[int]) -> list[frozenset[int]]:
    return [frozenset(x for x, keep in zip(ground, bits) if keep)
            for bits in product((0, 1), repeat=len(ground))]


def _eq11(params):
    lam, mu = params["lambda"], params["mu"]
    n = sum(lam) + sum(mu)
    lr = lr_expand(lam, mu)
    syt_des = {nu: Counter(descent_set_tableau(V) for V in enum_syt(nu)) for nu in lr}
    lhs, rhs = {}, {}
    for T in enum_syt(lam):
        CT = knuth_class(T).members
        for U in enum_syt(mu):
            CU = knuth_class(U).members
            shuffled = Counter(descent_set(g) for a in CT for b in CU for g in shuffle_plain(a, b))
            for I in _subsets(list(range(1, n))):
                label = f"T={T};U={U};I={format_descent_set(I)}"
                lhs[label] = sum(c * syt_des[nu][I] for nu, c in lr.items())
                rhs[label] = shuffled[I]
    # class sizes per descent set do not depend on the chosen tableau
    for k in _values(params["n"]):
        for nu in partitions_of(k):
            tabs = enum_syt(nu)
            ref = Counter(descent_set(w) for w in knuth_class(tabs[0], k).members)
            for V in tabs:
                got = Counter(descent_set(w) for w in knuth_class(V, k).members)
                for I in _subsets(list(range(1, k))):
                    label = f"independence {_fmt(nu)};V={V};I={format_descent_set(I)}"
                    lhs[label] = got[I]
                    rhs[label] = ref[I]
    return lhs, rhs


# -- weak compositions and coloured permutations --------------------------

def _gamma_ex(params):
    pi = (Letter(3), Letter(2, True), Letter(1, True))
    lhs, rhs = {}, {}
    for M in _values(params["M"]):
        g = gamma(pi, M)
        _add_poly(lhs, f"M={M}", g)
        _add_poly(rhs, f"M={M}", fundamental_WC((1, 0, 0), M) - fundamental_WC((1, 0), M))
        if M == 3:
            e = [0] * (M + 1)
            e[1] = 1
            _add_poly(lhs, "M=3 anchor", g)
            _add_poly(rhs, "M=3 anchor", SparsePoly(g.alphabet, {(tuple(e), 0): 1}))
    return lhs, rhs


WORKED_PAIR = ("3 2 ~1", "~1 2")
WORKED_SHUFFLE = (
    "4 3 ~1 ~2 5", "4 3 ~2 ~1 5", "4 ~2 3 ~1 5", "~2 4 3 ~1 5", "4 3 ~2 5 ~1",
    "4 ~2 3 5 ~1", "~2 4 3 5 ~1", "4 ~2 5 3 ~1", "~2 4 5 3 ~1", "~2 5 4 3 ~1",
)


def _wc_of(pi, M: int) -> SparsePoly:
    return fundamental_WC(comp_coloured(pi), M)


def _eq13(params):
    from .combinat import parse_coloured

    M = params["M"]
    elements = [w for n in _values(params["n"]) for p in _values(params["p"]) for w in snp_elements(n, p)]
    pairs = [(a, b) for a in elements for b in elements]
    pairs.append(tuple(parse_coloured(w) for w in WORKED_PAIR))
    lhs, rhs = {}, {}
    for a, b in pairs:
        label = f"[{format_coloured(a)}]*[{format_coloured(b)}]"
        _add_poly(lhs, label, _wc_of(a, M) * _wc_of(b, M))
        shuffled = sorted(shuffle_coloured(a, b), key=lambda w: [l.key() for l in w])
        _add_poly(rhs, label, poly_sum((gamma(g, M) for g in shuffled), AlphabetSpec(M)))
    a, b = (parse_coloured(w) for w in WORKED_PAIR)
    lhs["worked shuffle list"] = " + ".join(sorted(format_coloured(g) for g in shuffle_coloured(a, b)))
    rhs["worked shuffle list"] = " + ".join(sorted(WORKED_SHUFFLE))
    return lhs, rhs


def _zeros(p: int, M: int) -> SparsePoly:
    return fundamental_WC((0,) * p, M)


def _eq14(params):
    lhs, rhs = {}, {}
    for M in _values(params["M"]):
        alphabet = AlphabetSpec(M)
        for p in _values(params["p"]):
            _add_poly(lhs, f"M={M};p={p} constant", _zeros(p, M))
            _add_poly(rhs, f"M={M};p={p} constant", SparsePoly.constant(alphabet, comb(M + p - 1, p)))
            for q in _values(params["q"]):
                label = f"M={M};p={p};q={q}"
                _add_poly(lhs, label, _zeros(p, M) * _zeros(q, M))
                total = poly_sum((_zeros(p + q - j, M) * ((-1) ** j * comb(p, j) * comb(p + q - j, p))
                                  for j in range(p + 1)), alphabet)
                _add_poly(rhs, label, total)
    return lhs, rhs


def _lemma1(params):
    lhs, rhs = {}, {}
    for lam in _shapes_up_to(params, partitions_of):
        for p in _values(params["p"]):
            for M in _values(params["M"]):
                label = f"{_fmt(lam)};p={p};M={M}"
                _add_poly(lhs, label, schur_p(lam, p, M))
                _add_poly(rhs, label, schur(lam, M) * comb(M + p - 1, p))
    return lhs, rhs


WORKED_PTABLEAU = PTableau((2, 4, 4), ((1, 4), (5, 5), (9,)))
WORKED_STANDARD = "2 3 4 | 1 5/6 7/8"
WORKED_COMP = "1,0,0,0,1,2,1"


def _sbt_sum(lam, p: int, M: int) -> SparsePoly:
    return poly_sum((fundamental_WC(comp_tableau(T), M) for T in enum_sbt(lam, p)), AlphabetSpec(M))


def _prop2(params):
    lhs, rhs = {}, {}
    for lam in _shapes_up_to(params, partitions_of):
        for p in _values(params["p"]):
            for M in _values(params["M"]):
                label = f"{_fmt(lam)};p={p};M={M}"
                _add_poly(lhs, label, schur_p(lam, p, M))
                _add_poly(rhs, label, _sbt_sum(lam, p, M))
    st = standardize(WORKED_PTABLEAU)
    lhs["worked standardisation"] = format_ptableau(st)
    rhs["worked standardisation"] = WORKED_STANDARD
    lhs["worked comp"] = str(comp_tableau(st))
    rhs["worked comp"] = WORKED_COMP
    return lhs, rhs


THM1_CASES = [((1,), (1,), 1, 1), ((2,), (1,), 1, 2), ((1, 1), (2,), 2, 1)]


def _thm1_cases(params):
    if any(params.get(k) is not None for k in ("lambda", "mu", "p", "q")):
        return [(params.get("lambda") or (1,), params.get("mu") or (1,),
                 1 if params.get("p") is None else params["p"],
                 1 if params.get("q") is None else params["q"])]
    cases = params["cases"]
    return cases if cases else [((), (), 0, 0)]


def _thm1_rhs(lam, mu, p: int, q: int, M: int) -> SparsePoly:
    alphabet = AlphabetSpec(M)
    terms = []
    for nu, c in sorted(lr_expand(lam, mu).items()):
        for j in range(p + 1):
            coef = (-1) ** j * comb(p, j) * comb(p + q - j, p) * c
            if coef:
                terms.append(_sbt_sum(nu, p + q - j, M) * coef)
    return poly_sum(terms, alphabet)


def _thm1(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam, mu, p, q in _thm1_cases(params):
        label = f"{_fmt(lam)};{_fmt(mu)};p={p};q={q}"
        left = poly_sum((fundamental_WC(comp_tableau(T), M) * fundamental_WC(comp_tableau(U), M)
                         for T in enum_sbt(lam, p) for U in enum_sbt(mu, q)), AlphabetSpec(M))
        _add_poly(lhs, label, left)
        _add_poly(rhs, label, _thm1_rhs(lam, mu, p, q, M))
    return lhs, rhs


def _cor1(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam, mu, p, q in _thm1_cases(params):
        right = _thm1_rhs(lam, mu, p, q, M)
        for T in enum_syt(lam):
            A = {w for a in knuth_class(T, sum(lam)).members
                 for w in shuffle_coloured(epsilon(p), from_plain(a))}
            for U in enum_syt(mu):
                B = {w for b in knuth_class(U, sum(mu)).members
                     for w in shuffle_coloured(epsilon(q), from_plain(b))}
                shuffled = {g for a in A for b in B for g in shuffle_coloured(a, b)}
                label = f"{_fmt(lam)};{_fmt(mu)};p={p};q={q};T={T};U={U}"
                ordered = sorted(shuffled, key=lambda w: [l.key() for l in w])
                _add_poly(lhs, label, poly_sum((gamma(g, M) for g in ordered), AlphabetSpec(M)))
                _add_poly(rhs, label, right)
    return lhs, rhs


# -- domino tableaux and type B -------------------------------------------

def _sdt_sum(lam, M: int) -> SparsePoly:
    n = sum(lam) // 2
    counts = Counter((descent_set_domino(T), T.spin2) for T in enum_sdt(lam))
    terms = sorted(counts.items(), key=lambda kv: (sorted(kv[0][0]), kv[0][1]))
    return poly_sum((fundamental_B(I, n, M) * (_t(s) * c) for (I, s), c in terms), AlphabetSpec(M, True))


def _lemma2(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam in _shapes_up_to(params, empty_two_core):
        _add_poly(lhs, _fmt(lam), domino_function(lam, M))
        _add_poly(rhs, _fmt(lam), _sdt_sum(lam, M))
    return lhs, rhs


def _tableau(shape, spec) -> DominoTableau:
    return DominoTableau(shape, tuple(Domino(r, c, hv == "V", lab) for r, c, hv, lab in spec))


FIG_T1 = _tableau((5, 5, 4, 1, 1), [(1, 1, "V", 1), (1, 2, "V", 2), (1, 3, "V", 3), (3, 1, "H", 4),
                                    (1, 4, "H", 5), (2, 4, "H", 6), (4, 1, "V", 7), (3, 3, "H", 8)])
FIG_T2 = _tableau((5, 5, 4, 1, 1), [(1, 1, "V", 1), (1, 2, "V", 2), (1, 3, "H", 3), (2, 3, "H", 4),
                                    (1, 5, "V", 5), (3, 1, "H", 6), (4, 1, "V", 7), (3, 3, "H", 8)])
FIG_T3 = _tableau((5, 5, 4, 3, 1), [(1, 1, "H", 0), (1, 3, "H", 0), (2, 1, "V", 2), (2, 2, "H", 2),
                                    (4, 1, "V", 5), (3, 2, "H", 5), (2, 4, "V", 5), (1, 5, "V", 5),
                                    (4, 2, "H", 7)])


def _spin_text(t: DominoTableau) -> str:
    return str(Fraction(t.spin2, 2))


def _fig1(params):
    lhs, rhs = {}, {}
    for name, T in (("T1", FIG_T1), ("T2", FIG_T2)):
        lhs[f"{name} standard"] = is_standard_domino(T)
        rhs[f"{name} standard"] = True
        lhs[f"{name} descents"] = format_descent_set(descent_set_domino(T))
        rhs[f"{name} descents"] = "{0,3,5,6}"
        lhs[f"{name} spin"] = _spin_text(T)
        rhs[f"{name} spin"] = "2"
        if params["enumerate"]:
            lhs[f"{name} in SDT"] = T in set(enum_sdt(T.shape))
            rhs[f"{name} in SDT"] = True
    weight = FIG_T3.weight()
    lhs["T3 valid"] = is_valid_ssdt(FIG_T3)
    rhs["T3 valid"] = True
    lhs["T3 weight"] = format_word(weight)
    rhs["T3 weight"] = "2 0 2 0 0 4 0 1"
    lhs["T3 spin"] = _spin_text(FIG_T3)
    rhs["T3 spin"] = "2"
    if params["enumerate"]:
        lhs["T3 in SSDT"] = FIG_T3 in set(enum_ssdt(FIG_T3.shape, len(weight) - 1, weight))
        rhs["T3 in SSDT"] = True
    return lhs, rhs


def _qfactor(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam in _shapes_up_to(params, empty_two_core):
        minus, plus = two_quotient_shape(lam)
        _add_poly(lhs, _fmt(lam), domino_function(lam, M).at_t1())
        _add_poly(rhs, _fmt(lam), schur(minus, M) * schur(plus, M, include_x0=True))
    return lhs, rhs


def _cc(lam, mu, nu) -> int:
    lm, lp = two_quotient_shape(lam)
    mm, mp = two_quotient_shape(mu)
    nm, np_ = two_quotient_shape(nu)
    if sum(nm) != sum(lm) + sum(mm):
        return 0
    return lr_coeff(lm, mm, nm) * lr_coeff(lp, mp, np_)


def _eq18(params):
    M = params["M"]
    alphabet = AlphabetSpec(M, True)
    lhs, rhs = {}, {}
    for lam, mu in _shape_pairs(params, empty_two_core):
        n = (sum(lam) + sum(mu)) // 2
        label = f"{_fmt(lam)};{_fmt(mu)}"
        left = domino_function(lam, M).at_t1() * domino_function(mu, M).at_t1()
        coeffs = {nu: _cc(lam, mu, nu) for nu in empty_two_core(n)}
        coeffs = {nu: c for nu, c in coeffs.items() if c}
        right = poly_sum((domino_function(nu, M).at_t1() * c for nu, c in coeffs.items()), alphabet)
        _add_poly(lhs, label, left)
        _add_poly(rhs, label, right)
        if params["expand"]:
            k = sum(two_quotient_shape(lam)[0]) + sum(two_quotient_shape(mu)[0])
            found = expand_in_domino_basis(left, n, M, "one", minus_weight=k)
            if isinstance(found, NotExpandable):
                raise _NotExpandableSignal(found, lhs, rhs)
            lhs[label + " expansion"] = _expansion_text(found)
            rhs[label + " expansion"] = _expansion_text({nu: Laurent(c) for nu, c in coeffs.items()})
    return lhs, rhs


def _expansion_text(found: Mapping) -> str:
    return "; ".join(f"{_fmt(nu)}:{c}" for nu, c in sorted(found.items()) if c)


def _thm2(params):
    M = params["M"]
    lhs, rhs = {}, {}
    for lam, mu in _shape_pairs(params, empty_two_core):
        n = (sum(lam) + sum(mu)) // 2
        if M < n:
            raise InvalidParams(f"thm2 needs M >= n+m (got M={M}, n+m={n})")
        left = domino_function(lam, M).at_t1() * domino_function(mu, M).at_t1()
        coeffs = expand_in_fundamental_B(left, n, M)
        counts: Counter = Counter()
        for nu in empty_two_core(n):
            c = _cc(lam, mu, nu)
            if c:
                for T in enum_sdt(nu):
                    counts[descent_set_domino(T)] += c
        for I in _subsets(list(range(n))):
            label = f"{_fmt(lam)};{_fmt(mu)};I={format_descent_set(I)}"
            lhs[label] = coeffs.get(I, 0)
            rhs[label] = counts[I]
    return lhs, rhs


def _prop3(params):
    xy = _XY(params["M"], params["My"], typeB=True)
    lhs, rhs = {}, {}
    for n in _values(params["n"]):
        perm = Counter((descent_set_signed(pi), descent_set_signed(inverse(pi)), 2 * total_colour(pi))
                       for pi in enumerate_group("B", n))
        tab = Counter()
        for lam in empty_two_core(n):
            stats = [(descent_set_domino(T), T.spin2) for T in enum_sdt(lam)]
            tab.update((I, J, s + r) for I, s in stats for J, r in stats)
        _add_poly(lhs, f"n={n}", xy.pair_sum(perm, n))
        _add_poly(rhs, f"n={n}", xy.pair_sum(tab, n))
    return lhs, rhs


# -- registry --------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    defaults: Mapping[str, Any]
    build: Callable[[dict], tuple[Side, Side]]


def _upto(k: int, start: int = 0) -> list[int]:
    return list(range(start, k + 1))


REGISTRY: dict[str, Identity] = {i.id: i for i in [
    Identity("eq2", "Schur polynomial: SSYT monomials vs fundamental expansion over SYT",
             {"n": _upto(5), "M": 5, "lambda": None}, _eq2),
    Identity("eq3", "coproduct of F_I on the product alphabet XY",
             {"n": _upto(3), "M": 3, "My": 3}, _eq3),
    Identity("eq4", "Cauchy identity on the product alphabet XY",
             {"n": _upto(3), "M": 3, "My": 3}, _eq4),
    Identity("eq5", "tableau pairs, the chain F_0(XY) and permutation/inverse pairs agree",
             {"n": _upto(3), "M": 3, "My": 3}, _eq5),
    Identity("eq6", "product of two F_I is a sum over shuffles",
             {"n": _upto(5), "M": 5}, _eq6),
    Identity("eq7", "Schur product as a sum over shuffles of Knuth classes",
             {"n": _upto(5), "m": _upto(5), "total": 5, "M": 5, "lambda": None, "mu": None}, _eq7),
    Identity("eq11", "LR-weighted descent counts equal descent counts of shuffled classes",
             {"lambda": (2, 1), "mu": (2,), "n": _upto(4)}, _eq11),
    Identity("eq13", "product of weak composition functions as a sum of Gamma over coloured shuffles",
             {"n": _upto(1), "p": _upto(1), "M": 4}, _eq13),
    Identity("eq14", "products of the constants for all-zero weak compositions",
             {"p": _upto(3), "q": _upto(3), "M": _upto(6, 1)}, _eq14),
    Identity("lemma1", "(p)-tableau generating function is a binomial multiple of s_lambda",
             {"n": _upto(4), "p": _upto(2), "M": _upto(5, 1), "lambda": None}, _lemma1),
    Identity("prop2", "(p)-tableau generating function via comp of standard (p)-tableaux",
             {"n": _upto(4), "p": _upto(2), "M": _upto(5, 1), "lambda": None}, _prop2),
    Identity("thm1", "product of two (p)-tableau sums",
             {"cases": THM1_CASES, "M": 5, "lambda": None, "mu": None, "p": None, "q": None}, _thm1),
    Identity("cor1", "Gamma sum over shuffled coloured classes equals the thm1 right side",
             {"cases": [((1,), (1,), 1, 1)], "M": 4, "lambda": None, "mu": None, "p": None, "q": None},
             _cor1),
    Identity("lemma2", "domino function as a t-weighted sum of Chow functions over SDT",
             {"n": _upto(4), "M": 4, "lambda": None}, _lemma2),
    Identity("qfactor", "domino function at q=1 factors through the 2-quotient",
             {"n": _upto(4), "M": 4, "lambda": None}, _qfactor),
    Identity("eq18", "product of domino functions at q=1 with 2-quotient LR coefficients",
             {"n": _upto(4), "m": _upto(4), "total": 4, "M": 4, "lambda": None, "mu": None, "expand": 1},
             _eq18),
    Identity("thm2", "Chow coefficients of a domino product count SDT by descent set",
             {"n": _upto(3), "m": _upto(3), "total": 3, "M": 4, "lambda": None, "mu": None}, _thm2),
    Identity("prop3", "signed permutation Cauchy sum equals the SDT pair sum",
             {"n": _upto(3), "M": 3, "My": 3}, _prop3),
    Identity("gamma-ex", "Gamma of 3 ~2 ~1 as a signed combination of weak composition functions",
             {"M": [2, 3, 4]}, _gamma_ex),
    Identity("fig1", "descent set, spin and weight of the three sample domino tableaux",
             {"enumerate": 1}, _fig1),
]}

_SIZE_KEYS = ("n", "m", "p", "q", "total")
_SHAPE_KEYS = ("lambda", "mu")


def _params_json(params: Mapping[str, Any]) -> dict:
    out = {}
    for k, v in params.items():
        if k in _SHAPE_KEYS:
            out[k] = None if v is None else _fmt(v)
        elif k == "cases":
            out[k] = [[_fmt(l), _fmt(m), p, q] for l, m, p, q in v]
        else:
            out[k] = v
    return out


def _check_int(key: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InvalidParams(f"{key} must be a non-negative integer, got {v!r}")
    return v


def normalise_params(identity: str, params: Mapping[str, Any] | None = None,
                     size_clip: int | None = None) -> dict:
    """Merge ``params`` into the identity defaults, validating each value."""
    if identity not in REGISTRY:
        raise InvalidParams(f"unknown identity {identity!r}; known: {', '.join(REGISTRY)}")
    entry = REGISTRY[identity]
    out = dict(entry.defaults)
    for k, v in (params or {}).items():
        if v is None:
            continue
        if k not in entry.defaults:
            raise InvalidParams(f"{identity} does not take parameter {k!r}")
        if k in _SHAPE_KEYS:
            try:
                v = as_partition(v if not isinstance(v, str) else
                                 [int(x) for x in v.replace(" ", "").split(",") if x])
            except (MalformedInput, ValueError, TypeError) as exc:
                raise InvalidParams(f"{k}: {exc}") from None
        elif k == "cases":
            try:
                v = [(as_partition(l), as_partition(m), _check_int("p", p), _check_int("q", q))
                     for l, m, p, q in v]
            except (MalformedInput, ValueError, TypeError) as exc:
                raise InvalidParams(f"cases: {exc}") from None
        elif isinstance(v, list):
            v = [_check_int(k, x) for x in v]
        else:
            v = _check_int(k, v)
        out[k] = v
    if size_clip is not None:
        for k in _SIZE_KEYS:
            if isinstance(out.get(k), list):
                out[k] = [x for x in out[k] if x <= size_clip] or [0]
        if "total" in out:
            out["total"] = min(out["total"], size_clip)
        if identity in ("thm1", "cor1"):
            out["cases"] = [c for c in out["cases"]
                            if max(sum(c[0]), sum(c[1]), c[2], c[3]) <= size_clip]
    if identity in ("lemma2", "qfactor") and out.get("lambda") is not None:
        _check_domino_shape(out["lambda"])
    if identity in ("eq18", "thm2"):
        for k in _SHAPE_KEYS:
            if out.get(k) is not None:
                _check_domino_shape(out[k])
    return out


def _check_domino_shape(shape):
    try:
        two_quotient_shape(shape)
    except MalformedInput as exc:
        raise InvalidParams(str(exc)) from None


def make_case(identity: str, params: Mapping[str, Any] | None = None,
              size_clip: int | None = None) -> IdentityCase:
    full = normalise_params(identity, params, size_clip)
    return IdentityCase(identity, full, REGISTRY[identity].description)


def verify(case: IdentityCase | str, **params) -> IdentityReport:
    """Build both sides of ``case`` and compare them exactly."""
    if isinstance(case, str):
        case = make_case(case, params)
    elif params:
        raise InvalidParams("pass parameters either in the case or as keywords")
    full = normalise_params(case.id, case.params)
    start = time.perf_counter()
    status, note = "verified", ""
    try:
        lhs, rhs = REGISTRY[case.id].build(full)
    except _NotExpandableSignal as sig:
        lhs, rhs, status, note = sig.lhs, sig.rhs, "not-expandable", sig.report.reason
    except (MalformedInput, ValueError) as exc:
        if isinstance(exc, InvalidParams):
            raise
        raise InvalidParams(str(exc)) from exc
    ms = (time.perf_counter() - start) * 1000
    mismatches = _compare(lhs, rhs)
    if mismatches and status == "verified":
        status = "failed"
    return IdentityReport(IdentityCase(case.id, full, case.description), status, len(lhs), len(rhs),
                          _digest(lhs), _digest(rhs), mismatches[:MAX_MISMATCHES], ms, note)


@dataclass
class SuiteConfig:
    """Settings for :func:`verify_all`, usually read from a JSON caps file."""
    caps: Caps = field(default_factory=Caps.from_env)
    size_clip: int | None = None
    alphabet: int | None = None
    params: dict[str, dict] = field(default_factory=dict)


def load_suite_config(path: str | os.PathLike) -> SuiteConfig:
    """Read ``{"caps": {...}, "size_clip": n, "alphabet": M, "params": {id: {...}}}``.

    Caps in the file are overridden by ``QSYMB_MAX_*`` environment variables.
    """
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise InvalidParams("caps file must contain a JSON object")
    unknown = set(raw) - {"caps", "size_clip", "alphabet", "params"}
    if unknown:
        raise InvalidParams(f"unknown caps file keys: {sorted(unknown)}")
    try:
        caps = Caps(**raw.get("caps", {}))
    except TypeError as exc:
        raise InvalidParams(f"caps: {exc}") from None
    env = {"max_n_a": "QSYMB_MAX_N_A", "max_n_b": "QSYMB_MAX_N_B", "max_items": "QSYMB_MAX_ITEMS"}
    caps = caps.replace(**{k: int(os.environ[v]) for k, v in env.items() if v in os.environ})
    params = raw.get("params", {})
    for ident in params:
        if ident not in REGISTRY:
            raise InvalidParams(f"unknown identity {ident!r} in caps file")
    return SuiteConfig(caps, raw.get("size_clip"), raw.get("alphabet"), params)


SUITES = {"default": list(REGISTRY)}


def suite_cases(suite: str = "default", config: SuiteConfig | None = None) -> list[IdentityCase]:
    if suite not in SUITES:
        raise InvalidParams(f"unknown suite {suite!r}")
    config = config or SuiteConfig()
    cases = []
    for ident in SUITES[suite]:
        params = dict(config.params.get(ident, {}))
        if config.alphabet is not None:
            for k in ("M", "My"):
                if k in REGISTRY[ident].defaults and k not in params:
                    params[k] = config.alphabet
        cases.append(make_case(ident, params, config.size_clip))
    return cases


def _run(args: tuple[IdentityCase, Caps]) -> IdentityReport:
    case, caps = args
    with use_caps(caps):
        return verify(case)


def verify_all(suite: str = "default", config: SuiteConfig | None = None,
               jobs: int = 1) -> list[IdentityReport]:
    """Verify every case of ``suite``; reports come back in registry order."""
    config = config or SuiteConfig()
    cases = suite_cases(suite, config)
    work = [(c, config.caps) for c in cases]
    if jobs <= 1:
        return [_run(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, work))


def exit_code(reports: Iterable[IdentityReport]) -> int:
    return 0 if all(r.ok for r in reports) else 1
