"""Basis expansions, RSK and Knuth classes, Littlewood-Richardson coefficients."""
from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Sequence

from .combinat import (Partition, as_partition, composition_of_set, empty_two_core,
                       enumerate_group, partitions_of)
from .errors import MalformedInput, NotQuasisymmetric, NotQuasisymmetricB, NotSymmetric
from .qpoly import (AlphabetSpec, Laurent, SparsePoly, domino_function, fundamental_A,
                    fundamental_B, poly_sum, schur)
from .tableaux import YoungTableau, shape_of, two_quotient_shape

SchurExpansion = dict[Partition, int]
FundamentalExpansion = dict[frozenset, Laurent]


# -- RSK -------------------------------------------------------------------

def rsk(word: Sequence[int]) -> tuple[YoungTableau, YoungTableau]:
    """Row insertion; returns the insertion tableau P and the recording tableau Q."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            k = bisect.bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


@cache
def _insertion_index(n: int) -> dict[YoungTableau, frozenset[tuple[int, ...]]]:
    classes: dict[YoungTableau, set] = {}
    for w in enumerate_group("A", n):
        classes.setdefault(rsk(w)[0], set()).add(w)
    return {T: frozenset(ws) for T, ws in classes.items()}


@dataclass(frozen=True)
class KnuthClass:
    tableau: YoungTableau
    members: frozenset = field(default_factory=frozenset)


def knuth_class(T: YoungTableau, n: int | None = None) -> KnuthClass:
    """All permutations whose insertion tableau is ``T`` (exhaustive filter over S_n)."""
    T = tuple(tuple(row) for row in T)
    size = sum(shape_of(T))
    if n is not None and n != size:
        raise MalformedInput(f"tableau has {size} cells, not {n}")
    return KnuthClass(T, _insertion_index(size).get(T, frozenset()))


# -- Schur basis -----------------------------------------------------------

def _monomial(alphabet: AlphabetSpec, parts: Sequence[int], first: int = 1) -> tuple[int, ...]:
    e = [0] * alphabet.nvars
    for i, v in enumerate(parts):
        e[first + i] = v
    return tuple(e)


def expand_in_schur(p: SparsePoly, n: int, M: int) -> SchurExpansion:
    """Greedy elimination along lex order, a linear extension of dominance."""
    if p.alphabet != AlphabetSpec(M):
        raise MalformedInput(f"expected a polynomial on x1..x{M}, got {p.alphabet}")
    if any(t for (_, t) in p.terms):
        raise MalformedInput("Schur expansion needs a t-free polynomial")
    if not p.is_homogeneous(n):
        raise NotSymmetric(f"not homogeneous of degree {n}")
    residue = p
    out: SchurExpansion = {}
    for nu in partitions_of(n):
        if len(nu) > M:
            continue
        c = residue.coefficient_of(_monomial(p.alphabet, nu)).at_one()
        if c:
            out[nu] = c
            residue = residue - schur(nu, M) * c
    if residue:
        raise NotSymmetric(f"nonzero residue after elimination: {residue!r}")
    return out


def from_schur_expansion(expansion: SchurExpansion, M: int) -> SparsePoly:
    alphabet = AlphabetSpec(M)
    return poly_sum((schur(nu, M) * c for nu, c in expansion.items()), alphabet)


@cache
def _lr(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam) + sum(mu)
    M = max(n, 1)
    return tuple(expand_in_schur(schur(lam, M) * schur(mu, M), n, M).items())


def lr_expand(lam: Sequence[int], mu: Sequence[int]) -> SchurExpansion:
    """Schur expansion of ``s_λ·s_μ``; the values are the LR coefficients."""
    return dict(_lr(as_partition(lam), as_partition(mu)))


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    return lr_expand(lam, mu).get(as_partition(nu), 0)


# -- fundamental bases -----------------------------------------------------

def _subsets(ground: Sequence[int]) -> Iterable[frozenset[int]]:
    for k in range(len(ground) + 1):
        for c in itertools.combinations(ground, k):
            yield frozenset(c)


def _mobius(p: SparsePoly, ground: list[int], monomial_of) -> FundamentalExpansion:
    m = {S: p.coefficient_of(monomial_of(S)) for S in _subsets(ground)}
    out: FundamentalExpansion = {}
    for I in m:
        a = Laurent()
        for S, v in m.items():
            if S <= I and v:
                a = a + (v if (len(I) - len(S)) % 2 == 0 else -v)
        if a:
            out[I] = a
    return out


def expand_in_fundamental_A(p: SparsePoly, n: int, M: int) -> FundamentalExpansion:
    """Coefficients on Gessel's basis by Möbius inversion over subsets of [n-1]."""
    alphabet = AlphabetSpec(M)
    if p.alphabet != alphabet:
        raise MalformedInput(f"expected a polynomial on x1..x{M}, got {p.alphabet}")
    if M < n:
        raise MalformedInput(f"need M >= n for a faithful expansion (M={M}, n={n})")
    out = _mobius(p, list(range(1, n)),
                  lambda S: _monomial(alphabet, composition_of_set(S, n)) if n else (0,) * alphabet.nvars)
    rebuilt = poly_sum((fundamental_A(I, n, M) * a for I, a in out.items()), alphabet)
    if rebuilt != p:
        raise NotQuasisymmetric("reconstruction from the fundamental basis differs from the input")
    return out


def _type_b_monomial(alphabet: AlphabetSpec, S: frozenset[int], n: int) -> tuple[int, ...]:
    e = [0] * alphabet.nvars
    for j in range(1, n + 1):
        e[sum(1 for s in S if s < j)] += 1
    return tuple(e)


def expand_in_fundamental_B(p: SparsePoly, n: int, M: int) -> FundamentalExpansion:
    """Coefficients on Chow's basis by Möbius inversion over subsets of {0,…,n-1}."""
    alphabet = AlphabetSpec(M, True)
    if p.alphabet != alphabet:
        p = p.lift(alphabet)
    if M < n:
        raise MalformedInput(f"need M >= n for a faithful expansion (M={M}, n={n})")
    out = _mobius(p, list(range(n)), lambda S: _type_b_monomial(alphabet, S, n))
    rebuilt = poly_sum((fundamental_B(I, n, M) * a for I, a in out.items()), alphabet)
    if rebuilt != p:
        raise NotQuasisymmetricB("reconstruction from Chow's basis differs from the input")
    return out


# -- domino basis ----------------------------------------------------------

@dataclass
class NotExpandable:
    reason: str
    residual: dict[str, str] = field(default_factory=dict)
    solution: dict[Partition, str] = field(default_factory=dict)


def expand_in_domino_basis(p: SparsePoly, n: int, M: int, at_q: str = "one",
                           minus_weight: int | None = None):
    """Expand in ``{G_ν(X;q)}`` for ν ∈ P⁰(n) by an exact linear solve.

    The full family is linearly dependent once n >= 2 (for instance
    ``G_(2,2) = t⁻¹G_(2,1,1) + t·G_(3,1)``), but the functions with a fixed
    ``|ν⁻|`` are independent.  With ``minus_weight`` the solve is restricted
    to that block and the answer is unique.  Without it every block is tried
    in turn and the first one containing ``p`` wins; if none does, the whole
    family is used and free coefficients are set to zero.

    ``at_q="one"`` substitutes ``t=1`` first; ``"generic"`` solves over
    ``Q(t)``.  A :class:`NotExpandable` is returned when no integer Laurent
    solution exists.
    """
    if at_q not in ("one", "generic"):
        raise MalformedInput(f"at_q must be 'one' or 'generic', not {at_q!r}")
    alphabet = AlphabetSpec(M, True)
    p = p.lift(alphabet) if p.alphabet != alphabet else p
    generic = at_q == "generic"
    if not generic:
        p = p.at_t1()
    shapes = empty_two_core(n)
    blocks: dict[int, list[Partition]] = {}
    for nu in shapes:
        blocks.setdefault(sum(two_quotient_shape(nu)[0]), []).append(nu)
    if minus_weight is not None:
        return _solve_domino(p, blocks.get(minus_weight, []), M, generic)
    for k in sorted(blocks):
        found = _solve_domino(p, blocks[k], M, generic)
        if not isinstance(found, NotExpandable):
            return found
    return _solve_domino(p, shapes, M, generic)


def _solve_domino(p: SparsePoly, shapes: list[Partition], M: int, generic: bool):
    from sympy import Poly, Rational, cancel, fraction, symbols
    from sympy.polys.domains import QQ
    from sympy.polys.matrices import DomainMatrix

    alphabet = p.alphabet
    if not shapes:
        if not p:
            return {}
        return NotExpandable("empty basis", {str(k): str(v) for k, v in p.as_mapping().items()})
    basis = [domino_function(nu, M) if generic else domino_function(nu, M).at_t1() for nu in shapes]
    t = symbols("t")
    K = QQ.frac_field(t) if generic else QQ
    rows = sorted(set().union(p.monomials(), *(g.monomials() for g in basis)))
    shift = -min([0] + [s for (_, s) in p.terms] + [s for g in basis for (_, s) in g.terms])

    def entry(poly: SparsePoly, e):
        c = poly.coefficient_of(e)
        if not generic:
            return K(c.at_one())
        return K.from_sympy(sum(v * t ** (k + shift) for k, v in c.coeffs.items()))

    aug = DomainMatrix([[entry(g, e) for g in basis] + [entry(p, e)] for e in rows],
                       (len(rows), len(basis) + 1), K)
    rref, pivots = aug.rref()
    k = len(basis)
    if k in pivots:
        return NotExpandable("inconsistent linear system", _least_residual(aug, rows, alphabet, k))
    dense = rref.to_Matrix()
    solution: dict[Partition, Laurent] = {}
    raw: dict[Partition, str] = {}
    for r, col in enumerate(pivots):
        value = cancel(dense[r, k])
        raw[shapes[col]] = str(value)
        if not generic:
            if value != int(value):
                return NotExpandable("non-integer coefficient", solution=raw)
            if value:
                solution[shapes[col]] = Laurent(int(value))
            continue
        num, den = fraction(value)
        den_poly = Poly(den, t)
        if len(den_poly.terms()) != 1:
            return NotExpandable("coefficient is not a Laurent polynomial", solution=raw)
        (dpow,), dcoef = den_poly.terms()[0]
        coeffs = {}
        for (npow,), v in Poly(num, t).terms():
            v = Rational(v) / dcoef
            if v == 0:
                continue
            if v != int(v):
                return NotExpandable("non-integer coefficient", solution=raw)
            coeffs[npow - dpow] = int(v)
        if coeffs:
            solution[shapes[col]] = Laurent(coeffs)
    return solution


def _least_residual(aug, rows, alphabet: AlphabetSpec, k: int) -> dict[str, str]:
    """Residual of the input after solving on a maximal independent set of rows."""
    from sympy import cancel

    A = aug.to_Matrix()
    _, row_pivots = A[:, :k].T.rref()
    sub = A.extract(list(row_pivots), list(range(k)))
    rhs = A.extract(list(row_pivots), [k])
    sol = sub.LUsolve(rhs)
    res = A[:, k] - A[:, :k] * sol
    out = {}
    names = [name for name in alphabet.names()]
    for r, e in enumerate(rows):
        v = cancel(res[r])
        if v != 0:
            out[" ".join(f"{nm}^{x}" for nm, x in zip(names, e) if nm)] = str(v)
    return out


def from_domino_expansion(expansion: dict[Partition, Laurent], M: int, at_q: str = "one") -> SparsePoly:
    alphabet = AlphabetSpec(M, True)
    polys = []
    for nu, c in expansion.items():
        g = domino_function(nu, M)
        polys.append((g if at_q == "generic" else g.at_t1()) * c)
    return poly_sum(polys, alphabet)
