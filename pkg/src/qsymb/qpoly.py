"""Exact sparse polynomials over truncated alphabets, and the generating functions.

A :class:`SparsePoly` lives on an :class:`AlphabetSpec`: variables
``x0..xM`` (``x0`` optional) and optionally ``y0..yMy``.  Terms map an
``(exponents, t)`` pair to an integer, where ``t`` is the half-spin unit
(``t² = q``).  Exponent vectors always have one slot per ``x0..xM`` (then
``y0..yMy``); slots of excluded ``x0``/``y0`` stay zero.
"""
from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .combinat import (ColouredPermutation, Letter, WeakComposition, as_partition)
from .errors import AlphabetMismatch, MalformedInput
from .tableaux import enum_ssbt, enum_ssdt, enum_ssyt

Key = tuple[tuple[int, ...], int]


class Laurent:
    """Integer Laurent polynomial in ``t`` (immutable)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {k: v for k, v in coeffs.items() if v}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other) -> "Laurent":
        return other if isinstance(other, Laurent) else Laurent(int(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, int] = {}
        for a, u in self._c.items():
            for b, v in other._c.items():
                out[a + b] = out.get(a + b, 0) + u * v
        return Laurent(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent(other)
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def at_one(self) -> int:
        return sum(self._c.values())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            if k == 0:
                body = str(abs(v))
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if abs(v) == 1 else f"{abs(v)}*{var}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


@dataclass(frozen=True)
class AlphabetSpec:
    M: int
    include_x0: bool = False
    My: int | None = None
    include_y0: bool = False

    def __post_init__(self):
        if self.M < 0 or (self.My is not None and self.My < 0):
            raise MalformedInput("alphabet bounds must be non-negative")

    @property
    def nx(self) -> int:
        return self.M + 1

    @property
    def nvars(self) -> int:
        return self.nx + (self.My + 1 if self.My is not None else 0)

    def names(self) -> list[str | None]:
        """Variable name per exponent slot, None for excluded ``x0``/``y0``."""
        xs = [f"x{i}" if i or self.include_x0 else None for i in range(self.nx)]
        if self.My is None:
            return xs
        return xs + [f"y{j}" if j or self.include_y0 else None for j in range(self.My + 1)]

    def header(self) -> str:
        text = f"# alphabet M={self.M} x0={int(self.include_x0)}"
        if self.My is not None:
            text += f" My={self.My} y0={int(self.include_y0)}"
        return text

    def widen(self, other: "AlphabetSpec") -> "AlphabetSpec":
        """Smallest alphabet containing both (used to multiply across ``X*`` and ``X``)."""
        if self.M != other.M or self.My != other.My:
            raise AlphabetMismatch(f"{self} vs {other}")
        return AlphabetSpec(self.M, self.include_x0 or other.include_x0, self.My,
                            self.include_y0 or other.include_y0)


class SparsePoly:
    """Immutable exact polynomial; terms keyed by ``(exponents, t_exponent)``."""

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: AlphabetSpec, terms: Mapping[Key, int] | None = None):
        self.alphabet = alphabet
        self._terms = {k: v for k, v in (terms or {}).items() if v}

    # construction helpers
    @classmethod
    def constant(cls, alphabet: AlphabetSpec, c: int = 1, t: int = 0) -> "SparsePoly":
        return cls(alphabet, {((0,) * alphabet.nvars, t): c})

    @classmethod
    def from_counts(cls, alphabet: AlphabetSpec, counts: Mapping[Key, int]) -> "SparsePoly":
        return cls(alphabet, counts)

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _same(self, other: "SparsePoly") -> AlphabetSpec:
        if self.alphabet == other.alphabet:
            return self.alphabet
        try:
            return self.alphabet.widen(other.alphabet)
        except AlphabetMismatch:
            raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}") from None

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(self.alphabet, other)
        alpha = self._same(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return SparsePoly(alpha, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.alphabet, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePoly(self.alphabet, {k: v * other for k, v in self._terms.items()})
        if isinstance(other, Laurent):
            out: dict[Key, int] = {}
            for (e, t), v in self._terms.items():
                for s, u in other.coeffs.items():
                    out[(e, t + s)] = out.get((e, t + s), 0) + u * v
            return SparsePoly(self.alphabet, out)
        alpha = self._same(other)
        out = {}
        for (e1, t1), v1 in self._terms.items():
            for (e2, t2), v2 in other._terms.items():
                key = (tuple(a + b for a, b in zip(e1, e2)), t1 + t2)
                out[key] = out.get(key, 0) + v1 * v2
        return SparsePoly(alpha, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == SparsePoly.constant(self.alphabet, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._same(other)
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def coefficient_of(self, exps: Sequence[int]) -> Laurent:
        exps = tuple(exps)
        if len(exps) != self.alphabet.nvars:
            raise AlphabetMismatch(f"monomial has {len(exps)} slots, alphabet has {self.alphabet.nvars}")
        return Laurent({t: v for (e, t), v in self._terms.items() if e == exps})

    def at_t1(self) -> "SparsePoly":
        out: dict[Key, int] = {}
        for (e, _), v in self._terms.items():
            out[(e, 0)] = out.get((e, 0), 0) + v
        return SparsePoly(self.alphabet, out)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def monomials(self) -> set[tuple[int, ...]]:
        return {e for e, _ in self._terms}

    def lift(self, alphabet: AlphabetSpec) -> "SparsePoly":
        """Re-tag on a wider alphabet (same bounds, possibly adding ``x0``/``y0``)."""
        if alphabet.widen(self.alphabet) != alphabet:
            raise AlphabetMismatch(f"cannot lift {self.alphabet} into {alphabet}")
        return SparsePoly(alphabet, self._terms)

    def embed(self, joint: AlphabetSpec, block: str = "x") -> "SparsePoly":
        """Place a one-alphabet polynomial into the ``x`` or ``y`` block of ``joint``."""
        if self.alphabet.My is not None:
            raise AlphabetMismatch("embed expects a single-alphabet polynomial")
        if joint.My is None:
            raise AlphabetMismatch("target must be a product alphabet")
        src = self.alphabet
        if block == "x":
            if src.M != joint.M or (src.include_x0 and not joint.include_x0):
                raise AlphabetMismatch(f"cannot embed {src} as X of {joint}")
            pad = (0,) * (joint.My + 1)
            return SparsePoly(joint, {(e + pad, t): v for (e, t), v in self._terms.items()})
        if src.M != joint.My or (src.include_x0 and not joint.include_y0):
            raise AlphabetMismatch(f"cannot embed {src} as Y of {joint}")
        pad = (0,) * joint.nx
        return SparsePoly(joint, {(pad + e, t): v for (e, t), v in self._terms.items()})

    # normal form
    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self._terms.items(),
                      key=lambda kv: (-sum(kv[0][0]), tuple(-x for x in kv[0][0]), kv[0][1]))

    def monomial_text(self, key: Key) -> str:
        e, t = key
        names = self.alphabet.names()
        return " ".join([f"t^{t}"] + [f"{name}^{x}" for name, x in zip(names, e) if name])

    def to_text(self) -> str:
        lines = [self.alphabet.header()]
        lines += [f"{v} {self.monomial_text(k)}" for k, v in self.sorted_terms()]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    def as_mapping(self) -> dict[str, int]:
        return {self.monomial_text(k): v for k, v in self._terms.items()}

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{v}*[{self.monomial_text(k)}]" for k, v in self.sorted_terms()[:8]) + (
            " + ..." if len(self._terms) > 8 else "")


_VAR_RE = re.compile(r"^(t|x|y)(\d*)\^(-?\d+)$")


def parse_poly(text: str) -> SparsePoly:
    """Inverse of :meth:`SparsePoly.to_text`; the ``# alphabet`` header is optional."""
    alphabet = None
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*alphabet\s+M=(\d+)\s+x0=([01])(?:\s+My=(\d+)\s+y0=([01]))?", line)
            if m:
                alphabet = AlphabetSpec(int(m[1]), m[2] == "1",
                                        int(m[3]) if m[3] is not None else None, m[4] == "1")
            continue
        tokens = line.split()
        coeff = int(tokens[0])
        t, xs, ys = 0, {}, {}
        for tok in tokens[1:]:
            m = _VAR_RE.match(tok)
            if not m:
                raise MalformedInput(f"bad token {tok!r} in polynomial line {line!r}")
            kind, idx, exp = m[1], m[2], int(m[3])
            if kind == "t":
                t = exp
            else:
                (xs if kind == "x" else ys)[int(idx)] = exp
        rows.append((coeff, t, xs, ys))
    if alphabet is None:
        xmax = max((i for _, _, xs, _ in rows for i in xs), default=0)
        ymax = max((i for _, _, _, ys in rows for i in ys), default=None)
        has_x0 = any(0 in xs for _, _, xs, _ in rows)
        has_y0 = any(0 in ys for _, _, _, ys in rows)
        alphabet = AlphabetSpec(xmax, has_x0, ymax, has_y0)
    terms: dict[Key, int] = {}
    for coeff, t, xs, ys in rows:
        e = [0] * alphabet.nvars
        for i, x in xs.items():
            if i > alphabet.M or (i == 0 and x and not alphabet.include_x0):
                raise AlphabetMismatch(f"x{i} outside {alphabet}")
            e[i] = x
        for j, y in ys.items():
            if alphabet.My is None or j > alphabet.My or (j == 0 and y and not alphabet.include_y0):
                raise AlphabetMismatch(f"y{j} outside {alphabet}")
            e[alphabet.nx + j] = y
        key = (tuple(e), t)
        terms[key] = terms.get(key, 0) + coeff
    return SparsePoly(alphabet, terms)


def poly_add(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return a + b


def poly_mul(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return a * b


def poly_eq(a: SparsePoly, b: SparsePoly) -> bool:
    return a == b


def coefficient_of(p: SparsePoly, exps: Sequence[int]) -> Laurent:
    return p.coefficient_of(exps)


def poly_sum(polys: Iterable[SparsePoly], alphabet: AlphabetSpec) -> SparsePoly:
    out: dict[Key, int] = {}
    for p in polys:
        if p.alphabet != alphabet:
            p = p.lift(alphabet)
        for k, v in p._terms.items():
            out[k] = out.get(k, 0) + v
    return SparsePoly(alphabet, out)


def x_alphabet(M: int, include_x0: bool = False) -> AlphabetSpec:
    return AlphabetSpec(M, include_x0)


# -- chain sums ------------------------------------------------------------

def _chains(n: int, lo: int, hi: int, strict: frozenset[int]) -> Iterator[tuple[int, ...]]:
    """Weakly increasing ``i_1..i_n`` in ``[lo, hi]`` with ``i_j < i_{j+1}`` for ``j`` in ``strict``."""
    for chain in itertools.combinations_with_replacement(range(lo, hi + 1), n):
        if all(chain[j - 1] < chain[j] for j in strict if 0 < j < n):
            yield chain


def _count(alphabet: AlphabetSpec, index_lists: Iterable[Iterable[int]], t: int = 0) -> SparsePoly:
    counts: dict[Key, int] = {}
    for idx in index_lists:
        e = [0] * alphabet.nvars
        for i in idx:
            e[i] += 1
        key = (tuple(e), t)
        counts[key] = counts.get(key, 0) + 1
    return SparsePoly(alphabet, counts)


@cache
def _fundamental_A(I: frozenset[int], n: int, M: int) -> SparsePoly:
    return _count(AlphabetSpec(M), _chains(n, 1, M, I))


def fundamental_A(I: Iterable[int], n: int, M: int) -> SparsePoly:
    """Gessel's fundamental quasisymmetric function on ``x1..xM``."""
    I = frozenset(I)
    if not I <= set(range(1, n)):
        raise MalformedInput(f"{sorted(I)} is not a subset of [{n - 1}]")
    return _fundamental_A(I, n, M)


@cache
def _fundamental_B(I: frozenset[int], n: int, M: int) -> SparsePoly:
    lo_first = 1 if 0 in I else 0
    chains = (c for c in _chains(n, 0, M, I) if n == 0 or c[0] >= lo_first)
    return _count(AlphabetSpec(M, True), chains)


def fundamental_B(I: Iterable[int], n: int, M: int) -> SparsePoly:
    """Chow's type B fundamental function on ``x0..xM`` (chains anchored at ``i0 = 0``)."""
    I = frozenset(I)
    if not I <= set(range(n)):
        raise MalformedInput(f"{sorted(I)} is not a subset of {{0}}∪[{n - 1}]")
    return _fundamental_B(I, n, M)


@cache
def _fundamental_WC(entries: tuple[int, ...], M: int) -> SparsePoly:
    alpha = WeakComposition(entries)
    slots = alpha.chain_slots()
    chains = _chains(len(slots), 1, M, alpha.descents)
    return _count(AlphabetSpec(M), ([i for i, real in zip(c, slots) if real] for c in chains))


def fundamental_WC(alpha: WeakComposition | Sequence[int], M: int) -> SparsePoly:
    """Weak composition fundamental function: chains of length ``‖α‖`` where zero entries are phantom slots."""
    entries = alpha.entries if isinstance(alpha, WeakComposition) else tuple(alpha)
    return _fundamental_WC(tuple(entries), M)


@cache
def _gamma(pi: ColouredPermutation, M: int) -> SparsePoly:
    strict = frozenset(i + 1 for i in range(len(pi) - 1) if pi[i].key() > pi[i + 1].key())
    chains = _chains(len(pi), 1, M, strict)
    return _count(AlphabetSpec(M), ([i for i, l in zip(c, pi) if not l.bar] for c in chains))


def gamma(pi: Sequence[Letter], M: int) -> SparsePoly:
    """Generating function of the P_π-partitions of a coloured permutation."""
    return _gamma(tuple(Letter(*l) for l in pi), M)


@cache
def _schur(shape: tuple[int, ...], M: int, include_x0: bool) -> SparsePoly:
    alphabet = AlphabetSpec(M, include_x0)
    if not shape:
        return SparsePoly.constant(alphabet)
    # with x0 the entries run over 0..M: enumerate on M+1 letters and shift down
    shift = 1 if include_x0 else 0
    tabs = enum_ssyt(shape, M + shift)
    return _count(alphabet, ([v - shift for row in t for v in row] for t in tabs))


def schur(shape: Sequence[int], M: int, include_x0: bool = False) -> SparsePoly:
    """Schur polynomial as the content sum over SSYT, on ``x1..xM`` (or ``x0..xM``)."""
    return _schur(as_partition(shape), M, include_x0)


@cache
def _schur_p(shape: tuple[int, ...], p: int, M: int) -> SparsePoly:
    return _count(AlphabetSpec(M), ([v for row in t.plus for v in row] for t in enum_ssbt(shape, p, M)))


def schur_p(shape: Sequence[int], p: int, M: int) -> SparsePoly:
    """Generating function of semistandard (p)-tableaux, recording ``T⁺`` only."""
    return _schur_p(as_partition(shape), p, M)


@cache
def _domino_function(shape: tuple[int, ...], M: int) -> SparsePoly:
    alphabet = AlphabetSpec(M, True)
    counts: dict[Key, int] = {}
    for t in enum_ssdt(shape, M):
        key = (t.weight(M), t.spin2)
        counts[key] = counts.get(key, 0) + 1
    return SparsePoly(alphabet, counts)


def domino_function(shape: Sequence[int], M: int) -> SparsePoly:
    """Σ over SSDT of ``t^(2·spin) x^weight`` on ``x0..xM``."""
    return _domino_function(as_partition(shape), M)


def _pairs(Mx: int, My: int, nx: int) -> list[tuple[int, int]]:
    # product alphabet x_i y_j in lexicographic order, as exponent slots
    return [(i, nx + j) for i in range(1, Mx + 1) for j in range(1, My + 1)]


def xy_alphabet(Mx: int, My: int, x0: bool = False, y0: bool = False) -> AlphabetSpec:
    return AlphabetSpec(Mx, x0, My, y0)


@cache
def _fundamental_A_XY(I: frozenset[int], n: int, Mx: int, My: int) -> SparsePoly:
    alphabet = xy_alphabet(Mx, My)
    pairs = _pairs(Mx, My, alphabet.nx)
    chains = _chains(n, 0, len(pairs) - 1, I)
    return _count(alphabet, ([s for k in c for s in pairs[k]] for c in chains))


def fundamental_A_XY(I: Iterable[int], n: int, Mx: int, My: int) -> SparsePoly:
    """``F_I`` evaluated on the lexicographically ordered product alphabet ``{x_i y_j}``."""
    I = frozenset(I)
    if not I <= set(range(1, n)):
        raise MalformedInput(f"{sorted(I)} is not a subset of [{n - 1}]")
    return _fundamental_A_XY(I, n, Mx, My)


@cache
def _schur_XY(shape: tuple[int, ...], Mx: int, My: int) -> SparsePoly:
    alphabet = xy_alphabet(Mx, My)
    if not shape:
        return SparsePoly.constant(alphabet)
    pairs = _pairs(Mx, My, alphabet.nx)
    tabs = enum_ssyt(shape, len(pairs))
    return _count(alphabet, ([s for row in t for v in row for s in pairs[v - 1]] for t in tabs))


def schur_XY(shape: Sequence[int], Mx: int, My: int) -> SparsePoly:
    return _schur_XY(as_partition(shape), Mx, My)


def binomial_constant(M: int, p: int) -> int:
    """``C(M+p-1, p)``, the number of weakly increasing words of length ``p`` in ``[M]``."""
    return comb(M + p - 1, p)
