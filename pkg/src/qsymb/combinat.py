"""Partitions, weak compositions and permutations of types A, B and coloured.

Conventions: permutations are 1-based words (tuples of ints), descent
positions are 1-based and position 0 is reserved for the sign descent of a
signed permutation.  A coloured permutation is a tuple of :class:`Letter`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

from .config import get_caps
from .errors import MalformedInput, SizeLimit

Partition = tuple[int, ...]
Permutation = tuple[int, ...]
SignedPermutation = tuple[int, ...]
DescentSet = frozenset


# -- partitions ------------------------------------------------------------

def as_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise MalformedInput(f"not a partition: {parts}")
    return parts


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise MalformedInput("n must be non-negative")
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def beta_set(shape: Partition, beads: int | None = None) -> list[int]:
    """First-column hook positions on an abacus with an even number of beads."""
    if beads is None:
        beads = len(shape) + len(shape) % 2
    padded = list(shape) + [0] * (beads - len(shape))
    return [part - i + beads - 1 for i, part in enumerate(padded)]


def from_beta_set(positions: Iterable[int]) -> Partition:
    pos = sorted(positions, reverse=True)
    k = len(pos)
    return tuple(p for p in (b - (k - 1 - i) for i, b in enumerate(pos)) if p > 0)


def has_empty_two_core(shape: Partition) -> bool:
    runners = [0, 0]
    for b in beta_set(shape):
        runners[b % 2] += 1
    return runners[0] == runners[1]


def empty_two_core(n: int) -> list[Partition]:
    """The partitions of ``2n`` that can be tiled by dominoes."""
    return [lam for lam in partitions_of(2 * n) if has_empty_two_core(lam)]


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


# -- weak compositions -----------------------------------------------------

@dataclass(frozen=True)
class WeakComposition:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e < 0 for e in self.entries):
            raise MalformedInput(f"negative entry in weak composition {self.entries}")

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def zero_length(self) -> int:
        return sum(1 for e in self.entries if e == 0)

    @property
    def total_weight(self) -> int:
        return self.weight + self.zero_length

    @cached_property
    def descents(self) -> frozenset[int]:
        return wc_descent_set(self)

    def chain_slots(self) -> list[bool]:
        """Per chain position, whether it carries an exponent (False for phantoms)."""
        slots: list[bool] = []
        for e in self.entries:
            slots.extend([True] * e if e else [False])
        return slots

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def wc_descent_set(alpha: WeakComposition | Sequence[int]) -> frozenset[int]:
    """Partial sums ending each nonzero block, zeros counted as one slot each."""
    entries = alpha.entries if isinstance(alpha, WeakComposition) else tuple(alpha)
    out, pos = [], 0
    for e in entries:
        if e == 0:
            pos += 1
        else:
            pos += e
            out.append(pos)
    return frozenset(out)


def composition_of_set(S: Iterable[int], n: int) -> tuple[int, ...]:
    """Composition of ``n`` whose partial sums are the elements of ``S`` ⊆ [n-1]."""
    cuts = [0] + sorted(S) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


# -- permutations ----------------------------------------------------------

def check_permutation(word: Sequence[int]) -> Permutation:
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise MalformedInput(f"not a permutation: {word}")
    return word


def check_signed(word: Sequence[int]) -> SignedPermutation:
    word = tuple(word)
    if sorted(abs(w) for w in word) != list(range(1, len(word) + 1)):
        raise MalformedInput(f"not a signed permutation: {word}")
    return word


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def descent_set_signed(word: Sequence[int]) -> frozenset[int]:
    """Type B descents, with ``pi(0) = 0`` so that 0 is a descent iff ``pi(1) < 0``."""
    return frozenset(i - 1 for i in descent_set((0,) + tuple(word)))


def total_colour(word: Sequence[int]) -> int:
    return sum(1 for w in word if w < 0)


def inverse(word: Sequence[int]) -> tuple[int, ...]:
    """Group inverse; signs are respected, so plain permutations are a special case."""
    word = check_signed(word)
    out = [0] * len(word)
    for i, w in enumerate(word, start=1):
        out[abs(w) - 1] = i if w > 0 else -i
    return tuple(out)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """The product ``a∘b``, i.e. ``i -> a(b(i))``, for plain or signed words."""
    def apply(i):
        v = a[abs(i) - 1]
        return v if i > 0 else -v
    return tuple(apply(i) for i in b)


def shuffle_words(a: Sequence, b: Sequence) -> Iterator[tuple]:
    """All interleavings of ``a`` and ``b`` preserving each word's order."""
    n, m = len(a), len(b)
    for positions in itertools.combinations(range(n + m), n):
        pos = set(positions)
        ai, bi, out = iter(a), iter(b), []
        for k in range(n + m):
            out.append(next(ai) if k in pos else next(bi))
        yield tuple(out)


def shuffle_plain(a: Sequence[int], b: Sequence[int]) -> set[Permutation]:
    n = len(a)
    return set(shuffle_words(tuple(a), tuple(n + x for x in b)))


def shuffle_signed(a: Sequence[int], b: Sequence[int]) -> set[SignedPermutation]:
    n = len(a)
    return set(shuffle_words(tuple(a), tuple(x + n if x > 0 else x - n for x in b)))


def shuffle_sets(A: Iterable, B: Iterable, shuffle=shuffle_plain) -> set:
    out: set = set()
    B = list(B)
    for a in A:
        for b in B:
            out |= shuffle(a, b)
    return out


# -- coloured permutations -------------------------------------------------

class Letter(NamedTuple):
    value: int
    bar: bool = False

    def key(self) -> tuple[int, int]:
        # total order 1̄ < 2̄ < ... < 1 < 2 < ...
        return (0 if self.bar else 1, self.value)

    def __str__(self) -> str:
        return f"~{self.value}" if self.bar else str(self.value)


ColouredPermutation = tuple[Letter, ...]


def coloured(word: Iterable) -> ColouredPermutation:
    """Build a coloured permutation from ``Letter``s, ``(value, bar)`` pairs or text tokens."""
    if isinstance(word, str):
        return parse_coloured(word)
    out = []
    for x in word:
        if isinstance(x, Letter):
            out.append(x)
        elif isinstance(x, tuple):
            out.append(Letter(int(x[0]), bool(x[1])))
        else:
            out.append(Letter(int(x), False))
    vals = sorted(l.value for l in out)
    if vals != list(range(1, len(out) + 1)):
        raise MalformedInput(f"absolute values must be 1..{len(out)}: {word}")
    return tuple(out)


def epsilon(p: int) -> ColouredPermutation:
    return tuple(Letter(i, True) for i in range(1, p + 1))


def from_plain(word: Sequence[int]) -> ColouredPermutation:
    return tuple(Letter(w, False) for w in word)


def is_snp(pi: ColouredPermutation) -> tuple[int, int] | None:
    """``(n, p)`` if the overlined letters increase left to right, else None."""
    bars = [l.value for l in pi if l.bar]
    if any(a > b for a, b in zip(bars, bars[1:])):
        return None
    return (len(pi) - len(bars), len(bars))


def is_canonical(pi: ColouredPermutation) -> bool:
    """Overlined values are 1..p and plain values p+1..p+n."""
    p = sum(1 for l in pi if l.bar)
    return all((l.value <= p) == l.bar for l in pi)


def comp_coloured(pi: ColouredPermutation) -> WeakComposition:
    if is_snp(pi) is None:
        raise MalformedInput(f"overlined letters not increasing: {format_coloured(pi)}")
    entries: list[int] = []
    run = 0
    prev = None
    for l in pi:
        if l.bar:
            if run:
                entries.append(run)
            run = 0
            entries.append(0)
        elif run and prev is not None and prev.value > l.value:
            entries.append(run)
            run = 1
        else:
            run += 1
        prev = l
    if run:
        entries.append(run)
    return WeakComposition(tuple(entries))


def shuffle_coloured(a: ColouredPermutation, b: ColouredPermutation) -> set[ColouredPermutation]:
    """Shuffle of ``a ∈ S_n^(p)`` and ``b ∈ S_r^(q)`` after shifting to ``ã`` and ``b̂``.

    Plain letters of ``a`` move up by ``q``; overlined (plain) letters of ``b``
    move up by ``p`` (``p + n``).  Both inputs must use the canonical layout,
    otherwise the shifted words can share absolute values.
    """
    for w in (a, b):
        if is_snp(w) is None or not is_canonical(w):
            raise MalformedInput(f"not a canonical element of S_n^(p): {format_coloured(w)}")
    n, p = is_snp(a)
    _, q = is_snp(b)
    a_t = tuple(l if l.bar else Letter(l.value + q) for l in a)
    b_h = tuple(Letter(l.value + p, True) if l.bar else Letter(l.value + p + n) for l in b)
    return set(shuffle_words(a_t, b_h))


def snp_elements(n: int, p: int) -> list[ColouredPermutation]:
    return list(enumerate_group("coloured", n, p))


# -- group enumeration -----------------------------------------------------

def _check_cap(kind: str, n: int):
    caps = get_caps()
    limit = caps.max_n_b if kind == "B" else caps.max_n_a
    if n > limit:
        raise SizeLimit(f"type {kind} enumeration with n={n} exceeds cap {limit}")


def enumerate_group(kind: str, n: int, p: int = 0) -> Iterator:
    """Deterministic lexicographic stream over S_n, B_n or canonical S_n^(p)."""
    if n < 0 or p < 0:
        raise MalformedInput("sizes must be non-negative")
    if kind == "A":
        _check_cap("A", n)
        yield from itertools.permutations(range(1, n + 1))
    elif kind == "B":
        _check_cap("B", n)
        words = []
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                words.append(tuple(s * v for s, v in zip(signs, perm)))
        yield from sorted(words)
    elif kind == "coloured":
        _check_cap("A", n + p)
        out = []
        for plain in itertools.permutations(range(p + 1, p + n + 1)):
            out.extend(shuffle_words(epsilon(p), from_plain(plain)))
        yield from sorted(set(out), key=lambda w: [l.key() for l in w])
    else:
        raise MalformedInput(f"unknown group kind {kind!r}")


def group_order(kind: str, n: int, p: int = 0) -> int:
    if kind == "A":
        return factorial(n)
    if kind == "B":
        return 2 ** n * factorial(n)
    return comb(n + p, p) * factorial(n)


def descent_class(kind: str, I: Iterable[int], n: int) -> set[tuple[int, ...]]:
    I = frozenset(I)
    des = descent_set if kind == "A" else descent_set_signed
    allowed = set(range(1, n)) if kind == "A" else set(range(n))
    if not I <= allowed:
        raise MalformedInput(f"descent set {sorted(I)} not valid for type {kind}, n={n}")
    return {w for w in enumerate_group(kind, n) if des(w) == I}


# -- text formats ----------------------------------------------------------

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "()", "0", "-"):
        return ()
    return as_partition(int(t) for t in text.replace(" ", "").split(","))


def format_partition(shape: Partition) -> str:
    return ",".join(map(str, shape))


def parse_weak_composition(text: str) -> WeakComposition:
    text = text.strip()
    return WeakComposition(tuple(int(t) for t in text.split(",")) if text else ())


def parse_permutation(text: str) -> Permutation:
    return check_permutation(int(t) for t in text.split())


def parse_signed(text: str) -> SignedPermutation:
    return check_signed(int(t) for t in text.split())


def parse_coloured(text: str) -> ColouredPermutation:
    letters = []
    for tok in text.split():
        letters.append(Letter(int(tok[1:]), True) if tok.startswith("~") else Letter(int(tok)))
    return coloured(letters)


def format_word(word: Sequence) -> str:
    return " ".join(map(str, word))


def format_coloured(word: ColouredPermutation) -> str:
    return " ".join(str(Letter(*l)) for l in word)


def parse_descent_set(text: str) -> frozenset[int]:
    body = text.strip().strip("{}").strip()
    return frozenset(int(t) for t in body.split(",")) if body else frozenset()


def format_descent_set(I: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(I))) + "}"
