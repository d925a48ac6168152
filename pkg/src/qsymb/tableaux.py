"""Young tableaux, (p)-bi-tableaux and domino tableaux.

English notation throughout: row 1 is the top row.  A Young tableau is a
tuple of row tuples.  Domino coordinates are 1-based ``(row, col)`` of the
top-left cell; a horizontal domino also covers ``(row, col+1)`` and a
vertical one ``(row+1, col)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .combinat import (Partition, as_partition, beta_set, from_beta_set,
                       has_empty_two_core)
from .config import get_caps
from .errors import MalformedInput, SizeLimit

YoungTableau = tuple[tuple[int, ...], ...]


def _capped(items: Iterable, what: str) -> list:
    limit = get_caps().max_items
    out = []
    for x in items:
        out.append(x)
        if len(out) > limit:
            raise SizeLimit(f"{what}: more than {limit} items")
    return out


# -- Young tableaux --------------------------------------------------------

def shape_of(t: YoungTableau) -> Partition:
    return tuple(len(row) for row in t if row)


def is_semistandard(t: YoungTableau) -> bool:
    try:
        as_partition(shape_of(t))
    except MalformedInput:
        return False
    for r, row in enumerate(t):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and any(t[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return all(v >= 1 for row in t for v in row)


def is_standard(t: YoungTableau) -> bool:
    labels = sorted(v for row in t for v in row)
    return is_semistandard(t) and labels == list(range(1, len(labels) + 1))


@cache
def _syt(shape: Partition) -> tuple[YoungTableau, ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for i, part in enumerate(shape):
        if part > (shape[i + 1] if i + 1 < len(shape) else 0):
            smaller = tuple(p for p in shape[:i] + (part - 1,) + shape[i + 1:] if p)
            for t in _syt(smaller):
                rows = [list(row) for row in t] + [[]]
                rows[i].append(n)
                out.append(tuple(tuple(row) for row in rows if row))
    return tuple(sorted(out))


def enum_syt(shape: Sequence[int]) -> list[YoungTableau]:
    return _capped(_syt(as_partition(shape)), f"SYT{tuple(shape)}")


def _iter_ssyt(shape: Partition, M: int) -> Iterator[YoungTableau]:
    cells = [(r, c) for r, part in enumerate(shape) for c in range(part)]
    rows = [[0] * part for part in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in rows)
            return
        r, c = cells[k]
        lo = max(rows[r][c - 1] if c else 1, rows[r - 1][c] + 1 if r else 1)
        # leave room for the strictly increasing cells below in this column
        below = sum(1 for part in shape[r + 1:] if part > c)
        for v in range(lo, M - below + 1):
            rows[r][c] = v
            yield from fill(k + 1)

    yield from fill(0)


def enum_ssyt(shape: Sequence[int], M: int) -> list[YoungTableau]:
    shape = as_partition(shape)
    if M < 1:
        raise MalformedInput("alphabet size M must be >= 1")
    return _capped(_iter_ssyt(shape, M), f"SSYT{shape}")


def descent_set_tableau(t: YoungTableau) -> frozenset[int]:
    if not is_standard(t):
        raise MalformedInput(f"not a standard tableau: {t}")
    row_of = {v: r for r, row in enumerate(t) for v in row}
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def content(t: YoungTableau) -> dict[int, int]:
    out: dict[int, int] = {}
    for row in t:
        for v in row:
            out[v] = out.get(v, 0) + 1
    return out


# -- (p)-tableaux ----------------------------------------------------------

class PTableau(NamedTuple):
    minus: tuple[int, ...]
    plus: YoungTableau

    @property
    def p(self) -> int:
        return len(self.minus)


def enum_ssbt(shape: Sequence[int], p: int, M: int) -> list[PTableau]:
    shape = as_partition(shape)
    rows = list(itertools.combinations_with_replacement(range(1, M + 1), p))
    plus = enum_ssyt(shape, M) if shape else [()]
    return _capped((PTableau(row, t) for row in rows for t in plus), f"SSBT^({p}){shape}")


def enum_sbt(shape: Sequence[int], p: int) -> list[PTableau]:
    shape = as_partition(shape)
    n = sum(shape)
    out = []
    for minus in itertools.combinations(range(1, n + p + 1), p):
        rest = [v for v in range(1, n + p + 1) if v not in minus]
        for t in _syt(shape):
            out.append(PTableau(minus, tuple(tuple(rest[v - 1] for v in row) for row in t)))
    return _capped(out, f"SBT^({p}){shape}")


def is_standard_ptableau(t: PTableau) -> bool:
    labels = sorted(list(t.minus) + [v for row in t.plus for v in row])
    return (list(t.minus) == sorted(set(t.minus)) and is_semistandard(t.plus)
            and labels == list(range(1, len(labels) + 1)))


def standardize(t: PTableau) -> PTableau:
    """Order-preserving relabelling by ``1..n+p``.

    Equal entries go to ``T⁻`` first, then to ``T⁺`` from left to right
    (equal entries of a semistandard tableau never share a column).
    """
    if any(a > b for a, b in zip(t.minus, t.minus[1:])) or not is_semistandard(t.plus):
        raise MalformedInput(f"not a semistandard (p)-tableau: {t}")
    cells = [(v, 0, c, None) for c, v in enumerate(t.minus)]
    cells += [(v, 1, c, r) for r, row in enumerate(t.plus) for c, v in enumerate(row)]
    cells.sort(key=lambda cell: cell[:3])
    minus = list(t.minus)
    plus = [list(row) for row in t.plus]
    for label, (_, comp, c, r) in enumerate(cells, start=1):
        if comp == 0:
            minus[c] = label
        else:
            plus[r][c] = label
    return PTableau(tuple(minus), tuple(tuple(row) for row in plus))


def comp_tableau(t: PTableau):
    from .combinat import WeakComposition

    if not is_standard_ptableau(t):
        raise MalformedInput(f"not a standard (p)-tableau: {t}")
    where = {v: None for v in t.minus}
    where.update({v: r for r, row in enumerate(t.plus) for v in row})
    entries: list[int] = []
    run = 0
    for k in range(1, len(where) + 1):
        row = where[k]
        if row is None:
            if run:
                entries.append(run)
                run = 0
            entries.append(0)
        elif run and where[k - 1] is not None and where[k - 1] < row:
            entries.append(run)
            run = 1
        else:
            run += 1
    if run:
        entries.append(run)
    return WeakComposition(tuple(entries))


# -- domino tableaux -------------------------------------------------------

class Domino(NamedTuple):
    row: int
    col: int
    vertical: bool
    label: int = 0

    @property
    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        second = (self.row + 1, self.col) if self.vertical else (self.row, self.col + 1)
        return ((self.row, self.col), second)

    @property
    def bottom(self) -> int:
        return self.row + 1 if self.vertical else self.row

    def __str__(self) -> str:
        return f"({self.row},{self.col},{'V' if self.vertical else 'H'},{self.label})"


@dataclass(frozen=True)
class DominoTableau:
    shape: Partition
    dominoes: tuple[Domino, ...]

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes)))

    @property
    def size(self) -> int:
        return len(self.dominoes)

    @property
    def spin2(self) -> int:
        """Twice the spin, i.e. the number of vertical dominoes."""
        return sum(1 for d in self.dominoes if d.vertical)

    def weight(self, M: int | None = None) -> tuple[int, ...]:
        top = max((d.label for d in self.dominoes), default=-1) if M is None else M
        counts = [0] * (top + 1)
        for d in self.dominoes:
            counts[d.label] += 1
        return tuple(counts)

    def by_label(self) -> dict[int, Domino]:
        return {d.label: d for d in self.dominoes}

    def __str__(self) -> str:
        return " ".join(str(d) for d in sorted(self.dominoes, key=lambda d: (d.label, d.row, d.col)))


def spin(t: DominoTableau) -> int:
    """Spin stored as ``2·spin``."""
    return t.spin2


def _cells(shape: Partition) -> set[tuple[int, int]]:
    return {(r, c) for r, part in enumerate(shape, start=1) for c in range(1, part + 1)}


def _check_tileable(shape: Partition) -> Partition:
    shape = as_partition(shape)
    if not has_empty_two_core(shape):
        raise MalformedInput(f"shape {shape} has a non-empty 2-core")
    return shape


@cache
def _tilings(shape: Partition) -> tuple[tuple[Domino, ...], ...]:
    cells = _cells(shape)
    order = sorted(cells)
    covered: set = set()
    placed: list[Domino] = []
    out = []

    def go(k):
        while k < len(order) and order[k] in covered:
            k += 1
        if k == len(order):
            out.append(tuple(placed))
            return
        r, c = order[k]
        for vertical, other in ((False, (r, c + 1)), (True, (r + 1, c))):
            if other in cells and other not in covered:
                covered.update({(r, c), other})
                placed.append(Domino(r, c, vertical))
                go(k + 1)
                placed.pop()
                covered.difference_update({(r, c), other})

    go(0)
    return tuple(out)


def tilings(shape: Sequence[int]) -> list[tuple[Domino, ...]]:
    """Brute-force list of all domino tilings (unlabelled)."""
    return list(_tilings(as_partition(shape)))


def _constraints(tiling: Sequence[Domino]) -> list[tuple[int, int, bool]]:
    """Edges ``(i, j, strict)`` meaning ``label_i <= label_j`` (``<`` if strict)."""
    owner = {cell: i for i, d in enumerate(tiling) for cell in d.cells}
    edges = set()
    for (r, c), i in owner.items():
        j = owner.get((r, c + 1))
        if j is not None and j != i:
            edges.add((i, j, False))
        j = owner.get((r + 1, c))
        if j is not None and j != i:
            edges.add((i, j, True))
    strict = {(i, j) for i, j, s in edges if s}
    return sorted((i, j, (i, j) in strict) for i, j in {(i, j) for i, j, _ in edges})


def _topological(n: int, edges) -> list[int]:
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, j, _ in edges:
        succ[i].append(j)
        indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return order


def _labellings(tiling: Sequence[Domino], lo_label: int, hi_label: int,
                weight: Sequence[int] | None = None, distinct: bool = False) -> Iterator[tuple[int, ...]]:
    n = len(tiling)
    edges = _constraints(tiling)
    preds: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for i, j, s in edges:
        preds[j].append((i, s or distinct))
    order = _topological(n, edges)
    labels = [0] * n
    remaining = list(weight) if weight is not None else None
    used: set[int] = set()

    def go(k):
        if k == n:
            yield tuple(labels)
            return
        i = order[k]
        lo = lo_label
        if tiling[i].vertical:
            lo = max(lo, 1)
        for j, s in preds[i]:
            lo = max(lo, labels[j] + 1 if s else labels[j])
        for v in range(lo, hi_label + 1):
            if distinct and v in used:
                continue
            if remaining is not None:
                if v >= len(remaining) or remaining[v] == 0:
                    continue
                remaining[v] -= 1
            used.add(v)
            labels[i] = v
            yield from go(k + 1)
            used.discard(v)
            if remaining is not None:
                remaining[v] += 1

    yield from go(0)


def enum_ssdt(shape: Sequence[int], M: int, weight: Sequence[int] | None = None) -> list[DominoTableau]:
    """Semistandard domino tableaux with labels in ``{0,…,M}``, optionally of fixed weight."""
    shape = _check_tileable(shape)

    def gen():
        for tiling in _tilings(shape):
            for labels in _labellings(tiling, 0, M, weight):
                yield DominoTableau(shape, tuple(d._replace(label=v) for d, v in zip(tiling, labels)))

    return _capped(gen(), f"SSDT{shape}")


@cache
def _sdt(shape: Partition) -> tuple[DominoTableau, ...]:
    n = sum(shape) // 2
    if n == 0:
        return (DominoTableau((), ()),)
    out = []
    padded = list(shape) + [0, 0]
    for i in range(len(shape)):
        if padded[i] - 2 >= padded[i + 1]:
            smaller = padded[:i] + [padded[i] - 2] + padded[i + 1:]
            new = Domino(i + 1, padded[i] - 1, False, n)
            out.extend(_grow(shape, smaller, new))
        if padded[i] == padded[i + 1] and padded[i + 1] - 1 >= padded[i + 2]:
            smaller = padded[:i] + [padded[i] - 1, padded[i + 1] - 1] + padded[i + 2:]
            new = Domino(i + 1, padded[i], True, n)
            out.extend(_grow(shape, smaller, new))
    return tuple(sorted(out, key=lambda t: t.dominoes))


def _grow(shape: Partition, smaller: list[int], new: Domino) -> list[DominoTableau]:
    inner = tuple(p for p in smaller if p)
    return [DominoTableau(shape, t.dominoes + (new,)) for t in _sdt(inner)]


def enum_sdt(shape: Sequence[int]) -> list[DominoTableau]:
    """Standard domino tableaux, built from chains of shapes differing by one domino."""
    shape = _check_tileable(shape)
    return _capped(_sdt(shape), f"SDT{shape}")


def enum_sdt_by_labelling(shape: Sequence[int]) -> list[DominoTableau]:
    """Standard domino tableaux via tilings and distinct labellings (independent route)."""
    shape = _check_tileable(shape)
    n = sum(shape) // 2
    out = []
    for tiling in _tilings(shape):
        for labels in _labellings(tiling, 1, n, distinct=True):
            out.append(DominoTableau(shape, tuple(d._replace(label=v) for d, v in zip(tiling, labels))))
    return out


def is_valid_ssdt(t: DominoTableau, M: int | None = None) -> bool:
    cells = [cell for d in t.dominoes for cell in d.cells]
    if len(cells) != len(set(cells)) or set(cells) != _cells(t.shape):
        return False
    if any(d.vertical and d.label == 0 for d in t.dominoes):
        return False
    if any(d.label < 0 or (M is not None and d.label > M) for d in t.dominoes):
        return False
    labels = [d.label for d in t.dominoes]
    for i, j, strict in _constraints(t.dominoes):
        if labels[i] > labels[j] or (strict and labels[i] == labels[j]):
            return False
    return True


def is_standard_domino(t: DominoTableau) -> bool:
    return (sorted(d.label for d in t.dominoes) == list(range(1, t.size + 1))
            and is_valid_ssdt(t))


def descent_set_domino(t: DominoTableau) -> frozenset[int]:
    """Type B descents: 0 if domino 1 is vertical; ``i`` if domino ``i+1`` starts below domino ``i`` ends."""
    if not is_standard_domino(t):
        raise MalformedInput(f"not a standard domino tableau: {t}")
    d = t.by_label()
    out = {0} if t.size and d[1].vertical else set()
    out |= {i for i in range(1, t.size) if d[i + 1].row > d[i].bottom}
    return frozenset(out)


def two_quotient_shape(shape: Sequence[int]) -> tuple[Partition, Partition]:
    """Shape-level 2-quotient ``(λ⁻, λ⁺)`` read off a two-runner abacus with an even bead count."""
    shape = _check_tileable(shape)
    beads = beta_set(shape)
    minus = from_beta_set(b // 2 for b in beads if b % 2 == 0)
    plus = from_beta_set(b // 2 for b in beads if b % 2 == 1)
    return minus, plus


# -- text formats ----------------------------------------------------------

def format_tableau(t: YoungTableau) -> str:
    return "/".join(" ".join(map(str, row)) for row in t)


def parse_tableau(text: str) -> YoungTableau:
    text = text.strip()
    if not text:
        return ()
    return tuple(tuple(int(v) for v in row.split()) for row in text.split("/"))


def format_ptableau(t: PTableau) -> str:
    return f"{' '.join(map(str, t.minus))} | {format_tableau(t.plus)}"


def format_domino_tableau(t: DominoTableau) -> str:
    return str(t)


_DOMINO_RE = re.compile(r"\((\d+),(\d+),([HV]),(\d+)\)")


def parse_domino_tableau(text: str) -> DominoTableau:
    dominoes = [Domino(int(r), int(c), hv == "V", int(lab)) for r, c, hv, lab in _DOMINO_RE.findall(text)]
    rows: dict[int, int] = {}
    for d in dominoes:
        for r, c in d.cells:
            rows[r] = max(rows.get(r, 0), c)
    shape = tuple(rows[r] for r in sorted(rows))
    return DominoTableau(as_partition(shape), tuple(dominoes))
