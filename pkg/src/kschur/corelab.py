"""Partitions, cells, hooks, residues and (k+1)-cores.

Partitions are plain tuples of positive integers, largest part first.
Row 1 is the bottom row (French convention) and columns are numbered
from 1 on the left, so a cell is a ``(row, col)`` pair and its content
is ``col - row``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Cell = tuple[int, int]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical tuple (no zeros)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {p}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


def cells(p: Partition) -> Iterator[Cell]:
    """Cells of ``p``, bottom row first, left to right."""
    for r, length in enumerate(p, start=1):
        for c in range(1, length + 1):
            yield (r, c)


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    """Cells of ``outer / inner``; ``inner`` must be contained in ``outer``."""
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    out = []
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r <= len(inner) else 0
        out.extend((r, c) for c in range(start + 1, length + 1))
    return out


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff ``outer / inner`` has at most one cell in each column."""
    if not contains(outer, inner):
        return False
    return all(
        outer[i + 1] <= (inner[i] if i < len(inner) else 0)
        for i in range(len(outer) - 1)
    )


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def residue(cell: Cell, k: int) -> int:
    return (cell[1] - cell[0]) % (k + 1)


def hook_length(p: Partition, cell: Cell) -> int:
    r, c = cell
    if r < 1 or c < 1 or r > len(p) or c > p[r - 1]:
        raise ValueError("cell out of shape")
    leg = sum(1 for x in p[r:] if x >= c)
    return p[r - 1] - c + leg + 1


@lru_cache(maxsize=None)
def hooks(p: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook lengths row by row (bottom row first)."""
    conj = conjugate(p)
    return tuple(
        tuple(length - c + conj[c - 1] - r + 1 for c in range(1, length + 1))
        for r, length in enumerate(p, start=1)
    )


def is_core(p: Partition, k: int) -> bool:
    """True iff no cell of ``p`` has hook length ``k + 1``."""
    return all(h != k + 1 for row in hooks(p) for h in row)


def degree(p: Partition, k: int) -> int:
    """Number of cells with hook length at most ``k``."""
    return sum(1 for row in hooks(p) for h in row if h <= k)


def core_to_bounded(p: Partition, k: int) -> Partition:
    """Row-wise count of cells with hook length at most ``k``."""
    return make_partition(sum(1 for h in row if h <= k) for row in hooks(p))


@lru_cache(maxsize=None)
def bounded_to_core(mu: Partition, k: int) -> Partition:
    """Inverse of :func:`core_to_bounded`.

    Rows are placed from the top down; each new bottom row is pushed
    right until its last ``mu_i`` cells are exactly the ones with hook
    length at most ``k``.
    """
    if mu and mu[0] > k:
        raise ValueError(f"{mu} is not {k}-bounded")
    core: Partition = ()
    for part in reversed(mu):
        conj = conjugate(core)
        length = max(part, core[0] if core else 0)
        while True:
            c = length - part + 1
            above = conj[c - 1] if c - 1 < len(conj) else 0
            if length - c + above + 1 <= k:
                break
            length += 1
        core = (length,) + core
    return core


def residues(p: Partition, k: int) -> dict[Cell, int]:
    return {cell: residue(cell, k) for cell in cells(p)}


def addable_corners(p: Partition) -> list[Cell]:
    """Cells that can be added to ``p`` to give a partition, bottom row first."""
    out = []
    for r in range(1, len(p) + 2):
        c = (p[r - 1] if r <= len(p) else 0) + 1
        if r == 1 or p[r - 2] >= c:
            out.append((r, c))
    return out


def removable_corners(p: Partition) -> list[Cell]:
    return [
        (r, length)
        for r, length in enumerate(p, start=1)
        if r == len(p) or p[r] < length
    ]


def add_cells(p: Partition, new: Iterable[Cell]) -> Partition:
    rows = list(p)
    for r, c in sorted(new):
        while len(rows) < r:
            rows.append(0)
        if rows[r - 1] != c - 1:
            raise ValueError(f"cannot add {(r, c)} to {p}")
        rows[r - 1] = c
    return make_partition(rows)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` (positive parts) in lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in compositions(n - first, max_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def cores_of_degree(n: int, k: int) -> tuple[Partition, ...]:
    """All (k+1)-cores of degree ``n``, most dominant bounded image first."""
    return tuple(bounded_to_core(mu, k) for mu in partitions(n, k))


def dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


@dataclass(frozen=True)
class Core:
    """A (k+1)-core; validated on construction."""

    k: int
    shape: Partition

    def __post_init__(self):
        object.__setattr__(self, "shape", make_partition(self.shape))
        if self.k < 1:
            raise ValueError("k must be positive")
        if not is_core(self.shape, self.k):
            raise ValueError(f"{self.shape} is not a {self.k + 1}-core")

    @property
    def degree(self) -> int:
        return degree(self.shape, self.k)

    @property
    def bounded(self) -> Partition:
        return core_to_bounded(self.shape, self.k)

    def residues(self) -> dict[Cell, int]:
        return residues(self.shape, self.k)

    @classmethod
    def from_bounded(cls, mu: Iterable[int], k: int) -> "Core":
        return cls(k, bounded_to_core(make_partition(mu), k))
