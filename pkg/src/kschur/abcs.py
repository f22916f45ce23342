"""Affine Bruhat counter-tableaux (ABCs) and their spin statistics.

An ABC of k-weight ``alpha`` is a sequence of bottom strong strips, one per
letter: step ``i`` runs from ``lam^(i)`` up to ``(k + lam^(i-1)_1, lam^(i-1))``
starting from the empty core.  The chains are the canonical data; the grid
and the ribbon tiling are derived from them.

Grid rows are numbered bottom-up on the finished tableau.  Step ``i`` adds
a new bottom row, so row ``j`` of the step-``i`` frame is grid row
``len(alpha) - i + j``; columns never move.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .corelab import Cell, Partition, content, degree, make_partition, residue
from .poset import (
    BottomStrongStrip,
    bottom_strong_set,
    bottom_strong_strip,
    bottom_strong_strips,
    ribbon_components,
)
from .tpoly import TPoly


@dataclass(frozen=True)
class GridRibbon:
    id: int
    letter: int
    cells: frozenset[Cell]
    head: Cell

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def row(self) -> int:
        return self.head[0]


@dataclass(frozen=True)
class SpinReport:
    base: int
    offsets: int

    @property
    def total(self) -> int:
        return self.base + self.offsets

    def to_json(self) -> dict:
        return {"base": self.base, "offsets": self.offsets, "total": self.total}


@dataclass(frozen=True)
class ABC:
    k: int
    alpha: tuple[int, ...]
    steps: tuple[BottomStrongStrip, ...]

    @property
    def inner(self) -> Partition:
        return self.steps[-1].nu if self.steps else ()

    @property
    def shapes(self) -> tuple[Partition, ...]:
        """``lam^(1), ..., lam^(r)``."""
        return tuple(s.nu for s in self.steps)

    @property
    def is_standard(self) -> bool:
        return all(a == 1 for a in self.alpha)

    @cached_property
    def ribbons(self) -> tuple[GridRibbon, ...]:
        r = len(self.alpha)
        out = []
        for i, step in enumerate(self.steps, start=1):
            shift = r - i
            for lo, hi in zip(step.chain, step.chain[1:]):
                for rb in ribbon_components(hi, lo, self.k):
                    out.append(
                        GridRibbon(
                            len(out),
                            i,
                            frozenset((a + shift, b) for a, b in rb.cells),
                            (rb.head[0] + shift, rb.head[1]),
                        )
                    )
        return tuple(out)

    @cached_property
    def grid(self) -> dict[Cell, tuple[int, int]]:
        """Filled cells mapped to ``(letter, ribbon id)``."""
        return {cell: (rb.letter, rb.id) for rb in self.ribbons for cell in rb.cells}

    @property
    def row_lengths(self) -> tuple[int, ...]:
        """Length of every grid row, bottom row first."""
        lams = ((),) + self.shapes
        return tuple(
            self.k + (lams[i - 1][0] if lams[i - 1] else 0)
            for i in range(len(self.alpha), 0, -1)
        )

    def rows(self) -> list[list[int | None]]:
        """Grid rows bottom-up; ``None`` marks cells of the inner shape."""
        grid = self.grid
        return [
            [grid[(r, c)][0] if (r, c) in grid else None for c in range(1, length + 1)]
            for r, length in enumerate(self.row_lengths, start=1)
        ]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "alpha": list(self.alpha),
            "inner": list(self.inner),
            "rows": self.rows(),
            "ribbons": [
                {"letter": rb.letter, "size": rb.size, "head": list(rb.head)}
                for rb in self.ribbons
            ],
            "chains": [[list(p) for p in s.chain] for s in self.steps],
        }

    def render(self) -> str:
        """Top row first, with a macron over letters in ribbons of size >= 2."""
        width = max([len(str(len(self.alpha)))] + [1])
        grid, ribbons = self.grid, self.ribbons
        lines = []
        for r in range(len(self.alpha), 0, -1):
            cells = []
            for c in range(1, self.row_lengths[r - 1] + 1):
                if (r, c) not in grid:
                    cells.append(".".rjust(width))
                    continue
                letter, rid = grid[(r, c)]
                mark = "̄" if ribbons[rid].size >= 2 else ""
                cells.append(str(letter).rjust(width) + mark)
            lines.append(" ".join(cells))
        return "\n".join(lines)


def steps_from_rows(k: int, alpha: Sequence[int], rows: Sequence[Sequence[int | None]]) -> tuple[BottomStrongStrip, ...]:
    """Recover the strip chains from a rendered grid (rows bottom-up).

    ``lam^(x)`` is the shape of the entries larger than ``x`` (empty cells
    count as infinite) in the top ``x`` rows.
    """
    r = len(alpha)
    big = 10**9
    steps = []
    prev: Partition = ()
    for x in range(1, r + 1):
        top_rows = rows[r - x :]
        lam = make_partition(
            sum(1 for v in row if (big if v is None else v) > x) for row in top_rows
        )
        strip = bottom_strong_strip(prev, lam, alpha[x - 1], k)
        if strip is None:
            raise ValueError(f"step {x} is not a bottom strong strip")
        steps.append(strip)
        prev = lam
    return tuple(steps)


def _check_alpha(k: int, alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if any(not 1 <= a <= k for a in alpha):
        raise ValueError(f"k-weight parts must lie in 1..{k}: {alpha}")
    return alpha


def enumerate_abcs(k: int, alpha: Sequence[int]) -> list[ABC]:
    """All ABCs of k-weight ``alpha``, ordered by inner shape then by step shapes."""
    alpha = _check_alpha(k, alpha)
    out = []

    def rec(steps, lam):
        i = len(steps)
        if i == len(alpha):
            out.append(ABC(k, alpha, tuple(steps)))
            return
        for strip in bottom_strong_strips(lam, alpha[i], k):
            steps.append(strip)
            rec(steps, strip.nu)
            steps.pop()

    rec([], ())
    out.sort(key=lambda a: (a.inner, a.shapes))
    return out


@lru_cache(maxsize=None)
def abc_counts(k: int, alpha: tuple[int, ...]) -> dict[Partition, int]:
    """Number of ABCs of k-weight ``alpha`` per inner shape (no enumeration)."""
    alpha = _check_alpha(k, alpha)
    counts: Counter = Counter({(): 1})
    for a in alpha:
        nxt: Counter = Counter()
        for lam, c in counts.items():
            for nu in bottom_strong_set(lam, a, k):
                nxt[nu] += c
        counts = nxt
    return dict(sorted(counts.items()))


def abc_count(k: int, inner: Partition, alpha: Sequence[int]) -> int:
    alpha = _check_alpha(k, alpha)
    if degree(tuple(inner), k) != sum(alpha):
        return 0
    return abc_counts(k, alpha).get(tuple(inner), 0)


def two_ribbons_by_row(a: ABC) -> dict[int, list[GridRibbon]]:
    rows: dict[int, list[GridRibbon]] = {}
    for rb in a.ribbons:
        if rb.size == 2:
            rows.setdefault(rb.row, []).append(rb)
    return {r: sorted(rbs, key=lambda rb: rb.head[1]) for r, rbs in sorted(rows.items())}


def _require_standard(a: ABC) -> None:
    if not a.is_standard:
        raise ValueError("spin defined for standard ABCs only")
    if any(rb.size > 2 for rb in a.ribbons):
        raise AssertionError("standard ABC with a ribbon longer than 2")


def spin_base(a: ABC) -> int:
    """Sum of rows ``i`` holding a 2-ribbon that is not east of any 2-ribbon in row ``i+1``."""
    _require_standard(a)
    by_row = two_ribbons_by_row(a)
    total = 0
    for i, rbs in by_row.items():
        above = [rb.head[1] for rb in by_row.get(i + 1, [])]
        if any(all(rb.head[1] <= col for col in above) for rb in rbs):
            total += i
    return total


def offsets(a: ABC) -> int:
    """Ribbons of size > 1 with a same-letter, same-size, same-head-residue ribbon in a lower row."""
    count = 0
    for rb in a.ribbons:
        if rb.size < 2:
            continue
        res = residue(rb.head, a.k)
        if any(
            o.letter == rb.letter
            and o.size == rb.size
            and o.row < rb.row
            and residue(o.head, a.k) == res
            for o in a.ribbons
        ):
            count += 1
    return count


def spin_k(a: ABC) -> SpinReport:
    return SpinReport(spin_base(a), offsets(a))


@lru_cache(maxsize=None)
def standard_abcs(k: int, n: int) -> tuple[ABC, ...]:
    return tuple(enumerate_abcs(k, (1,) * n))


def spin_generating_function(k: int, inner: Partition, n: int) -> TPoly:
    inner = make_partition(inner)
    if degree(inner, k) != n:
        raise ValueError(f"degree of {inner} is not {n}")
    return TPoly.from_exponents(
        spin_k(a).total for a in standard_abcs(k, n) if a.inner == inner
    )


def ribbon_heads(a: ABC) -> list[tuple[int, int, int]]:
    """``(letter, size, head content)`` for every ribbon."""
    return [(rb.letter, rb.size, content(rb.head)) for rb in a.ribbons]
