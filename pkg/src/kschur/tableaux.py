"""k-tableaux, column-strict tableaux and the cocharge statistic.

Fillings weakly increase left to right along rows and strictly increase
up columns.  A tableau is stored as a tuple of rows, bottom row first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .corelab import Partition, degree, is_core, make_partition, residue
from .tpoly import TPoly

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CSTableau:
    shape: Partition
    rows: Rows
    weight: tuple[int, ...]

    def reading_word(self) -> tuple[int, ...]:
        """Rows from top to bottom, each read left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def column_word(self) -> tuple[int, ...]:
        width = self.shape[0] if self.shape else 0
        return tuple(
            row[c] for c in range(width) for row in self.rows if c < len(row)
        )

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class KTableau(CSTableau):
    k: int = 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rows": [list(r) for r in self.rows],
            "residues": [
                [residue((r, c), self.k) for c in range(1, len(row) + 1)]
                for r, row in enumerate(self.rows, start=1)
            ],
        }


def _horizontal_strips(inner: Partition, outer: Partition) -> Iterator[Partition]:
    """Partitions ``mid`` with ``inner <= mid <= outer`` and ``mid/inner`` a horizontal strip."""
    n = len(outer)
    inner = tuple(inner) + (0,) * (n - len(inner))

    def rec(i, acc):
        if i == n:
            yield tuple(x for x in acc if x > 0)
            return
        hi = outer[i] if i == 0 else min(outer[i], inner[i - 1], acc[-1])
        for v in range(inner[i], hi + 1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _fill(shape: Partition, chain: list[Partition]) -> Rows:
    rows = [[0] * length for length in shape]
    for letter in range(1, len(chain)):
        lo, hi = chain[letter - 1], chain[letter]
        for r, length in enumerate(hi):
            start = lo[r] if r < len(lo) else 0
            for c in range(start, length):
                rows[r][c] = letter
    return tuple(tuple(r) for r in rows)


def _strip_residues(lo: Partition, hi: Partition, k: int) -> int:
    seen = set()
    for r, length in enumerate(hi, start=1):
        start = lo[r - 1] if r <= len(lo) else 0
        for c in range(start + 1, length + 1):
            seen.add(residue((r, c), k))
    return len(seen)


def _chains(shape: Partition, weight: Sequence[int], accept) -> Iterator[list[Partition]]:
    def rec(chain):
        i = len(chain) - 1
        if i == len(weight):
            if chain[-1] == shape:
                yield list(chain)
            return
        for mid in _horizontal_strips(chain[-1], shape):
            if accept(chain[-1], mid, weight[i]):
                chain.append(mid)
                yield from rec(chain)
                chain.pop()

    yield from rec([()])


def enumerate_k_tableaux(shape: Partition, alpha: Sequence[int], k: int) -> list[KTableau]:
    """All k-tableaux of the given core shape and k-weight ``alpha``."""
    shape = make_partition(shape)
    alpha = tuple(alpha)
    if not is_core(shape, k):
        raise ValueError(f"{shape} is not a {k + 1}-core")
    if sum(alpha) != degree(shape, k):
        raise ValueError(
            f"k-weight {alpha} does not sum to degree {degree(shape, k)} of {shape}"
        )

    def accept(lo, hi, a):
        return _strip_residues(lo, hi, k) == a

    out = [
        KTableau(shape, _fill(shape, chain), alpha, k)
        for chain in _chains(shape, alpha, accept)
    ]
    out.sort(key=lambda t: t.column_word())
    return out


def count_k_tableaux(shape: Partition, alpha: Sequence[int], k: int) -> int:
    if sum(alpha) != degree(shape, k):
        return 0
    return len(enumerate_k_tableaux(shape, alpha, k))


def enumerate_cst(shape: Partition, weight: Sequence[int]) -> list[CSTableau]:
    """All column-strict tableaux of ``shape`` and ``weight``."""
    shape = make_partition(shape)
    weight = tuple(weight)
    if sum(weight) != sum(shape):
        return []

    def accept(lo, hi, a):
        return sum(hi) - sum(lo) == a

    out = [CSTableau(shape, _fill(shape, c), weight) for c in _chains(shape, weight, accept)]
    out.sort(key=lambda t: t.column_word())
    return out


def _standard_subwords(word: Sequence[int]) -> list[list[int]]:
    """Split a word of partition weight into standard subwords (lists of positions).

    Each subword is picked by scanning right to left, cyclically, for 1, 2, ...
    """
    left = list(range(len(word)))
    out = []
    while left:
        letters = {word[i] for i in left}
        picked = []
        pos = len(word)
        letter = 1
        while letter in letters:
            cands = [i for i in left if word[i] == letter]
            before = [i for i in cands if i < pos]
            i = max(before) if before else max(cands)
            picked.append(i)
            pos = i
            letter += 1
        for i in picked:
            left.remove(i)
        out.append(picked)
    return out


def _is_partition_weight(word: Sequence[int]) -> bool:
    if not word:
        return True
    m = max(word)
    counts = [word.count(i) for i in range(1, m + 1)]
    return all(counts[i] >= counts[i + 1] for i in range(m - 1)) and counts[-1] > 0


def _labels(word, positions, to_left: bool) -> int:
    total = label = 0
    for prev, cur in zip(positions, positions[1:]):
        if (cur < prev) == to_left:
            label += 1
        total += label
    return total


def cocharge_word(word: Sequence[int]) -> int:
    if not _is_partition_weight(word):
        raise ValueError("cocharge needs a word of partition weight")
    return sum(_labels(word, sub, True) for sub in _standard_subwords(word))


def charge_word(word: Sequence[int]) -> int:
    if not _is_partition_weight(word):
        raise ValueError("charge needs a word of partition weight")
    return sum(_labels(word, sub, False) for sub in _standard_subwords(word))


def cocharge(t: CSTableau) -> int:
    return cocharge_word(t.reading_word())


def charge(t: CSTableau) -> int:
    return charge_word(t.reading_word())


def kostka_foulkes(lam: Partition, mu: Partition) -> TPoly:
    """Cocharge generating function over column-strict tableaux of shape ``lam``, weight ``mu``."""
    lam, mu = make_partition(lam), make_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("shape and weight sizes differ")
    return TPoly.from_exponents(cocharge(t) for t in enumerate_cst(lam, mu))
