"""Weak and strong (Bruhat) order on (k+1)-cores and the strips built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .corelab import (
    Cell,
    Partition,
    add_cells,
    addable_corners,
    contains,
    content,
    cores_of_degree,
    degree,
    is_core,
    is_horizontal_strip,
    residue,
    skew_cells,
)


class NotStrongCoverSkew(ValueError):
    pass


@dataclass(frozen=True)
class Ribbon:
    cells: frozenset[Cell]
    head: Cell

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def row(self) -> int:
        return self.head[0]


@dataclass(frozen=True)
class MarkedCover:
    lower: Partition
    upper: Partition
    mark: int


@dataclass(frozen=True)
class WeakStrip:
    chain: tuple[Partition, ...]

    @property
    def ell(self) -> int:
        return len(self.chain) - 1

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain], "marks": []}


@dataclass(frozen=True)
class StrongStrip:
    chain: tuple[Partition, ...]
    contents: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.contents)

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain], "marks": list(self.contents)}


@dataclass(frozen=True)
class BottomStrongStrip:
    """Chain ``nu = chain[0] < ... < chain[-1] = (k + lam_1, lam)`` in strong order."""

    k: int
    lam: Partition
    chain: tuple[Partition, ...]
    ell: int = field(default=0)

    @property
    def nu(self) -> Partition:
        return self.chain[0]

    @property
    def top(self) -> Partition:
        return self.chain[-1]

    @property
    def marks(self) -> tuple[int, ...]:
        # content of the bottom rightmost cell (always in row 1)
        return tuple(p[0] - 1 for p in self.chain[1:])

    def as_strong_strip(self) -> StrongStrip:
        return StrongStrip(self.chain, self.marks)

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain], "marks": list(self.marks)}


def top_shape(lam: Partition, k: int) -> Partition:
    """The core ``(k + lam_1, lam)``."""
    return (k + (lam[0] if lam else 0),) + tuple(lam)


# -- weak order ---------------------------------------------------------------


@lru_cache(maxsize=None)
def weak_covers_up(core: Partition, k: int) -> tuple[Partition, ...]:
    by_residue: dict[int, list[Cell]] = {}
    for cell in addable_corners(core):
        by_residue.setdefault(residue(cell, k), []).append(cell)
    return tuple(sorted({add_cells(core, cs) for cs in by_residue.values()}))


def weak_strip_chains(lam: Partition, k: int, ell: int, nu: Partition | None = None):
    """Yield every certificate chain of a weak ``ell``-strip over ``lam``."""

    def walk(chain, last_col):
        cur = chain[-1]
        if len(chain) - 1 == ell:
            if nu is None or cur == nu:
                yield tuple(chain)
            return
        for nxt in weak_covers_up(cur, k):
            if nu is not None and not contains(nu, nxt):
                continue
            if not is_horizontal_strip(nxt, lam):
                continue
            right = max(c for _, c in skew_cells(nxt, cur))
            if right <= last_col:
                continue
            chain.append(nxt)
            yield from walk(chain, right)
            chain.pop()

    yield from walk([lam], 0)


def weak_strip(lam: Partition, nu: Partition, ell: int, k: int) -> WeakStrip | None:
    """Certificate that ``nu / lam`` is a weak ``ell``-strip, or None."""
    if not 0 <= ell <= k:
        raise ValueError(f"ell must lie in 0..{k}")
    for chain in weak_strip_chains(lam, k, ell, nu):
        return WeakStrip(chain)
    return None


@lru_cache(maxsize=None)
def weak_strip_set(lam: Partition, ell: int, k: int) -> tuple[Partition, ...]:
    if not 0 < ell <= k:
        raise ValueError(f"ell must lie in 1..{k}")
    return tuple(sorted({c[-1] for c in weak_strip_chains(lam, k, ell)}))


# -- strong order -------------------------------------------------------------
#
# A (k+1)-core is a Maya diagram (beads at lam_i - i) whose k+1 runners are
# each filled up to some level.  Strong covers are affine reflections, which
# move one runner up m levels and another down m levels.  Each such move
# translates a ribbon along its residue class, so candidates are generated
# this way and then filtered by containment and degree.


def _runner_tops(p: Partition, n: int) -> list[int]:
    beads = [p[i] - i - 1 for i in range(len(p))]
    tops = [None] * n
    for b in beads:
        if tops[b % n] is None:
            tops[b % n] = b
    for r in range(n):
        if tops[r] is None:
            x = -len(p) - 1
            tops[r] = x - ((x - r) % n)
    return tops


def _from_tops(tops: list[int], n: int) -> Partition:
    lo = min(tops) - n
    beads = sorted(
        (x for r, t in enumerate(tops) for x in range(t, lo - 1, -n)), reverse=True
    )
    parts = [b + i + 1 for i, b in enumerate(beads)]
    if parts[-1] != 0:
        raise AssertionError("charge drifted while moving beads")
    return tuple(x for x in parts if x > 0)


def _reflection_moves(p: Partition, k: int, max_shift: int):
    n = k + 1
    tops = _runner_tops(p, n)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            for m in range(1, max_shift + 1):
                moved = list(tops)
                moved[a] += m * n
                moved[b] -= m * n
                yield _from_tops(moved, n)


@lru_cache(maxsize=None)
def strong_covers_up(core: Partition, k: int) -> tuple[Partition, ...]:
    d = degree(core, k)
    out = {
        q
        for q in _reflection_moves(core, k, d + 2)
        if contains(q, core) and degree(q, k) == d + 1
    }
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def strong_covers_down(core: Partition, k: int) -> tuple[Partition, ...]:
    d = degree(core, k)
    if d == 0:
        return ()
    out = {
        q
        for q in _reflection_moves(core, k, d + 1)
        if contains(core, q) and degree(q, k) == d - 1
    }
    return tuple(sorted(out))


def strong_covers_up_by_scan(core: Partition, k: int) -> tuple[Partition, ...]:
    """Reference enumeration: every core one degree higher containing ``core``."""
    d = degree(core, k)
    return tuple(sorted(q for q in cores_of_degree(d + 1, k) if contains(q, core)))


def is_strong_cover(lo: Partition, hi: Partition, k: int) -> bool:
    return contains(hi, lo) and degree(hi, k) == degree(lo, k) + 1


def _components(cells: list[Cell]) -> list[frozenset[Cell]]:
    left = set(cells)
    comps = []
    while left:
        stack = [left.pop()]
        comp = set(stack)
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in left:
                    left.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    return comps


def _normalized(comp: frozenset[Cell]) -> frozenset[Cell]:
    r0 = min(r for r, _ in comp)
    c0 = min(c for _, c in comp)
    return frozenset((r - r0, c - c0) for r, c in comp)


def ribbon_components(upper: Partition, lower: Partition, k: int) -> list[Ribbon]:
    """Ribbon decomposition of the skew of a strong cover, ordered by head content.

    Every component must be a ribbon, all components translates of each
    other, and all heads of one residue.
    """
    ribbons = []
    for comp in _components(skew_cells(upper, lower)):
        if any(
            {(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= comp for r, c in comp
        ):
            raise NotStrongCoverSkew("not a strong-cover skew")
        head = max(comp, key=content)
        ribbons.append(Ribbon(comp, head))
    ribbons.sort(key=lambda rb: content(rb.head))
    if ribbons:
        shape = _normalized(ribbons[0].cells)
        res = residue(ribbons[0].head, k)
        for rb in ribbons[1:]:
            if _normalized(rb.cells) != shape or residue(rb.head, k) != res:
                raise NotStrongCoverSkew("not a strong-cover skew")
    return ribbons


@lru_cache(maxsize=None)
def marked_covers_up(core: Partition, k: int) -> tuple[MarkedCover, ...]:
    out = []
    for up in strong_covers_up(core, k):
        for rb in ribbon_components(up, core, k):
            out.append(MarkedCover(core, up, content(rb.head)))
    return tuple(out)


def strong_strips_from(lam: Partition, ell: int, k: int, gam: Partition | None = None):
    """Yield every strong ``ell``-strip starting at ``lam`` (ending at ``gam`` if given)."""
    target = None if gam is None else degree(gam, k)

    def walk(chain, marks):
        if len(marks) == ell:
            if gam is None or chain[-1] == gam:
                yield StrongStrip(tuple(chain), tuple(marks))
            return
        for mc in marked_covers_up(chain[-1], k):
            if marks and mc.mark <= marks[-1]:
                continue
            if gam is not None and not contains(gam, mc.upper):
                continue
            chain.append(mc.upper)
            marks.append(mc.mark)
            yield from walk(chain, marks)
            chain.pop()
            marks.pop()

    if target is not None and target != degree(lam, k) + ell:
        return
    yield from walk([lam], [])


def strong_strips(lam: Partition, gam: Partition, ell: int, k: int) -> list[StrongStrip]:
    if not 0 <= ell <= k:
        raise ValueError(f"ell must lie in 0..{k}")
    return list(strong_strips_from(lam, ell, k, gam))


def bottom_strong_chains(lam: Partition, ell: int, k: int, nu: Partition | None = None):
    """Yield every certificate chain (bottom-up) of a bottom strong ``ell``-strip."""
    top = top_shape(lam, k)
    if not is_core(top, k):
        raise AssertionError(f"{top} is not a {k + 1}-core")
    floor = top[1:]  # nu_i >= top_{i+1} for a horizontal strip

    def walk(chain):
        cur = chain[-1]
        if len(chain) - 1 == k - ell:
            if (nu is None or cur == nu) and is_horizontal_strip(top, cur):
                yield tuple(reversed(chain))
            return
        for low in strong_covers_down(cur, k):
            if low[0] >= cur[0] or not contains(low, floor):
                continue
            if nu is not None and not contains(low, nu):
                continue
            chain.append(low)
            yield from walk(chain)
            chain.pop()

    yield from walk([top])


def bottom_strong_strip(
    lam: Partition, nu: Partition, ell: int, k: int
) -> BottomStrongStrip | None:
    if not 0 < ell <= k:
        raise ValueError(f"ell must lie in 1..{k}")
    for chain in bottom_strong_chains(lam, ell, k, nu):
        return BottomStrongStrip(k, lam, chain, ell)
    return None


@lru_cache(maxsize=None)
def bottom_strong_strips(lam: Partition, ell: int, k: int) -> tuple[BottomStrongStrip, ...]:
    """All bottom strong ``ell``-strips over ``lam``, sorted by ``nu``."""
    if not 0 < ell <= k:
        raise ValueError(f"ell must lie in 1..{k}")
    found = [BottomStrongStrip(k, lam, c, ell) for c in bottom_strong_chains(lam, ell, k)]
    return tuple(sorted(found, key=lambda s: s.chain))


def bottom_strong_set(lam: Partition, ell: int, k: int) -> tuple[Partition, ...]:
    return tuple(sorted({s.nu for s in bottom_strong_strips(lam, ell, k)}))


@dataclass
class EquivalenceReport:
    k: int
    max_degree: int
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "check": "weak-strong",
            "k": self.k,
            "max_degree": self.max_degree,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }


def compare_strip_sets(lam: Partition, k: int) -> list[dict]:
    """Counterexamples to weak set == bottom strong set at one core."""
    bad = []
    for ell in range(1, k + 1):
        weak = weak_strip_set(lam, ell, k)
        strong = bottom_strong_set(lam, ell, k)
        if weak != strong:
            bad.append(
                {
                    "lambda": list(lam),
                    "ell": ell,
                    "weak": [list(p) for p in weak],
                    "bottom_strong": [list(p) for p in strong],
                }
            )
    return bad


def check_weak_strong_equivalence(k: int, max_degree: int, mapper=map) -> EquivalenceReport:
    """Compare weak and bottom strong strip sets over all cores up to ``max_degree``.

    ``mapper`` may be a parallel map; results are merged in core order.
    """
    report = EquivalenceReport(k, max_degree)
    lams = [lam for d in range(max_degree + 1) for lam in cores_of_degree(d, k)]
    for bad in mapper(compare_strip_sets, lams, [k] * len(lams)):
        report.counterexamples.extend(bad)
    report.checked = len(lams) * k
    return report
