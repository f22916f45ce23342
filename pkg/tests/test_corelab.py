import pytest
from hypothesis import given, strategies as st

from kschur.corelab import (
    Core,
    addable_corners,
    bounded_to_core,
    cells,
    contains,
    content,
    core_to_bounded,
    cores_of_degree,
    degree,
    hook_length,
    is_core,
    make_partition,
    partitions,
    residue,
    residues,
)
from kschur.poset import weak_covers_up


def _is_ribbon(outer, inner):
    cs = set()
    for r, length in enumerate(outer, start=1):
        start = inner[r - 1] if r <= len(inner) else 0
        cs.update((r, c) for c in range(start + 1, length + 1))
    if any({(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cs for r, c in cs):
        return False
    seen, stack = set(), [next(iter(cs))]
    while stack:
        r, c = stack.pop()
        if (r, c) in seen:
            continue
        seen.add((r, c))
        stack.extend(nb for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)) if nb in cs)
    return seen == cs


def _core_by_rim_hooks(p, k):
    # a partition is a (k+1)-core iff no (k+1)-ribbon can be peeled off it
    return not any(
        contains(p, q) and _is_ribbon(p, q) for q in partitions(sum(p) - k - 1)
    ) if sum(p) > k else True


class TestHooks:
    def test_examples(self):
        assert hook_length((6, 4, 3, 1, 1, 1), (1, 1)) == 11
        assert hook_length((1,), (1, 1)) == 1
        assert hook_length((3, 1), (1, 1)) == 4

    def test_out_of_shape(self):
        with pytest.raises(ValueError, match="cell out of shape"):
            hook_length((3, 1), (2, 2))


class TestCores:
    def test_worked_core(self):
        assert is_core((6, 4, 3, 1, 1, 1), 4)
        assert degree((6, 4, 3, 1, 1, 1), 4) == 11

    def test_small_cases(self):
        assert is_core((), 3)
        assert not is_core((3, 3), 2)
        assert degree((), 2) == 0
        assert degree((3, 1, 1), 3) == 4

    def test_residue_pattern(self):
        res = residues((6, 4, 3, 1, 1, 1), 4)
        rows = [[res[(r, c)] for c in range(1, n + 1)] for r, n in enumerate((6, 4, 3, 1, 1, 1), 1)]
        assert rows == [[0, 1, 2, 3, 4, 0], [4, 0, 1, 2], [3, 4, 0], [2], [1], [0]]
        assert residue((2, 1), 2) == 2

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_is_core_matches_rim_hook_oracle(self, k):
        for n in range(11):
            for p in partitions(n):
                assert is_core(p, k) == _core_by_rim_hooks(p, k), (p, k)

    def test_core_class_validates(self):
        assert Core(4, (6, 4, 3, 1, 1, 1)).degree == 11
        with pytest.raises(ValueError):
            Core(2, (3, 3))


class TestAddable:
    def test_examples(self):
        assert addable_corners((3, 1, 1)) == [(1, 4), (2, 2), (4, 1)]
        assert addable_corners(()) == [(1, 1)]
        assert addable_corners((2,)) == [(1, 3), (2, 1)]


class TestBounded:
    def test_examples(self):
        assert core_to_bounded((4, 2), 2) == (2, 2)
        assert core_to_bounded((3,), 4) == (3,)
        assert core_to_bounded((2, 2, 1, 1), 2) == (1, 1, 1, 1)
        assert bounded_to_core((2, 2), 2) == (4, 2)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_bijection_with_cores(self, k):
        seen = set()
        for n in range(9):
            for mu in partitions(n, k):
                c = bounded_to_core(mu, k)
                assert is_core(c, k)
                assert core_to_bounded(c, k) == mu
                assert degree(c, k) == sum(mu)
                seen.add(c)
        assert len(seen) == sum(len(cores_of_degree(n, k)) for n in range(9))

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_cores_match_weak_order_closure(self, k):
        level = {()}
        for n in range(8):
            assert set(cores_of_degree(n, k)) == level
            level = {q for p in level for q in weak_covers_up(p, k)}

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_degree_monotone_under_containment(self, k):
        cores = [c for n in range(7) for c in cores_of_degree(n, k)]
        for a in cores:
            for b in cores:
                if contains(b, a):
                    assert degree(a, k) <= degree(b, k)


@given(
    st.lists(st.integers(1, 7), max_size=6).map(lambda xs: make_partition(sorted(xs, reverse=True))),
    st.integers(1, 5),
)
def test_residues_constant_on_diagonals(p, k):
    by_content = {}
    for cell in cells(p):
        by_content.setdefault(content(cell), set()).add(residue(cell, k))
    assert all(len(v) == 1 for v in by_content.values())


def test_make_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])
    assert make_partition([3, 1, 0, 0]) == (3, 1)
