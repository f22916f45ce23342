"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected in ``RESULTS`` and printed by the terminal summary
hook in ``conftest.py``; running this file directly prints them as well.
"""

import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from kschur import verify
from kschur.abcs import enumerate_abcs, offsets, spin_base
from kschur.corelab import degree, hooks, is_core, residues
from kschur.poset import bottom_strong_set, bottom_strong_strip, strong_strips, weak_strip, weak_strip_set
from kschur.symfunc import conjecture_explorer, hl_terms, pieri_by_expansion, weak_pieri_product
from kschur.tableaux import enumerate_k_tableaux
from kschur.tpoly import TPoly

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(n, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and limit is not None and elapsed >= limit:
            ok = False
            title += f" (too slow: {elapsed:.3g}s >= {limit}s)"
        RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} [{elapsed:.3g}s]"
        print(RESULTS[n])
    if not ok:
        pytest.fail(RESULTS[n])


def test_criterion_01_core_arithmetic():
    shape = (6, 4, 3, 1, 1, 1)
    hooks.cache_clear()
    with criterion(1, "core (6,4,3,1,1,1), k=4: degree 11 and residues", limit=1e-3):
        assert is_core(shape, 4)
        assert degree(shape, 4) == 11
        res = residues(shape, 4)
        rows = [[res[(r, c)] for c in range(1, n + 1)] for r, n in enumerate(shape, 1)]
    assert rows == [[0, 1, 2, 3, 4, 0], [4, 0, 1, 2], [3, 4, 0], [2], [1], [0]]


def test_criterion_02_k_tableaux():
    with criterion(2, "two 6-tableaux of shape (8,2,2), weight (3,3,3,1)", limit=1.0):
        assert len(enumerate_k_tableaux((8, 2, 2), (3, 3, 3, 1), 6)) == 2


def test_criterion_03_strip_certificates():
    with criterion(3, "weak, bottom strong and strong strip chains"):
        assert weak_strip((3, 1, 1), (4, 1, 1, 1), 2, 3).chain == ((3, 1, 1), (3, 1, 1, 1), (4, 1, 1, 1))
        assert bottom_strong_strip((3,), (4, 2), 3, 5).chain == ((4, 2), (7, 2), (8, 3))
        assert bottom_strong_strip((3, 1, 1), (4, 1, 1, 1), 2, 3).chain == ((4, 1, 1, 1), (6, 3, 1, 1))
        found = {(s.chain, s.contents) for s in strong_strips((1,), (3, 1), 2, 2)}
        assert (((1,), (2,), (3, 1)), (1, 2)) in found


def test_criterion_04_weak_strong_equivalence():
    with criterion(4, "weak = bottom strong strip sets, k in 2..4, degree <= 8", limit=300):
        for k in (2, 3, 4):
            rep = verify.weak_strong(k, 8)
            assert rep["counterexamples"] == [], rep["counterexamples"][:3]


def test_criterion_05_pieri_example():
    expected = {(3, 3, 1, 1): 1, (5, 2, 1): 1, (4, 1, 1, 1): 1}
    with criterion(5, "h2 * s(3,1,1) at k=3 by weak and bottom strong strips"):
        assert weak_pieri_product(3, (3, 1, 1), 2) == expected
        assert dict.fromkeys(bottom_strong_set((3, 1, 1), 2, 3), 1) == expected
        assert set(weak_strip_set((3, 1, 1), 2, 3)) == set(expected)
        assert pieri_by_expansion(3, (3, 1, 1), 2) == expected


def test_criterion_06_bijection_count():
    with criterion(6, "ABC counts = k-tableau counts, k <= 4, |alpha| <= 6", limit=600):
        for k in (1, 2, 3, 4):
            rep = verify.bijection_count(k, 6)
            assert rep["counterexamples"] == [], rep["counterexamples"][:3]


def test_criterion_07_dual_strong_pieri():
    with criterion(7, "dual strong Pieri, k <= 3, degree + ell <= 7"):
        for k in (1, 2, 3):
            rep = verify.dual_pieri(k, 7)
            assert rep["counterexamples"] == [], rep["counterexamples"][:3]


def _find(k, alpha, top_first):
    (hit,) = [a for a in enumerate_abcs(k, alpha) if a.rows()[::-1] == top_first]
    return hit


def test_criterion_08_spin_examples():
    _ = None
    five = [[2, 1, 1, 1, 1], [4, 3, 2, 2, 2, 2], [_, 5, 3, 3, 3, 3, 3], [_, _, 4, 4, 4, 4, 4], [_, _, 5, 5, 5, 5, 5]]
    three = [[3, 1, 1], [_, 2, 2, 2], [_, 4, 3, 3], [_, 5, 5, 4, 4], [_, _, _, 5, 5, 5]]
    with criterion(8, "spin 4, offset 1, and spins {3,2,1,0}"):
        assert spin_base(_find(5, (1,) * 5, five)) == 4
        assert offsets(_find(3, (1,) * 5, three)) == 1
        assert sorted(spin_base(a) for a in enumerate_abcs(3, (1, 1, 1))) == [0, 1, 2, 3]


def test_criterion_09_kostka_spin():
    with criterion(9, "spin generating function = Kostka-Foulkes at k = n <= 6", limit=300):
        rep = verify.kostka_spin(6)
        assert rep["counterexamples"] == [], rep["counterexamples"][:3]
        assert hl_terms((1, 1, 1)) == {
            (3,): TPoly([1]),
            (2, 1): TPoly([0, 1, 1]),
            (1, 1, 1): TPoly([0, 0, 0, 1]),
        }


def test_criterion_10_conjecture_explorer():
    report = []
    with criterion(10, "t=1 counts of HL k-Schur coefficients, k <= 4, n <= 6"):
        for k in (1, 2, 3, 4):
            for n in range(1, 7):
                rep = conjecture_explorer(k, n, "both")
                assert rep["counts_ok"], (k, n)
                for row in rep["rows"]:
                    report.append(
                        f"  k={k} n={n} core={row['core']} identity={row['identity_match']}"
                        f" reversed={row['reversed_match']}"
                    )
    # informational: the polynomial comparison is not asserted for k < n
    print("\n".join(report))


CLI_RUNS = [
    ["core", "check", "--k", "4", "--shape", "6,4,3,1,1,1"],
    ["core", "covers", "--k", "3", "--shape", "4,1,1,1", "--order", "strong"],
    ["strips", "bottom", "--k", "5", "--lambda", "3", "--nu", "4,2", "--ell", "3"],
    ["strips", "strong", "--k", "3", "--lambda", "3,1,1", "--ell", "2"],
    ["tableaux", "enumerate", "--k", "6", "--shape", "8,2,2", "--weight", "3,3,3,1"],
    ["abc", "enumerate", "--k", "3", "--weight", "1^5", "--format", "text"],
    ["abc", "spin", "--k", "2", "--weight", "1^4"],
    ["expand", "kschur", "--k", "3", "--shape", "3,1,1"],
    ["verify", "weak-strong", "--k", "3", "--max-degree", "6"],
    ["verify", "dual-pieri", "--k", "2", "--max-degree", "5"],
    ["verify", "bijection-count", "--k", "3", "--max-degree", "5"],
    ["verify", "kostka-spin", "--n", "5"],
    ["explore", "conjecture", "--k", "2", "--n", "5"],
]


def _cli(argv):
    res = subprocess.run([sys.executable, "-m", "kschur", *argv], capture_output=True)
    return res.returncode, res.stdout


def test_criterion_11_determinism():
    with criterion(11, "byte-identical CLI output across runs and --jobs"):
        for argv in CLI_RUNS:
            first = _cli(argv)
            assert first[0] == 0 and first[1], argv
            assert _cli(argv) == first, argv
            assert _cli(argv + ["--jobs", "3"]) == first, argv


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
