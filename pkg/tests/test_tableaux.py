from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from kschur.corelab import compositions, cores_of_degree, hooks, partitions
from kschur.tableaux import (
    charge_word,
    cocharge,
    cocharge_word,
    count_k_tableaux,
    enumerate_cst,
    enumerate_k_tableaux,
    kostka_foulkes,
)
from kschur.tpoly import TPoly


def test_worked_k_tableaux():
    ts = enumerate_k_tableaux((8, 2, 2), (3, 3, 3, 1), 6)
    assert [t.rows for t in ts] == [
        ((1, 1, 1, 2, 3, 3, 3, 4), (2, 2), (3, 3)),
        ((1, 1, 1, 2, 2, 3, 3, 3), (2, 3), (3, 4)),
    ]
    assert ts[0].to_json()["rows"][0] == [1, 1, 1, 2, 3, 3, 3, 4]
    assert ts[0].to_json()["residues"][1] == [6, 0]


def test_trivial_k_tableaux():
    assert len(enumerate_k_tableaux((), (), 3)) == 1
    for k in (2, 3, 4):
        for ell in range(1, k + 1):
            assert len(enumerate_k_tableaux((ell,), (ell,), k)) == 1


def test_weight_mismatch_is_error():
    with pytest.raises(ValueError):
        enumerate_k_tableaux((3, 1), (1, 1), 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_tableau_counts_symmetric_in_weight(k):
    for n in range(7):
        for lam in cores_of_degree(n, k):
            for mu in partitions(n, k):
                base = count_k_tableaux(lam, mu, k)
                for alpha in set(permutations(mu)):
                    assert count_k_tableaux(lam, alpha, k) == base


def test_large_k_reduces_to_column_strict():
    for n in range(1, 7):
        for lam in partitions(n):
            k = max(h for row in hooks(lam) for h in row)
            for alpha in compositions(n):
                assert count_k_tableaux(lam, alpha, k) == len(enumerate_cst(lam, alpha))


def test_cst_examples():
    assert len(enumerate_cst((2, 1), (1, 1, 1))) == 2
    assert len(enumerate_cst((4,), (4,))) == 1
    assert len(enumerate_cst((1, 1, 1), (1, 1, 1))) == 1


def test_cocharge_examples():
    (row,) = enumerate_cst((3,), (1, 1, 1))
    (col,) = enumerate_cst((1, 1, 1), (1, 1, 1))
    assert cocharge(row) == 0
    assert cocharge(col) == 3
    assert sorted(cocharge(t) for t in enumerate_cst((2, 1), (1, 1, 1))) == [1, 2]


def test_cocharge_rejects_non_partition_weight():
    with pytest.raises(ValueError):
        cocharge_word((2, 2, 1))


def test_kostka_foulkes_examples():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == TPoly([0, 1, 1])
    assert kostka_foulkes((5,), (5,)) == 1
    assert kostka_foulkes((2, 2), (1, 1, 1, 1)) == TPoly([0, 0, 1, 0, 1])
    # tabulated charge polynomials K(t), reversed by n(mu) = 3 for mu = (2,1,1)
    charge_table = {(2, 1, 1): [1], (2, 2): [0, 1], (3, 1): [0, 1, 1], (4,): [0, 0, 0, 1]}
    for lam, k_t in charge_table.items():
        assert kostka_foulkes(lam, (2, 1, 1)) == TPoly(k_t).reversed(3)


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_cardinality(n):
    ones = (1,) * n
    total = sum(
        kostka_foulkes(lam, ones).eval_at_one() * len(enumerate_cst(lam, ones))
        for lam in partitions(n)
    )
    assert total == factorial(n)


@st.composite
def partition_weight_words(draw):
    mu = draw(st.lists(st.integers(1, 3), min_size=1, max_size=4).map(lambda xs: sorted(xs, reverse=True)))
    letters = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    return mu, draw(st.permutations(letters))


@given(partition_weight_words())
def test_charge_and_cocharge_are_complementary(data):
    mu, word = data
    conj = [sum(1 for m in mu if m > j) for j in range(mu[0])]
    n_mu = sum(c * (c - 1) // 2 for c in conj)
    assert charge_word(word) + cocharge_word(word) == n_mu
