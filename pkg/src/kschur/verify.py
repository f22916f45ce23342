"""Exhaustive sweeps behind the ``verify`` subcommands.

Each sweep splits its work into independent instances and accepts a
``mapper`` (``map`` or an executor's ``map``); results are merged in
instance order so the report does not depend on the mapper.
"""

from __future__ import annotations

from .abcs import abc_counts, spin_generating_function
from .corelab import compositions, cores_of_degree, partitions
from .poset import check_weak_strong_equivalence
from .symfunc import dual_strong_pieri_check
from .tableaux import count_k_tableaux, kostka_foulkes


def _bijection_instance(k: int, alpha: tuple[int, ...]) -> list[dict]:
    counts = abc_counts(k, alpha)
    bad = []
    for lam in cores_of_degree(sum(alpha), k):
        a, t = counts.get(lam, 0), count_k_tableaux(lam, alpha, k)
        if a != t:
            bad.append({"alpha": list(alpha), "core": list(lam), "abc": a, "ktableaux": t})
    return bad


def bijection_count(k: int, max_degree: int, mapper=map) -> dict:
    """ABC counts against k-tableau counts for every composition up to ``max_degree``."""
    alphas = [a for n in range(max_degree + 1) for a in compositions(n, k)]
    bad = [b for part in mapper(_bijection_instance, [k] * len(alphas), alphas) for b in part]
    return {
        "check": "bijection-count",
        "k": k,
        "max_degree": max_degree,
        "checked": len(alphas),
        "counterexamples": bad,
    }


def _dual_pieri_instance(k: int, lam: tuple[int, ...], ell: int) -> list[dict]:
    rep = dual_strong_pieri_check(k, lam, ell)
    return [] if rep["equal"] else [rep]


def dual_pieri(k: int, max_degree: int, mapper=map) -> dict:
    """Dual strong Pieri rule for every core and ``ell`` with ``degree + ell <= max_degree``."""
    jobs = [
        (lam, ell)
        for d in range(max_degree)
        for lam in cores_of_degree(d, k)
        for ell in range(1, min(k, max_degree - d) + 1)
    ]
    lams = [j[0] for j in jobs]
    ells = [j[1] for j in jobs]
    bad = [b for part in mapper(_dual_pieri_instance, [k] * len(jobs), lams, ells) for b in part]
    return {
        "check": "dual-pieri",
        "k": k,
        "max_degree": max_degree,
        "checked": len(jobs),
        "counterexamples": bad,
    }


def _kostka_spin_instance(n: int) -> list[dict]:
    bad = []
    ones = (1,) * n
    for lam in partitions(n):
        spin = spin_generating_function(n, lam, n)
        kf = kostka_foulkes(lam, ones)
        if spin != kf:
            bad.append({"n": n, "lambda": list(lam), "spin": spin.to_json(), "kostka_foulkes": kf.to_json()})
    return bad


def kostka_spin(n: int, mapper=map) -> dict:
    """Spin generating functions of standard ABCs at k = n against Kostka-Foulkes polynomials."""
    ns = list(range(1, n + 1))
    bad = [b for part in mapper(_kostka_spin_instance, ns) for b in part]
    return {"check": "kostka-spin", "n": n, "checked": len(ns), "counterexamples": bad}


def weak_strong(k: int, max_degree: int, mapper=map) -> dict:
    return check_weak_strong_equivalence(k, max_degree, mapper).to_json()
