"""Symmetric functions in the monomial basis with coefficients in Z[t].

Covers complete homogeneous, Schur, Hall-Littlewood (cocharge convention),
k-Schur and dual k-Schur functions, plus the Pieri checks and the
Hall-Littlewood to k-Schur transition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .abcs import abc_count, abc_counts, spin_k, standard_abcs
from .corelab import (
    Partition,
    core_to_bounded,
    cores_of_degree,
    degree,
    is_core,
    make_partition,
    partitions,
)
from .linalg import InconsistentSystem, invert_unitriangular, solve, solve_integer
from .poset import bottom_strong_set, strong_strips_from, weak_strip_set
from .tableaux import count_k_tableaux, enumerate_cst, kostka_foulkes
from .tpoly import TPoly


@dataclass
class SymFunc:
    """Homogeneous symmetric function ``sum(terms[mu] * m_mu)``.

    With ``k`` set, the function lives in the quotient by the ideal spanned
    by ``m_mu`` with ``mu_1 > k`` and such terms are dropped.
    """

    degree: int
    terms: dict[Partition, TPoly] = field(default_factory=dict)
    k: int | None = None

    def __post_init__(self):
        clean = {}
        for mu, c in self.terms.items():
            mu = make_partition(mu)
            c = TPoly.coerce(c)
            if sum(mu) != self.degree:
                raise ValueError(f"m_{mu} does not have degree {self.degree}")
            if self.k is not None and mu and mu[0] > self.k:
                continue
            if c:
                clean[mu] = c
        self.terms = dict(sorted(clean.items(), reverse=True))

    def coeff(self, mu) -> TPoly:
        return self.terms.get(tuple(mu), TPoly())

    def truncate(self, k: int) -> "SymFunc":
        return SymFunc(self.degree, self.terms, k)

    def _check(self, other: "SymFunc"):
        if other.degree != self.degree:
            raise ValueError("degrees differ")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check(other)
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            terms[mu] = terms.get(mu, TPoly()) + c
        return SymFunc(self.degree, terms, _meet(self.k, other.k))

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = TPoly.coerce(c)
        return SymFunc(self.degree, {mu: c * v for mu, v in self.terms.items()}, self.k)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.k == other.k
            and self.terms == other.terms
        )

    def at(self, t: int) -> "SymFunc":
        return SymFunc(self.degree, {mu: c(t) for mu, c in self.terms.items()}, self.k)

    def mul_h(self, ell: int) -> "SymFunc":
        """Product with ``h_ell``.

        The coefficient of ``x^nu`` in ``h_ell * f`` sums ``[x^beta] f`` over
        ``beta <= nu`` with ``|nu| - |beta| = ell``.
        """
        n = self.degree + ell
        out = {}
        for nu in partitions(n, self.k):
            acc = TPoly()
            for beta, mult in _h_mul_table(nu, ell).items():
                c = self.terms.get(beta)
                if c:
                    acc = acc + c * mult
            if acc:
                out[nu] = acc
        return SymFunc(n, out, self.k)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "k": self.k,
            "terms": [{"m": list(mu), "coeff": c.to_json()} for mu, c in self.terms.items()],
        }


def _meet(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@lru_cache(maxsize=None)
def _h_mul_table(nu: Partition, ell: int) -> Counter:
    table: Counter = Counter()

    def rec(i, left, acc):
        if i == len(nu):
            if left == 0:
                table[make_partition(sorted(acc, reverse=True))] += 1
            return
        for take in range(0, min(left, nu[i]) + 1):
            acc.append(nu[i] - take)
            rec(i + 1, left - take, acc)
            acc.pop()

    rec(0, ell, [])
    return table


def one(k: int | None = None) -> SymFunc:
    return SymFunc(0, {(): 1}, k)


@lru_cache(maxsize=None)
def h_expand(mu: Partition) -> SymFunc:
    f = one()
    for part in make_partition(mu):
        f = f.mul_h(part)
    return f


@lru_cache(maxsize=None)
def schur_expand(lam: Partition) -> SymFunc:
    lam = make_partition(lam)
    n = sum(lam)
    return SymFunc(n, {mu: len(enumerate_cst(lam, mu)) for mu in partitions(n)})


@lru_cache(maxsize=None)
def dual_kschur_expand(k: int, lam: Partition, via: str = "ktableaux") -> SymFunc:
    """Dual k-Schur function in the truncated monomial basis.

    ``via="ktableaux"`` counts k-tableaux; ``via="abc"`` counts ABCs.
    """
    lam = make_partition(lam)
    if not is_core(lam, k):
        raise ValueError(f"{lam} is not a {k + 1}-core")
    n = degree(lam, k)
    if via == "ktableaux":
        terms = {mu: count_k_tableaux(lam, mu, k) for mu in partitions(n, k)}
    elif via == "abc":
        terms = {mu: abc_count(k, lam, mu) for mu in partitions(n, k)}
    else:
        raise ValueError(f"unknown construction {via!r}")
    return SymFunc(n, terms, k)


@dataclass
class KSchurBasis:
    """k-Schur functions of one degree, obtained by inverting ``h = K^T s``.

    ``matrix[i][j]`` counts ABCs of inner shape ``index[i]`` and k-weight
    ``weights[j]``; both lists are ordered most dominant first.
    """

    k: int
    n: int
    index: tuple[Partition, ...]
    weights: tuple[Partition, ...]
    matrix: list[list[int]]

    @cached_property
    def inverse(self) -> list[list[int]]:
        return invert_unitriangular(self.matrix)

    @cached_property
    def h_expansions(self) -> dict[Partition, dict[Partition, int]]:
        """``s^(k)_nu = sum_mu c_mu h_mu`` for every core ``nu``."""
        inv = self.inverse
        out = {}
        for i, nu in enumerate(self.index):
            out[nu] = {
                mu: inv[j][i] for j, mu in enumerate(self.weights) if inv[j][i]
            }
        return out

    @cached_property
    def m_expansions(self) -> dict[Partition, SymFunc]:
        out = {}
        for nu, combo in self.h_expansions.items():
            f = SymFunc(self.n)
            for mu, c in combo.items():
                f = f + h_expand(mu).scale(c)
            out[nu] = f
        return out

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "degree": self.n,
            "index": [list(p) for p in self.index],
            "weights": [list(p) for p in self.weights],
            "matrix": [[TPoly.const(x).to_json() for x in row] for row in self.matrix],
        }


@lru_cache(maxsize=None)
def kschur_expand(k: int, n: int) -> KSchurBasis:
    index = cores_of_degree(n, k)
    weights = tuple(partitions(n, k))
    matrix = [[abc_count(k, nu, mu) for mu in weights] for nu in index]
    for i in range(len(index)):
        if core_to_bounded(index[i], k) != weights[i]:
            raise AssertionError("index order out of step with weights")
        if matrix[i][i] != 1 or any(matrix[i][j] for j in range(i)):
            raise AssertionError(
                f"k={k}, n={n}: h-to-kSchur matrix is not unitriangular at row {i}"
            )
    return KSchurBasis(k, n, index, weights, matrix)


def kschur(k: int, nu: Partition) -> SymFunc:
    nu = make_partition(nu)
    return kschur_expand(k, degree(nu, k)).m_expansions[nu]


def _coeff_columns(f: SymFunc, rows: list[Partition]) -> list[list[int]]:
    width = max([len(c.coeffs) for c in f.terms.values()] + [1])
    return [
        list(f.coeff(mu).coeffs) + [0] * (width - len(f.coeff(mu).coeffs)) for mu in rows
    ]


def h_coefficients(f: SymFunc) -> dict[Partition, TPoly]:
    """Coefficients of ``f`` in the complete homogeneous basis."""
    if f.k is not None:
        raise ValueError("needs an untruncated symmetric function")
    rows = list(partitions(f.degree))
    a = [[h_expand(mu).coeff(lam)(0) for mu in rows] for lam in rows]
    x = solve_integer(a, _coeff_columns(f, rows))
    return {mu: TPoly(x[j]) for j, mu in enumerate(rows) if any(x[j])}


def kschur_coefficients(k: int, f: SymFunc, strict: bool = True) -> dict[Partition, TPoly]:
    """Expand ``f`` in the k-Schur basis of its degree.

    With ``strict`` the expansion must be exact and ``f`` must lie in the
    span of the k-Schur functions.  Otherwise each coefficient is the Hall
    pairing of ``f`` with the matching dual k-Schur function, which agrees
    with the exact expansion whenever one exists.
    """
    basis = kschur_expand(k, f.degree)
    if strict:
        rows = list(partitions(f.degree))
        a = [[basis.m_expansions[nu].coeff(lam)(0) for nu in basis.index] for lam in rows]
        try:
            x = solve_integer(a, _coeff_columns(f, rows))
        except InconsistentSystem:
            raise ValueError("HL not in k-Schur span") from None
        return {nu: TPoly(x[i]) for i, nu in enumerate(basis.index) if any(x[i])}
    hc = h_coefficients(f)
    out = {}
    for i, nu in enumerate(basis.index):
        acc = TPoly()
        for j, mu in enumerate(basis.weights):
            if basis.matrix[i][j] and mu in hc:
                acc = acc + hc[mu] * basis.matrix[i][j]
        if acc:
            out[nu] = acc
    return out


def in_kschur_span(k: int, f: SymFunc) -> bool:
    try:
        kschur_coefficients(k, f, strict=True)
    except ValueError:
        return False
    return True


def weak_pieri_product(k: int, lam: Partition, ell: int) -> dict[Partition, int]:
    """``h_ell * s^(k)_lam`` as a multiplicity-one sum of cores.

    Computed from weak strips and from bottom strong strips; they must agree.
    """
    lam = make_partition(lam)
    weak = weak_strip_set(lam, ell, k)
    strong = bottom_strong_set(lam, ell, k)
    if weak != strong:
        raise AssertionError(f"weak and bottom strong Pieri sets differ at {lam}, {ell}")
    if not weak:
        raise AssertionError("empty Pieri product")
    return {nu: 1 for nu in weak}


def pieri_by_expansion(k: int, lam: Partition, ell: int) -> dict[Partition, int]:
    """``h_ell * s^(k)_lam`` by multiplying monomial expansions and re-expanding."""
    product = kschur(k, lam).mul_h(ell)
    return {nu: c(0) for nu, c in kschur_coefficients(k, product).items()}


def strong_pieri_coefficients(k: int, lam: Partition, ell: int) -> dict[Partition, int]:
    """Number of strong ``ell``-strips from ``lam`` to each endpoint."""
    d: Counter = Counter(s.chain[-1] for s in strong_strips_from(tuple(lam), ell, k))
    return dict(sorted(d.items()))


def dual_strong_pieri_check(k: int, lam: Partition, ell: int, via: str = "ktableaux") -> dict:
    """Compare ``h_ell * S_lam`` with ``sum_gamma d_gamma S_gamma`` in the quotient."""
    lam = make_partition(lam)
    left = dual_kschur_expand(k, lam, via).mul_h(ell)
    d = strong_pieri_coefficients(k, lam, ell)
    right = SymFunc(left.degree, {}, k)
    for gam, mult in d.items():
        right = right + dual_kschur_expand(k, gam, via).scale(mult)
    diff = left - right
    return {
        "lambda": list(lam),
        "ell": ell,
        "d": [{"gamma": list(g), "count": c} for g, c in d.items()],
        "equal": not diff.terms,
        "mismatches": [{"m": list(mu), "diff": c.to_json()} for mu, c in diff.terms.items()],
    }


@lru_cache(maxsize=None)
def hall_littlewood_expand(mu: Partition) -> SymFunc:
    """``H_mu[X; 0, t] = sum_lam K_{lam,mu}(t) s_lam`` with cocharge Kostka-Foulkes polynomials."""
    mu = make_partition(mu)
    n = sum(mu)
    f = SymFunc(n)
    for lam in partitions(n):
        kf = kostka_foulkes(lam, mu)
        if kf:
            f = f + schur_expand(lam).scale(kf)
    return f


def schur_coefficients(f: SymFunc) -> dict[Partition, TPoly]:
    """Expansion in the Schur basis (k-Schur at k >= degree)."""
    return kschur_coefficients(max(f.degree, 1), f)


def hl_in_kschur(k: int, mu: Partition, strict: bool = True) -> dict[Partition, TPoly]:
    return kschur_coefficients(k, hall_littlewood_expand(make_partition(mu)), strict)


def conjecture_explorer(k: int, n: int, normalization: str = "both") -> dict:
    """Compare k-Schur coefficients of ``H_{1^n}`` with spin generating functions of ABCs.

    The polynomial comparison is informational; the t = 1 counts must agree.
    """
    if normalization not in ("identity", "reversed", "both"):
        raise ValueError(f"unknown normalization {normalization!r}")
    hl = hall_littlewood_expand((1,) * n)
    exact = in_kschur_span(k, hl)
    coeffs = kschur_coefficients(k, hl, strict=False)
    spins: dict[Partition, list[int]] = {}
    for a in standard_abcs(k, n):
        spins.setdefault(a.inner, []).append(spin_k(a).total)
    top = max((s for v in spins.values() for s in v), default=0)
    counts = abc_counts(k, (1,) * n) if n else {(): 1}
    rows = []
    for lam in cores_of_degree(n, k):
        c = coeffs.get(lam, TPoly())
        g = TPoly.from_exponents(spins.get(lam, []))
        row = {
            "core": list(lam),
            "hl_coeff": c.to_json(),
            "spin_gf": g.to_json(),
            "count_match": c.eval_at_one() == counts.get(lam, 0) == g.eval_at_one(),
        }
        if normalization in ("identity", "both"):
            row["identity_match"] = c == g
        if normalization in ("reversed", "both"):
            row["reversed_match"] = c == g.reversed(top)
        rows.append(row)
    return {
        "k": k,
        "n": n,
        "hl_in_span": exact,
        "max_spin": top,
        "counts_ok": all(r["count_match"] for r in rows),
        "rows": rows,
    }


def format_expansion(coeffs: Mapping[Partition, TPoly], name: str = "s") -> str:
    parts = []
    for lam, c in coeffs.items():
        label = f"{name}{list(lam)}"
        parts.append(label if c == 1 else f"({c}) {label}")
    return " + ".join(parts) if parts else "0"


def expansion_json(coeffs: Mapping[Partition, TPoly]) -> list[dict]:
    return [{"index": list(lam), "coeff": c.to_json()} for lam, c in coeffs.items()]


def hl_terms(mu: Iterable[int]) -> dict[Partition, TPoly]:
    """Schur expansion of ``H_mu`` read off the Kostka-Foulkes polynomials."""
    mu = make_partition(mu)
    return {
        lam: kostka_foulkes(lam, mu)
        for lam in partitions(sum(mu))
        if kostka_foulkes(lam, mu)
    }
