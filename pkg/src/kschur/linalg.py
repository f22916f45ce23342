"""Exact linear algebra over the integers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class InconsistentSystem(ValueError):
    pass


def solve(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Solve ``a @ x = b`` exactly for ``x`` (one column of ``b`` per right-hand side).

    ``a`` may have more rows than columns but must have full column rank.
    Raises :class:`InconsistentSystem` when no exact solution exists.
    """
    rows, cols = len(a), len(a[0]) if a else 0
    nrhs = len(b[0]) if b else 0
    m = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            raise ValueError("matrix does not have full column rank")
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(r)
        r += 1
    for i in range(r, rows):
        if any(m[i][cols + j] != 0 for j in range(nrhs)):
            raise InconsistentSystem("system has no exact solution")
    return [[m[i][cols + j] for j in range(nrhs)] for i in range(cols)]


def solve_integer(a, b) -> list[list[int]]:
    x = solve(a, b)
    if any(v.denominator != 1 for row in x for v in row):
        raise InconsistentSystem("solution is not integral")
    return [[int(v) for v in row] for row in x]


def invert_unitriangular(u: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of an upper unitriangular integer matrix by back substitution."""
    n = len(u)
    for i in range(n):
        if u[i][i] != 1 or any(u[i][j] for j in range(i)):
            raise ValueError("matrix is not upper unitriangular")
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if u[i][j]:
                f = u[i][j]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[j])]
    return inv
