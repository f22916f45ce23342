"""Univariate polynomials in t with integer coefficients."""

from __future__ import annotations

from collections import Counter
from typing import Iterable


class TPoly:
    """Immutable polynomial ``sum(coeffs[d] * t**d)``; trailing zeros are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "TPoly":
        return cls((0,) * d + (c,))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "TPoly":
        """Sum of ``t**e`` over ``exps``."""
        counts = Counter(exps)
        if not counts:
            return cls()
        return cls(counts.get(d, 0) for d in range(max(counts) + 1))

    @staticmethod
    def coerce(x) -> "TPoly":
        return x if isinstance(x, TPoly) else TPoly.const(x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = TPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return TPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        other = TPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def reversed(self, top: int) -> "TPoly":
        """``t**top * p(1/t)``; ``top`` must be at least the degree."""
        if self.coeffs and top < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} within {top}")
        return TPoly(reversed(self.coeffs + (0,) * (top + 1 - len(self.coeffs))))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]
