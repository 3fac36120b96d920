"""Exact two-phase revised simplex over the rationals with Bland's rule.

Solves ``min c.x  s.t.  A x = b, x >= 0`` for an integer matrix ``A``, integer
costs ``c`` and a rational right-hand side ``b``.  The basis inverse is kept as
exact fractions; pricing clears denominators so that the scan over the (few
hundred) columns runs on Python integers.  Bland's rule makes the pivot
sequence deterministic and guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, A: list[list[int]], b: list[Fraction]):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.cols = [tuple(A[i][j] for i in range(self.m)) for j in range(self.n)]
        # artificial j = n + i is the unit column e_i
        self.basis = [self.n + i for i in range(self.m)]
        self.binv = [[Fraction(int(i == j)) for j in range(self.m)] for i in range(self.m)]
        self.xb = list(b)

    def column(self, j: int) -> Sequence[int]:
        if j < self.n:
            return self.cols[j]
        e = [0] * self.m
        e[j - self.n] = 1
        return e

    def direction(self, j: int) -> list[Fraction]:
        col = self.column(j)
        return [sum((row[k] * col[k] for k in range(self.m) if col[k]), Fraction(0)) for row in self.binv]

    def pivot(self, r: int, j: int, u: list[Fraction]) -> None:
        piv = u[r]
        self.binv[r] = [v / piv for v in self.binv[r]]
        self.xb[r] = self.xb[r] / piv
        for i in range(self.m):
            if i != r and u[i] != 0:
                f = u[i]
                self.binv[i] = [v - f * w for v, w in zip(self.binv[i], self.binv[r])]
                self.xb[i] = self.xb[i] - f * self.xb[r]
        self.basis[r] = j

    def run(self, cost, allowed: int) -> str:
        """``cost(j)`` gives integer costs; only columns ``< allowed`` may enter."""
        m = self.m
        while True:
            cb = [cost(j) for j in self.basis]
            y = [sum((cb[i] * self.binv[i][k] for i in range(m) if cb[i]), Fraction(0)) for k in range(m)]
            den = lcm(*(v.denominator for v in y)) if m else 1
            Y = [int(v * den) for v in y]
            in_basis = set(self.basis)
            enter = None
            for j in range(allowed):
                if j in in_basis:
                    continue
                col = self.cols[j]
                if cost(j) * den - sum(Y[k] * col[k] for k in range(m)) < 0:
                    enter = j
                    break
            if enter is None:
                return OPTIMAL
            u = self.direction(enter)
            best = None
            for i in range(m):
                if u[i] > 0:
                    ratio = self.xb[i] / u[i]
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter, u)


def solve(A: Sequence[Sequence[int]], b: Sequence[Fraction | int],
          c: Sequence[int] | None = None) -> LPResult:
    m = len(A)
    n = len(A[0]) if m else len(c or ())
    c = list(c) if c is not None else [0] * n
    rows, rhs = [], []
    for i in range(m):
        row = [int(v) for v in A[i]]
        if any(row[j] != A[i][j] for j in range(n)):
            raise ValueError("constraint matrix must be integral")
        bi = Fraction(b[i])
        if bi < 0:
            row, bi = [-v for v in row], -bi
        rows.append(row)
        rhs.append(bi)
    if m == 0:
        return LPResult(OPTIMAL, [Fraction(0)] * n, Fraction(0))
    t = _Tableau(rows, rhs)

    t.run(lambda j: 1 if j >= n else 0, n)
    if any(t.basis[i] >= n and t.xb[i] != 0 for i in range(m)):
        return LPResult(INFEASIBLE)
    # move zero-level artificials out where possible; the rest sit on redundant rows
    for i in range(m):
        if t.basis[i] >= n:
            in_basis = set(t.basis)
            for j in range(n):
                if j in in_basis:
                    continue
                u = t.direction(j)
                if u[i] != 0:
                    t.pivot(i, j, u)
                    break

    status = t.run(lambda j: c[j] if j < n else 0, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, j in enumerate(t.basis):
        if j < n:
            x[j] = t.xb[i]
    return LPResult(OPTIMAL, x, sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0)))


def cone_combination(generators: Sequence[Sequence[int]],
                     target: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Nonnegative ``lambda`` with ``sum lambda_g g = target``, or ``None``."""
    if not generators:
        return [] if all(v == 0 for v in target) else None
    dim = len(target)
    A = [[g[i] for g in generators] for i in range(dim)]
    res = solve(A, target)
    return res.x if res.status == OPTIMAL else None
