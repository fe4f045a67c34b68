"""Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

Solves ``min c.x  s.t.  A x = b, x >= 0``.  Everything is Fraction, so there
are no tolerances; Bland's rule guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[list[Fraction]] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        inv = 1 / row[c]
        if inv != 1:
            self.rows[r] = row = [x * inv for x in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                self.rows[i] = [x - f * y for x, y in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        n = len(cost)
        red = list(cost)
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.rows[i]
                for j in range(n):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> str:
        while True:
            red = self.reduced_costs(cost)
            # Bland: smallest index with negative reduced cost enters
            enter = next((j for j, v in enumerate(red) if v < 0 and allowed[j]), None)
            if enter is None:
                return OPTIMAL
            best = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self.pivot(leave, enter)


def solve_lp(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Minimize ``c.x`` subject to ``A_eq x = b_eq``, ``x >= 0``."""
    m = len(A_eq)
    n = len(c)
    A = [[Fraction(x) for x in r] for r in A_eq]
    b = [Fraction(x) for x in b_eq]
    if any(len(r) != n for r in A):
        raise ValueError("constraint matrix width does not match the cost vector")
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase 1 with one artificial per row
    rows = [A[i] + [Fraction(int(i == k)) for k in range(m)] for i in range(m)]
    tab = _Tableau(rows, list(b), [n + i for i in range(m)])
    phase1_cost = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1_cost, [True] * (n + m))
    if sum((tab.rhs[i] for i, bv in enumerate(tab.basis) if bv >= n), Fraction(0)) > 0:
        return LPResult(INFEASIBLE)
    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1
    tab.rows = [r[:n] for r in tab.rows]
    cost = [Fraction(x) for x in c]
    status = tab.run(cost, [True] * n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        x[bv] = tab.rhs[i]
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, x, None)
    return LPResult(OPTIMAL, x, sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)))


def feasible_point(A_eq: Sequence[Sequence], b_eq: Sequence) -> Optional[list[Fraction]]:
    """Some ``x >= 0`` with ``A_eq x = b_eq``, or None."""
    n = len(A_eq[0]) if A_eq else 0
    res = solve_lp([0] * n, A_eq, b_eq)
    return res.x if res.feasible else None


def in_conic_hull(point: Sequence, generators: Sequence[Sequence]) -> bool:
    """Is ``point`` a nonnegative combination of ``generators``?"""
    point = [Fraction(x) for x in point]
    if not generators:
        return all(x == 0 for x in point)
    d = len(point)
    A = [[Fraction(g[k]) for g in generators] for k in range(d)]
    return feasible_point(A, point) is not None
