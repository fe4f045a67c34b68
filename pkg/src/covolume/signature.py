"""Exact inertia of symmetric rational matrices.

The primary path reads eigenvalue sign counts off the characteristic
polynomial: a symmetric matrix has only real eigenvalues, so Descartes' rule
of signs is exact.  A congruence diagonalization is kept alongside as an
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import MatrixError, RationalMatrix
from .ratpoly import Polynomial, is_homogeneous, partial_derivative, total_degree


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    @property
    def rank(self) -> int:
        return self.n_pos + self.n_neg

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_pos, self.n_neg, self.n_zero)


def _rows(H) -> list[list[Fraction]]:
    rows = H.rows if isinstance(H, RationalMatrix) else H
    return [[Fraction(x) for x in r] for r in rows]


def _check_symmetric(a: list[list[Fraction]]) -> None:
    n = len(a)
    if any(len(r) != n for r in a):
        raise MatrixError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise MatrixError(f"matrix is not symmetric at ({i}, {j})")


def hessian_of_quadratic(f: Polynomial) -> RationalMatrix:
    """Constant Hessian of a quadratic form."""
    n = f.num_vars
    if f.is_zero():
        return RationalMatrix.zeros(n, n)
    if not (is_homogeneous(f) and total_degree(f) == 2):
        raise ValueError("Hessian requested for a polynomial that is not a quadratic form")
    H = [[Fraction(0)] * n for _ in range(n)]
    for e, c in f.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            H[i][i] += 2 * c
        else:
            H[i][j] += c
            H[j][i] += c
    return RationalMatrix.from_rows(H)


def hessian_at_derivative(f: Polynomial, alpha: Sequence[int]) -> RationalMatrix:
    return hessian_of_quadratic(partial_derivative(f, alpha))


def charpoly(H) -> list[Fraction]:
    """Coefficients ``[c_0, ..., c_n]`` of det(x I - H), ascending, by Faddeev-LeVerrier."""
    a = _rows(H)
    n = len(a)
    if any(len(r) != n for r in a):
        raise MatrixError("matrix is not square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    M = [[Fraction(0)] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        # M <- A*M + c_prev*I
        AM = [[sum((a[i][l] * M[l][j] for l in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c_prev
        M = AM
        trace = sum((sum((a[i][l] * M[l][i] for l in range(n)), Fraction(0)) for i in range(n)), Fraction(0))
        c_prev = -trace / k
        coeffs[n - k] = c_prev
    return coeffs


def _sign_changes(seq: Sequence[Fraction]) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def inertia(H) -> Inertia:
    """Eigenvalue sign counts via exact characteristic polynomial and Descartes' rule."""
    a = _rows(H)
    _check_symmetric(a)
    n = len(a)
    if n == 0:
        return Inertia(0, 0, 0)
    c = charpoly(a)
    n_zero = next(i for i, x in enumerate(c) if x != 0)
    rest = c[n_zero:]
    n_pos = _sign_changes(rest)
    n_neg = _sign_changes([x if i % 2 == 0 else -x for i, x in enumerate(rest)])
    if n_pos + n_neg + n_zero != n:
        raise AssertionError("sign counts do not add up; matrix not real-rooted?")
    return Inertia(n_pos, n_neg, n_zero)


def inertia_congruence(H) -> Inertia:
    """Eigenvalue sign counts by symmetric Gaussian elimination (Sylvester's law)."""
    a = _rows(H)
    _check_symmetric(a)
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            # row_i += row_j, col_i += col_j: new a_ii = 2 a_ij != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = Fraction(0)
    return Inertia(pos, neg, n - pos - neg)
