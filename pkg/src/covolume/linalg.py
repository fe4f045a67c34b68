"""Dense matrices of rationals and the exact elimination routines built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise MatrixError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int) -> "RationalMatrix":
        return cls.from_rows([[0] * m for _ in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows))) if self.rows else self

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.ncols != other.nrows:
                raise MatrixError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.transpose().rows
            return RationalMatrix(tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
                                        for r in self.rows))
        vec = [Fraction(x) for x in other]
        if len(vec) != self.ncols:
            raise MatrixError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(tuple(tuple(c * x for x in r) for r in self.rows))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def to_json_obj(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json_obj(cls, obj) -> "RationalMatrix":
        return cls.from_rows([[Fraction(str(x)) for x in r] for r in obj])

    def det(self) -> Fraction:
        return det(self.rows)

    def rank(self) -> int:
        return rank(self.rows)

    def inverse(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(inverse(self.rows))


def det(M: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise MatrixError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    # clear denominators row by row so Bareiss runs on integers
    scale = Fraction(1)
    a = []
    for r in M:
        r = [Fraction(x) for x in r]
        lcm = 1
        for x in r:
            d = x.denominator
            lcm = lcm * d // _gcd(lcm, d)
        a.append([int(x * lcm) for x in r])
        scale /= lcm
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def row_echelon(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in r] for r in M]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank(M: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination on integer-scaled rows."""
    rows = []
    for r in M:
        r = [Fraction(x) for x in r]
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        rows.append([int(x * lcm) for x in r])
    if not rows:
        return 0
    nc = len(rows[0])
    rk = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, len(rows)):
            f = rows[i][c]
            rows[i] = [(x * piv - f * y) // prev for x, y in zip(rows[i], rows[rk])]
        prev = piv
        rk += 1
        if rk == len(rows):
            break
    return rk


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    if any(len(r) != n for r in M):
        raise MatrixError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    red, piv = row_echelon(aug)
    if piv[:n] != list(range(n)):
        raise MatrixError("singular matrix")
    return [r[n:] for r in red]


def solve(M: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a nonsingular square system."""
    n = len(M)
    aug = [[Fraction(x) for x in r] + [Fraction(bi)] for r, bi in zip(M, b)]
    red, piv = row_echelon(aug)
    if piv != list(range(n)):
        raise MatrixError("singular system")
    return [r[n] for r in red]
