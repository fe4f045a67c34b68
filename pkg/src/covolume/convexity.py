"""Discrete convexity: log-concave sequences and M-convex supports."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .ratpoly import Polynomial, is_homogeneous, total_degree


def internal_zero(values: Sequence) -> Optional[int]:
    """Index of a zero strictly between two nonzero entries, if any."""
    nz = [i for i, x in enumerate(values) if x != 0]
    if not nz:
        return None
    for i in range(nz[0], nz[-1] + 1):
        if values[i] == 0:
            return i
    return None


def log_concavity_violation(values: Sequence) -> Optional[tuple[str, int]]:
    """First reason ``values`` fails to be log-concave with no internal zeros."""
    for i, x in enumerate(values):
        if x < 0:
            return ("negative", i)
    z = internal_zero(values)
    if z is not None:
        return ("internal_zero", z)
    for i in range(1, len(values) - 1):
        if values[i] * values[i] < values[i - 1] * values[i + 1]:
            return ("log_concavity", i)
    return None


def is_log_concave_no_internal_zeros(values: Sequence) -> bool:
    return log_concavity_violation(values) is None


def is_ultra_log_concave(values: Sequence) -> bool:
    n = len(values) - 1
    return is_log_concave_no_internal_zeros(
        [Fraction(x) / math.comb(n, i) for i, x in enumerate(values)]
    )


def coefficient_sequence_bivariate(f: Polynomial) -> list[Fraction]:
    """Coefficient list of a binary form (ascending in the second variable) or a univariate polynomial.

    Binary forms list all ``d + 1`` coefficients ``a_{d0}, ..., a_{0d}``;
    univariate polynomials list ascending coefficients from degree 0.
    """
    if f.num_vars == 1:
        d = total_degree(f)
        return [f.coefficient((k,)) for k in range(d + 1)]
    if f.num_vars != 2 or not is_homogeneous(f):
        raise ValueError("expected a homogeneous polynomial in 2 variables or a univariate polynomial")
    d = total_degree(f)
    if d < 0:
        return []
    return [f.coefficient((d - j, j)) for j in range(d + 1)]


def _exchange_witness(points: set, pts: list) -> Optional[tuple[tuple, tuple, int]]:
    n = len(pts[0])
    for a in pts:
        for b in pts:
            if a == b:
                continue
            for i in range(n):
                if a[i] <= b[i]:
                    continue
                ok = False
                for j in range(n):
                    if a[j] < b[j]:
                        a2 = list(a)
                        a2[i] -= 1
                        a2[j] += 1
                        b2 = list(b)
                        b2[j] -= 1
                        b2[i] += 1
                        if tuple(a2) in points and tuple(b2) in points:
                            ok = True
                            break
                if not ok:
                    return (a, b, i)
    return None


def m_convexity_witness(S: Iterable[Sequence[int]]) -> Optional[tuple]:
    """A pair ``(alpha, beta, i)`` violating the symmetric exchange property, or None.

    Points of unequal coordinate sum yield ``(alpha, beta, None)``.
    """
    pts = sorted({tuple(p) for p in S}, key=lambda e: (-sum(e), tuple(-x for x in e)))
    if len(pts) <= 1:
        return None
    if len({len(p) for p in pts}) != 1:
        raise ValueError("points of different lengths")
    sums = {sum(p) for p in pts}
    if len(sums) != 1:
        a = pts[0]
        b = next(p for p in pts if sum(p) != sum(a))
        return (a, b, None)
    return _exchange_witness(set(pts), pts)


def is_m_convex(S: Iterable[Sequence[int]]) -> bool:
    return m_convexity_witness(S) is None
