"""Floating-point quadrature oracle for ``1 - zeta`` of a monomial ideal.

This is the only module doing float arithmetic; nothing in the exact core
imports it.  The integrand ``l! t_1...t_l / (1 + t.a)^(l+1)`` over the
orthant is a probability density, realised by ``a_j = E_j / (t_j E_0)`` with
``E_0, ..., E_l`` independent unit exponentials.  So ``1 - zeta(t)`` is the
probability that ``(1, a)`` lies in the monomial cone, and the estimate is
the hit fraction over a scrambled Sobol point set.  Membership of each
sample is decided by the exact LP after cheap dominance filters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.stats import qmc

from .lp import in_conic_hull


def _samples(t: np.ndarray, n: int, seed: int) -> np.ndarray:
    l = len(t)
    u = qmc.Sobol(d=l + 1, scramble=True, seed=seed).random(n)
    u = np.clip(u, 0.0, 1.0 - 1e-16)
    e = -np.log1p(-u)
    e[:, 0] = np.maximum(e[:, 0], 1e-300)
    return e[:, 1:] / (t[None, :] * e[:, :1])


def membership(a: np.ndarray, F: np.ndarray, generators: list) -> np.ndarray:
    """Boolean mask of rows ``a`` lying in conv(F) + orthant."""
    inside = np.zeros(len(a), dtype=bool)
    for v in F:
        inside |= np.all(a >= v, axis=1)
    outside = np.any(a < F.min(axis=0), axis=1) | (a.sum(axis=1) < F.sum(axis=1).min())
    for i in np.flatnonzero(~inside & ~outside):
        point = [Fraction(1)] + [Fraction(float(x)) for x in a[i]]
        inside[i] = in_conic_hull(point, generators)
    return inside


def integral_estimate(spec, t_point: Sequence, samples: int = 1 << 14, seed: int = 0) -> float:
    l = spec.num_factors
    t = np.array([float(Fraction(x)) for x in t_point])
    if t.shape != (l,) or np.any(t <= 0):
        raise ValueError("t_point must have num_factors positive entries")
    F = np.array(spec.exponents, dtype=float)
    gens = [(1,) + tuple(v) for v in spec.exponents]
    gens += [tuple(int(i == j) for i in range(l + 1)) for j in range(1, l + 1)]
    a = _samples(t, samples, seed)
    return float(membership(a, F, gens).mean())
