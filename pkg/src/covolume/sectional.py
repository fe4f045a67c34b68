"""Falsifier for sectional log-concavity.

A polynomial is sectional log-concave when every restriction along a
nonnegative two-column matrix is log-concave (or zero).  That is a statement
about uncountably many matrices, so this module only searches for
counterexamples: a structured battery of small 0/1 matrices and their row
dilations, followed by seeded random rational matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Optional

from .convexity import coefficient_sequence_bivariate, is_log_concave_no_internal_zeros
from .linalg import RationalMatrix
from .ratpoly import Polynomial, is_homogeneous, substitute, substitute_matrix

COUNTEREXAMPLE = "CounterexampleFound"
NO_COUNTEREXAMPLE = "NoCounterexampleFound"


@dataclass(frozen=True)
class SectionalVerdict:
    status: str
    trials_run: int
    seed: int
    counterexample: Optional[RationalMatrix] = None
    restricted: Optional[Polynomial] = None

    def __post_init__(self):
        found = self.status == COUNTEREXAMPLE
        if found != (self.counterexample is not None) or found != (self.restricted is not None):
            raise ValueError("counterexample data must accompany CounterexampleFound only")

    @property
    def found(self) -> bool:
        return self.status == COUNTEREXAMPLE

    def to_json_obj(self) -> dict:
        from .ratpoly import to_json_obj
        return {
            "status": self.status,
            "trials_run": self.trials_run,
            "seed": self.seed,
            "counterexample": self.counterexample.to_json_obj() if self.counterexample else None,
            "restricted": to_json_obj(self.restricted) if self.restricted is not None else None,
        }


def _as_matrix(A) -> RationalMatrix:
    return A if isinstance(A, RationalMatrix) else RationalMatrix.from_rows(A)


def restrict_pair(f: Polynomial, A, homogeneous: bool) -> Polynomial:
    """Binary form f(A (u, v)^T), or univariate f(A (1, v)^T) in non-homogeneous mode."""
    A = _as_matrix(A)
    if A.shape != (f.num_vars, 2):
        raise ValueError(f"matrix shape {A.shape} does not match ({f.num_vars}, 2)")
    if any(x < 0 for r in A.rows for x in r):
        raise ValueError("restriction matrix must be nonnegative")
    if homogeneous:
        return substitute_matrix(f, A)
    images = [Polynomial(1, {(0,): a0, (1,): a1}) for a0, a1 in A.rows]
    return substitute(f, images, 1)


def restriction_sequence(g: Polynomial) -> list[Fraction]:
    if g.is_zero():
        return []
    return coefficient_sequence_bivariate(g)


def restriction_ok(g: Polynomial) -> bool:
    return g.is_zero() or is_log_concave_no_internal_zeros(restriction_sequence(g))


def structured_battery(num_rows: int, homogeneous: bool, max_factor: int = 4) -> Iterator[RationalMatrix]:
    """0/1 column pairs with at most two ones per column, then every single-row dilation by k or 1/k."""
    cols = [tuple(1 if i in s else 0 for i in range(num_rows))
            for k in (0, 1, 2) for s in combinations(range(num_rows), k)]
    if homogeneous:
        cols = [c for c in cols if any(c)]
        pairs = list(combinations(cols, 2))
    else:
        pairs = [(a, b) for a, b in product(cols, cols) if any(b)]
    bases = [RationalMatrix.from_rows([[a[i], b[i]] for i in range(num_rows)]) for a, b in pairs]
    yield from bases
    factors = [Fraction(k) for k in range(2, max_factor + 1)]
    factors += [1 / k for k in factors]
    for k in factors:
        for M in bases:
            for i in range(num_rows):
                if any(M.rows[i]):
                    rows = [list(r) for r in M.rows]
                    rows[i] = [k * x for x in rows[i]]
                    yield RationalMatrix.from_rows(rows)


def random_matrix(rng: random.Random, num_rows: int, max_entry: int) -> RationalMatrix:
    def entry():
        q = rng.randint(1, max_entry)
        return Fraction(rng.randint(0, max_entry * q), q)
    return RationalMatrix.from_rows([[entry(), entry()] for _ in range(num_rows)])


def test_sectional(f: Polynomial, trials: int = 200, seed: int = 0, max_entry: int = 4) -> SectionalVerdict:
    """Search for a nonnegative matrix whose restriction of ``f`` is not log-concave."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if f.is_zero():
        return SectionalVerdict(NO_COUNTEREXAMPLE, 0, seed)
    homogeneous = is_homogeneous(f)
    count = 0
    for A in structured_battery(f.num_vars, homogeneous, max(4, max_entry)):
        count += 1
        g = restrict_pair(f, A, homogeneous)
        if not restriction_ok(g):
            return SectionalVerdict(COUNTEREXAMPLE, count, seed, A, g)
    rng = random.Random(seed)
    for _ in range(trials):
        A = random_matrix(rng, f.num_vars, max_entry)
        count += 1
        g = restrict_pair(f, A, homogeneous)
        if not restriction_ok(g):
            return SectionalVerdict(COUNTEREXAMPLE, count, seed, A, g)
    return SectionalVerdict(NO_COUNTEREXAMPLE, count, seed)


# keep pytest from collecting the library function when imported into test modules
test_sectional.__test__ = False
