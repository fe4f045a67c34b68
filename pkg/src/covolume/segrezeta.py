"""Segre zeta functions of monomial ideals.

For a finite set ``F`` of exponent vectors, the numerator ``R`` of
``1 - zeta_I`` is obtained geometrically as the de-homogenized adjoint of the
cone spanned by ``(1, v)`` for ``v`` in ``F`` and the coordinate vectors
``e_1, ..., e_l``.  The numerator ``P`` of ``zeta_I`` then follows from
``P = Q - R`` with ``Q = prod_k (1 + v_k . t)``.  Structural facts about
``P`` (nonnegativity, trailing and leading terms) are checked afterwards
rather than used to build it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .convexity import is_log_concave_no_internal_zeros, m_convexity_witness
from .cone import Cone, adjoint, regular_triangulation
from .lorentz import LorentzVerdict, flip_normalize_is_lorentzian, is_lorentzian
from .ratpoly import (
    Polynomial,
    degrees,
    dehomogenize,
    diagonalize,
    homogenize,
    homogeneous_part,
    mul,
    normalize,
    support,
    to_json_obj,
    total_degree,
    trailing_degree,
    truncate,
    truncated_mul,
)


class SpecError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A structural identity that must hold for every monomial ideal failed."""


@dataclass(frozen=True)
class MonomialIdealSpec:
    num_factors: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_factors < 1:
            raise SpecError("num_factors must be positive")
        if not self.exponents:
            raise SpecError("at least one generator is required")
        for v in self.exponents:
            if len(v) != self.num_factors:
                raise SpecError(f"exponent {v} does not have length {self.num_factors}")
            if any(x < 0 for x in v):
                raise SpecError(f"negative exponent in {v}")
            if not any(v):
                raise SpecError("the zero exponent vector generates the unit ideal")
        if len(set(self.exponents)) != len(self.exponents):
            raise SpecError("duplicate generators")

    @classmethod
    def of(cls, exponents: Sequence[Sequence[int]], num_factors: Optional[int] = None) -> "MonomialIdealSpec":
        vecs = []
        for v in exponents:
            v = tuple(int(x) for x in v)
            if v not in vecs:
                vecs.append(v)
        n = num_factors if num_factors is not None else (len(vecs[0]) if vecs else 0)
        return cls(n, tuple(vecs))

    def to_json_obj(self) -> dict:
        return {"num_factors": self.num_factors, "exponents": [list(v) for v in self.exponents]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MonomialIdealSpec":
        try:
            return cls.of(obj["exponents"], int(obj["num_factors"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SpecError):
                raise
            raise SpecError(f"malformed monomial ideal JSON: {exc}") from exc

    def to_text(self) -> str:
        parts = []
        for v in self.exponents:
            mono = "*".join(f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(v) if k)
            parts.append(mono)
        return ", ".join(parts)


_MONO_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomials(text: str, num_factors: Optional[int] = None) -> MonomialIdealSpec:
    """Parse ``x1^a*x2^b, x3, ...`` (variables numbered from 1)."""
    gens = []
    top = 0
    for chunk in text.split(","):
        chunk = re.sub(r"\s+", "", chunk)
        if not chunk:
            continue
        powers = {}
        for factor in chunk.split("*"):
            m = _MONO_FACTOR.match(factor)
            if not m:
                raise SpecError(f"bad monomial factor {factor!r}")
            i = int(m.group(1))
            if i < 1:
                raise SpecError("monomial variables are numbered from x1")
            powers[i] = powers.get(i, 0) + int(m.group(2) or 1)
            top = max(top, i)
        gens.append(powers)
    n = num_factors if num_factors is not None else top
    if top > n:
        raise SpecError(f"variable x{top} exceeds num_factors={n}")
    return MonomialIdealSpec.of([[p.get(i + 1, 0) for i in range(n)] for p in gens], n)


def parse_spec(text: str) -> MonomialIdealSpec:
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from exc
        return MonomialIdealSpec.from_json_obj(obj)
    return parse_monomials(s)


def codimension(spec: MonomialIdealSpec) -> int:
    """Smallest set of factors meeting the support of every generator."""
    supports = [frozenset(i for i, x in enumerate(v) if x) for v in spec.exponents]
    for k in range(1, spec.num_factors + 1):
        for T in combinations(range(spec.num_factors), k):
            if all(s & set(T) for s in supports):
                return k
    raise SpecError("no hitting set; empty support")


def cone_from_monomials(spec: MonomialIdealSpec) -> Cone:
    l = spec.num_factors
    gens = [(1,) + tuple(v) for v in spec.exponents]
    gens += [tuple(int(i == j) for i in range(l + 1)) for j in range(1, l + 1)]
    return Cone.from_generators(gens)


def linear_factor(v: Sequence[int]) -> Polynomial:
    """``1 + v_1 t_1 + ... + v_l t_l``."""
    n = len(v)
    terms = {(0,) * n: 1}
    for i, x in enumerate(v):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = x
    return Polynomial(n, terms)


def product_of(factors: Sequence[Polynomial], n: int) -> Polynomial:
    out = Polynomial.constant(n, 1)
    for f in factors:
        out = mul(out, f)
    return out


@dataclass(frozen=True)
class ZetaNumerators:
    spec: MonomialIdealSpec
    R_reduced: Polynomial
    essential: tuple[tuple[int, ...], ...]
    redundant: tuple[tuple[int, ...], ...]
    R_full: Polynomial
    Q_factors: tuple[Polynomial, ...]
    P: Polynomial
    adjoint: Polynomial
    codim: int

    @property
    def Q(self) -> Polynomial:
        return product_of(self.Q_factors, self.spec.num_factors)

    @property
    def r(self) -> int:
        """Number of chosen generators minus one."""
        return len(self.Q_factors) - 1

    @property
    def r_essential(self) -> int:
        return len(self.essential) - 1

    def to_json_obj(self) -> dict:
        return {
            "spec": self.spec.to_json_obj(),
            "essential": [list(v) for v in self.essential],
            "redundant": [list(v) for v in self.redundant],
            "codim": self.codim,
            "adjoint": to_json_obj(self.adjoint),
            "R_reduced": to_json_obj(self.R_reduced),
            "R_full": to_json_obj(self.R_full),
            "Q_factors": [to_json_obj(q) for q in self.Q_factors],
            "P": to_json_obj(self.P),
        }


def _check_structure(nums: ZetaNumerators) -> None:
    l = nums.spec.num_factors
    Q = nums.Q
    if nums.P + nums.R_full != Q:
        raise InvariantViolation("P + R_full != Q")
    for e, c in nums.P.terms.items():
        if c < 0 or c.denominator != 1:
            raise InvariantViolation(f"P has coefficient {c} at {e}")
    for e, c in nums.R_full.terms.items():
        if c.denominator != 1:
            raise InvariantViolation(f"R_full has non-integer coefficient {c} at {e}")
    if total_degree(nums.R_full) > nums.r:
        raise InvariantViolation("R_full has total degree above the number of generators minus one")
    if trailing_degree(nums.P) != nums.codim:
        raise InvariantViolation(f"trailing degree {trailing_degree(nums.P)} of P differs from codim {nums.codim}")
    top = product_of([f - 1 for f in nums.Q_factors], l)
    if homogeneous_part(nums.P, nums.r + 1) != top:
        raise InvariantViolation("leading form of P is not the product of the generator forms")


def zeta_numerators(spec: MonomialIdealSpec, check: bool = True, triangulation_rng=None) -> ZetaNumerators:
    """Numerators of ``zeta_I`` and ``1 - zeta_I`` for the monomial ideal ``spec``.

    ``triangulation_rng`` switches the adjoint to a random regular
    triangulation, which is how suspicious results get recomputed.
    """
    l = spec.num_factors
    cone = cone_from_monomials(spec)
    T = regular_triangulation(cone, triangulation_rng) if triangulation_rng is not None else None
    A = adjoint(cone, T)
    R_reduced = dehomogenize(A, 0)
    ess_set = {tuple(int(x) for x in v[1:]) for v in cone.extreme if v[0] != 0}
    essential = tuple(v for v in spec.exponents if v in ess_set)
    redundant = tuple(v for v in spec.exponents if v not in ess_set)
    R_full = mul(R_reduced, product_of([linear_factor(v) for v in redundant], l))
    Q_factors = tuple(linear_factor(v) for v in spec.exponents)
    P = product_of(Q_factors, l) - R_full
    nums = ZetaNumerators(spec, R_reduced, essential, redundant, R_full, Q_factors, P, A, codimension(spec))
    if check:
        _check_structure(nums)
    return nums


@dataclass(frozen=True)
class ZetaSeries:
    truncation_order: int
    num_vars: int
    coefficients: dict

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.coefficients.get(tuple(exp), 0)

    def to_json_obj(self) -> dict:
        return {
            "truncation_order": self.truncation_order,
            "terms": [{"exp": list(e), "coef": str(c)}
                      for e, c in sorted(self.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0]))],
        }


def series_expand(numerator: Polynomial, factors: Sequence[Polynomial], order: int) -> Polynomial:
    """Power series of ``numerator / prod(factors)`` through total degree ``order``.

    Each factor must have constant term 1; ``1/(1 + L) = sum_k (-L)^k``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = numerator.num_vars
    s = truncate(numerator, order)
    for f in factors:
        if f.coefficient((0,) * n) != 1:
            raise ValueError("series factors must have constant term 1")
        neg_l = Polynomial.constant(n, 1) - f
        inv = Polynomial.constant(n, 1)
        power = Polynomial.constant(n, 1)
        for _ in range(order):
            power = truncated_mul(power, neg_l, order)
            if power.is_zero():
                break
            inv = inv + power
        s = truncated_mul(s, inv, order)
    return s


def _to_series(p: Polynomial, order: int) -> ZetaSeries:
    coeffs = {}
    for e, c in p.terms.items():
        if c.denominator != 1:
            raise InvariantViolation(f"non-integer series coefficient {c}")
        coeffs[e] = int(c)
    return ZetaSeries(order, p.num_vars, coeffs)


def zeta_series(nums: ZetaNumerators, order: int) -> ZetaSeries:
    return _to_series(series_expand(nums.P, nums.Q_factors, order), order)


def fixture_series(P: Polynomial, Q_factors: Sequence[Polynomial], order: int) -> ZetaSeries:
    """Series of a stored (P, Q) pair, e.g. a zeta function not coming from a monomial ideal."""
    return _to_series(series_expand(P, Q_factors, order), order)


def diagonal(nums: ZetaNumerators) -> tuple[Polynomial, Polynomial]:
    return diagonalize(nums.R_full), diagonalize(nums.P)


@dataclass(frozen=True)
class SuiteResult:
    """Consequences of R being a de-homogenized covolume polynomial."""
    nonnegative_integer: bool
    m_convex: bool
    flip_normalize_lorentzian: bool
    diagonal_log_concave: bool
    flip_witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return (self.nonnegative_integer and self.m_convex
                and self.flip_normalize_lorentzian and self.diagonal_log_concave)

    def to_json_obj(self) -> dict:
        return {
            "passed": self.passed,
            "nonnegative_integer": self.nonnegative_integer,
            "m_convex": self.m_convex,
            "flip_normalize_lorentzian": self.flip_normalize_lorentzian,
            "diagonal_log_concave": self.diagonal_log_concave,
            "flip_witness": self.flip_witness,
        }


def _univariate_coefficients(f: Polynomial) -> list:
    d = max(total_degree(f), 0)
    return [f.coefficient((k,)) for k in range(d + 1)]


def r_suite(nums: ZetaNumerators) -> SuiteResult:
    R = nums.R_full
    nonneg = all(c >= 0 and c.denominator == 1 for c in R.terms.values())
    m_convex = m_convexity_witness(support(homogenize(R, nums.r))) is None
    D = total_degree(R)
    bounds = (D,) + tuple(degrees(R))
    fv = flip_normalize_is_lorentzian(homogenize(R, D), bounds)
    diag = R if nums.spec.num_factors == 1 else diagonalize(R)
    lc = is_log_concave_no_internal_zeros(_univariate_coefficients(diag))
    return SuiteResult(nonneg, m_convex, fv.is_lorentzian, lc, fv.witness)


def conjecture_polynomial(nums: ZetaNumerators) -> Polynomial:
    """Normalized degree-r homogenization of R, r = (#essential generators) - 1."""
    return normalize(homogenize(nums.R_reduced, nums.r_essential))


def conjecture_check(nums: ZetaNumerators, inertia_fn=None) -> LorentzVerdict:
    f = conjecture_polynomial(nums)
    return is_lorentzian(f) if inertia_fn is None else is_lorentzian(f, inertia_fn=inertia_fn)


def evaluate_one_minus_zeta(nums: ZetaNumerators, t: Sequence) -> Fraction:
    """Exact value of R_full / Q at a point."""
    t = [Fraction(x) for x in t]
    return nums.R_full(*t) / nums.Q(*t)


def integral_oracle(spec: MonomialIdealSpec, t_point: Sequence, samples: int = 1 << 14, seed: int = 0) -> float:
    """Floating-point quadrature of 1 - zeta; see :mod:`covolume.oracle`."""
    from .oracle import integral_estimate
    return integral_estimate(spec, t_point, samples, seed)
