"""Lorentzian certification of homogeneous polynomials.

A homogeneous ``f`` of degree ``d`` is Lorentzian iff its coefficients are
nonnegative, its support is M-convex, and every ``(d-2)``-fold partial
derivative is a quadratic form with at most one positive eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .convexity import coefficient_sequence_bivariate, is_log_concave_no_internal_zeros, m_convexity_witness
from .ratpoly import (
    Polynomial,
    flip,
    is_homogeneous,
    monomials_of_degree,
    normalize,
    partial_derivative,
    support,
    to_text,
    total_degree,
)
from .signature import Inertia, hessian_of_quadratic, inertia, inertia_congruence


@dataclass(frozen=True)
class LorentzVerdict:
    is_lorentzian: bool
    witness: Optional[dict] = field(default=None)

    def __post_init__(self):
        if self.is_lorentzian != (self.witness is None):
            raise ValueError("a witness must be present exactly when the verdict is negative")

    def __bool__(self) -> bool:
        return self.is_lorentzian

    def to_json_obj(self) -> dict:
        return {"is_lorentzian": self.is_lorentzian, "witness": self.witness}


def is_lorentzian(f: Polynomial, inertia_fn: Callable = inertia) -> LorentzVerdict:
    """Certify ``f`` Lorentzian, or return the first failing condition as a witness.

    ``inertia_fn`` selects the signature routine; the congruence path is used
    to re-verify surprising verdicts.
    """
    if not is_homogeneous(f):
        raise ValueError("Lorentzian certification requires a homogeneous polynomial")
    if f.is_zero():
        return LorentzVerdict(True)
    for e, c in f.sorted_terms():
        if c < 0:
            return LorentzVerdict(False, {"kind": "negative_coefficient", "exp": list(e), "coef": str(c)})
    w = m_convexity_witness(support(f))
    if w is not None:
        a, b, i = w
        return LorentzVerdict(False, {"kind": "m_convexity", "alpha": list(a), "beta": list(b), "i": i})
    d = total_degree(f)
    if d <= 1:
        return LorentzVerdict(True)
    for alpha in monomials_of_degree(f.num_vars, d - 2):
        q = partial_derivative(f, alpha)
        if q.is_zero():
            continue
        sig = inertia_fn(hessian_of_quadratic(q))
        if sig.n_pos > 1:
            return LorentzVerdict(False, {
                "kind": "hessian",
                "alpha": list(alpha),
                "quadratic": to_text(q),
                "inertia": list(sig.as_tuple()),
            })
    return LorentzVerdict(True)


def is_lorentzian_congruence(f: Polynomial) -> LorentzVerdict:
    return is_lorentzian(f, inertia_fn=inertia_congruence)


def is_covolume_bivariate(f: Polynomial) -> bool:
    """Binary forms are covolume exactly when nonzero and log-concave with no internal zeros."""
    if f.num_vars != 2:
        raise ValueError("bivariate covolume test needs exactly 2 variables")
    if f.is_zero():
        return False
    return is_log_concave_no_internal_zeros(coefficient_sequence_bivariate(f))


def flip_normalize_is_lorentzian(f: Polynomial, n: Sequence[int]) -> LorentzVerdict:
    return is_lorentzian(normalize(flip(f, n)))


__all__ = [
    "Inertia", "LorentzVerdict", "is_lorentzian", "is_lorentzian_congruence",
    "is_covolume_bivariate", "flip_normalize_is_lorentzian",
]
