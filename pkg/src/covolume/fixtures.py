"""Worked examples with known answers, runnable as one corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .convexity import is_log_concave_no_internal_zeros, m_convexity_witness
from .cone import Cone, adjoint, regular_triangulation, triangulate
from .lorentz import is_lorentzian
from .ratpoly import Polynomial, diagonalize, flip, homogenize, normalize, parse, partial_derivative
from .sectional import restrict_pair, restriction_ok, test_sectional
from .segrezeta import MonomialIdealSpec, fixture_series, zeta_numerators, zeta_series
from .signature import hessian_of_quadratic, inertia

PW = parse("2*t0^7*t1^2 + 2*t0^6*t1^3 + 2*t0^6*t1^2*t2 + 2*t0^5*t1^4 + 4*t0^5*t1^3*t2 + 6*t0^4*t1^4*t2")
PW_NORMALIZED = parse("1/5040*t0^7*t1^2 + 1/2160*t0^6*t1^3 + 1/720*t0^6*t1^2*t2 + 1/1440*t0^5*t1^4"
                      " + 1/180*t0^5*t1^3*t2 + 1/96*t0^4*t1^4*t2")
PW_DERIVATIVE = parse("t0^2 + 2*t0*t1 + 2*t0*t2 + t1^2 + 4*t1*t2")
PW_HESSIAN = [[2, 2, 2], [2, 2, 4], [2, 4, 0]]
PW_FLIP = parse("6*t0^3 + 4*t0^2*t1 + 2*t0^2*t2 + 2*t0*t1^2 + 2*t0*t1*t2 + 2*t1^2*t2")
PW_FLIP_NORMALIZED = parse("t0^3 + 2*t0^2*t1 + t0^2*t2 + t0*t1^2 + 2*t0*t1*t2 + t1^2*t2")
LORENTZ_A = parse("t0^2*t1 + t0^2*t2 + t0^2*t3 + t0*t1*t2 + t0*t1*t3 + 4*t0*t2*t3 + t1*t2*t3")
LORENTZ_A_FLIP = parse("t2*t3 + t1*t3 + t1*t2 + t0*t3 + t0*t2 + 4*t0*t1 + t0^2")

CUBICS_P = Polynomial.univariate([0, 0, 0, 0, 0, 48, 1440, 19290, 142020, 567840, 1048576])
CUBICS_Q_FACTOR = Polynomial.univariate([1, 4])
CUBICS_R = [1, 40, 720, 7680, 53760, 258000, 858720, 1946790, 2807100, 2053600]

REX = parse("t0^2 + t0*t1 + t0*t2 + t0*t3 + t1*t2 + t1*t3 + t2*t3")
REX_DIAGONAL_HOMOGENIZED = parse("t0^2 + 3*t0*t1 + 3*t1^2")
PCOUN = parse("t0*t1 + t1^2 + t1*t2 + t1*t3 + t2*t3")
PCOUN_MATRIX = [[4, 0], [1, 0], [0, 1], [0, 1]]

COORDINATE_IDEAL = MonomialIdealSpec.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
REDUCIBLE_IDEAL = MonomialIdealSpec.of([(1, 1, 0), (1, 0, 1)])
SQUARE_CONE = Cone.from_generators([(1, 0, 0), (1, -1, 0), (1, 0, -1), (1, -1, -1)])


def cubics_R() -> Polynomial:
    return CUBICS_Q_FACTOR ** 10 - CUBICS_P


def _cubics():
    R = cubics_R()
    coeffs = [R.coefficient((k,)) for k in range(11)]
    return coeffs[:10] == CUBICS_R and coeffs[10] == 0 and is_log_concave_no_internal_zeros(coeffs[:10])


def _cubics_series():
    s = fixture_series(CUBICS_P, [CUBICS_Q_FACTOR] * 10, 6)
    return s.coefficient((5,)) == 48 and s.coefficient((4,)) == 0


def _normalized_w():
    N = normalize(PW)
    q = partial_derivative(N, (5, 2, 0))
    H = hessian_of_quadratic(q)
    v = is_lorentzian(N)
    return (N == PW_NORMALIZED and q == PW_DERIVATIVE and H.to_lists() == PW_HESSIAN
            and inertia(H).n_pos == 2 and not v and v.witness["alpha"] == [5, 2, 0])


def _flip_w():
    Q = flip(PW, (7, 4, 1))
    return (Q == PW_FLIP and normalize(Q) == PW_FLIP_NORMALIZED
            and is_lorentzian(normalize(Q)).is_lorentzian)


def _lorentz_a():
    F = flip(LORENTZ_A, (2, 1, 1, 1))
    return (is_lorentzian(LORENTZ_A).is_lorentzian and F == LORENTZ_A_FLIP
            and not is_lorentzian(normalize(F)).is_lorentzian)


def _coordinate_ideal():
    n = zeta_numerators(COORDINATE_IDEAL)
    return (homogenize(n.R_reduced, 2) == REX
            and n.P == parse("t0*t1*t2")
            and diagonalize(n.R_full) == Polynomial.univariate([1, 3, 3]))


def _rex_univariate():
    f = REX_DIAGONAL_HOMOGENIZED
    return not is_lorentzian(f).is_lorentzian and is_lorentzian(normalize(f)).is_lorentzian


def _coordinate_series():
    s = zeta_series(zeta_numerators(COORDINATE_IDEAL), 4)
    return s.coefficient((1, 1, 1)) == 1 and s.coefficient((2, 1, 1)) == -1


def _reducible_ideal():
    n = zeta_numerators(REDUCIBLE_IDEAL)
    P = homogenize(n.P, 2)
    w = m_convexity_witness(P.terms)
    return P == PCOUN and w is not None and (w[0], w[1]) == ((1, 1, 0, 0), (0, 0, 1, 1))


def _pcoun_sectional():
    g = restrict_pair(PCOUN, PCOUN_MATRIX, homogeneous=True)
    return (g == parse("5*t0^2 + 2*t0*t1 + t1^2") and not restriction_ok(g)
            and test_sectional(PCOUN).found)


def _square_cone():
    target = parse("2*t0 - t1 - t2")
    return (adjoint(SQUARE_CONE) == target
            and adjoint(SQUARE_CONE, regular_triangulation(SQUARE_CONE, random.Random(0))) == target)


def _coordinate_cone():
    c = Cone.from_generators([(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    return len(c.extreme) == 6 and adjoint(c) == REX and len(triangulate(c).pieces) >= 1


def _simplicial_cone():
    c = Cone.from_generators([(1, 2, 3), (0, 1, 0), (0, 0, 1)])
    return adjoint(c) == Polynomial.constant(3, 1)


@dataclass(frozen=True)
class Fixture:
    name: str
    check: Callable[[], bool]


FIXTURES = (
    Fixture("plane_cubics_R", _cubics),
    Fixture("plane_cubics_series", _cubics_series),
    Fixture("normalized_class_not_lorentzian", _normalized_w),
    Fixture("flipped_class_lorentzian", _flip_w),
    Fixture("lorentzian_not_covolume", _lorentz_a),
    Fixture("coordinate_ideal_numerators", _coordinate_ideal),
    Fixture("coordinate_ideal_univariate", _rex_univariate),
    Fixture("coordinate_ideal_series", _coordinate_series),
    Fixture("reducible_ideal_not_m_convex", _reducible_ideal),
    Fixture("reducible_ideal_not_sectional", _pcoun_sectional),
    Fixture("square_cone_adjoint", _square_cone),
    Fixture("coordinate_cone_adjoint", _coordinate_cone),
    Fixture("simplicial_cone_adjoint", _simplicial_cone),
)


def run_fixtures() -> list[tuple[str, bool, str]]:
    out = []
    for fx in FIXTURES:
        try:
            out.append((fx.name, bool(fx.check()), ""))
        except Exception as exc:
            out.append((fx.name, False, f"{type(exc).__name__}: {exc}"))
    return out

