"""Acceptance criteria, one test per criterion.

Run directly (``python3 tests/test_acceptance.py``) for a PASS/FAIL table, or
through pytest, where the same lines appear in the terminal summary.
"""

import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from covolume.cone import Cone, adjoint, adjoint_transform_check, regular_triangulation, triangulate  # noqa: E402
from covolume.convexity import is_log_concave_no_internal_zeros, is_m_convex, m_convexity_witness  # noqa: E402
from covolume.linalg import RationalMatrix  # noqa: E402
from covolume.lorentz import is_lorentzian  # noqa: E402
from covolume.ratpoly import (  # noqa: E402
    Polynomial, degrees, dehomogenize, flip, homogenize, normalize, parse, partial_derivative,
    substitute_matrix, support, total_degree,
)
from covolume.scan import ScanConfig, random_spec, run_scan  # noqa: E402
from covolume.sectional import restrict_pair, restriction_ok, test_sectional as run_sectional  # noqa: E402
from covolume.segrezeta import (  # noqa: E402
    diagonal, evaluate_one_minus_zeta, integral_oracle, zeta_numerators,
)
from covolume.signature import hessian_of_quadratic, inertia  # noqa: E402
from covolume import fixtures as fx  # noqa: E402
from strategies import random_cone, random_nonsingular, random_symmetric  # noqa: E402

RESULTS: list[str] = []
SEED = 20240229


def record(number, title, ok, elapsed, limit, detail=""):
    ok = bool(ok) and elapsed < limit
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s / {limit:g}s){'  ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    return ok


def timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


def c1():
    R = fx.cubics_R()
    coeffs = [R.coefficient((k,)) for k in range(11)]
    ok = coeffs[:10] == fx.CUBICS_R and coeffs[10] == 0 and total_degree(R) == 9
    return ok and is_log_concave_no_internal_zeros(coeffs[:10]), ""


def c2():
    N = normalize(fx.PW)
    expected = [Fraction(1, 5040), Fraction(1, 2160), Fraction(1, 720),
                Fraction(1, 1440), Fraction(1, 180), Fraction(1, 96)]
    coeffs_ok = [c for _, c in N.sorted_terms()] == expected and N == fx.PW_NORMALIZED
    q = partial_derivative(N, (5, 2, 0))
    H = hessian_of_quadratic(q)
    v = is_lorentzian(N)
    ok = (coeffs_ok and q == fx.PW_DERIVATIVE and H.to_lists() == fx.PW_HESSIAN and inertia(H).n_pos == 2
          and not v.is_lorentzian and v.witness["alpha"] == [5, 2, 0])
    return ok, f"witness {v.witness['kind']} at {v.witness['alpha']}"


def c3():
    Q = flip(fx.PW, (7, 4, 1))
    ok = (Q == fx.PW_FLIP and normalize(Q) == fx.PW_FLIP_NORMALIZED
          and is_lorentzian(normalize(Q)).is_lorentzian
          and is_lorentzian(fx.LORENTZ_A).is_lorentzian
          and not is_lorentzian(normalize(flip(fx.LORENTZ_A, (2, 1, 1, 1)))).is_lorentzian)
    return ok, ""


def c4():
    n = zeta_numerators(fx.COORDINATE_IDEAL)
    f = homogenize(diagonal(n)[0], 2)
    ok = (n.R_reduced == parse("1 + t0 + t1 + t2 + t0*t1 + t0*t2 + t1*t2")
          and n.P == parse("t0*t1*t2")
          and diagonal(n)[0] == Polynomial.univariate([1, 3, 3])
          and f == fx.REX_DIAGONAL_HOMOGENIZED
          and not is_lorentzian(f).is_lorentzian and is_lorentzian(normalize(f)).is_lorentzian)
    return ok, ""


def c5():
    n = zeta_numerators(fx.REDUCIBLE_IDEAL)
    H = homogenize(n.P, 2)
    w = m_convexity_witness(support(H))
    battery = run_sectional(H)
    battery_dehom = run_sectional(dehomogenize(fx.PCOUN, 0))
    g = restrict_pair(fx.PCOUN, fx.PCOUN_MATRIX, homogeneous=True)
    ok = (n.P == parse("t0 + t0^2 + t0*t1 + t0*t2 + t1*t2") and H == fx.PCOUN
          and not is_m_convex(support(H)) and (w[0], w[1]) == ((1, 1, 0, 0), (0, 0, 1, 1))
          and battery.found and battery_dehom.found
          and g == parse("5*t0^2 + 2*t0*t1 + t1^2") and not restriction_ok(g))
    return ok, f"battery hit after {battery.trials_run} matrices"


def c6():
    square = adjoint(fx.SQUARE_CONE) == parse("2*t0 - t1 - t2")
    rng = random.Random(SEED)
    simplicial = True
    for _ in range(50):
        d = rng.randint(1, 5)
        rays = random_nonsingular(rng, d)
        c = Cone.from_generators(rays)
        try:
            a = adjoint(c)
        except Exception:
            continue  # not pointed on a common side; not a valid cone input
        T = triangulate(c)
        simplicial &= len(T.pieces) == 1 and a == Polynomial.constant(d, T.pieces[0].volume)
    same = 0
    for k in range(200):
        c = random_cone(rng)
        if adjoint(c, triangulate(c)) == adjoint(c, regular_triangulation(c, random.Random(k))):
            same += 1
    return square and simplicial and same == 200, f"{same}/200 cones agree"


def c7():
    rng = random.Random(SEED + 7)
    agree = 0
    for _ in range(100):
        c = random_cone(rng)
        A = random_nonsingular(rng, c.ambient_dim)
        agree += adjoint_transform_check(c, A)
    return agree == 100, f"{agree}/100 pairs"


def c8():
    workers = int(os.environ.get("COVOLUME_WORKERS", os.cpu_count() or 1))
    report = run_scan(ScanConfig(count=300, master_seed=SEED, workers=workers))
    s = report["summary"]
    ok = s["errors"] == 0 and s["suite_passed"] == 300 and s["conjecture_passed"] == 300
    return ok, f"suite {s['suite_passed']}/300, conjecture {s['conjecture_passed']}/300, errors {s['errors']}"


def c9():
    cfg = ScanConfig(count=20, master_seed=SEED + 9, num_generators_range=(1, 6))
    worst = 0.0
    for i in range(20):
        spec = random_spec(cfg, i)
        t = [Fraction(1, 10)] * spec.num_factors
        exact = float(evaluate_one_minus_zeta(zeta_numerators(spec), t))
        worst = max(worst, abs(integral_oracle(spec, t) - exact) / exact)
    return worst < 1e-2, f"worst relative error {worst:.2e}"


def _random_poly(rng, n, max_deg=4, max_terms=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
    return Polynomial(n, terms)


def c10():
    rng = random.Random(SEED + 10)
    sylvester = 0
    for _ in range(500):
        n = rng.randint(1, 5)
        H = RationalMatrix.from_rows(random_symmetric(rng, n))
        P = RationalMatrix.from_rows(random_nonsingular(rng, n))
        sylvester += inertia(P.T @ H @ P) == inertia(H)
    counts = {"flip": 0, "homog": 0, "normalize": 0, "subst": 0}
    for _ in range(200):
        n = rng.randint(1, 4)
        f, g = _random_poly(rng, n), _random_poly(rng, n)
        bounds = tuple(d + rng.randint(0, 2) for d in degrees(f))
        counts["flip"] += flip(flip(f, bounds), bounds) == f
        d = max(total_degree(f), 0) + rng.randint(0, 2)
        h = homogenize(f, d)
        counts["homog"] += dehomogenize(h, 0) == f and (h.is_zero() or homogenize(dehomogenize(h, 0), d) == h)
        a, b = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        counts["normalize"] += normalize(f.scale(a) + g.scale(b)) == normalize(f).scale(a) + normalize(g).scale(b)
        m, k = rng.randint(1, 3), rng.randint(1, 3)
        A = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)] for _ in range(n)]
        B = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(k)] for _ in range(m)]
        AB = (RationalMatrix.from_rows(A) @ RationalMatrix.from_rows(B))
        counts["subst"] += substitute_matrix(substitute_matrix(f, A), B) == substitute_matrix(f, AB)
    ok = sylvester == 500 and all(v == 200 for v in counts.values())
    return ok, f"sylvester {sylvester}/500, " + ", ".join(f"{k} {v}/200" for k, v in counts.items())


CRITERIA = [
    (1, "plane cubics numerator", c1, 1),
    (2, "normalized class is not Lorentzian", c2, 1),
    (3, "flip then normalize", c3, 1),
    (4, "complete intersection numerators", c4, 1),
    (5, "reducible ideal numerator", c5, 1),
    (6, "adjoint fixtures and triangulation independence", c6, 60),
    (7, "linear transformation law", c7, 60),
    (8, "conjecture scan, 300 ideals", c8, 600),
    (9, "quadrature oracle agreement", c9, 300),
    (10, "property suites", c10, 120),
]


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, detail, elapsed = timed(fn)
    assert record(number, title, ok, elapsed, limit, detail), RESULTS[-1]


if __name__ == "__main__":
    passed = 0
    for number, title, fn, limit in CRITERIA:
        ok, detail, elapsed = timed(fn)
        passed += record(number, title, ok, elapsed, limit, detail)
    print(f"{passed}/{len(CRITERIA)} criteria passed")
    sys.exit(0 if passed == len(CRITERIA) else 1)
