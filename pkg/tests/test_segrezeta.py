import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from covolume.ratpoly import Polynomial, homogenize, parse, total_degree
from covolume.segrezeta import (
    MonomialIdealSpec,
    SpecError,
    codimension,
    cone_from_monomials,
    conjecture_check,
    diagonal,
    fixture_series,
    linear_factor,
    parse_spec,
    product_of,
    r_suite,
    series_expand,
    zeta_numerators,
    zeta_series,
)

E3 = MonomialIdealSpec.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
REDUCIBLE = MonomialIdealSpec.of([(1, 1, 0), (1, 0, 1)])


@st.composite
def specs(draw, max_factors=3, max_exponent=4, max_gens=5):
    l = draw(st.integers(1, max_factors))
    vec = st.tuples(*[st.integers(0, max_exponent)] * l).filter(any)
    vecs = draw(st.lists(vec, min_size=1, max_size=max_gens, unique=True))
    return MonomialIdealSpec.of(vecs, l)


def test_spec_validation_and_parsing():
    with pytest.raises(SpecError):
        MonomialIdealSpec(2, ((0, 0),))
    with pytest.raises(SpecError):
        MonomialIdealSpec(2, ((1,),))
    with pytest.raises(SpecError):
        MonomialIdealSpec(1, ())
    assert parse_spec("x1*x2, x1*x3") == REDUCIBLE
    assert parse_spec('{"num_factors": 3, "exponents": [[1,1,0],[1,0,1]]}') == REDUCIBLE
    assert parse_spec(REDUCIBLE.to_text()) == REDUCIBLE
    with pytest.raises(SpecError):
        parse_spec("y1")
    with pytest.raises(SpecError):
        parse_spec('{"exponents": [[1]]}')


def test_cone_from_monomials():
    c = cone_from_monomials(E3)
    assert len(c.generators) == 6 and len(c.extreme) == 6
    c = cone_from_monomials(MonomialIdealSpec.of([(1, 0), (0, 1), (1, 1)]))
    assert (1, 1, 1) not in c.extreme


def test_complete_intersection():
    n = zeta_numerators(E3)
    assert n.R_reduced == parse("1 + t0 + t1 + t2 + t0*t1 + t0*t2 + t1*t2")
    assert n.P == parse("t0*t1*t2")
    assert diagonal(n)[0] == Polynomial.univariate([1, 3, 3])
    assert n.codim == 3


def test_reducible_ideal():
    n = zeta_numerators(REDUCIBLE)
    assert n.P == parse("t0 + t0^2 + t0*t1 + t0*t2 + t1*t2")
    assert n.R_reduced == parse("1 + t0 + t1 + t2")
    assert diagonal(n)[0] == Polynomial.univariate([1, 3])
    assert n.codim == 1


def test_single_monomial():
    n = zeta_numerators(MonomialIdealSpec.of([(2, 3)]))
    assert n.R_reduced == Polynomial.constant(2, 1)
    assert n.P == parse("2*t0 + 3*t1")
    assert diagonal(n)[0] == Polynomial.constant(1, 1)


def test_redundant_generator_enters_as_linear_factor():
    n = zeta_numerators(MonomialIdealSpec.of([(1, 0), (0, 1), (1, 1)]))
    assert n.redundant == ((1, 1),)
    assert n.R_full == n.R_reduced * linear_factor((1, 1))
    assert n.codim == 2


def test_series_examples():
    s = zeta_series(zeta_numerators(E3), 4)
    assert s.coefficient((1, 1, 1)) == 1
    assert s.coefficient((2, 1, 1)) == -1
    assert zeta_series(zeta_numerators(E3), 0).coefficients == {}
    P = Polynomial.univariate([0, 0, 0, 0, 0, 48, 1440, 19290, 142020, 567840, 1048576])
    assert fixture_series(P, [Polynomial.univariate([1, 4])] * 10, 6).coefficient((5,)) == 48


def test_series_of_power():
    # (1+4t)^-10 has t^5 coefficient -C(14,5) 4^5
    s = series_expand(Polynomial.constant(1, 1), [Polynomial.univariate([1, 4])] * 10, 5)
    assert s.coefficient((5,)) == -2002 * 1024


def test_series_rejects_bad_factor():
    with pytest.raises(ValueError):
        series_expand(Polynomial.constant(1, 1), [Polynomial.univariate([2, 1])], 3)


def series_by_recursion(P, Q, order):
    """Independent oracle: solve Q * S = P coefficient by coefficient (Q has constant term 1)."""
    n = P.num_vars
    from covolume.ratpoly import monomials_of_degree
    S = {}
    for d in range(order + 1):
        for e in monomials_of_degree(n, d):
            acc = P.coefficient(e)
            for qe, qc in Q.terms.items():
                if any(qe):
                    rest = tuple(a - b for a, b in zip(e, qe))
                    if min(rest) >= 0:
                        acc -= qc * S.get(rest, 0)
            S[e] = acc
    return {e: c for e, c in S.items() if c}


@given(specs(max_factors=2, max_gens=4))
def test_series_against_recursion(spec):
    n = zeta_numerators(spec)
    got = zeta_series(n, 4).coefficients
    assert got == series_by_recursion(n.P, n.Q, 4)


@given(specs())
def test_structural_identities(spec):
    n = zeta_numerators(spec)
    assert n.P + n.R_full == n.Q
    assert n.codim == codimension(spec)
    if not n.redundant:
        assert n.R_full == n.R_reduced
    one = series_expand(n.P, n.Q_factors, 3) + series_expand(n.R_full, n.Q_factors, 3)
    assert one == Polynomial.constant(spec.num_factors, 1)
    assert total_degree(n.R_reduced) <= len(n.essential) - 1


@given(specs())
def test_theorem_suite_and_conjecture(spec):
    n = zeta_numerators(spec)
    assert r_suite(n).passed
    assert conjecture_check(n)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=5, unique=True))
def test_univariate_closed_form(exps):
    # conv(F) + R_{>=0} = [min F, oo), so 1 - zeta = 1 / (1 + min(F) t)
    spec = MonomialIdealSpec.of([(a,) for a in exps])
    n = zeta_numerators(spec)
    m = min(exps)
    expected = product_of([linear_factor((a,)) for a in exps if a != m], 1)
    assert n.R_full == expected
    assert n.essential == ((m,),)


def test_regular_triangulation_path_agrees():
    rng = random.Random(4)
    for k in range(30):
        l = rng.randint(1, 3)
        vecs = {tuple(rng.randint(0, 5) for _ in range(l)) for _ in range(rng.randint(1, 5))}
        vecs.discard((0,) * l)
        if not vecs:
            continue
        spec = MonomialIdealSpec.of(sorted(vecs), l)
        assert zeta_numerators(spec).R_reduced == zeta_numerators(spec, triangulation_rng=random.Random(k)).R_reduced


def test_conjecture_polynomial_example():
    n = zeta_numerators(MonomialIdealSpec.of([(1,), (2,)]))
    assert homogenize(n.R_reduced, n.r_essential) == Polynomial.constant(2, 1)


def test_json_serialization():
    obj = zeta_numerators(REDUCIBLE).to_json_obj()
    assert obj["codim"] == 1 and obj["redundant"] == []
    assert set(obj) >= {"R_reduced", "R_full", "P", "Q_factors", "essential", "adjoint"}
