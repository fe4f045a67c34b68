import random
from fractions import Fraction

import pytest

from covolume.segrezeta import MonomialIdealSpec, evaluate_one_minus_zeta, integral_oracle, zeta_numerators


def rel_err(spec, t):
    exact = float(evaluate_one_minus_zeta(zeta_numerators(spec), t))
    return abs(integral_oracle(spec, t) - exact) / exact


def test_hypersurface_closed_form():
    spec = MonomialIdealSpec.of([(1,)])
    assert abs(integral_oracle(spec, [Fraction(1, 10)]) - 1 / 1.1) / (1 / 1.1) < 1e-2


def test_complete_intersection():
    spec = MonomialIdealSpec.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert rel_err(spec, [Fraction(1, 10)] * 3) < 1e-2


def test_small_t_limit():
    spec = MonomialIdealSpec.of([(1, 2), (2, 1)])
    assert abs(integral_oracle(spec, [Fraction(1, 1000)] * 2) - 1) < 1e-2


def test_deterministic():
    spec = MonomialIdealSpec.of([(1, 1, 0), (1, 0, 1)])
    t = [Fraction(1, 5)] * 3
    assert integral_oracle(spec, t) == integral_oracle(spec, t)


def test_bad_point():
    with pytest.raises(ValueError):
        integral_oracle(MonomialIdealSpec.of([(1, 1)]), [Fraction(1, 10)])
    with pytest.raises(ValueError):
        integral_oracle(MonomialIdealSpec.of([(1,)]), [0])
