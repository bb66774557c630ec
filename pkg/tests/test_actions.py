import random

import pytest

from conftest import elements
from hypothesis import given, settings
from hypothesis import strategies as st
from onesided.actions import (act_left, act_right_on_ypoly, e_unit_action, nilpotence_index, poly,
                              x_minus_one_injective_on_ypolys, ypoly)
from onesided.algebra import SnAlgebra
from onesided.coeff_ring import QQ
from onesided.sampling import random_element

S1 = SnAlgebra(1, QQ)
S2 = SnAlgebra(2, QQ)


def test_y_kills_constants():
    assert act_left(S1.y(), poly(S1, {(0,): 1})).is_zero()


def test_x_raises_degree():
    assert act_left(S2.x(1), poly(S2, {(1, 1): 1})) == poly(S2, {(2, 1): 1})


def test_e_unit_rule_example():
    assert act_left(S1.E((2,), (3,)), poly(S1, {(3,): 1})) == poly(S1, {(2,): 1})


def test_e_unit_rule_exhaustive():
    for b in range(4):
        for c in range(4):
            for a in range(4):
                got = act_left(S1.E((b,), (c,)), poly(S1, {(a,): 1}))
                assert got == e_unit_action((b,), (c,), (a,), S1)


def test_right_action_examples():
    x = S1.x()
    assert act_right_on_ypoly(ypoly(S1, [0, 0, 1]), x) == ypoly(S1, [0, 1])
    assert act_right_on_ypoly(ypoly(S1, [1]), x).is_zero()
    assert act_right_on_ypoly(ypoly(S1, [1, 1]), x - 1) == -S1.y()
    assert act_right_on_ypoly(ypoly(S1, [1]), S1.y()) == S1.y()


def test_rejects_non_polynomials():
    with pytest.raises(ValueError):
        act_left(S1.x(), S1.y())
    with pytest.raises(ValueError):
        act_right_on_ypoly(S1.x(), S1.x())
    with pytest.raises(ValueError):
        act_right_on_ypoly(ypoly(S1, [1]), S2.x(1))


@given(elements(S2, 2), elements(S2, 2), st.tuples(st.integers(0, 3), st.integers(0, 3)))
@settings(max_examples=60)
def test_left_module_axiom(f, g, alpha):
    p = poly(S2, {alpha: 1})
    assert act_left(f * g, p) == act_left(f, act_left(g, p))


@given(elements(S1, 3), elements(S1, 3), st.lists(st.integers(-3, 3), max_size=5))
@settings(max_examples=60)
def test_right_module_axiom(f, g, coeffs):
    q = ypoly(S1, coeffs)
    assert act_right_on_ypoly(q, f * g) == act_right_on_ypoly(act_right_on_ypoly(q, f), g)


def test_action_factors_through_quotient():
    rng = random.Random(2)
    one = poly(S2, {(0, 0): 1})
    for _ in range(40):
        f = random_element(rng, S2, 2)
        h = random_element(rng, S2, 2)
        i = rng.randint(1, 2)
        assert act_left(f + h * S2.y(i), one) == act_left(f, one)


def test_local_nilpotence():
    rng = random.Random(5)
    for _ in range(30):
        coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
        q = ypoly(S1, coeffs)
        k = nilpotence_index(q)
        assert k <= q.degree() + 1


def test_x_minus_one_injective():
    for d in range(8):
        assert x_minus_one_injective_on_ypolys(S1, d)
