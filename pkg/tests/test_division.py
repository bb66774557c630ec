import random

import pytest

from onesided.algebra import SnAlgebra
from onesided.coeff_ring import QQ, Zmod
from onesided.division import (T_ON_LEFT, T_ON_RIGHT, TauError, check_t2_condition, divide,
                               pi_complement_divisor, regularity_report, tau)
from onesided.sampling import random_element, random_monomial

S = SnAlgebra(1, QQ)
x, y = S.x(), S.y()
E00 = S.E((0,), (0,))


def test_divide_one_minus_y_by_x_minus_one():
    res = divide(1 - y, x - 1, T_ON_RIGHT)
    assert res.found and res.quotient == y and res.status == "found"


def test_divide_e00_by_y_minus_one_on_left():
    res = divide(E00, y - 1, T_ON_LEFT)
    assert res.quotient == x * y - 1


def test_e00_not_in_right_ideal_of_x_minus_one():
    res = divide(E00, x - 1, T_ON_LEFT, max_d=8)
    assert not res.found
    assert res.status == "not-found-up-to-degree" and res.degree_used == 8


def test_e00_in_left_ideal_of_x_minus_one():
    # E_00 does lie in S(x-1), the two-sided ideal (x-1)
    res = divide(E00, x - 1, T_ON_RIGHT)
    assert res.quotient == -E00


def test_divide_side_aliases():
    assert divide(1 - y, x - 1, "right").quotient == y
    with pytest.raises(ValueError):
        divide(1 - y, x - 1, "sideways")


@pytest.mark.parametrize("f, expected", [(x * x, x + 1), (y, -y)])
def test_pi_complement_divisor_examples(f, expected):
    assert pi_complement_divisor(f) == expected


def test_pi_complement_divisor_xy():
    g = pi_complement_divisor(x * y)
    assert g * (x - 1) == x * y - 1


def test_pi_complement_divisor_random():
    rng = random.Random(1)
    for _ in range(100):
        f = random_element(rng, S, 4)
        g = pi_complement_divisor(f)
        assert g * (x - 1) == f - f.pi().value


def test_pi_complement_divisor_needs_n1():
    with pytest.raises(ValueError):
        pi_complement_divisor(SnAlgebra(2).x(1))


def test_tau_examples():
    t = y - 1
    g = tau(t, x)
    assert g == 1 + x - x * y
    assert t * g == x * t
    assert tau(t, S.scalar(5)) == 5
    assert tau(t, y) == y


def test_tau_not_found():
    with pytest.raises(TauError):
        tau(y - 1, x, max_d=0)


def test_tau_not_unique():
    # E_00 has left annihilators, so tau_t is not well defined for t = E_00
    with pytest.raises(TauError):
        tau(E00, E00)


def test_tau_multiplicative_and_pi():
    rng = random.Random(4)
    t = y - 1
    for _ in range(15):
        a, b = random_element(rng, S, 2), random_element(rng, S, 2)
        ta, tb = tau(t, a, 12), tau(t, b, 12)
        assert tau(t, a * b, 12) == ta * tb
        assert ta.pi() == a.pi()


def test_t2_condition():
    rep = check_t2_condition(y - 1, [x, y, S.scalar(3), x * x, x * y, E00])
    assert rep["passed"]
    t2 = (y - 1) ** 2
    for case, a in zip(rep["cases"], [x, y, 3, x * x, x * y, E00]):
        assert case["member"]
    first = rep["cases"][0]
    assert first["commutator"] == str(E00)
    assert first["quotient"] == str(E00)
    assert t2 * E00 == E00
    assert rep["cases"][1]["commutator"] == "0"


def test_regularity_reports():
    assert regularity_report(x - 1, 6)["passed"]
    assert regularity_report(y - 1, 6)["passed"]
    rep = regularity_report(E00, 1)
    assert not rep["passed"]
    assert "x" in rep["boxes"][1]["left_annihilators"]
    assert E00 * x == 0


def test_normality_random_monomials():
    rng = random.Random(9)
    for _ in range(30):
        m = S.element({random_monomial(rng, 1, 3): 1})
        r1 = divide((x - 1) * m, x - 1, T_ON_RIGHT)
        r2 = divide(m * (y - 1), y - 1, T_ON_LEFT)
        assert r1.found and r1.quotient * (x - 1) == (x - 1) * m
        assert r2.found and (y - 1) * r2.quotient == m * (y - 1)


def test_ideals_x_minus_one_and_y_minus_one_coincide():
    assert divide(y - 1, x - 1, T_ON_RIGHT).found
    assert divide(x - 1, y - 1, T_ON_LEFT).found


def test_division_over_finite_field():
    F = SnAlgebra(1, Zmod(3))
    fx, fy = F.x(), F.y()
    assert divide(1 - fy, fx - 1, T_ON_RIGHT).quotient == fy
