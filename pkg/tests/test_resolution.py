import random

import pytest

from onesided.algebra import SnAlgebra
from onesided.coeff_ring import QQ, ZZ, FieldRequiredError
from onesided.division import pi_complement_divisor
from onesided.linalg import FULL, TruncBasis, mult_map, solve
from onesided.resolution import decomposition_check, sam_sequence_check
from onesided.sampling import random_element

S = SnAlgebra(1, QQ)
x, y = S.x(), S.y()


@pytest.mark.parametrize("d", range(5))
def test_sam_sequence(d):
    rep = sam_sequence_check(d)
    assert rep["passed"]
    assert rep["ker_pi_dimension"] == (d + 1) ** 2 - 1


def test_preimage_of_x2_minus_1():
    assert solve(mult_map(x - 1, "right", TruncBasis(1, 2, FULL)), x * x - 1) == x + 1


def test_preimage_of_e00():
    e00 = S.E((0,), (0,))
    g = solve(mult_map(x - 1, "right", TruncBasis(1, 1, FULL)), e00)
    assert g is not None and g * (x - 1) == e00
    assert e00.pi().is_zero()


def test_decomposition_examples():
    assert decomposition_check(x ** 3 * y)["pi"] == "1"
    one = decomposition_check(S.one)
    assert one["remainder"] == "0" and one["divisor"] == "0"
    e12 = decomposition_check(S.E((1,), (2,)))
    assert e12["pi"] == "0" and e12["passed"]


def test_decomposition_random():
    rng = random.Random(3)
    for _ in range(200):
        assert decomposition_check(random_element(rng, S, 3))["passed"]


def test_decomposition_divisor_consistent():
    f = 2 * x * y * y - 3 * x + 5
    assert pi_complement_divisor(f) * (x - 1) == f - 4


def test_decomposition_n_check():
    with pytest.raises(ValueError):
        decomposition_check(SnAlgebra(2).x(1))


def test_sam_needs_field():
    with pytest.raises(FieldRequiredError):
        sam_sequence_check(1, ZZ)
