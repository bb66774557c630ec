import random

import pytest

from onesided.algebra import SnAlgebra, expand_E
from onesided.coeff_ring import QQ, Zmod
from onesided.coherence import (coherence_report, direct_sum_check, e_span_invariance, e_times_x,
                                kernel_basis, kernel_dimension_check, v, verify_kernel_identities,
                                x_minus)

S2 = SnAlgebra(2, QQ)


def test_v00_0():
    e = S2.E((0, 0), (0, 0))
    assert v((0, 0), 0).element == e
    assert e == (1 - S2.x(1) * S2.y(1)) * (1 - S2.x(2) * S2.y(2))


def test_v00_1():
    assert v((0, 0), 1).element == S2.E((0, 0), (1, 0)) + S2.E((0, 0), (0, 1))


def test_v_alpha_is_shift_of_v0():
    rng = random.Random(0)
    for _ in range(20):
        alpha = (rng.randint(0, 4), rng.randint(0, 4))
        s = rng.randint(0, 4)
        assert v(alpha, s).element == S2.monomial(alpha, (0, 0)) * v((0, 0), s).element


def test_kernel_identities_small_cases():
    t = x_minus()
    assert (v((0, 0), 0).element * t).is_zero()
    assert (S2.y(1) * v((0, 0), 2).element).is_zero()
    assert v((2, 1), 3).element == S2.monomial((2, 1), (0, 0)) * v((0, 0), 3).element


def test_verify_identities_report():
    rep = verify_kernel_identities(3, 2)
    assert rep["passed"] and not rep["failures"]


@pytest.mark.parametrize("d, dim", [(0, 1), (1, 8), (2, 27)])
def test_kernel_dimension(d, dim):
    rep = kernel_dimension_check(d)
    assert rep["kernel_dimension"] == dim
    assert rep["basis_match"] and rep["laurent_images_zero"] and rep["passed"]


def test_kernel_d0_is_v0():
    assert kernel_basis(0) == [v((0, 0), 0).element]


def test_direct_sum():
    assert direct_sum_check(0)["rank"] == 1
    rep = direct_sum_check(2)
    assert rep["rank"] == 27 and rep["passed"]


def test_shift_rule_matches_multiplication():
    assert e_span_invariance(3)
    assert e_times_x((1, 1), (0, 2), 1).is_zero()
    assert e_times_x((1, 1), (0, 2), 2) == expand_E(S2, (1, 1), (0, 1))


def test_mod_p_kernel():
    assert kernel_dimension_check(2, Zmod(5))["passed"]


def test_report():
    rep = coherence_report(1)
    assert rep["passed"] and [k["kernel_dimension"] for k in rep["kernels"]] == [1, 8]
