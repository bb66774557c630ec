import pytest
from hypothesis import strategies as st

from onesided.algebra import Monomial, SnAlgebra
from onesided.coeff_ring import QQ, ZZ, Zmod

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def monomials(n, max_exp=4):
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.builds(Monomial, vec, vec)


def elements(parent, max_exp=3, max_terms=4):
    coeffs = st.integers(-6, 6)
    return st.dictionaries(monomials(parent.n, max_exp), coeffs, max_size=max_terms).map(parent.element)


@pytest.fixture
def S1():
    return SnAlgebra(1, QQ)


@pytest.fixture
def S2():
    return SnAlgebra(2, QQ)


@pytest.fixture(params=[ZZ, QQ, Zmod(5)], ids=str)
def any_ring(request):
    return request.param
