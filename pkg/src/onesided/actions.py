"""Module actions of S_n on polynomials.

* P_n(A) = A[x_1..x_n] is a left S_n-module, P_n ~ S_n / sum(S_n y_i):
  x_i * x^a = x^(a+e_i), y_i * x^a = x^(a-e_i) or 0 when a_i = 0.
* A[y] is a right S_1-module, A[y] ~ S_1 / x S_1:
  y^i . x = y^(i-1) or 0 when i = 0, y^i . y = y^(i+1).

Polynomials are stored as Elements whose y-exponents (left module) or
x-exponents (right module) vanish, so both actions are "multiply in S_n and
drop the terms that die in the quotient".
"""
from __future__ import annotations

from .algebra import Element, Monomial, SnAlgebra
from .linalg import rank


def poly(parent: SnAlgebra, terms: dict) -> Element:
    """The polynomial sum c_a x^a as an Element (terms: exponent tuple -> coeff)."""
    z = (0,) * parent.n
    return parent.element({Monomial(tuple(a), z): c for a, c in terms.items()})


def ypoly(parent: SnAlgebra, coeffs) -> Element:
    """sum_i coeffs[i] y^i in S_1."""
    if parent.n != 1:
        raise ValueError("A[y] is a right module over S_1 only")
    return parent.element({Monomial((0,), (i,)): c for i, c in enumerate(coeffs)})


def is_poly(p: Element) -> bool:
    return all(not any(m.beta) for m in p.terms)


def is_ypoly(q: Element) -> bool:
    return q.n == 1 and all(not any(m.alpha) for m in q.terms)


def _keep(f: Element, pred) -> Element:
    return f.parent.element({m: c for m, c in f.terms.items() if pred(m)})


def act_left(f: Element, p: Element) -> Element:
    """f * p for the left S_n-module P_n(A)."""
    if not is_poly(p):
        raise ValueError(f"{p} is not a polynomial in x")
    return _keep(f * p, lambda m: not any(m.beta))


def act_right_on_ypoly(q: Element, f: Element) -> Element:
    """q . f for the right S_1-module A[y]."""
    if f.n != 1 or q.n != 1:
        raise ValueError("the right action on A[y] needs n = 1")
    if not is_ypoly(q):
        raise ValueError(f"{q} is not a polynomial in y")
    return _keep(q * f, lambda m: not any(m.alpha))


def e_unit_action(beta, gamma, alpha, parent: SnAlgebra) -> Element:
    """E_{beta gamma} * x^alpha = delta(gamma, alpha) x^beta, read off directly."""
    if tuple(gamma) != tuple(alpha):
        return parent.zero
    return poly(parent, {tuple(beta): 1})


def nilpotence_index(q: Element) -> int:
    """Smallest i >= 0 with q . x^i = 0 in A[y]."""
    x = q.parent.x()
    bound = q.degree() + 1
    i = 0
    while q:
        if i > bound:
            raise ArithmeticError("right multiplication by x is not locally nilpotent here")
        q = act_right_on_ypoly(q, x)
        i += 1
    return i


def x_minus_one_injective_on_ypolys(parent: SnAlgebra, d: int) -> bool:
    """q -> q . (x - 1) is injective on polynomials in y of degree <= d."""
    x = parent.x()
    images = [act_right_on_ypoly(ypoly(parent, [0] * i + [1]), x - 1) for i in range(d + 1)]
    return rank(images, parent.ring) == d + 1
