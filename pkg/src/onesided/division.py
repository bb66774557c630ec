"""One-sided division, the normality endomorphism tau_t, and regularity checks.

Ideal membership is not decidable on a finite truncation, so division
searches boxes of increasing size and reports ``not-found-up-to-degree``
when nothing turns up: bounded evidence, never a proof of non-membership.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, Monomial
from .linalg import FULL, TruncBasis, kernel, mult_map, solve

T_ON_RIGHT = "t-on-right"
T_ON_LEFT = "t-on-left"

DEFAULT_MAX_DEG = 8

_SIDE_ALIASES = {"right": T_ON_RIGHT, T_ON_RIGHT: T_ON_RIGHT,
                 "left": T_ON_LEFT, T_ON_LEFT: T_ON_LEFT}


class TauError(ArithmeticError):
    """tau_t(a) does not exist at the searched degrees or is not unique."""


def _side(side: str) -> str:
    try:
        return _SIDE_ALIASES[side]
    except KeyError:
        raise ValueError(f"side must be one of {sorted(_SIDE_ALIASES)}") from None


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of a bounded one-sided division.

    ``status`` is ``"found"`` (and ``quotient`` is set) or
    ``"not-found-up-to-degree"`` with ``degree_used`` the last box searched.
    """

    quotient: Element | None
    degree_used: int
    status: str

    @property
    def found(self) -> bool:
        return self.quotient is not None

    def to_json(self) -> dict:
        return {"status": self.status, "degree_used": self.degree_used,
                "quotient": None if self.quotient is None else str(self.quotient)}


def divide(f: Element, t: Element, side: str = T_ON_RIGHT,
           max_d: int = DEFAULT_MAX_DEG) -> DivisionResult:
    """Find g with g*t = f (``t-on-right``) or t*g = f (``t-on-left``).

    Boxes d = deg(f), ..., max_d are tried in order; the first solution wins.
    """
    side = _side(side)
    mult_side = "right" if side == T_ON_RIGHT else "left"
    last = max_d
    for d in range(f.degree(), max_d + 1):
        g = solve(mult_map(t, mult_side, TruncBasis(f.n, d, FULL)), f)
        last = d
        if g is not None:
            check = g * t if side == T_ON_RIGHT else t * g
            if check != f:
                raise ArithmeticError(f"division produced a wrong quotient {g}")
            return DivisionResult(g, d, "found")
    return DivisionResult(None, last, "not-found-up-to-degree")


def pi_complement_divisor(f: Element) -> Element:
    """Closed-form g in S_1 with g*(x-1) = f - pi(f).

    Built termwise from x^a - 1 = (1 + x + ... + x^(a-1))(x-1) and
    y^b - 1 = -(y + y^2 + ... + y^b)(x-1).
    """
    if f.n != 1:
        raise ValueError("pi_complement_divisor is defined for n = 1 only")
    parent = f.parent
    terms: dict[Monomial, object] = {}
    ring = f.ring

    def put(a: int, b: int, c):
        m = Monomial((a,), (b,))
        terms[m] = ring.add(terms.get(m, ring.zero), c)

    for m, c in f.terms.items():
        a, b = m.alpha[0], m.beta[0]
        # x^a y^b - 1 = x^a (y^b - 1) + (x^a - 1)
        for j in range(1, b + 1):
            put(a, j, ring.neg(c))
        for i in range(a):
            put(i, 0, c)
    return parent.element(terms)


def tau(t: Element, a: Element, max_d: int = DEFAULT_MAX_DEG) -> Element:
    """The unique g with a*t = t*g.

    Raises :class:`TauError` when no g is found up to ``max_d`` or when t has
    a nonzero left annihilator in the box where g was found.
    """
    res = divide(a * t, t, T_ON_LEFT, max_d)
    if not res.found:
        raise TauError(f"no g with ({a})*t = t*g found up to degree {res.degree_used}")
    if kernel(t, "left", res.degree_used):
        raise TauError(f"t = {t} is not left regular at degree {res.degree_used}; tau is not unique")
    return res.quotient


def check_t2_condition(t: Element, sample, max_d: int = DEFAULT_MAX_DEG) -> dict:
    """For each a in ``sample``, test t*a - a*t in t^2 * S with an explicit quotient."""
    t2 = t * t
    cases = []
    for a in sample:
        c = t * a - a * t
        res = divide(c, t2, T_ON_LEFT, max_d)
        cases.append({"a": str(a), "commutator": str(c), "member": res.found,
                      "quotient": None if res.quotient is None else str(res.quotient),
                      "degree_used": res.degree_used})
    return {"t": str(t), "t_squared": str(t2), "cases": cases,
            "passed": all(case["member"] for case in cases)}


def regularity_report(t: Element, max_d: int = 6) -> dict:
    """Kernels of g -> t*g and g -> g*t on every box d = 0..max_d."""
    rows = []
    for d in range(max_d + 1):
        left = kernel(t, "left", d)
        right = kernel(t, "right", d)
        rows.append({"d": d,
                     "left_annihilators": [str(g) for g in left],
                     "right_annihilators": [str(g) for g in right]})
    return {"t": str(t), "max_d": max_d, "boxes": rows,
            "passed": all(not r["left_annihilators"] and not r["right_annihilators"] for r in rows)}
