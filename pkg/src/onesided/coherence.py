"""The kernel of right multiplication by x_1 - x_2 in S_2.

The anti-diagonal sums v_alpha(s) = sum_{b1+b2=s} E_{alpha,b} of matrix units
are killed by x_1 - x_2 on the right, satisfy v_alpha(s) = x^alpha v_0(s),
and span the whole kernel; on the E-span box of size d the kernel has
dimension (d+1)^3.  Unbounded growth in d is the finite shadow of the kernel
not being finitely generated.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Element, SnAlgebra, expand_E
from .coeff_ring import QQ, RingSpec
from .linalg import ESPAN, Span, TruncBasis, mult_map, nullspace


@dataclass(frozen=True)
class KernelVector:
    alpha: tuple[int, int]
    s: int
    element: Element


def _alg(ring: RingSpec) -> SnAlgebra:
    return SnAlgebra(2, ring)


def v(alpha, s: int, ring: RingSpec = QQ) -> KernelVector:
    """v_alpha(s) = sum of E_{alpha, (b1, b2)} over b1 + b2 = s."""
    alpha = tuple(alpha)
    if len(alpha) != 2 or min(alpha) < 0 or s < 0:
        raise ValueError("alpha must be a pair of naturals and s >= 0")
    S = _alg(ring)
    total = S.zero
    for b1 in range(s + 1):
        total = total + expand_E(S, alpha, (b1, s - b1))
    return KernelVector(alpha, s, total)


def x_minus(ring: RingSpec = QQ) -> Element:
    S = _alg(ring)
    return S.x(1) - S.x(2)


def e_times_x(alpha, beta, k: int, ring: RingSpec = QQ) -> Element:
    """E_{alpha beta} x_k by the shift rule: E_{alpha, beta - e_k}, or 0 if beta_k = 0."""
    beta = list(beta)
    if beta[k - 1] == 0:
        return _alg(ring).zero
    beta[k - 1] -= 1
    return expand_E(_alg(ring), alpha, beta)


def _box(d: int):
    return list(itertools.product(range(d + 1), repeat=2))


def verify_kernel_identities(max_s: int, max_alpha: int, ring: RingSpec = QQ) -> dict:
    """Check v_a(s)(x1-x2) = 0, y^b v_0(s) = 0 for 0 < |b| <= max_s, v_a(s) = x^a v_0(s)."""
    S = _alg(ring)
    t = x_minus(ring)
    annihilated = True
    shifted = True
    failures = []
    for s in range(max_s + 1):
        v0 = v((0, 0), s, ring).element
        for alpha in _box(max_alpha):
            va = v(alpha, s, ring).element
            if va * t:
                annihilated = False
                failures.append({"check": "annihilation", "alpha": list(alpha), "s": s})
            if S.monomial(alpha, (0, 0)) * v0 != va:
                shifted = False
                failures.append({"check": "shift", "alpha": list(alpha), "s": s})
    killed_by_y = True
    for s in range(max_s + 1):
        v0 = v((0, 0), s, ring).element
        for b in itertools.product(range(max_s + 1), repeat=2):
            if 0 < sum(b) <= max_s and S.monomial((0, 0), b) * v0:
                killed_by_y = False
                failures.append({"check": "y-annihilation", "beta": list(b), "s": s})
    return {"max_s": max_s, "max_alpha": max_alpha,
            "annihilated_by_x1_minus_x2": annihilated,
            "killed_by_y_monomials": killed_by_y,
            "equals_x_alpha_v0": shifted,
            "failures": failures,
            "passed": annihilated and killed_by_y and shifted}


def kernel_basis(d: int, ring: RingSpec = QQ) -> list[Element]:
    """Nullspace of right multiplication by x1 - x2 on the E-span box of size d."""
    return nullspace(mult_map(x_minus(ring), "right", TruncBasis(2, d, ESPAN)))


def kernel_dimension_check(d: int, ring: RingSpec = QQ) -> dict:
    """Compare the computed kernel with span{v_a(s) : a in box d, s <= d}."""
    ring.require_field()
    computed = kernel_basis(d, ring)
    predicted = [v(alpha, s, ring).element for alpha in _box(d) for s in range(d + 1)]
    k_span = Span(ring, computed)
    v_span = Span(ring, predicted)
    expected = (d + 1) ** 3
    basis_match = k_span == v_span
    laurent_zero = all(f.laurent_image().is_zero() for f in computed)
    return {"d": d, "kernel_dimension": len(computed), "expected_dimension": expected,
            "span_v_dimension": v_span.dimension, "basis_match": basis_match,
            "laurent_images_zero": laurent_zero,
            "passed": len(computed) == expected and v_span.dimension == expected
            and basis_match and laurent_zero}


def direct_sum_check(d: int, ring: RingSpec = QQ) -> dict:
    """Rank of {x^a v_0(s) : a in box d, s <= d}; full rank means the sum is direct there."""
    ring.require_field()
    S = _alg(ring)
    vectors = [S.monomial(alpha, (0, 0)) * v((0, 0), s, ring).element
               for alpha in _box(d) for s in range(d + 1)]
    r = Span(ring, vectors).dimension
    per_s = {}
    for s in range(d + 1):
        v0 = v((0, 0), s, ring).element
        vs = [S.monomial(alpha, (0, 0)) * v0 for alpha in _box(d)]
        per_s[s] = Span(ring, vs).dimension == len(vs)
    return {"d": d, "rank": r, "count": len(vectors), "independent_per_s": per_s,
            "passed": r == len(vectors) and all(per_s.values())}


def e_span_invariance(d: int, ring: RingSpec = QQ) -> bool:
    """E_{ab} x_k from the shift rule agrees with full multiplication for all a, b in box d."""
    S = _alg(ring)
    for alpha in _box(d):
        for beta in _box(d):
            e = expand_E(S, alpha, beta)
            for k in (1, 2):
                if e * S.x(k) != e_times_x(alpha, beta, k, ring):
                    return False
    return True


def coherence_report(max_d: int, ring: RingSpec = QQ) -> dict:
    """Per-d kernel dimension, basis match and identity checks."""
    per_d = [kernel_dimension_check(d, ring) for d in range(max_d + 1)]
    identities = verify_kernel_identities(max_d, max_d, ring)
    direct = direct_sum_check(max_d, ring)
    return {"max_d": max_d, "kernels": per_d, "identities": identities,
            "direct_sum": direct, "e_span_invariant": e_span_invariance(max_d, ring),
            "passed": all(r["passed"] for r in per_d) and identities["passed"]
            and direct["passed"]}
