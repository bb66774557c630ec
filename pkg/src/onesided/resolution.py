"""The sequence 0 -> S_1 --(x-1)--> S_1 --pi--> A -> 0 and S_1 = A + (x-1), on boxes."""
from __future__ import annotations

from .algebra import Element, SnAlgebra, box_monomials
from .coeff_ring import QQ, RingSpec
from .division import pi_complement_divisor
from .linalg import FULL, Span, TruncBasis, image_in_box, mult_map, nullspace, solve


def decomposition_check(f: Element) -> dict:
    """Split f = pi(f) + r with r = divisor * (x - 1), all checked exactly."""
    if f.n != 1:
        raise ValueError("decomposition_check needs n = 1")
    p = f.pi()
    r = f - f.parent.scalar(p)
    g = pi_complement_divisor(f)
    x = f.parent.x()
    ok = r.pi().is_zero() and g * (x - 1) == r
    return {"f": str(f), "pi": str(p), "remainder": str(r), "divisor": str(g), "passed": ok}


def sam_sequence_check(d: int, ring: RingSpec = QQ) -> dict:
    """Exactness of S_1 --(x-1)--> S_1 --pi--> A on the box of size d."""
    ring.require_field()
    S = SnAlgebra(1, ring)
    x = S.x()
    t = x - 1
    M = mult_map(t, "right", TruncBasis(1, d, FULL))
    injective = not nullspace(M)
    composite_zero = all(S.element(col).pi().is_zero() for col in M.columns)

    # ker(pi) in the box is spanned by m - 1 for the non-unit monomials m
    ker_pi = [S.element({m: 1}) - 1 for m in box_monomials(1, d) if any(m.alpha + m.beta)]
    middle = True
    for f in ker_pi:
        g = solve(M, f)
        if g is None or g * t != f or g != pi_complement_divisor(f):
            middle = False
            break

    # exact subspace comparison: ker(pi) ∩ box d == image of box d+1 ∩ box d
    image = image_in_box(mult_map(t, "right", TruncBasis(1, d + 1, FULL)), d)
    k_span = Span(ring, ker_pi)
    i_span = Span(ring, image)
    subspace_equal = k_span == i_span
    return {"d": d, "injective": injective, "pi_after_x_minus_1_zero": composite_zero,
            "middle_exact_closed_form": middle, "ker_pi_dimension": k_span.dimension,
            "image_dimension": i_span.dimension, "ker_pi_equals_image": subspace_equal,
            "passed": injective and composite_zero and middle and subspace_equal}
