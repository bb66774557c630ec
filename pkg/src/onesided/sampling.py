"""Seeded random monomials and elements for the randomized checks."""
from __future__ import annotations

import random

from .algebra import Element, Monomial, SnAlgebra


def random_monomial(rng: random.Random, n: int, d: int) -> Monomial:
    return Monomial(tuple(rng.randint(0, d) for _ in range(n)),
                    tuple(rng.randint(0, d) for _ in range(n)))


def random_element(rng: random.Random, parent: SnAlgebra, d: int, max_terms: int = 4,
                   coeff_range: int = 5) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, parent.n, d)] = rng.randint(-coeff_range, coeff_range)
    return parent.element(terms)
