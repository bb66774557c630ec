"""Normal-form arithmetic in the algebra S_n(A) of one-sided inverses.

S_n(A) is generated over A by x_1..x_n, y_1..y_n subject to y_i x_i = 1 and
every other pair of generators commuting.  Its A-basis is the set of words
x^alpha y^beta, and the product of two basis words is again a basis word:

    x^a y^b * x^c y^d = x^(a + (c-b)_+) y^(d + (b-c)_+)

componentwise, so multiplication is a sparse convolution with no rewriting.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .coeff_ring import Coefficient, QQ, RingMismatchError, RingSpec


class Monomial(NamedTuple):
    """The basis word x^alpha y^beta."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def degree(self) -> int:
        """Largest single exponent (the box filtration degree)."""
        return max(itertools.chain(self.alpha, self.beta), default=0)

    def star(self) -> Monomial:
        return Monomial(self.beta, self.alpha)


def one_monomial(n: int) -> Monomial:
    z = (0,) * n
    return Monomial(z, z)


_PRODUCTS: dict = {}


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    key = (m1, m2)
    m = _PRODUCTS.get(key)
    if m is None:
        if len(_PRODUCTS) > 1 << 18:
            _PRODUCTS.clear()
        m = _PRODUCTS[key] = _mono_mul(m1, m2)
    return m


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    a, b = m1
    c, d = m2
    alpha = tuple(ai + ci - bi if ci > bi else ai for ai, bi, ci in zip(a, b, c))
    beta = tuple(di + bi - ci if bi > ci else di for bi, ci, di in zip(b, c, d))
    return tuple.__new__(Monomial, (alpha, beta))


def term_key(m: Monomial):
    """Canonical term order: total degree, then lexicographic on (alpha, beta)."""
    return (sum(m.alpha) + sum(m.beta), m.alpha, m.beta)


def box_monomials(n: int, d: int) -> list[Monomial]:
    """All monomials with every exponent <= d, in canonical order."""
    vecs = list(itertools.product(range(d + 1), repeat=n))
    mons = [Monomial(a, b) for a in vecs for b in vecs]
    mons.sort(key=term_key)
    return mons


class SnAlgebra:
    """The algebra S_n(A) over one of the exact coefficient rings."""

    def __init__(self, n: int, ring: RingSpec = QQ):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.ring = ring

    def __eq__(self, other):
        return isinstance(other, SnAlgebra) and (self.n, self.ring) == (other.n, other.ring)

    def __hash__(self):
        return hash((SnAlgebra, self.n, self.ring))

    def __repr__(self):
        return f"SnAlgebra(n={self.n}, ring={self.ring})"

    # -- constructors -----------------------------------------------------
    def element(self, terms: dict | Iterable = ()) -> Element:
        return Element(self, terms)

    @property
    def zero(self) -> Element:
        return Element(self, {})

    @property
    def one(self) -> Element:
        return self.scalar(1)

    def scalar(self, c) -> Element:
        return Element(self, {one_monomial(self.n): c})

    def monomial(self, alpha, beta, coeff=1) -> Element:
        alpha, beta = tuple(alpha), tuple(beta)
        if len(alpha) != self.n or len(beta) != self.n:
            raise ValueError(f"exponent vectors must have length {self.n}")
        if min(alpha + beta, default=0) < 0:
            raise ValueError("exponents must be non-negative")
        return Element(self, {Monomial(alpha, beta): coeff})

    def _unit_vec(self, i: int, k: int = 1) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        v = [0] * self.n
        v[i - 1] = k
        return tuple(v)

    def x(self, i: int = 1) -> Element:
        return self.monomial(self._unit_vec(i), (0,) * self.n)

    def y(self, i: int = 1) -> Element:
        return self.monomial((0,) * self.n, self._unit_vec(i))

    def gens(self) -> tuple[list[Element], list[Element]]:
        return ([self.x(i) for i in range(1, self.n + 1)],
                [self.y(i) for i in range(1, self.n + 1)])

    def E(self, alpha, beta) -> Element:
        """The matrix unit E_{alpha beta} = prod_i (x_i^a y_i^b - x_i^(a+1) y_i^(b+1))."""
        return expand_E(self, alpha, beta)

    def E_single(self, i: int, a: int, b: int) -> Element:
        """E_{ab}(i) = x_i^a y_i^b - x_i^(a+1) y_i^(b+1) in the i-th variable only."""
        ea, eb = self._unit_vec(i, a), self._unit_vec(i, b)
        ea1, eb1 = self._unit_vec(i, a + 1), self._unit_vec(i, b + 1)
        return Element(self, {Monomial(ea, eb): 1, Monomial(ea1, eb1): -1})

    def coerce(self, value) -> Element:
        if isinstance(value, Element):
            if value.parent != self:
                raise RingMismatchError(f"element of {value.parent}, expected {self}")
            return value
        if isinstance(value, (int, Fraction, Coefficient)):
            return self.scalar(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def from_json(self, data: dict) -> Element:
        return element_from_json(data)


def expand_E(parent: SnAlgebra, alpha, beta) -> Element:
    alpha, beta = tuple(alpha), tuple(beta)
    n = parent.n
    if len(alpha) != n or len(beta) != n:
        raise ValueError(f"E-index vectors must have length {n}")
    terms = {}
    for subset in itertools.product((0, 1), repeat=n):
        sign = -1 if sum(subset) % 2 else 1
        m = Monomial(tuple(a + s for a, s in zip(alpha, subset)),
                     tuple(b + s for b, s in zip(beta, subset)))
        terms[m] = sign
    return Element(parent, terms)


class Element:
    """An element of S_n(A) in normal form: a sparse map Monomial -> coefficient.

    Zero coefficients are never stored; the zero element has no terms.
    Elements are treated as immutable values.
    """

    __slots__ = ("parent", "_terms", "_hash")

    def __init__(self, parent: SnAlgebra, terms=(), *, _raw: bool = False):
        self.parent = parent
        self._hash = None
        if _raw:
            self._terms = terms
            return
        ring = parent.ring
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Monomial, object] = {}
        for m, c in items:
            if not isinstance(m, Monomial):
                m = Monomial(tuple(m[0]), tuple(m[1]))
            if m.n != parent.n:
                raise ValueError(f"monomial {m} has wrong number of variables for n={parent.n}")
            c = ring.canonical(c)
            if m in acc:
                c = ring.add(acc[m], c)
            acc[m] = c
        self._terms = {m: c for m, c in acc.items() if c != 0}

    # -- basic accessors ----------------------------------------------------
    @property
    def n(self) -> int:
        return self.parent.n

    @property
    def ring(self) -> RingSpec:
        return self.parent.ring

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, object]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: term_key(t[0]))

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=term_key)

    def coefficient(self, m) -> Coefficient:
        if not isinstance(m, Monomial):
            m = Monomial(tuple(m[0]), tuple(m[1]))
        return Coefficient(self.ring, self._terms.get(m, 0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Smallest d such that the element lies in the truncation box of size d."""
        return max((m.degree for m in self._terms), default=0)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            other = self.parent.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.parent == other.parent and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.parent, frozenset(self._terms.items())))
        return self._hash

    # -- ring operations ------------------------------------------------------
    def _coerce(self, other) -> Element:
        return self.parent.coerce(other)

    def __add__(self, other):
        other = self._coerce(other)
        ring = self.ring
        acc = dict(self._terms)
        for m, c in other._terms.items():
            v = ring.add(acc[m], c) if m in acc else c
            if v == 0:
                acc.pop(m, None)
            else:
                acc[m] = v
        return Element(self.parent, acc, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        ring = self.ring
        return Element(self.parent, {m: ring.neg(c) for m, c in self._terms.items()}, _raw=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> Element:
        ring = self.ring
        c = ring.canonical(c)
        if c == 0:
            return self.parent.zero
        acc = {}
        for m, v in self._terms.items():
            w = ring.mul(c, v)
            if w != 0:
                acc[m] = w
        return Element(self.parent, acc, _raw=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        other = self._coerce(other)
        ring = self.ring
        rmul, radd = ring.mul, ring.add
        acc: dict[Monomial, object] = {}
        right = list(other._terms.items())
        for m1, c1 in self._terms.items():
            for m2, c2 in right:
                m = mono_mul(m1, m2)
                c = rmul(c1, c2)
                if m in acc:
                    acc[m] = radd(acc[m], c)
                else:
                    acc[m] = c
        return Element(self.parent, {m: c for m, c in acc.items() if c != 0}, _raw=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.parent.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure maps -------------------------------------------------------
    def involution(self) -> Element:
        """The A-linear anti-automorphism with x_i* = y_i, y_i* = x_i."""
        return Element(self.parent, {m.star(): c for m, c in self._terms.items()}, _raw=True)

    def pi(self) -> Coefficient:
        """Augmentation: every x_i and y_i is sent to 1."""
        ring = self.ring
        total = ring.zero
        for c in self._terms.values():
            total = ring.add(total, c)
        return Coefficient(ring, total)

    def laurent_image(self) -> LaurentPoly:
        """Image in A[x^{+-1}] under y_i -> x_i^{-1}."""
        acc = {}
        for m, c in self._terms.items():
            e = tuple(a - b for a, b in zip(m.alpha, m.beta))
            acc[e] = self.ring.add(acc[e], c) if e in acc else c
        return LaurentPoly(self.n, self.ring, acc)

    def truncate(self, d: int) -> Element:
        """Keep only the terms whose exponents are all <= d."""
        return Element(self.parent, {m: c for m, c in self._terms.items() if m.degree <= d},
                       _raw=True)

    def change_ring(self, ring: RingSpec) -> Element:
        return Element(SnAlgebra(self.n, ring), self._terms)

    # -- display / serialisation ---------------------------------------------
    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        return format_element(self)

    def to_json(self) -> dict:
        ring = self.ring
        return {
            "n": self.n,
            "ring": str(ring),
            "terms": [{"alpha": list(m.alpha), "beta": list(m.beta), "coeff": ring.format(c)}
                      for m, c in self.items()],
        }


def element_from_json(data: dict) -> Element:
    ring = RingSpec.parse(data["ring"])
    parent = SnAlgebra(int(data["n"]), ring)
    terms = [(Monomial(tuple(t["alpha"]), tuple(t["beta"])), ring.parse_value(str(t["coeff"])))
             for t in data["terms"]]
    return Element(parent, terms)


def _gen_name(kind: str, i: int, n: int) -> str:
    return kind if n == 1 else f"{kind}{i}"


def format_monomial(m: Monomial) -> str:
    n = m.n
    parts = []
    for kind, vec in (("x", m.alpha), ("y", m.beta)):
        for i, e in enumerate(vec, start=1):
            if e == 1:
                parts.append(_gen_name(kind, i, n))
            elif e > 1:
                parts.append(f"{_gen_name(kind, i, n)}^{e}")
    return "*".join(parts) if parts else "1"


def _join_terms(pairs, ring: RingSpec) -> str:
    """Render (monomial string, coefficient) pairs as a signed sum."""
    out = []
    for k, (mono, c) in enumerate(pairs):
        neg = False
        if isinstance(c, (int, Fraction)) and c < 0 and ring.modulus is None:
            neg, c = True, -c
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


def format_element(f: Element) -> str:
    return _join_terms(((format_monomial(m), c) for m, c in f.items()), f.ring)


class LaurentPoly:
    """A Laurent polynomial: sparse map from exponent vectors in Z^n to coefficients."""

    __slots__ = ("n", "ring", "_terms")

    def __init__(self, n: int, ring: RingSpec, terms: dict | None = None):
        self.n = n
        self.ring = ring
        terms = terms or {}
        self._terms = {tuple(e): ring.canonical(c) for e, c in terms.items()}
        self._terms = {e: c for e, c in self._terms.items() if c != 0}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.n, self.ring, self._terms) == (other.n, other.ring, other._terms)

    def __hash__(self):
        return hash((self.n, self.ring, frozenset(self._terms.items())))

    def _check(self, other):
        if (self.n, self.ring) != (other.n, other.ring):
            raise RingMismatchError("Laurent polynomials over different rings")

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = self.ring.add(acc[e], c) if e in acc else c
        return LaurentPoly(self.n, self.ring, acc)

    def __neg__(self):
        return LaurentPoly(self.n, self.ring, {e: self.ring.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        acc = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = self.ring.mul(c1, c2)
                acc[e] = self.ring.add(acc[e], c) if e in acc else c
        return LaurentPoly(self.n, self.ring, acc)

    def __str__(self):
        if not self._terms:
            return "0"
        pairs = []
        for e, c in sorted(self._terms.items(), key=lambda t: (sum(map(abs, t[0])), t[0])):
            mono = "*".join(
                _gen_name("x", i, self.n) + ("" if k == 1 else f"^{k}")
                for i, k in enumerate(e, start=1) if k != 0)
            pairs.append((mono or "1", c))
        return _join_terms(pairs, self.ring)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> dict:
        return {"n": self.n, "ring": str(self.ring),
                "terms": [{"exponent": list(e), "coeff": self.ring.format(c)}
                          for e, c in sorted(self._terms.items())]}


# module-level spellings of the element operations
def involution(f: Element) -> Element:
    return f.involution()


def pi(f: Element) -> Coefficient:
    return f.pi()


def laurent_image(f: Element) -> LaurentPoly:
    return f.laurent_image()


def truncate(f: Element, d: int) -> Element:
    return f.truncate(d)


def e_coordinates(f: Element) -> dict[Monomial, object]:
    """Coordinates of ``f`` in the matrix-unit basis {E_{alpha beta}}.

    The monomial coefficient of f at (a, b) is c_{a,b} - (alternating sum of
    c at (a - e_S, b - e_S)), so c_{a,b} is the sum of f's coefficients on the
    backward diagonal (a - k, b - k), k >= 0.  Raises ``ValueError`` when f
    is not in the span of the matrix units.
    """
    ring = f.ring
    if not f._terms:
        return {}
    n = f.n
    top_a = [max(m.alpha[i] for m in f._terms) for i in range(n)]
    top_b = [max(m.beta[i] for m in f._terms) for i in range(n)]
    keys = set()
    for m in f._terms:
        ranges = [range(min(top_a[i] - m.alpha[i], top_b[i] - m.beta[i]) + 1) for i in range(n)]
        for k in itertools.product(*ranges):
            keys.add(Monomial(tuple(a + s for a, s in zip(m.alpha, k)),
                              tuple(b + s for b, s in zip(m.beta, k))))
    coords: dict[Monomial, object] = {}
    for key in keys:
        total = ring.zero
        for m, c in f._terms.items():
            diff = [ka - a for ka, a in zip(key.alpha, m.alpha)]
            if min(diff) >= 0 and all(key.beta[i] - m.beta[i] == diff[i] for i in range(n)):
                total = ring.add(total, c)
        if total != 0:
            coords[key] = total
    rebuilt = f.parent.zero
    for key, c in coords.items():
        rebuilt = rebuilt + expand_E(f.parent, key.alpha, key.beta).scale(c)
    if rebuilt != f:
        raise ValueError("element is not in the span of the matrix units")
    return dict(sorted(coords.items(), key=lambda t: term_key(t[0])))
