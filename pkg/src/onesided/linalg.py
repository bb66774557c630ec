"""Exact linear algebra on truncation boxes of S_n.

Left and right multiplication by a fixed element restricted to a degree box
is a finite matrix.  The domain is truncated and the codomain is enlarged to
hold every image, so kernel vectors are true annihilators in S_n, not
artefacts of the cut-off.

Matrices are stored as sparse columns.  Elimination runs column by column
into an echelon form keyed by the leading (largest) row; over Q the vectors
are kept integral (fraction-free elimination with content removal), over
Z/p ordinary Gaussian elimination is used.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import Element, Monomial, SnAlgebra, box_monomials, e_coordinates, expand_E, term_key
from .coeff_ring import RingKind, RingSpec

FULL = "full"
ESPAN = "e-span"


def _row(m: Monomial):
    return term_key(m)


def _mono(row) -> Monomial:
    return Monomial(row[1], row[2])


@dataclass(frozen=True)
class TruncBasis:
    """Ordered basis of a truncation box.

    ``kind="full"``: monomials x^a y^b with all exponents <= d, size (d+1)^(2n).
    ``kind="e-span"``: matrix units E_{ab} with all indices <= d.
    """

    n: int
    d: int
    kind: str = FULL

    def __post_init__(self):
        if self.kind not in (FULL, ESPAN):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.d < 0 or self.n < 1:
            raise ValueError("need n >= 1 and d >= 0")

    @cached_property
    def items(self) -> list[Monomial]:
        return box_monomials(self.n, self.d)

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.items)}

    def __len__(self):
        return (self.d + 1) ** (2 * self.n)

    def contains(self, m: Monomial) -> bool:
        return m.degree <= self.d

    def element(self, parent: SnAlgebra, m: Monomial) -> Element:
        if self.kind == FULL:
            return parent.element({m: 1})
        return expand_E(parent, m.alpha, m.beta)

    def coordinates(self, f: Element) -> dict[Monomial, object] | None:
        """Coordinates of ``f`` in this basis, or None if f is outside its span."""
        if self.kind == FULL:
            coords = f.terms
        else:
            try:
                coords = e_coordinates(f)
            except ValueError:
                return None
        if any(not self.contains(m) for m in coords):
            return None
        return coords

    def combine(self, parent: SnAlgebra, coords) -> Element:
        """Element with the given coordinates (dict index -> value or Monomial -> value)."""
        out = parent.zero
        for key, c in coords.items():
            m = self.items[key] if isinstance(key, int) else key
            out = out + self.element(parent, m).scale(c)
        return out


@dataclass
class TruncationMap:
    """Matrix of a linear map between truncation bases, stored by sparse columns.

    ``columns[j]`` maps codomain monomials (E-indices for an E-span codomain)
    to raw coefficients.
    """

    domain: TruncBasis
    codomain: TruncBasis
    ring: RingSpec
    columns: list[dict[Monomial, object]]
    label: str = ""

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.codomain), len(self.domain))

    def dense(self) -> list[list]:
        """Row-major dense matrix in codomain x domain coordinates."""
        rows, cols = self.shape
        mat = [[self.ring.zero] * cols for _ in range(rows)]
        idx = self.codomain.index
        for j, col in enumerate(self.columns):
            for m, c in col.items():
                mat[idx[m]][j] = c
        return mat

    def __add__(self, other: TruncationMap) -> TruncationMap:
        if self.domain != other.domain or self.ring != other.ring:
            raise ValueError("maps must share domain and ring")
        codomain = max(self.codomain, other.codomain, key=lambda b: b.d)
        cols = []
        for c1, c2 in zip(self.columns, other.columns):
            acc = dict(c1)
            for m, c in c2.items():
                v = self.ring.add(acc.get(m, self.ring.zero), c)
                if v == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = v
            cols.append(acc)
        return TruncationMap(self.domain, codomain, self.ring, cols)


def mult_map(g: Element, side: str, domain: TruncBasis) -> TruncationMap:
    """Matrix of b -> g*b (``side="left"``) or b -> b*g (``side="right"``) on ``domain``."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    g.ring.require_field()
    if domain.n != g.n:
        raise ValueError(f"domain has n={domain.n}, element has n={g.n}")
    codomain = TruncBasis(domain.n, domain.d + g.degree(), domain.kind)
    cols = []
    for m in domain.items:
        b = domain.element(g.parent, m)
        img = g * b if side == "left" else b * g
        coords = codomain.coordinates(img)
        if coords is None:
            raise ArithmeticError(f"image of {m} escaped the codomain box")
        cols.append(coords)
    return TruncationMap(domain, codomain, g.ring, cols, label=f"{side} multiplication by {g}")


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _content(vec: dict) -> int:
    g = 0
    for v in vec.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    return g


class _Echelon:
    """Incremental echelon form of a set of sparse vectors.

    Every stored pivot vector ``vec`` satisfies ``vec = sum(comb[j] * col_j)``
    for the original input columns.
    """

    def __init__(self, ring: RingSpec):
        ring.require_field()
        self.ring = ring
        self.fraction_free = ring.kind is RingKind.RATIONAL
        self.pivots: dict = {}

    def _integral(self, vec: dict) -> tuple[dict, int]:
        """Clear denominators: returns (L * vec as ints, L)."""
        if not self.fraction_free:
            return dict(vec), 1
        lcm = 1
        for v in vec.values():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        return {r: int(v * lcm) for r, v in vec.items()}, lcm

    def _combine(self, vec, comb, pvec, pcomb, r):
        """Eliminate row r of vec using pivot (pvec, pcomb); returns (vec, comb, a)."""
        ring = self.ring
        if self.fraction_free:
            a, b = pvec[r], vec[r]
            new = {k: a * v for k, v in vec.items()}
            for k, v in pvec.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            ncomb = {k: a * v for k, v in comb.items()}
            for k, v in pcomb.items():
                w = ncomb.get(k, 0) - b * v
                if w:
                    ncomb[k] = w
                else:
                    ncomb.pop(k, None)
            return new, ncomb, a
        p = ring.modulus
        f = vec[r] * pow(pvec[r], -1, p) % p
        new = dict(vec)
        for k, v in pvec.items():
            w = (new.get(k, 0) - f * v) % p
            if w:
                new[k] = w
            else:
                new.pop(k, None)
        ncomb = dict(comb)
        for k, v in pcomb.items():
            w = (ncomb.get(k, 0) - f * v) % p
            if w:
                ncomb[k] = w
            else:
                ncomb.pop(k, None)
        return new, ncomb, 1

    def reduce(self, vec: dict, comb: dict):
        """Reduce against stored pivots; returns (residual vec, comb, accumulated scale)."""
        scale = 1
        while vec:
            r = max(vec)
            piv = self.pivots.get(r)
            if piv is None:
                break
            vec, comb, a = self._combine(vec, comb, piv[0], piv[1], r)
            scale *= a
            if self.fraction_free and vec:
                g = _content(vec)
                if g > 1:
                    vec = {k: v // g for k, v in vec.items()}
                    comb = {k: Fraction(v, g) for k, v in comb.items()}
                    scale = Fraction(scale, g)
        return vec, comb, scale

    def insert(self, vec: dict, comb: dict) -> dict | None:
        """Add a vector; returns the dependency ``comb`` if it reduced to zero."""
        vec, comb, _ = self.reduce(vec, comb)
        if not vec:
            return comb
        self.pivots[max(vec)] = (vec, comb)
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _rows(col: dict[Monomial, object]) -> dict:
    return {_row(m): c for m, c in col.items()}


def _to_field(ring: RingSpec, v):
    return Fraction(v) if ring.kind is RingKind.RATIONAL else v % ring.modulus


def _rref(ring: RingSpec, vectors: list[dict[int, object]]) -> list[dict[int, object]]:
    """Reduced row echelon form of sparse vectors over the field (pivot = smallest index)."""
    rows = [{k: _to_field(ring, v) for k, v in vec.items() if _to_field(ring, v) != 0}
            for vec in vectors]
    out: list[dict] = []
    for vec in rows:
        for piv in out:
            p = min(piv)
            if p in vec:
                f = vec[p]
                for k, v in piv.items():
                    w = ring.sub(vec.get(k, ring.zero), ring.mul(f, v))
                    if w != 0:
                        vec[k] = w
                    else:
                        vec.pop(k, None)
        if not vec:
            continue
        p = min(vec)
        inv = ring.inv(vec[p])
        vec = {k: ring.mul(inv, v) for k, v in vec.items()}
        for i, other in enumerate(out):
            if p in other:
                f = other[p]
                new = dict(other)
                for k, v in vec.items():
                    w = ring.sub(new.get(k, ring.zero), ring.mul(f, v))
                    if w != 0:
                        new[k] = w
                    else:
                        new.pop(k, None)
                out[i] = new
        out.append(vec)
    out.sort(key=min)
    return out


def _echelon_of(M: TruncationMap) -> tuple[_Echelon, list[dict]]:
    ech = _Echelon(M.ring)
    kernel = []
    for j, col in enumerate(M.columns):
        vec, scale = ech._integral(_rows(col))
        dep = ech.insert(vec, {j: scale})
        if dep is not None:
            kernel.append(dep)
    return ech, kernel


def nullspace_coordinates(M: TruncationMap) -> list[dict[int, object]]:
    """Canonical (RREF) basis of ker(M) as sparse domain-coordinate vectors."""
    _, kernel = _echelon_of(M)
    return _rref(M.ring, kernel)


def nullspace(M: TruncationMap) -> list[Element]:
    """Exact basis of ker(M) as Elements, in reduced echelon form over the domain order."""
    parent = SnAlgebra(M.domain.n, M.ring)
    return [M.domain.combine(parent, vec) for vec in nullspace_coordinates(M)]


def solve(M: TruncationMap, target: Element) -> Element | None:
    """Some u in the domain with M(u) = target, or None if there is none."""
    target.ring.require_field()
    coords = M.codomain.coordinates(target)
    if coords is None:
        return None
    ech, _ = _echelon_of(M)
    vec, lam = ech._integral(_rows(coords))
    vec = {r: v for r, v in vec.items()}
    # invariant: vec = lam * target - M(comb)
    comb: dict = {}
    ring = M.ring
    while vec:
        r = max(vec)
        piv = ech.pivots.get(r)
        if piv is None:
            return None
        pvec, pcomb = piv
        if ech.fraction_free:
            a, b = pvec[r], vec[r]
            vec = _lincomb(vec, a, pvec, -b)
            comb = _lincomb(comb, a, pcomb, b)
            lam *= a
            g = _content(vec) if vec else 0
            if g > 1:
                vec = {k: v // g for k, v in vec.items()}
                comb = {k: Fraction(v, g) for k, v in comb.items()}
                lam = Fraction(lam, g)
        else:
            p = ring.modulus
            f = vec[r] * pow(pvec[r], -1, p) % p
            vec = {k: v % p for k, v in _lincomb(vec, 1, pvec, -f).items() if v % p}
            comb = {k: v % p for k, v in _lincomb(comb, 1, pcomb, f).items() if v % p}
    if ech.fraction_free:
        sol = {j: Fraction(c) / lam for j, c in comb.items()}
    else:
        sol = {j: c * pow(lam, -1, ring.modulus) for j, c in comb.items()}
    parent = SnAlgebra(M.domain.n, ring)
    return M.domain.combine(parent, sol)


def _lincomb(u: dict, a, v: dict, b) -> dict:
    out = {k: a * x for k, x in u.items()}
    for k, x in v.items():
        w = out.get(k, 0) + b * x
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def kernel(g: Element, side: str, d: int, kind: str = FULL) -> list[Element]:
    """Basis of the annihilator of ``g`` (on the given side) within the box of size d."""
    return nullspace(mult_map(g, side, TruncBasis(g.n, d, kind)))


# ---------------------------------------------------------------------------
# subspaces spanned by Elements (monomial coordinates)
# ---------------------------------------------------------------------------

class Span:
    """The coefficient-field span of a finite list of Elements."""

    def __init__(self, ring: RingSpec, elements: Sequence[Element] = ()):
        self.ring = ring
        self._ech = _Echelon(ring)
        self.generators: list[Element] = []
        for f in elements:
            self.add(f)

    def _vec(self, f: Element):
        return self._ech._integral(_rows(f.terms))[0]

    def add(self, f: Element) -> bool:
        """Add a generator; returns True if it enlarged the span."""
        if f.ring != self.ring:
            raise ValueError("element ring differs from span ring")
        self.generators.append(f)
        return self._ech.insert(self._vec(f), {len(self.generators) - 1: 1}) is None

    @property
    def dimension(self) -> int:
        return self._ech.rank

    def contains(self, f: Element) -> bool:
        vec, _, _ = self._ech.reduce(self._vec(f), {})
        return not vec

    def issubspace(self, other: Span) -> bool:
        return all(other.contains(f) for f in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return (self.dimension == other.dimension and self.issubspace(other))

    __hash__ = None


def rank(elements: Sequence[Element], ring: RingSpec | None = None) -> int:
    if not elements:
        return 0
    return Span(ring or elements[0].ring, elements).dimension


def image_in_box(M: TruncationMap, d: int) -> list[Element]:
    """Basis of image(M) intersected with the full box of size d (monomial coordinates).

    Computed as M applied to the kernel of (M followed by projection onto the
    coordinates outside the box).
    """
    if M.codomain.kind != FULL:
        raise ValueError("image_in_box needs a full (monomial) codomain")
    outside = [{m: c for m, c in col.items() if m.degree > d} for col in M.columns]
    proj = TruncationMap(M.domain, M.codomain, M.ring, outside)
    parent = SnAlgebra(M.domain.n, M.ring)
    result = []
    for vec in nullspace_coordinates(proj):
        img = parent.zero
        for j, c in vec.items():
            img = img + parent.element(M.columns[j]).scale(c)
        if img:
            result.append(img)
    return result
