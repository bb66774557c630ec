"""Exact commutative coefficient rings: Z, Q and Z/m.

Ring objects do arithmetic on raw canonical values (``int`` for Z and Z/m,
``Fraction`` for Q).  :class:`Coefficient` wraps a raw value together with
its ring for user-facing code.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction


class RingMismatchError(ValueError):
    pass


class FieldRequiredError(ValueError):
    """Raised when an operation needs a field (Q or Z/p) but got Z or Z/m."""


class RingKind(enum.Enum):
    INTEGER = "Z"
    RATIONAL = "Q"
    MODULAR = "Zmod"


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    return all(m % p for p in range(3, math.isqrt(m) + 1, 2))


def _norm_q(v):
    # integral rationals are stored as int, everything else as a reduced Fraction
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is RingKind.MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("Z/m needs a modulus m >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind.value} takes no modulus")

    # -- identification -------------------------------------------------
    def __str__(self):
        if self.kind is RingKind.MODULAR:
            return f"Zmod:{self.modulus}"
        return self.kind.value

    def __repr__(self):
        return f"RingSpec({self})"

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``Z``, ``Q`` or ``Zmod:<m>`` (``Z/<m>`` is also accepted)."""
        t = text.strip()
        if t == "Z":
            return ZZ
        if t == "Q":
            return QQ
        for prefix in ("Zmod:", "Z/"):
            if t.startswith(prefix):
                try:
                    m = int(t[len(prefix):])
                except ValueError:
                    break
                return Zmod(m)
        raise ValueError(f"unknown ring {text!r}; expected Z, Q or Zmod:<m>")

    @property
    def is_field(self) -> bool:
        if self.kind is RingKind.RATIONAL:
            return True
        if self.kind is RingKind.MODULAR:
            return _is_prime(self.modulus)
        return False

    def require_field(self):
        if not self.is_field:
            raise FieldRequiredError(f"field required: coefficient ring {self} is not a field")

    # -- raw value arithmetic ---------------------------------------------
    zero = property(lambda self: self.canonical(0))
    one = property(lambda self: self.canonical(1))

    def canonical(self, v):
        """Coerce an ``int``/``Fraction`` into this ring's canonical raw form."""
        if isinstance(v, Coefficient):
            if v.ring != self:
                raise RingMismatchError(f"coefficient in {v.ring}, expected {self}")
            return v.value
        if isinstance(v, bool):
            v = int(v)
        kind = self.kind
        if kind is RingKind.INTEGER:
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{v} is not an integer")
                return v.numerator
            return int(v)
        if kind is RingKind.RATIONAL:
            return _norm_q(Fraction(v))
        m = self.modulus
        if isinstance(v, Fraction):
            den = v.denominator % m
            if math.gcd(den, m) != 1:
                raise ValueError(f"denominator of {v} is not invertible mod {m}")
            return v.numerator * pow(den, -1, m) % m
        return int(v) % m

    def add(self, a, b):
        if self.kind is RingKind.MODULAR:
            return (a + b) % self.modulus
        if self.kind is RingKind.RATIONAL:
            return _norm_q(a + b)
        return a + b

    def sub(self, a, b):
        if self.kind is RingKind.MODULAR:
            return (a - b) % self.modulus
        if self.kind is RingKind.RATIONAL:
            return _norm_q(a - b)
        return a - b

    def neg(self, a):
        if self.kind is RingKind.MODULAR:
            return -a % self.modulus
        return -a

    def mul(self, a, b):
        if self.kind is RingKind.MODULAR:
            return a * b % self.modulus
        if self.kind is RingKind.RATIONAL:
            return _norm_q(a * b)
        return a * b

    def is_unit(self, a) -> bool:
        if self.kind is RingKind.INTEGER:
            return a in (1, -1)
        if self.kind is RingKind.RATIONAL:
            return a != 0
        return math.gcd(a, self.modulus) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.format(a)} is not a unit in {self}")
        if self.kind is RingKind.INTEGER:
            return a
        if self.kind is RingKind.RATIONAL:
            return _norm_q(1 / Fraction(a))
        return pow(a, -1, self.modulus)

    def format(self, a) -> str:
        return str(a)

    def parse_value(self, text: str):
        """Parse an integer literal or ``p/q`` into this ring."""
        return self.canonical(Fraction(text.strip()))


ZZ = RingSpec(RingKind.INTEGER)
QQ = RingSpec(RingKind.RATIONAL)


def Zmod(m: int) -> RingSpec:
    return RingSpec(RingKind.MODULAR, m)


@dataclass(frozen=True)
class Coefficient:
    """An element of one of the exact rings, stored canonically."""

    ring: RingSpec
    value: object

    def __init__(self, ring: RingSpec, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", ring.canonical(value))

    def _check(self, other) -> Coefficient:
        if not isinstance(other, Coefficient):
            return Coefficient(self.ring, other)
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Coefficient(self.ring, self.ring.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return Coefficient(self.ring, self.ring.sub(self.value, other.value))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return Coefficient(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        other = self._check(other)
        return Coefficient(self.ring, self.ring.mul(self.value, other.value))

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> Coefficient:
        return Coefficient(self.ring, self.ring.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Coefficient({self.ring}, {self.value})"


def add(a: Coefficient, b: Coefficient) -> Coefficient:
    return a + b


def neg(a: Coefficient) -> Coefficient:
    return -a


def mul(a: Coefficient, b: Coefficient) -> Coefficient:
    return a * b


def is_unit(a: Coefficient) -> bool:
    return a.is_unit()
