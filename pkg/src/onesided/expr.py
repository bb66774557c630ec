"""Expression language for elements of S_n.

Grammar, lowest to highest precedence::

    sum     := product (('+' | '-') product)*
    product := power (['*'] power)*          juxtaposition multiplies
    power   := unary ('^' INT)*
    unary   := '-' unary | atom
    atom    := INT ['/' INT] | x<i> | y<i> | E[...] | '(' sum ')'

``x`` and ``y`` without an index mean ``x1``/``y1`` when n = 1.  Matrix units
are written ``E[i,j]`` (n = 1) or ``E[(a1,..,an),(b1,..,bn)]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, SnAlgebra, expand_E
from .coeff_ring import QQ, RingSpec


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Config:
    n: int = 1
    ring: RingSpec = QQ
    max_deg: int = 8
    output: str = "text"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.max_deg < 0:
            raise ValueError("max_deg must be non-negative")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")

    @property
    def algebra(self) -> SnAlgebra:
        return SnAlgebra(self.n, self.ring)


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int


@dataclass(frozen=True)
class EUnit:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


Expr = Num | Gen | EUnit | Neg | Add | Sub | Mul | Pow


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<gen>[xy])(?P<idx>\d*)
  | (?P<E>E)
  | (?P<op>[-+*^/()\[\],])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int
    index: int | None = None


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "ws":
            pass
        elif m.group("int") is not None:
            toks.append(_Tok("int", m.group("int"), pos))
        elif m.group("gen") is not None:
            idx = m.group("idx")
            toks.append(_Tok("gen", m.group("gen"), pos, int(idx) if idx else None))
        elif m.group("E") is not None:
            toks.append(_Tok("E", "E", pos))
        else:
            toks.append(_Tok(m.group("op"), m.group("op"), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = tokenize(text)
        self.i = 0
        self.n = n

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Tok:
        t = self.tok
        if kind is not None and t.kind != kind:
            what = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {kind!r}, found {what}", t.pos)
        self.i += 1
        return t

    def parse(self):
        e = self.sum()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def sum(self):
        e = self.product()
        while self.tok.kind in ("+", "-"):
            op = self.take().kind
            r = self.product()
            e = Add(e, r) if op == "+" else Sub(e, r)
        return e

    def product(self):
        e = self.power()
        while True:
            if self.tok.kind == "*":
                self.take()
            elif self.tok.kind not in ("int", "gen", "E", "("):
                return e
            e = Mul(e, self.power())

    def power(self):
        e = self.unary()
        while self.tok.kind == "^":
            self.take()
            t = self.take("int")
            if self.tok.kind == "/":
                raise ParseError("exponent must be a non-negative integer", t.pos)
            e = Pow(e, int(t.text))
        return e

    def unary(self):
        if self.tok.kind == "-":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            if self.tok.kind == "/":
                self.take()
                den = self.take("int")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                return Num(Fraction(int(t.text), int(den.text)))
            return Num(Fraction(int(t.text)))
        if t.kind == "gen":
            self.take()
            idx = t.index
            if idx is None:
                if self.n != 1:
                    raise ParseError(f"generator {t.text!r} needs an index when n = {self.n}", t.pos)
                idx = 1
            if not 1 <= idx <= self.n:
                raise ParseError(f"generator index {idx} out of range 1..{self.n}", t.pos)
            return Gen(t.text, idx)
        if t.kind == "E":
            return self.eunit()
        if t.kind == "(":
            self.take()
            e = self.sum()
            self.take(")")
            return e
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.pos)

    def _vec(self) -> tuple[int, ...]:
        if self.tok.kind == "int":
            return (int(self.take().text),)
        self.take("(")
        vals = [int(self.take("int").text)]
        while self.tok.kind == ",":
            self.take()
            vals.append(int(self.take("int").text))
        self.take(")")
        return tuple(vals)

    def eunit(self):
        start = self.take("E")
        self.take("[")
        alpha = self._vec()
        self.take(",")
        beta = self._vec()
        self.take("]")
        if len(alpha) != self.n or len(beta) != self.n:
            raise ParseError(f"matrix unit indices must have length {self.n}", start.pos)
        return EUnit(alpha, beta)


def parse(text: str, cfg: Config | None = None):
    """Parse ``text`` into an expression tree."""
    cfg = cfg or Config()
    return _Parser(text, cfg.n).parse()


# -- printer ------------------------------------------------------------------

def _level(e) -> int:
    if isinstance(e, (Add, Sub)):
        return 1
    if isinstance(e, Mul):
        return 2
    if isinstance(e, Pow):
        return 3
    if isinstance(e, Neg):
        return 4
    return 5


def _wrap(e, need: int) -> str:
    s = to_text(e)
    return s if _level(e) >= need else f"({s})"


def to_text(e) -> str:
    """Render an expression so that ``parse(to_text(e)) == e``."""
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Gen):
        return f"{e.kind}{e.index}"
    if isinstance(e, EUnit):
        if len(e.alpha) == 1:
            return f"E[{e.alpha[0]},{e.beta[0]}]"
        a = ",".join(map(str, e.alpha))
        b = ",".join(map(str, e.beta))
        return f"E[({a}),({b})]"
    if isinstance(e, Add):
        return f"{_wrap(e.left, 1)} + {_wrap(e.right, 2)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, 1)} - {_wrap(e.right, 2)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, 2)}*{_wrap(e.right, 3)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, 3)}^{e.exponent}"
    if isinstance(e, Neg):
        return f"-{_wrap(e.operand, 4)}"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation ---------------------------------------------------------------

def evaluate(e, cfg: Config | None = None) -> Element:
    """Evaluate an expression tree to a normal-form Element."""
    cfg = cfg or Config()
    S = cfg.algebra

    def go(node) -> Element:
        if isinstance(node, Num):
            return S.scalar(node.value)
        if isinstance(node, Gen):
            return S.x(node.index) if node.kind == "x" else S.y(node.index)
        if isinstance(node, EUnit):
            return expand_E(S, node.alpha, node.beta)
        if isinstance(node, Neg):
            return -go(node.operand)
        if isinstance(node, Add):
            return go(node.left) + go(node.right)
        if isinstance(node, Sub):
            return go(node.left) - go(node.right)
        if isinstance(node, Mul):
            return go(node.left) * go(node.right)
        if isinstance(node, Pow):
            return go(node.base) ** node.exponent
        raise TypeError(f"not an expression: {node!r}")

    return go(e)


def parse_element(text: str, cfg: Config | None = None) -> Element:
    """Parse and evaluate in one step."""
    return evaluate(parse(text, cfg), cfg)


# ``eval`` under its operation name, without shadowing the builtin at import sites
eval_expr = evaluate
