"""Brute-force word reduction, kept independent of the closed-form product.

A word is a sequence of letters ``("x", i)`` / ``("y", i)``.  Reduction uses
only the defining relations as rewrite rules on adjacent letters:

* ``y_i x_i -> (empty)``
* any other adjacent pair that is out of order (all x's sorted by index,
  then all y's sorted by index) is swapped; such pairs always commute.

Every rule removes letters or removes an inversion, so reduction terminates,
and the irreducible words are exactly x^alpha y^beta.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import Element, Monomial, SnAlgebra, mono_mul, one_monomial
from .coeff_ring import ZZ

Letter = tuple[str, int]


def _key(letter: Letter):
    return (0 if letter[0] == "x" else 1, letter[1])


def _redex(a: Letter, b: Letter) -> str | None:
    if a[0] == "y" and b[0] == "x" and a[1] == b[1]:
        return "cancel"
    if _key(a) > _key(b):
        return "swap"
    return None


def _check_word(word, n: int | None):
    for kind, i in word:
        if kind not in ("x", "y"):
            raise ValueError(f"unknown generator kind {kind!r}")
        if i < 1 or (n is not None and i > n):
            raise IndexError(f"generator index {i} out of range")


def reduce_word(word, n: int | None = None, strategy: str = "leftmost") -> list[Letter]:
    """Rewrite ``word`` to its irreducible form.

    ``strategy`` is ``"leftmost"`` (always rewrite the leftmost redex) or
    ``"rightmost"``.  Returns the reduced word as a list of letters.
    """
    w = [tuple(letter) for letter in word]
    _check_word(w, n)
    if strategy == "leftmost":
        pos = 0
        while pos < len(w) - 1:
            kind = _redex(w[pos], w[pos + 1])
            if kind is None:
                pos += 1
                continue
            if kind == "cancel":
                del w[pos:pos + 2]
            else:
                w[pos], w[pos + 1] = w[pos + 1], w[pos]
            # nothing left of pos-1 changed, so no redex can appear earlier
            pos = max(pos - 1, 0)
    elif strategy == "rightmost":
        pos = len(w) - 2
        while pos >= 0:
            kind = _redex(w[pos], w[pos + 1])
            if kind is None:
                pos -= 1
                continue
            if kind == "cancel":
                del w[pos:pos + 2]
            else:
                w[pos], w[pos + 1] = w[pos + 1], w[pos]
            pos = min(pos + 1, len(w) - 2)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return w


def word_to_monomial(word, n: int) -> Monomial:
    """Read an irreducible word as a basis monomial; raises if it is not irreducible."""
    alpha = [0] * n
    beta = [0] * n
    seen_y = False
    prev = None
    for letter in word:
        if prev is not None and _redex(prev, letter) is not None:
            raise ValueError("word is not in normal form")
        kind, i = letter
        if kind == "x":
            if seen_y:
                raise ValueError("word is not in normal form")
            alpha[i - 1] += 1
        else:
            seen_y = True
            beta[i - 1] += 1
        prev = letter
    return Monomial(tuple(alpha), tuple(beta))


def reduce(word, n: int, ring=ZZ, strategy: str = "leftmost") -> Element:
    """Normal form of a word as an element of S_n (coefficient 1 on a single monomial)."""
    mono = word_to_monomial(reduce_word(word, n, strategy), n)
    return SnAlgebra(n, ring).element({mono: 1})


def product_of_letters(word, n: int) -> Monomial:
    """The closed-form product of the letters of ``word``, for comparison."""
    m = one_monomial(n)
    z = (0,) * n
    for kind, i in word:
        e = tuple(1 if j == i - 1 else 0 for j in range(n))
        m = mono_mul(m, Monomial(e, z) if kind == "x" else Monomial(z, e))
    return m


def letters(n: int) -> list[Letter]:
    return [("x", i) for i in range(1, n + 1)] + [("y", i) for i in range(1, n + 1)]


def random_word(rng: random.Random, n: int, max_len: int) -> list[Letter]:
    alphabet = letters(n)
    return [rng.choice(alphabet) for _ in range(rng.randint(0, max_len))]


def all_words(n: int, max_len: int):
    alphabet = letters(n)
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def format_word(word) -> str:
    return " ".join(f"{k}{i}" for k, i in word) or "(empty)"


@dataclass
class OracleReport:
    trials: int
    checked: int = 0
    mismatch: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def to_json(self) -> dict:
        return {"trials": self.trials, "checked": self.checked, "passed": self.passed,
                "mismatch": self.mismatch, **self.details}


def _compare(word, n: int) -> dict | None:
    reduced = word_to_monomial(reduce_word(word, n), n)
    closed = product_of_letters(word, n)
    if reduced != closed:
        return {"word": format_word(word), "n": n,
                "oracle": [list(reduced.alpha), list(reduced.beta)],
                "closed_form": [list(closed.alpha), list(closed.beta)]}
    return None


def random_word_check(trials: int, max_len: int, n: int | None = None, seed: int = 0) -> OracleReport:
    """Compare oracle reduction with the closed-form product on random words.

    With ``n=None`` each trial draws n uniformly from 1..3.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    report = OracleReport(trials=trials, details={"max_len": max_len, "seed": seed})
    for _ in range(trials):
        k = n if n is not None else rng.randint(1, 3)
        word = random_word(rng, k, max_len)
        report.checked += 1
        bad = _compare(word, k)
        if bad is not None:
            report.mismatch = bad
            break
    return report


def exhaustive_check(n: int, max_len: int) -> OracleReport:
    """Compare oracle and closed form on every word of length <= max_len."""
    report = OracleReport(trials=0, details={"n": n, "max_len": max_len, "mode": "exhaustive"})
    for word in all_words(n, max_len):
        report.checked += 1
        bad = _compare(word, n)
        if bad is not None:
            report.mismatch = bad
            break
    report.trials = report.checked
    return report


def confluence_check(n: int, max_len: int) -> OracleReport:
    """Leftmost and rightmost strategies agree on every word of length <= max_len."""
    report = OracleReport(trials=0, details={"n": n, "max_len": max_len, "mode": "confluence"})
    for word in all_words(n, max_len):
        report.checked += 1
        if reduce_word(word, n, "leftmost") != reduce_word(word, n, "rightmost"):
            report.mismatch = {"word": format_word(word), "n": n}
            break
    report.trials = report.checked
    return report
