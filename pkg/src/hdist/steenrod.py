"""The mod 2 Steenrod algebra on its admissible basis.

Monomials are tuples of positive exponents, ``(3, 1)`` for Sq^3 Sq^1; the
empty tuple is the unit Sq^0 = 1. An element is a set of admissible
monomials, so addition is symmetric difference.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable

from ._backend import kernel

Monomial = tuple[int, ...]


class GrammarError(ValueError):
    """Raised when text does not parse as a Steenrod algebra element."""

    def __init__(self, token: str, text: str):
        super().__init__(f"malformed token {token!r} in {text!r}")
        self.token = token
        self.text = text


def is_admissible(word: Iterable[int]) -> bool:
    w = tuple(word)
    return all(w[i] >= 2 * w[i + 1] for i in range(len(w) - 1))


def degree_of(word: Iterable[int]) -> int:
    return sum(word)


def monomial_key(word: Monomial):
    # degree first, then lexicographically descending: Sq3 before Sq2 Sq1
    return (sum(word), tuple(-e for e in word))


class SteenrodElement:
    __slots__ = ("support", "_hash")

    def __init__(self, support: Iterable[Monomial] = ()):
        support = frozenset(support)
        for w in support:
            if not is_admissible(w) or any(e <= 0 for e in w):
                raise ValueError(f"{w} is not an admissible monomial; use normalize()")
        self.support = support
        self._hash = None

    @classmethod
    def zero(cls) -> "SteenrodElement":
        return _ZERO

    @classmethod
    def one(cls) -> "SteenrodElement":
        return _ONE

    @classmethod
    def sq(cls, *exponents: int) -> "SteenrodElement":
        """The product Sq^{e_1} ... Sq^{e_k}, normalized."""
        return normalize([exponents])

    @classmethod
    def parse(cls, text: str) -> "SteenrodElement":
        return normalize(parse_words(text))

    @classmethod
    def _trusted(cls, support: frozenset) -> "SteenrodElement":
        obj = cls.__new__(cls)
        obj.support = support
        obj._hash = None
        return obj

    def __bool__(self) -> bool:
        return bool(self.support)

    def __iter__(self):
        return iter(sorted(self.support, key=monomial_key))

    def __len__(self) -> int:
        return len(self.support)

    def __eq__(self, other) -> bool:
        if isinstance(other, SteenrodElement):
            return self.support == other.support
        if other == 0:
            return not self.support
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.support)
        return self._hash

    def __add__(self, other: "SteenrodElement") -> "SteenrodElement":
        if not isinstance(other, SteenrodElement):
            return NotImplemented
        return SteenrodElement._trusted(self.support ^ other.support)

    __sub__ = __add__

    def __mul__(self, other: "SteenrodElement") -> "SteenrodElement":
        if not isinstance(other, SteenrodElement):
            return NotImplemented
        return multiply(self, other)

    def degrees(self) -> set[int]:
        return {sum(w) for w in self.support}

    @property
    def degree(self) -> int | None:
        """Degree of a homogeneous nonzero element, else None."""
        d = self.degrees()
        return d.pop() if len(d) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"SteenrodElement({format_element(self)!r})"


_ZERO = SteenrodElement._trusted(frozenset())
_ONE = SteenrodElement._trusted(frozenset({()}))


def adem_expand(a: int, b: int) -> list[Monomial]:
    """Right-hand side of the Adem relation for Sq^a Sq^b, 0 < a < 2b.

    Returns the summands sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c with the
    binomial reduced mod 2 and Sq^0 dropped. Summands may themselves be
    inadmissible; pass them through ``normalize``.
    """
    return list(kernel.adem_terms(a, b))


def normalize(words: Iterable[Iterable[int]], strategy: str = "leftmost") -> SteenrodElement:
    """Straighten a multiset of words onto the admissible basis.

    ``strategy`` picks which inadmissible adjacent pair is rewritten first:
    "leftmost" (the default) or "rightmost".
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return SteenrodElement._trusted(kernel.normalize_words(words, strategy == "leftmost"))


def multiply(x: SteenrodElement, y: SteenrodElement) -> SteenrodElement:
    return normalize(u + v for u in x.support for v in y.support)


def _admissible_seqs(degree: int, bound: int):
    # admissible sequences of the given degree whose first exponent is <= bound
    if degree == 0:
        yield ()
        return
    for first in range(min(degree, bound), 0, -1):
        rest = degree - first
        for tail in _admissible_seqs(rest, first // 2):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _basis(degree: int) -> tuple[Monomial, ...]:
    return tuple(_admissible_seqs(degree, degree))


def admissible_basis(degree: int) -> list[Monomial]:
    """Admissible monomials of the given degree, lexicographically descending."""
    if degree < 0:
        raise ValueError(f"negative degree {degree}")
    return list(_basis(degree))


def basis_elements(degree: int) -> list[SteenrodElement]:
    return [SteenrodElement._trusted(frozenset((w,))) for w in _basis(degree)]


_SQ = re.compile(r"Sq\^?(\d+)\Z")


def parse_words(text: str) -> list[Monomial]:
    """Parse "Sq3 Sq1 + Sq4" into words, without normalizing.

    "0" is the zero element and "1" the unit; Sq0 is accepted as the unit.
    """
    if not text.strip():
        raise GrammarError("", text)
    words = []
    for part in text.split("+"):
        tokens = part.split()
        if not tokens:
            raise GrammarError("+", text)
        if tokens == ["0"]:
            continue
        if tokens == ["1"]:
            words.append(())
            continue
        word = []
        for tok in tokens:
            m = _SQ.match(tok)
            if m is None:
                raise GrammarError(tok, text)
            e = int(m.group(1))
            if e:
                word.append(e)
        words.append(tuple(word))
    return words


def format_monomial(word: Monomial) -> str:
    return " ".join(f"Sq{e}" for e in word) if word else "1"


def format_element(x: SteenrodElement) -> str:
    if not x.support:
        return "0"
    return " + ".join(format_monomial(w) for w in x)
