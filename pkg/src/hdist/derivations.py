"""Derivations of the Steenrod algebra defined on the generators Sq^m.

A ``GeneratorDerivation`` assigns a value to each Sq^m and extends to
words by the Leibniz rule. Whether the extension descends to the algebra
is exactly whether it kills every Adem relation, which
``verify_well_defined`` checks degree by degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from .report import Counterexample, VerificationReport
from .steenrod import (
    GrammarError,
    Monomial,
    SteenrodElement,
    adem_expand,
    basis_elements,
    format_monomial,
    normalize,
)


class GeneratorDerivation:
    """Degree ``shift`` map on generators, ``values(m)`` for m >= 1.

    ``values`` is either a mapping or a callable. Lookups outside a mapping
    fall back to ``default`` when given, otherwise raise KeyError. Values of
    negative degree are forced to zero.
    """

    def __init__(self, shift: int, values: Mapping[int, SteenrodElement] | Callable[[int], SteenrodElement],
                 default: Optional[Callable[[int], SteenrodElement]] = None, name: str = "D"):
        if shift >= 0:
            raise ValueError(f"derivation shift must be negative, got {shift}")
        self.shift = shift
        self.name = name
        self._values = values
        self._default = default
        self._cache: dict[int, SteenrodElement] = {}

    def value(self, m: int) -> SteenrodElement:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        if m < 1:
            raise ValueError(f"generators are Sq^m with m >= 1, got {m}")
        if m + self.shift < 0:
            v = SteenrodElement.zero()
        elif callable(self._values):
            v = self._values(m)
        elif m in self._values:
            v = self._values[m]
        elif self._default is not None:
            v = self._default(m)
        else:
            raise KeyError(f"{self.name} has no value on Sq{m}")
        if v and v.degrees() != {m + self.shift}:
            raise ValueError(f"{self.name}(Sq{m}) = {v} is not homogeneous of degree {m + self.shift}")
        self._cache[m] = v
        return v

    def __call__(self, x: SteenrodElement) -> SteenrodElement:
        return extend_leibniz(self, x)

    def __repr__(self) -> str:
        return f"GeneratorDerivation({self.name!r}, shift={self.shift})"


def _leibniz_words(D: GeneratorDerivation, word: Monomial) -> Iterable[Monomial]:
    for j, e in enumerate(word):
        head, tail = word[:j], word[j + 1:]
        for u in D.value(e).support:
            yield head + u + tail


def leibniz_on_word(D: GeneratorDerivation, word: Iterable[int]) -> SteenrodElement:
    """Leibniz rule on an arbitrary word, normalized only afterwards."""
    return normalize(_leibniz_words(D, tuple(e for e in word if e)))


def leibniz_on_words(D: GeneratorDerivation, words: Iterable[Monomial]) -> SteenrodElement:
    return normalize(w for word in words for w in _leibniz_words(D, tuple(word)))


def extend_leibniz(D: GeneratorDerivation, x: SteenrodElement) -> SteenrodElement:
    """D(x) for x on the admissible basis. D(1) = 0."""
    return leibniz_on_words(D, x.support)


def adem_pairs(max_degree: int):
    """Inadmissible pairs (a, b), 0 < a < 2b, a + b <= max_degree, by degree then a."""
    for deg in range(2, max_degree + 1):
        for a in range(1, deg):
            b = deg - a
            if a < 2 * b:
                yield a, b


def verify_well_defined(D: GeneratorDerivation, max_degree: int) -> VerificationReport:
    """Check D on both sides of every Adem relation up to ``max_degree``.

    The word Sq^a Sq^b is differentiated letter by letter before any
    normalization and compared with D of the relation's right-hand side.
    """
    checked = 0
    for a, b in adem_pairs(max_degree):
        checked += 1
        lhs = leibniz_on_word(D, (a, b))
        rhs = leibniz_on_words(D, adem_expand(a, b))
        if lhs != rhs:
            return VerificationReport(
                f"well-defined[{D.name}]", checked,
                Counterexample(
                    (a, b), str(rhs), str(lhs),
                    {"relation": f"Sq{a} Sq{b} = {_fmt_words(adem_expand(a, b))}", "residual": str(lhs + rhs)},
                ),
                {"max_degree": max_degree},
            )
    return VerificationReport(f"well-defined[{D.name}]", checked, None, {"max_degree": max_degree})


def _fmt_words(words) -> str:
    return " + ".join(format_monomial(w) for w in words) if words else "0"


def kristensen_kappa() -> GeneratorDerivation:
    """kappa(Sq^m) = Sq^(m-1), so kappa(Sq^1) is the unit, not zero."""
    return GeneratorDerivation(-1, lambda m: SteenrodElement.sq(m - 1), name="kappa")


def sq_rule(k: int, name: Optional[str] = None) -> GeneratorDerivation:
    """The generator map Sq^m -> Sq^(m-k), zero below degree 0."""
    return GeneratorDerivation(-k, lambda m: SteenrodElement.sq(m - k), name=name or f"Sq(m-{k})")


@dataclass(frozen=True)
class LinearMap:
    """A degree-``shift`` linear endomorphism given by a function on elements."""

    fn: Callable[[SteenrodElement], SteenrodElement]
    shift: int
    name: str = "F"

    def __call__(self, x: SteenrodElement) -> SteenrodElement:
        return self.fn(x)


def as_linear_map(D) -> LinearMap:
    if isinstance(D, LinearMap):
        return D
    if isinstance(D, GeneratorDerivation):
        return LinearMap(lambda x: extend_leibniz(D, x), D.shift, D.name)
    raise TypeError(f"cannot treat {D!r} as a linear map")


def compose(D1, D2) -> LinearMap:
    """x -> D1(D2(x)); shifts add."""
    f, g = as_linear_map(D1), as_linear_map(D2)
    return LinearMap(lambda x: f(g(x)), f.shift + g.shift, f"{f.name}*{g.name}")


def kappa_squared() -> LinearMap:
    kappa = kristensen_kappa()
    return LinearMap(compose(kappa, kappa).fn, -2, "kappa2")


def kappa_squared_generators() -> GeneratorDerivation:
    """Generator values of kappa^2: Sq^m -> Sq^(m-2), Sq^2 -> 1, Sq^1 -> 0."""
    return GeneratorDerivation(-2, lambda m: SteenrodElement.sq(m - 2), name="kappa2")


def verify_derivation_property(F, shift: int, max_degree: int) -> VerificationReport:
    """Check F(xy) = F(x) y + x F(y) over admissible basis pairs.

    Pairs run over deg x + deg y <= max_degree in order of total degree,
    then deg x, then basis order. F(x) is also checked to sit in degree
    deg x + shift.
    """
    F = as_linear_map(F)
    name = f"derivation[{F.name}]"
    checked = 0
    images: dict = {}

    def image(x: SteenrodElement, deg: int) -> SteenrodElement:
        fx = images.get(x)
        if fx is None:
            fx = F(x)
            if fx and fx.degrees() != {deg + shift}:
                raise _DegreeError(x, fx)
            images[x] = fx
        return fx

    try:
        for total in range(max_degree + 1):
            for dx in range(total + 1):
                for x in basis_elements(dx):
                    for y in basis_elements(total - dx):
                        checked += 1
                        lhs = F(x * y)
                        rhs = image(x, dx) * y + x * image(y, total - dx)
                        if lhs != rhs:
                            return VerificationReport(
                                name, checked,
                                Counterexample((str(x), str(y)), str(rhs), str(lhs)),
                                {"max_degree": max_degree},
                            )
    except _DegreeError as exc:
        return VerificationReport(
            name, checked,
            Counterexample(str(exc.x), f"degree {exc.x.degree + shift}", str(exc.fx), {"problem": "degree"}),
            {"max_degree": max_degree},
        )
    return VerificationReport(name, checked, None, {"max_degree": max_degree})


class _DegreeError(Exception):
    def __init__(self, x, fx):
        self.x, self.fx = x, fx


# derivation table files:
#   shift: -1
#   rule: Sq(m-1)
#   2 -> 0
#   5 -> Sq4
_RULE = re.compile(r"Sq\(m\s*-\s*(\d+)\)\Z")
_ENTRY = re.compile(r"(\d+)\s*->\s*(.+)\Z")


class TableError(ValueError):
    pass


def parse_table(text: str, name: str = "table") -> GeneratorDerivation:
    """Read a derivation table.

    Lines are ``m -> element`` in the Steenrod text grammar. Headers:
    ``shift: k`` and ``rule: Sq(m-k)`` or ``rule: zero``; the rule supplies
    every unlisted generator. Without a rule, unlisted generators are an
    error when queried. ``#`` starts a comment.
    """
    shift = None
    rule = None
    rule_shift = None
    values: dict[int, SteenrodElement] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in ("shift", "rule"):
            rest = rest.strip()
            if key.strip() == "shift":
                try:
                    shift = int(rest)
                except ValueError:
                    raise TableError(f"line {lineno}: bad shift {rest!r}") from None
            elif rest == "zero":
                rule = "zero"
            else:
                m = _RULE.match(rest)
                if m is None:
                    raise TableError(f"line {lineno}: unknown rule {rest!r}")
                rule = int(m.group(1))
                rule_shift = -rule
            continue
        m = _ENTRY.match(line)
        if m is None:
            raise TableError(f"line {lineno}: expected 'm -> element', got {line!r}")
        gen = int(m.group(1))
        if gen < 1:
            raise TableError(f"line {lineno}: generator index must be >= 1")
        try:
            values[gen] = SteenrodElement.parse(m.group(2))
        except GrammarError as exc:
            raise TableError(f"line {lineno}: {exc}") from None
    if shift is None:
        shift = rule_shift
    if shift is None:
        degs = [v.degree - m for m, v in sorted(values.items()) if v]
        if not degs:
            raise TableError("cannot infer the shift; add a 'shift:' header")
        shift = degs[0]
    if rule_shift is not None and rule_shift != shift:
        raise TableError(f"rule Sq(m-{rule}) has shift {rule_shift}, header says {shift}")
    if rule == "zero":
        default = lambda m: SteenrodElement.zero()
    elif rule is not None:
        k = rule
        default = lambda m: SteenrodElement.sq(m - k)
    else:
        default = None
    try:
        D = GeneratorDerivation(shift, values, default=default, name=name)
    except ValueError as exc:
        raise TableError(str(exc)) from None
    for gen in values:
        try:
            D.value(gen)  # surfaces degree errors at load time
        except ValueError as exc:
            raise TableError(str(exc)) from None
    return D
