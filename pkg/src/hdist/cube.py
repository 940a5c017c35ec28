"""Cells of the n-cube, indexed by codes over {0, 1, I}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Optional


class Bit(IntEnum):
    ZERO = 0
    ONE = 1
    FREE = 2

    @property
    def char(self) -> str:
        return "01I"[self]


_CHARS = {"0": Bit.ZERO, "1": Bit.ONE, "I": Bit.FREE}


@dataclass(frozen=True, slots=True)
class Code:
    """A code sigma: {1..n} -> {0, 1, I}, naming the cell C_sigma of I^n.

    Coordinates are 1-indexed to match t_1, ..., t_n.
    """

    entries: tuple[Bit, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Bit(v) for v in self.entries))
        if len(self.entries) < 1:
            raise ValueError("a code needs at least one coordinate")

    @classmethod
    def parse(cls, text: str) -> "Code":
        try:
            return cls(tuple(_CHARS[c] for c in text))
        except KeyError as exc:
            raise ValueError(f"invalid code character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def full(cls, n: int) -> "Code":
        return cls((Bit.FREE,) * n)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def dim(self) -> int:
        return self.entries.count(Bit.FREE)

    @property
    def is_full(self) -> bool:
        return Bit.ZERO not in self.entries and Bit.ONE not in self.entries

    def __getitem__(self, j: int) -> Bit:
        """Entry at 1-indexed coordinate ``j``."""
        if not 1 <= j <= self.n:
            raise IndexError(f"coordinate {j} outside 1..{self.n}")
        return self.entries[j - 1]

    def free_coordinates(self) -> list[int]:
        return [j for j, v in enumerate(self.entries, 1) if v is Bit.FREE]

    def __str__(self) -> str:
        return "".join(v.char for v in self.entries)

    def __repr__(self) -> str:
        return f"Code({str(self)!r})"


def dim_of(code: Code) -> int:
    return code.dim


def iter_codes(n: int) -> Iterator[Code]:
    if n < 1:
        raise ValueError(f"cube dimension must be positive, got {n}")
    for entries in itertools.product(Bit, repeat=n):
        yield Code(entries)


def enumerate_codes(n: int) -> list[Code]:
    """All 3**n codes in lexicographic order with 0 < 1 < I.

    The last code is the full cube; use ``Code.is_full`` to pick it out.
    """
    return list(iter_codes(n))


def proper_codes(n: int) -> list[Code]:
    return [c for c in iter_codes(n) if not c.is_full]


def specialize(code: Code, j: int, b: Bit) -> Code:
    """Fix the free coordinate ``j`` to ``b``."""
    if b is Bit.FREE:
        raise ValueError("can only specialize to ZERO or ONE")
    if code[j] is not Bit.FREE:
        raise ValueError(f"coordinate {j} of {code} is fixed, cannot specialize")
    entries = list(code.entries)
    entries[j - 1] = Bit(b)
    return Code(tuple(entries))


def meet(a: Code, b: Code) -> Optional[Code]:
    """Code of the intersection C_a ∩ C_b, or None when the cells are disjoint."""
    if a.n != b.n:
        raise ValueError(f"codes live in different cubes: {a.n} vs {b.n}")
    out = []
    for u, v in zip(a.entries, b.entries):
        if u is Bit.FREE:
            out.append(v)
        elif v is Bit.FREE or u is v:
            out.append(u)
        else:
            return None
    return Code(tuple(out))


def is_face_of(tau: Code, sigma: Code) -> bool:
    """True when C_tau ⊆ C_sigma."""
    return meet(sigma, tau) == tau
