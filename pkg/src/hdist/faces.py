"""Face formula: the distributor expression carried by each cell of I^n.

A label is an external sum of distributor terms phi_a^{x_K0, ..., x_Kd},
each argument the sum of a run of consecutive inputs x_lo + ... + x_hi.
Labels are plain structural data and compare by value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

from ._backend import kernel
from .cube import Bit, Code, iter_codes, specialize
from .report import Counterexample, VerificationReport


class IntervalSum(NamedTuple):
    lo: int
    hi: int

    def __str__(self) -> str:
        return "+".join(f"x{i}" for i in range(self.lo, self.hi + 1))


class DistributorTerm(NamedTuple):
    args: tuple[IntervalSum, ...]

    @property
    def dim(self) -> int:
        return len(self.args) - 1

    @property
    def lo(self) -> int:
        return self.args[0].lo

    @property
    def hi(self) -> int:
        return self.args[-1].hi

    def __str__(self) -> str:
        return "phi_a^{" + ", ".join(str(a) for a in self.args) + "}"


class FaceLabel(NamedTuple):
    terms: tuple[DistributorTerm, ...]
    n: int

    @property
    def dim(self) -> int:
        return sum(len(t.args) - 1 for t in self.terms)

    def __str__(self) -> str:
        return " (+) ".join(str(t) for t in self.terms)

    def to_json(self) -> dict:
        return {
            "terms": [{"args": [{"lo": a.lo, "hi": a.hi} for a in t.args]} for t in self.terms],
            "n": self.n,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FaceLabel":
        label = cls(
            tuple(DistributorTerm(tuple(IntervalSum(int(a["lo"]), int(a["hi"])) for a in t["args"]))
                  for t in doc["terms"]),
            int(doc["n"]),
        )
        validate_label(label)
        return label


def validate_label(label: FaceLabel) -> None:
    """Raise ValueError unless the arguments tile {0..n} in order."""
    expect = 0
    if not label.terms:
        raise ValueError("a label needs at least one term")
    for t in label.terms:
        if not t.args:
            raise ValueError("a distributor term needs at least one argument")
        for a in t.args:
            if a.lo != expect or a.hi < a.lo:
                raise ValueError(f"argument {tuple(a)} breaks the tiling at {expect}")
            expect = a.hi + 1
    if expect != label.n + 1:
        raise ValueError(f"arguments cover 0..{expect - 1}, expected 0..{label.n}")


def make_label(blocks, n: int) -> FaceLabel:
    """Build a label from nested (lo, hi) pairs, one inner list per term."""
    return FaceLabel(tuple(DistributorTerm(tuple(IntervalSum(lo, hi) for lo, hi in ks)) for ks in blocks), n)


def partition_blocks(code: Code) -> list[list[IntervalSum]]:
    """The J-blocks of {0..n} and their K-subdivisions.

    With sigma(0) = 1 prepended, a J-block starts at each 1 and a K-block at
    each 1 or I.
    """
    return [[IntervalSum(lo, hi) for lo, hi in ks] for ks in kernel.face_blocks(tuple(map(int, code.entries)))]


def face_label(code: Code) -> FaceLabel:
    """Face formula. The full-cube code yields phi_a^{x0, ..., xn}."""
    return make_label(kernel.face_blocks(tuple(map(int, code.entries))), code.n)


def _locate(label: FaceLabel, j: int):
    for ti, t in enumerate(label.terms):
        if t.lo <= j <= t.hi:
            for ai, a in enumerate(t.args):
                if a.lo == j and ai > 0:
                    return ti, ai
            break
    raise ValueError(f"coordinate {j} is not a free separator of {label}")


def restrict_label(label: FaceLabel, j: int, b: Bit) -> FaceLabel:
    """Restrict a label to the face t_j = b, working on the label alone.

    t_j = 0 merges the argument starting at x_j into its predecessor;
    t_j = 1 splits the containing term in front of that argument.
    """
    ti, ai = _locate(label, j)
    t = label.terms[ti]
    if b == Bit.ZERO:
        merged = IntervalSum(t.args[ai - 1].lo, t.args[ai].hi)
        new = (DistributorTerm(t.args[:ai - 1] + (merged,) + t.args[ai + 1:]),)
    elif b == Bit.ONE:
        new = (DistributorTerm(t.args[:ai]), DistributorTerm(t.args[ai:]))
    else:
        raise ValueError("can only restrict to ZERO or ONE")
    return FaceLabel(label.terms[:ti] + new + label.terms[ti + 1:], label.n)


@dataclass(frozen=True)
class ObstructionTable:
    n: int
    entries: dict  # Code -> FaceLabel, proper codes in enumeration order

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, code: Code | str) -> FaceLabel:
        if isinstance(code, str):
            code = Code.parse(code)
        return self.entries[code]

    def items(self):
        return self.entries.items()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "faces": [
                {"code": str(c), "dim": c.dim, "label": lab.to_json(), "text": str(lab)}
                for c, lab in self.entries.items()
            ],
        }


def obstruction_map(n: int) -> ObstructionTable:
    """Labels of every proper face of I^n."""
    return ObstructionTable(n, {c: face_label(c) for c in iter_codes(n) if not c.is_full})


def check_face_compatibility(n: int, pairs: bool = True) -> VerificationReport:
    """Check that restricting a label agrees with relabelling the face.

    For every code (full cube included), every free coordinate j and both
    bits, ``restrict_label(face_label(s), j, b)`` must equal
    ``face_label(specialize(s, j, b))``. With ``pairs``, restrictions at two
    distinct free coordinates must also commute.
    """
    checked = 0
    commuting = 0
    bits = (Bit.ZERO, Bit.ONE)
    for code in iter_codes(n):
        label = face_label(code)
        free = code.free_coordinates()
        for j in free:
            for b in bits:
                checked += 1
                got = restrict_label(label, j, b)
                want = face_label(specialize(code, j, b))
                if got != want:
                    return VerificationReport(
                        "check-compat", checked,
                        Counterexample((str(code), j, int(b)), str(want), str(got)),
                        {"n": n, "commuting_pairs": commuting},
                    )
        if not pairs:
            continue
        for j, k in itertools.combinations(free, 2):
            for b, c in itertools.product(bits, bits):
                commuting += 1
                one = restrict_label(restrict_label(label, j, b), k, c)
                two = restrict_label(restrict_label(label, k, c), j, b)
                if one != two:
                    return VerificationReport(
                        "check-compat", checked,
                        Counterexample((str(code), (j, int(b)), (k, int(c))), str(one), str(two)),
                        {"n": n, "commuting_pairs": commuting},
                    )
    return VerificationReport("check-compat", checked, None, {"n": n, "commuting_pairs": commuting})


class WedgeConstant(NamedTuple):
    """A constant cube: 0 when ``k`` is None, else a*x_k."""

    k: Optional[int]

    def __str__(self) -> str:
        return "0" if self.k is None else f"a*x{self.k}"


ZERO_CONSTANT = WedgeConstant(None)


def _collapse_term(term: DistributorTerm, k: int) -> WedgeConstant:
    live = [a for a in term.args if a.lo <= k <= a.hi]
    if not live:
        return ZERO_CONSTANT
    # disjoint arguments: at most one holds x_k
    return WedgeConstant(k)


def wedge_collapse(label: FaceLabel, k: int) -> WedgeConstant:
    """Set every input except x_k to zero and simplify to a constant."""
    if not 0 <= k <= label.n:
        raise ValueError(f"input index {k} outside 0..{label.n}")
    parts = [c for c in (_collapse_term(t, k) for t in label.terms) if c.k is not None]
    if not parts:
        return ZERO_CONSTANT
    if len(parts) > 1:
        raise ValueError(f"{label} does not tile its inputs")
    return parts[0]


def check_wedge(n: int) -> VerificationReport:
    """Every proper face label collapses to a*x_k when only x_k survives."""
    checked = 0
    for code in iter_codes(n):
        if code.is_full:
            continue
        label = face_label(code)
        for k in range(n + 1):
            checked += 1
            got = wedge_collapse(label, k)
            if got != WedgeConstant(k):
                return VerificationReport(
                    "wedge", checked,
                    Counterexample((str(code), k), str(WedgeConstant(k)), str(got)), {"n": n},
                )
    return VerificationReport("wedge", checked, None, {"n": n})


def check_universality(n: int) -> VerificationReport:
    """Labels depend on the inputs only through sums of consecutive runs.

    Also checks the bookkeeping: label dimension equals code dimension and
    there is one term per 1 in the code, plus one.
    """
    checked = 0
    for code in iter_codes(n):
        checked += 1
        label = face_label(code)
        problem = None
        try:
            validate_label(label)
        except ValueError as exc:
            problem = str(exc)
        if problem is None and label.dim != code.dim:
            problem = f"label dimension {label.dim} != code dimension {code.dim}"
        if problem is None and len(label.terms) != code.entries.count(Bit.ONE) + 1:
            problem = "term count does not match the number of 1s"
        if problem is not None:
            return VerificationReport(
                "universality", checked, Counterexample(str(code), "tiling label", str(label), {"problem": problem}),
                {"n": n},
            )
    return VerificationReport("universality", checked, None, {"n": n})
