"""Text and TikZ renderings of obstruction tables."""

from __future__ import annotations

from .cube import Bit, Code
from .faces import DistributorTerm, FaceLabel, IntervalSum, ObstructionTable


def render_text(table: ObstructionTable) -> str:
    width = table.n
    return "\n".join(f"{str(c):<{width}}  {lab}" for c, lab in table.items())


def _tex_sum(a: IntervalSum) -> str:
    return " + ".join(f"x_{i}" for i in range(a.lo, a.hi + 1))


def tex_term(t: DistributorTerm) -> str:
    if t.dim == 0:
        (a,) = t.args
        return f"a{_tex_sum(a)}" if a.lo == a.hi else f"a({_tex_sum(a)})"
    return "\\varphi_a^{" + ", ".join(_tex_sum(a) for a in t.args) + "}"


def tex_label(label: FaceLabel) -> str:
    out = tex_term(label.terms[0])
    for prev, t in zip(label.terms, label.terms[1:]):
        # \oplus only between genuine cubes; sums with points read as +
        op = " \\oplus " if prev.dim and t.dim else " + "
        out += op + tex_term(t)
    return out


# screen position of each vertex, as in the usual pictures of the 2- and 3-cube
def _point(code_bits: tuple[float, ...]) -> tuple[float, float]:
    if len(code_bits) == 1:
        return (2 * code_bits[0], 0.0)
    if len(code_bits) == 2:
        t1, t2 = code_bits
        return (2 * t1, 2 * t2)
    t1, t2, t3 = code_bits
    return (4 * t1 + 2 * t2, 2 * t2 + 4 * t3)


def _center(code: Code) -> tuple[float, float]:
    return _point(tuple(0.5 if v is Bit.FREE else float(v) for v in code.entries))


def _fmt(p) -> str:
    return "({:g},{:g})".format(*p)


_COLORS = {0: None, 1: "darkgreen", 2: "purple"}


def render_tikz(table: ObstructionTable) -> str:
    if table.n > 3:
        raise ValueError("TikZ output is only laid out for n <= 3")
    lines = ["\\begin{tikzpicture}[scale=1.7]"]
    for code, label in table.items():
        if code.dim == 1:
            (j,) = code.free_coordinates()
            ends = []
            for b in (0.0, 1.0):
                bits = [b if i == j else float(v) for i, v in enumerate(code.entries, 1)]
                ends.append(_point(tuple(bits)))
            lines.append(f"\\draw [->-=0.5] {_fmt(ends[0])} -- {_fmt(ends[1])};")
    for code, label in table.items():
        p = _center(code)
        if code.dim == 0:
            lines.append(f"\\draw [fill=black] {_fmt(p)} circle (0.05em);")
            lines.append(f"\\node [below left] at {_fmt(p)} {{${tex_label(label)}$}};")
        else:
            color = _COLORS.get(code.dim, "purple")
            lines.append(f"\\node [text={color}, fill=white] at {_fmt(p)} {{${tex_label(label)}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)
