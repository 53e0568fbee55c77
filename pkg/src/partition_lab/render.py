"""ASCII and SVG pictures of 4-modular diagrams.

Rows above the diagonal are the parts congruent to 3 mod 4, columns below
it the parts congruent to 1 mod 4.  Even parts are only listed underneath.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .maps import ModularDiagram, _cells

SQUARE = "#"


def diagram_cells(d: ModularDiagram) -> dict[tuple[int, int], str]:
    """Map ``(row, col)`` to ``"#"``, ``"1"``, ``"3"`` or ``"13"`` (both triangles).

    Row 0 is the top of the picture and the diagonal runs from the top-left
    corner down to the right.
    """
    c1 = tuple((x - 1) // 4 for x in d.lambda_c1)
    c3 = tuple((x - 3) // 4 for x in d.lambda_c3)
    transpose = len(c3) > len(c1)
    legs, arms = (c3, c1) if transpose else (c1, c3)
    k, cells = _cells(legs, arms)
    leg_diag = set(range(len(legs)))
    arm_diag = set(range(k, len(legs)))
    c1_diag, c3_diag = (arm_diag, leg_diag) if transpose else (leg_diag, arm_diag)
    out = {}
    for i, c in cells:
        if transpose:
            i, c = c, i
        if i != c:
            out[(i, c)] = SQUARE
        else:
            out[(i, c)] = ("1" if i in c1_diag else "") + ("3" if i in c3_diag else "")
    return out


def _evens_line(d: ModularDiagram) -> str:
    if not d.lambda_e:
        return "λ_e: (none)"
    return "λ_e: (" + ", ".join(str(v) for v in d.lambda_e) + ")"


def render_ascii(d: ModularDiagram) -> str:
    """Two characters per cell: ``##`` square, ``13`` split diagonal cell,
    ``1.`` / ``.3`` a lone lower / upper triangle."""
    cells = diagram_cells(d)
    lines = []
    if cells:
        rows = max(i for i, _ in cells) + 1
        cols = max(c for _, c in cells) + 1
        glyph = {SQUARE: "##", "13": "13", "1": "1.", "3": ".3"}
        for i in range(rows):
            line = "".join(glyph[cells[(i, c)]] if (i, c) in cells else "  " for c in range(cols))
            lines.append(line.rstrip())
    lines.append(_evens_line(d))
    return "\n".join(lines) + "\n"


def render_svg(d: ModularDiagram, unit: int = 40) -> str:
    cells = diagram_cells(d)
    rows = max((i for i, _ in cells), default=-1) + 1
    cols = max((c for _, c in cells), default=-1) + 1
    width = max(cols * unit, 1) + 2 * unit
    height = rows * unit + 2 * unit
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           '<g fill="none" stroke="black" stroke-width="1">']
    ox = oy = unit // 2
    labels = []
    for (i, c), kind in sorted(cells.items()):
        x, y = ox + c * unit, oy + i * unit
        if kind == SQUARE:
            out.append(f'<rect x="{x}" y="{y}" width="{unit}" height="{unit}"/>')
            continue
        if "1" in kind:
            out.append(f'<polygon class="tri1" points="{x},{y} {x},{y + unit} '
                       f'{x + unit},{y + unit}"/>')
            labels.append((x + unit * 0.25, y + unit * 0.8, "1"))
        if "3" in kind:
            out.append(f'<polygon class="tri3" points="{x},{y} {x + unit},{y} '
                       f'{x + unit},{y + unit}"/>')
            labels.append((x + unit * 0.6, y + unit * 0.4, "3"))
    diag = max((i + 1 for (i, c) in cells if i == c), default=0)
    if diag:
        out.append(f'<line class="diagonal" x1="{ox}" y1="{oy}" '
                   f'x2="{ox + diag * unit}" y2="{oy + diag * unit}"/>')
    out.append("</g>")
    for x, y, text in labels:
        out.append(f'<text x="{x:g}" y="{y:g}" font-size="{unit // 3}">{text}</text>')
    out.append(f'<text x="{ox}" y="{oy + rows * unit + unit // 2 + 4}" '
               f'font-size="{unit // 3}">{escape(_evens_line(d))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(d: ModularDiagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(d)
    if fmt == "svg":
        return render_svg(d)
    raise ValueError(f"unknown diagram format {fmt!r}")
