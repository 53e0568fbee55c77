"""Involutions and bijections on colored partitions and the 4-modular diagram.

All maps check their domain first and raise :class:`MapDomainError` on a
violation; the verifier relies on this to surface gaps instead of silently
pairing the wrong objects.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .core import (
    BLUE,
    GREEN,
    ColoredPartition,
    Family,
    Overpartition,
    _single_color_evens,
    canonicalize,
    member,
)


class MapDomainError(ValueError):
    """An input lies outside the domain of the map it was passed to."""


def _require(family: Family, p, what: str) -> None:
    if not member(family, p):
        raise MapDomainError(f"{what}: {p} is not in pi_{family.value}")


# ---------------------------------------------------------------------------
# phi on pi_F minus pi_Q


def _merge(blue: Counter, v: int) -> None:
    blue[v] -= 2
    blue[2 * v] += 1


def _split(blue: Counter, c: int) -> None:
    blue[c] -= 1
    blue[c // 2] += 2


def phi_case(lam: ColoredPartition) -> tuple[str, str, int]:
    """Return ``(case label, action, value)`` chosen for ``lam`` by :func:`phi`.

    ``action`` is ``"merge"`` (two copies of ``value`` become ``2*value``)
    or ``"split"`` (``value`` becomes two copies of ``value // 2``).
    """
    _require(Family.F, lam, "phi")
    if member(Family.Q, lam):
        raise MapDomainError(f"phi: {lam} lies in pi_Q")
    blue = Counter(lam.blue())
    evens = [v for v, m in blue.items() if m and v % 2 == 0]
    rep_odd = [v for v, m in blue.items() if v % 2 == 1 and m >= 2]

    if not evens:
        return "1", "merge", max(rep_odd)
    c = max(evens)
    d = max(rep_odd) if rep_odd else None
    prefix = "2-1" if d is not None else "2-2"
    if d is not None and 2 * d > c:
        return "2-1-i", "merge", d
    if blue[c] >= 2:
        return ("2-1-iii" if d is not None else "2-2-i"), "merge", c
    sub = prefix + "-ii"
    if c % 4 == 2:
        return sub + "/c=4k+2", "split", c
    big_repeated = [e for e in evens if e != c and 2 * e > c and blue[e] >= 2]
    if big_repeated:
        return sub + "/c=4k/merge-e", "merge", max(big_repeated)
    return sub + "/c=4k/split", "split", c


def phi(lam: ColoredPartition) -> ColoredPartition:
    """Parity-of-even-parts changing map on ``pi_F \\ pi_Q``, case tree as written.

    With ``c`` the largest even part and ``d`` the largest repeated blue odd
    part: no evens merges the two largest repeated blue odds; ``2d > c``
    merges the ``d``s; a repeated ``c`` is merged; otherwise ``c = 4k+2`` is
    split, and ``c = 4k`` is split unless some even part above ``c/2`` is
    repeated, in which case the largest such is merged.  Split halves are blue.
    """
    _, action, v = phi_case(lam)
    blue = Counter(lam.blue())
    if action == "merge":
        _merge(blue, v)
    else:
        _split(blue, v)
    parts = [(value, BLUE) for value, m in blue.items() for _ in range(m)]
    parts += [(value, GREEN) for value in lam.green()]
    return canonicalize(parts)


# ---------------------------------------------------------------------------
# relabelling bijections


def to_overpartition(lam: ColoredPartition) -> Overpartition:
    """Blue parts become overlined, green parts plain."""
    _require(Family.Q, lam, "to_overpartition")
    if any(v % 2 == 0 for v in lam.values()):
        raise MapDomainError(f"to_overpartition: {lam} has an even part")
    return Overpartition(tuple((p.value, p.color is BLUE) for p in lam.parts))


def from_overpartition(beta: Overpartition) -> ColoredPartition:
    _require(Family.OVER_ODD, beta, "from_overpartition")
    return canonicalize((v, BLUE if over else GREEN) for v, over in beta.parts)


def strip_colors(lam: ColoredPartition) -> ColoredPartition:
    _require(Family.R, lam, "strip_colors")
    return ColoredPartition.mono(lam.values())


def paint_colors(mu: ColoredPartition) -> ColoredPartition:
    """Odd parts blue, even parts green."""
    _require(Family.H, mu, "paint_colors")
    return canonicalize((v, BLUE if v % 2 else GREEN) for v in mu.values())


# ---------------------------------------------------------------------------
# theta and the even-pair merge on pi_L


def theta(lam: ColoredPartition) -> ColoredPartition:
    """Recolor the largest even value that occurs in only one color."""
    _require(Family.M, lam, "theta")
    target = max(_single_color_evens(lam))
    return canonicalize(
        (p.value, (GREEN if p.color is BLUE else BLUE) if p.value == target else p.color)
        for p in lam.parts)


def pair_merge(lam: ColoredPartition) -> ColoredPartition:
    _require(Family.L, lam, "pair_merge")
    if member(Family.M, lam):
        raise MapDomainError(f"pair_merge: {lam} lies in pi_M")
    # every even value occurs once blue and once green here
    out = [p.value for p in lam.parts if p.value % 2 == 1]
    out += [2 * v for v in lam.green()]
    return ColoredPartition.mono(out)


def pair_split(mu: ColoredPartition) -> ColoredPartition:
    _require(Family.N, mu, "pair_split")
    parts = []
    for v in mu.values():
        if v % 2:
            parts.append((v, BLUE))
        else:
            parts += [(v // 2, BLUE), (v // 2, GREEN)]
    return canonicalize(parts)


# ---------------------------------------------------------------------------
# 4-modular diagram


def _strict_desc(xs: tuple[int, ...]) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class ModularDiagram:
    """The three pieces of a ``pi_N`` partition: multiples of 4, 1 mod 4, 3 mod 4."""

    lambda_e: tuple[int, ...] = ()
    lambda_c1: tuple[int, ...] = ()
    lambda_c3: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name, xs, r in (("lambda_e", self.lambda_e, 0),
                            ("lambda_c1", self.lambda_c1, 1),
                            ("lambda_c3", self.lambda_c3, 3)):
            if not _strict_desc(xs):
                raise ValueError(f"{name} must be strictly decreasing: {xs}")
            if any(x < 1 or x % 4 != r for x in xs):
                raise ValueError(f"{name} parts must be positive and {r} mod 4: {xs}")

    @property
    def weight(self) -> int:
        return sum(self.lambda_e) + sum(self.lambda_c1) + sum(self.lambda_c3)


def to_modular_diagram(mu: ColoredPartition) -> ModularDiagram:
    _require(Family.N, mu, "to_modular_diagram")
    vals = mu.values()
    return ModularDiagram(
        tuple(v for v in vals if v % 4 == 0),
        tuple(v for v in vals if v % 4 == 1),
        tuple(v for v in vals if v % 4 == 3),
    )


def from_modular_diagram(d: ModularDiagram) -> ColoredPartition:
    return ColoredPartition.mono(d.lambda_e + d.lambda_c1 + d.lambda_c3)


class Staircase(enum.Enum):
    C1 = "C1Staircase"
    C3 = "C3Staircase"


@dataclass(frozen=True)
class Shape:
    """Square cells of a diagram after adjoined triangles are merged.

    ``excess`` names the residue class with more parts (``C1`` on ties) and
    ``k`` the surplus.  The surplus parts keep a lone triangle on the first
    ``k`` diagonal cells; everything else is squares, and the squares lying
    past those ``k`` triangle rows form the partition ``free``.  ``free``
    lists row lengths when ``excess`` is ``C1`` and column lengths when it
    is ``C3`` (the picture transposed).
    """

    excess: Staircase
    k: int
    free: tuple[int, ...]


def _cells(legs: tuple[int, ...], arms: tuple[int, ...]) -> tuple[int, set[tuple[int, int]]]:
    # legs hang below diagonal cells 0..p-1; arms run right of diagonal
    # cells k..p-1, so the surplus triangles sit top-left
    p, q = len(legs), len(arms)
    k = p - q
    cells = set()
    for c, a in enumerate(legs):
        cells.update((c + i, c) for i in range(a + 1))
    for j, b in enumerate(arms):
        i = k + j
        cells.update((i, i + t) for t in range(b + 1))
    return k, cells


def shape_of(d: ModularDiagram) -> Shape:
    """Merge adjoined triangles and read the square part as a partition."""
    c1 = tuple((x - 1) // 4 for x in d.lambda_c1)
    c3 = tuple((x - 3) // 4 for x in d.lambda_c3)
    if len(c1) >= len(c3):
        excess, legs, arms = Staircase.C1, c1, c3
    else:
        excess, legs, arms = Staircase.C3, c3, c1
    k, cells = _cells(legs, arms)
    rows: dict[int, list[int]] = {}
    for i, c in cells:
        rows.setdefault(i, []).append(c)
    for i in range(k):
        if sorted(rows.get(i, [])) != list(range(i + 1)):
            raise AssertionError(f"triangle row {i} is not a staircase row: {d}")
    free = []
    i = k
    while i in rows:
        cols = sorted(rows[i])
        if cols != list(range(len(cols))):
            raise AssertionError(f"row {i} is not left-justified: {d}")
        free.append(len(cols))
        i += 1
    if len(cells) != k * (k + 1) // 2 + sum(free):
        raise AssertionError(f"diagram cells do not form a shape: {d}")
    if any(a < b for a, b in zip(free, free[1:])):
        raise AssertionError(f"free part is not a partition: {free}")
    return Shape(excess, k, tuple(free))


def lambda_parts_of(shape: Shape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Redraw the diagonal on ``shape``; returns ``(lambda_c1, lambda_c3)``."""
    k, free = shape.k, shape.free
    rows = [i + 1 for i in range(k)] + list(free)
    depth = k
    while depth - k < len(free) and free[depth - k] >= depth + 1:
        depth += 1
    legs = []
    for c in range(depth):
        legs.append(sum(1 for i in range(c + 1, len(rows)) if rows[i] > c))
    arms = [rows[i] - i - 1 for i in range(k, depth)]
    if shape.excess is Staircase.C1:
        c1 = tuple(4 * a + 1 for a in legs)
        c3 = tuple(4 * b + 3 for b in arms)
    else:
        c3 = tuple(4 * a + 3 for a in legs)
        c1 = tuple(4 * b + 1 for b in arms)
    return c1, c3


@dataclass(frozen=True)
class Moved:
    result: ColoredPartition


@dataclass(frozen=True)
class FixedStaircase:
    kind: Staircase
    k: int


TransformOutcome = Union[Moved, FixedStaircase]


def modular4_transform(mu: ColoredPartition) -> TransformOutcome:
    """Trade the largest free row (or column) of squares with the largest even part.

    If four times the longest all-square row exceeds the largest even part
    (0 when there is none) the row is removed and becomes an even part;
    otherwise the largest even part is inserted as a new longest row.  The
    empty partition and the two staircases, which have neither, are fixed.
    """
    d = to_modular_diagram(mu)
    shape = shape_of(d)
    evens = list(d.lambda_e)
    longest = shape.free[0] if shape.free else 0
    top_even = evens[0] if evens else 0
    if longest == 0 and top_even == 0:
        return FixedStaircase(shape.excess, shape.k)
    if 4 * longest > top_even:
        free = shape.free[1:]
        evens.append(4 * longest)
    else:
        free = (top_even // 4,) + shape.free
        evens.remove(top_even)
    c1, c3 = lambda_parts_of(Shape(shape.excess, shape.k, free))
    out = from_modular_diagram(ModularDiagram(tuple(sorted(evens, reverse=True)), c1, c3))
    return Moved(out)


def staircase(kind: Staircase, k: int) -> ColoredPartition:
    """``(4k-3, ..., 5, 1)`` for ``C1`` and ``(4k-1, ..., 7, 3)`` for ``C3``."""
    r = 1 if kind is Staircase.C1 else 3
    return ColoredPartition.mono(4 * i + r for i in range(k))
