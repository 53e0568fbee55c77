"""Colored partitions, overpartitions, family membership and enumeration.

Every family is represented with the same :class:`ColoredPartition` type.
Monochrome families (``H``, ``K``, ``N``) are stored all-blue.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable, Iterator, NamedTuple, Optional, Union

DEFAULT_MAX_ENUM = 40
MAX_ENUM_ENV = "PARTITION_LAB_MAX_ENUM"


class EnumerationLimitError(ValueError):
    """Raised when an enumeration is requested above the configured ceiling."""


class Color(enum.Enum):
    BLUE = "b"
    GREEN = "g"


BLUE = Color.BLUE
GREEN = Color.GREEN

_COLOR_RANK = {BLUE: 0, GREEN: 1}


class Part(NamedTuple):
    value: int
    color: Color = BLUE

    def __str__(self) -> str:
        return f"{self.value}{self.color.value}"


def _part_key(part: Part) -> tuple[int, int]:
    return (-part.value, _COLOR_RANK[part.color])


@dataclass(frozen=True)
class ColoredPartition:
    """A multiset of colored parts kept in canonical order.

    Canonical order is decreasing value, blue before green at equal value,
    so two partitions are equal as multisets iff their part tuples are equal.
    Build instances with :func:`canonicalize` unless the parts are known to
    be canonical already.
    """

    parts: tuple[Part, ...] = ()

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Part]:
        return iter(self.parts)

    def values(self) -> tuple[int, ...]:
        return tuple(p.value for p in self.parts)

    def blue(self) -> list[int]:
        return [p.value for p in self.parts if p.color is BLUE]

    def green(self) -> list[int]:
        return [p.value for p in self.parts if p.color is GREEN]

    def spec(self, colored: bool = True) -> str:
        """Comma-separated token form, e.g. ``8b,1b`` (or ``8,1`` when uncolored)."""
        if colored:
            return ",".join(str(p) for p in self.parts)
        return ",".join(str(p.value) for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(f"{p.value}_{p.color.value}" for p in self.parts) + ")"

    @classmethod
    def from_spec(cls, text: str) -> ColoredPartition:
        """Parse ``8b,1b``; bare values such as ``5,4,4`` are read as blue."""
        text = text.strip()
        if not text:
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ValueError(f"empty token in partition spec {text!r}")
            color = BLUE
            if token[-1] in "bgBG":
                color = Color(token[-1].lower())
                token = token[:-1]
            if not token.isdigit():
                raise ValueError(f"malformed part {token!r} in partition spec {text!r}")
            parts.append((int(token), color))
        return canonicalize(parts)

    @classmethod
    def mono(cls, values: Iterable[int]) -> ColoredPartition:
        return canonicalize((v, BLUE) for v in values)


def canonicalize(parts: Iterable[Union[Part, tuple[int, Color]]]) -> ColoredPartition:
    out = []
    for value, color in parts:
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"part values must be positive integers, got {value!r}")
        if not isinstance(color, Color):
            color = Color(color)
        out.append(Part(value, color))
    out.sort(key=_part_key)
    return ColoredPartition(tuple(out))


EMPTY = ColoredPartition()


@dataclass(frozen=True)
class Overpartition:
    """Parts are ``(value, overlined)`` pairs, decreasing, overlined first."""

    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.parts, key=lambda vp: (-vp[0], not vp[1])))
        if ordered != self.parts:
            object.__setattr__(self, "parts", ordered)
        seen = set()
        for value, over in self.parts:
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"part values must be positive integers, got {value!r}")
            if over:
                if value in seen:
                    raise ValueError(f"value {value} overlined more than once")
                seen.add(value)

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def spec(self) -> str:
        """Token form; overlined parts carry an ``o`` suffix, e.g. ``3o,1,1``."""
        return ",".join(f"{v}o" if over else str(v) for v, over in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(f"{v}̅" if over else str(v) for v, over in self.parts) + ")"

    @classmethod
    def from_spec(cls, text: str) -> Overpartition:
        text = text.strip()
        if not text:
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            over = token.endswith(("o", "O"))
            digits = token[:-1] if over else token
            if not digits.isdigit():
                raise ValueError(f"malformed overpartition part {token!r}")
            parts.append((int(digits), over))
        return cls(tuple(parts))


class Family(enum.Enum):
    F = "F"
    Q = "Q"
    G = "G"
    R = "R"
    H = "H"
    K = "K"
    L = "L"
    M = "M"
    N = "N"
    OVER = "OVER"
    OVER_ODD = "OVER_ODD"

    @property
    def is_overpartition(self) -> bool:
        return self in (Family.OVER, Family.OVER_ODD)


# ---------------------------------------------------------------------------
# membership


def _all_blue(p: ColoredPartition) -> bool:
    return all(part.color is BLUE for part in p.parts)


def _distinct(values: list[int]) -> bool:
    return len(values) == len(set(values))


def _in_F(p: ColoredPartition) -> bool:
    return all(part.color is BLUE for part in p.parts if part.value % 2 == 0)


def _in_G(p: ColoredPartition) -> bool:
    return all(part.color is BLUE for part in p.parts if part.value % 2 == 1)


def _blue_distinct_odd(p: ColoredPartition) -> bool:
    blue = p.blue()
    return all(v % 2 == 1 for v in blue) and _distinct(blue)


def _in_L(p: ColoredPartition) -> bool:
    return _in_G(p) and _distinct(p.blue()) and _distinct(p.green())


def _single_color_evens(p: ColoredPartition) -> list[int]:
    """Even values of ``p`` that occur in exactly one color."""
    colors: dict[int, set[Color]] = {}
    for part in p.parts:
        if part.value % 2 == 0:
            colors.setdefault(part.value, set()).add(part.color)
    return [v for v, cs in colors.items() if len(cs) == 1]


def member(family: Family, p: Union[ColoredPartition, Overpartition]) -> bool:
    """True iff ``p`` belongs to ``family``; wrong object kinds are simply non-members."""
    if family.is_overpartition:
        if not isinstance(p, Overpartition):
            return False
        return family is Family.OVER or all(v % 2 == 1 for v, _ in p.parts)
    if not isinstance(p, ColoredPartition):
        return False

    if family is Family.F:
        return _in_F(p)
    if family is Family.Q:
        return _in_F(p) and _blue_distinct_odd(p)
    if family is Family.G:
        return _in_G(p)
    if family is Family.R:
        return _in_G(p) and _blue_distinct_odd(p)
    if family is Family.H:
        return _all_blue(p) and _distinct([v for v in p.values() if v % 2 == 1])
    if family is Family.K:
        vals = p.values()
        return (_all_blue(p) and _distinct(list(vals))
                and all(v % 4 == 2 for v in vals if v % 2 == 0))
    if family is Family.L:
        return _in_L(p)
    if family is Family.M:
        return _in_L(p) and bool(_single_color_evens(p))
    if family is Family.N:
        vals = p.values()
        return (_all_blue(p) and _distinct(list(vals))
                and all(v % 4 == 0 for v in vals if v % 2 == 0))
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# enumeration

_UNBOUNDED = 1 << 30


def max_enum() -> int:
    """Enumeration ceiling, overridable through ``PARTITION_LAB_MAX_ENUM``."""
    raw = os.environ.get(MAX_ENUM_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ENUM_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{MAX_ENUM_ENV} must be nonnegative, got {value}")
    return value


def _check_ceiling(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    limit = max_enum()
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration ceiling {limit} (set {MAX_ENUM_ENV} to raise it)")


def _slots(family: Family, n: int) -> list[tuple[int, object, int]]:
    # (value, label, max multiplicity) in canonical order; label is a Color,
    # or the overlined flag for overpartitions.
    out: list[tuple[int, object, int]] = []
    for v in range(n, 0, -1):
        odd = v % 2 == 1
        if family is Family.F:
            out.append((v, BLUE, _UNBOUNDED))
            if odd:
                out.append((v, GREEN, _UNBOUNDED))
        elif family is Family.Q:
            if odd:
                out += [(v, BLUE, 1), (v, GREEN, _UNBOUNDED)]
        elif family is Family.G:
            out.append((v, BLUE, _UNBOUNDED))
            if not odd:
                out.append((v, GREEN, _UNBOUNDED))
        elif family is Family.R:
            out.append((v, BLUE, 1) if odd else (v, GREEN, _UNBOUNDED))
        elif family is Family.H:
            out.append((v, BLUE, 1 if odd else _UNBOUNDED))
        elif family is Family.K:
            if odd or v % 4 == 2:
                out.append((v, BLUE, 1))
        elif family in (Family.L, Family.M):
            out.append((v, BLUE, 1))
            if not odd:
                out.append((v, GREEN, 1))
        elif family is Family.N:
            if odd or v % 4 == 0:
                out.append((v, BLUE, 1))
        elif family is Family.OVER or (family is Family.OVER_ODD and odd):
            out += [(v, True, 1), (v, False, _UNBOUNDED)]
    return out


def _fill(slots, start: int, remaining: int, acc: list) -> Iterator[list]:
    if remaining == 0:
        yield acc
        return
    for i in range(start, len(slots)):
        value, label, cap = slots[i]
        if value > remaining:
            continue
        top = min(cap, remaining // value)
        for k in range(top, 0, -1):
            yield from _fill(slots, i + 1, remaining - k * value, acc + [(value, label)] * k)


@lru_cache(maxsize=256)
def _enumerate_cached(family: Family, n: int) -> tuple:
    slots = _slots(family, n)
    if family.is_overpartition:
        return tuple(Overpartition(tuple(raw)) for raw in _fill(slots, 0, n, []))
    out = (ColoredPartition(tuple(Part(v, c) for v, c in raw)) for raw in _fill(slots, 0, n, []))
    if family is Family.M:
        return tuple(p for p in out if _single_color_evens(p))
    return tuple(out)


def enumerate_family(family: Family, n: int) -> list:
    """All members of ``family`` with weight ``n``, each once, in a fixed order."""
    _check_ceiling(n)
    return list(_enumerate_cached(family, n))


# ---------------------------------------------------------------------------
# statistics and counting


@dataclass(frozen=True)
class PartitionStats:
    n_parts: int
    n_even_parts: int
    n_odd_parts: int
    n_blue_parts: int
    n_blue_even_parts: int
    n_green_parts: int

    @property
    def sign(self) -> int:
        return -1 if self.n_even_parts % 2 else 1


def stats(p: ColoredPartition) -> PartitionStats:
    n_even = sum(1 for part in p.parts if part.value % 2 == 0)
    n_blue = sum(1 for part in p.parts if part.color is BLUE)
    n_blue_even = sum(1 for part in p.parts if part.color is BLUE and part.value % 2 == 0)
    return PartitionStats(
        n_parts=len(p.parts),
        n_even_parts=n_even,
        n_odd_parts=len(p.parts) - n_even,
        n_blue_parts=n_blue,
        n_blue_even_parts=n_blue_even,
        n_green_parts=len(p.parts) - n_blue,
    )


class Stat(enum.Enum):
    EVEN_PARTS = "even-parts"
    PARTS = "parts"
    BLUE_PARTS = "blue-parts"
    BLUE_EVEN_PARTS = "blue-even"

    def of(self, s: PartitionStats) -> int:
        return {
            Stat.EVEN_PARTS: s.n_even_parts,
            Stat.PARTS: s.n_parts,
            Stat.BLUE_PARTS: s.n_blue_parts,
            Stat.BLUE_EVEN_PARTS: s.n_blue_even_parts,
        }[self]


@dataclass(frozen=True)
class ParityFilter:
    """Keep partitions whose ``stat`` has the given parity (0 even, 1 odd)."""

    stat: Stat
    parity: int

    def __call__(self, p: ColoredPartition) -> bool:
        return self.stat.of(stats(p)) % 2 == self.parity

    def __str__(self) -> str:
        return f"{self.stat.value}-{'even' if self.parity == 0 else 'odd'}"


def parse_filter(text: Optional[str]) -> Optional[ParityFilter]:
    """``None``/``"all"`` means no filter; otherwise e.g. ``blue-even-odd``."""
    if text is None or text == "all":
        return None
    for stat in Stat:
        for parity, word in ((0, "even"), (1, "odd")):
            if text == f"{stat.value}-{word}":
                return ParityFilter(stat, parity)
    choices = ["all"] + [f"{s.value}-{w}" for s in Stat for w in ("even", "odd")]
    raise ValueError(f"unknown filter {text!r}; expected one of {', '.join(choices)}")


def count(family: Family, n: int, filter: Optional[ParityFilter] = None) -> int:
    """Size of the filtered enumeration; for ``K`` the sum of ``(-1)^(#even parts)``."""
    members = enumerate_family(family, n)
    if family.is_overpartition:
        if filter is not None:
            raise ValueError("overpartition families only support the 'all' filter")
        return len(members)
    if filter is not None:
        members = [p for p in members if filter(p)]
    if family is Family.K:
        return sum(stats(p).sign for p in members)
    return len(members)


def _even(stat: Stat) -> ParityFilter:
    return ParityFilter(stat, 0)


def _odd(stat: Stat) -> ParityFilter:
    return ParityFilter(stat, 1)


COUNTING_FUNCTIONS: dict[str, tuple[Family, Optional[ParityFilter]]] = {
    "F": (Family.F, None),
    "F0": (Family.F, _even(Stat.EVEN_PARTS)),
    "F1": (Family.F, _odd(Stat.EVEN_PARTS)),
    "F2": (Family.F, _even(Stat.PARTS)),
    "F3": (Family.F, _odd(Stat.PARTS)),
    "G": (Family.G, None),
    "G0": (Family.G, _even(Stat.BLUE_EVEN_PARTS)),
    "G1": (Family.G, _odd(Stat.BLUE_EVEN_PARTS)),
    "G2": (Family.G, _even(Stat.BLUE_PARTS)),
    "G3": (Family.G, _odd(Stat.BLUE_PARTS)),
    "G4": (Family.G, _even(Stat.PARTS)),
    "G5": (Family.G, _odd(Stat.PARTS)),
    "H": (Family.H, None),
    "K": (Family.K, None),
    "L": (Family.L, None),
    "L0": (Family.L, _even(Stat.BLUE_EVEN_PARTS)),
    "L1": (Family.L, _odd(Stat.BLUE_EVEN_PARTS)),
    "L2": (Family.L, _even(Stat.BLUE_PARTS)),
    "L3": (Family.L, _odd(Stat.BLUE_PARTS)),
    "OVER": (Family.OVER, None),
    "OVER_ODD": (Family.OVER_ODD, None),
}


def counting_function(name: str, n: int) -> int:
    """Evaluate a named counting function such as ``"G4"`` or ``"OVER_ODD"`` at ``n``."""
    family, flt = COUNTING_FUNCTIONS[name]
    return count(family, n, flt)


def is_triangular(n: int) -> Optional[int]:
    """Return ``k`` with ``k(k+1)/2 == n``, or ``None``."""
    if n < 0:
        return None
    k = (isqrt(8 * n + 1) - 1) // 2
    return k if k * (k + 1) // 2 == n else None
