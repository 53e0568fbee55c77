"""Identity, generating-function and map verification with structured reports.

Every check is exhaustive or exact.  Reports are plain dataclasses with a
``to_dict`` suitable for JSON; ordering is by check then by ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

from .core import (
    Family,
    counting_function,
    enumerate_family,
    is_triangular,
    max_enum,
    member,
    stats,
)
from .maps import (
    FixedStaircase,
    MapDomainError,
    Moved,
    Staircase,
    from_overpartition,
    modular4_transform,
    pair_merge,
    pair_split,
    paint_colors,
    phi,
    phi_case,
    staircase,
    strip_colors,
    theta,
    to_modular_diagram,
    to_overpartition,
)
from .qseries import (
    GfId,
    TruncatedSeries,
    family_gf,
    poch,
    series_from_factors,
    staircase_series,
    staircase_series_weight_signed,
)

SCHEMA_VERSION = 1

Number = Union[int, Fraction]


class Mode(enum.Enum):
    ENUMERATION = "enum"
    SERIES = "series"


class IdentityId(enum.Enum):
    T11a = "T11a"
    T11b = "T11b"
    T11c = "T11c"
    T11d = "T11d"
    T11e = "T11e"
    T15a = "T15a"
    T15b = "T15b"
    T15c = "T15c"
    T15d = "T15d"
    T15e = "T15e"
    T15f = "T15f"
    T17f = "T17f"
    T17g = "T17g"


class MapId(enum.Enum):
    PHI = "Phi"
    TO_OVERPARTITION = "ToOverpartition"
    STRIP_COLORS = "StripColors"
    THETA = "Theta"
    PAIR_MERGE = "PairMerge"
    MODULAR4 = "Modular4"


def _num(x: Number) -> Union[int, str]:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class Row:
    n: int
    lhs: Number
    rhs: Number
    mode: Mode

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"n": self.n, "lhs": _num(self.lhs), "rhs": _num(self.rhs),
                "equal": self.equal, "mode": self.mode.value}


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    mode: Mode
    rows: tuple[Row, ...]
    description: str = ""

    @property
    def all_pass(self) -> bool:
        return all(r.equal for r in self.rows)

    def failures(self) -> list[Row]:
        return [r for r in self.rows if not r.equal]

    def to_dict(self) -> dict:
        return {"identity": self.identity, "mode": self.mode.value,
                "description": self.description, "all_pass": self.all_pass,
                "per_n": [r.to_dict() for r in self.rows]}


# ---------------------------------------------------------------------------
# value sources


@lru_cache(maxsize=64)
def _gf(gf: GfId, trunc: int) -> TruncatedSeries:
    return family_gf(gf, trunc)


def _half(a: Number, b: Number) -> Number:
    return _normalize(Fraction(a + b, 2))


class EnumSource:
    """Counting functions evaluated by exhaustive enumeration."""

    mode = Mode.ENUMERATION

    def __call__(self, name: str, n: int) -> Number:
        if name == "TRI":
            return 1 if is_triangular(n) is not None else 0
        return counting_function(name, n)


class SeriesSource:
    """Counting functions read off generating-function coefficients.

    Parity-split functions come from the total and the signed difference,
    e.g. ``G4 = (G + (G4 - G5)) / 2``.
    """

    mode = Mode.SERIES

    _DIRECT = {"F": GfId.F, "G": GfId.G, "H": GfId.H, "K": GfId.K, "L": GfId.L,
               "OVER": GfId.OVER, "OVER_ODD": GfId.OVER_ODD}
    _SPLIT = {
        "F0": ("F", GfId.F0_MINUS_F1, 1), "F1": ("F", GfId.F0_MINUS_F1, -1),
        "F2": ("F", GfId.F2_MINUS_F3, 1), "F3": ("F", GfId.F2_MINUS_F3, -1),
        "G0": ("G", GfId.G0_MINUS_G1, 1), "G1": ("G", GfId.G0_MINUS_G1, -1),
        "G2": ("G", GfId.G2_MINUS_G3, 1), "G3": ("G", GfId.G2_MINUS_G3, -1),
        "G4": ("G", GfId.G4_MINUS_G5, 1), "G5": ("G", GfId.G4_MINUS_G5, -1),
        "L0": ("L", GfId.L0_MINUS_L1, 1), "L1": ("L", GfId.L0_MINUS_L1, -1),
        "L2": ("L", GfId.L2_MINUS_L3, 1), "L3": ("L", GfId.L2_MINUS_L3, -1),
    }

    def __init__(self, trunc: int):
        self.trunc = trunc

    def __call__(self, name: str, n: int) -> Number:
        if n > self.trunc:
            raise ValueError(f"n={n} exceeds series truncation {self.trunc}")
        if name == "TRI":
            return staircase_series(False, self.trunc)[n]
        if name in self._DIRECT:
            return _gf(self._DIRECT[name], self.trunc)[n]
        total, diff, sign = self._SPLIT[name]
        return _half(self(total, n), sign * _gf(diff, self.trunc)[n])


Source = Callable[[str, int], Number]


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


# lhs, rhs as functions of (source, n)
_IDENTITIES: dict[IdentityId, tuple[str, Callable, Callable]] = {
    IdentityId.T11a: ("F(n) = pbar(n)",
                      lambda v, n: v("F", n), lambda v, n: v("OVER", n)),
    IdentityId.T11b: ("F0(n) = (pbar(n) + pbar_o(n))/2",
                      lambda v, n: v("F0", n),
                      lambda v, n: _half(v("OVER", n), v("OVER_ODD", n))),
    IdentityId.T11c: ("F1(n) = (pbar(n) - pbar_o(n))/2",
                      lambda v, n: v("F1", n),
                      lambda v, n: _half(v("OVER", n), -v("OVER_ODD", n))),
    IdentityId.T11d: ("F2(n) = (pbar(n) + (-1)^n pbar_o(n))/2",
                      lambda v, n: v("F2", n),
                      lambda v, n: _half(v("OVER", n), _sgn(n) * v("OVER_ODD", n))),
    IdentityId.T11e: ("F3(n) = (pbar(n) - (-1)^n pbar_o(n))/2",
                      lambda v, n: v("F3", n),
                      lambda v, n: _half(v("OVER", n), -_sgn(n) * v("OVER_ODD", n))),
    IdentityId.T15a: ("G0(n) = (G(n) + H(n))/2",
                      lambda v, n: v("G0", n), lambda v, n: _half(v("G", n), v("H", n))),
    IdentityId.T15b: ("G1(n) = (G(n) - H(n))/2",
                      lambda v, n: v("G1", n), lambda v, n: _half(v("G", n), -v("H", n))),
    IdentityId.T15c: ("G2(n) = (G(n) + (-1)^n H(n))/2",
                      lambda v, n: v("G2", n),
                      lambda v, n: _half(v("G", n), _sgn(n) * v("H", n))),
    IdentityId.T15d: ("G3(n) = (G(n) - (-1)^n H(n))/2",
                      lambda v, n: v("G3", n),
                      lambda v, n: _half(v("G", n), -_sgn(n) * v("H", n))),
    IdentityId.T15e: ("G4(n) = (G(n) + (-1)^n K(n))/2",
                      lambda v, n: v("G4", n),
                      lambda v, n: _half(v("G", n), _sgn(n) * v("K", n))),
    IdentityId.T15f: ("G5(n) = (G(n) - (-1)^n K(n))/2",
                      lambda v, n: v("G5", n),
                      lambda v, n: _half(v("G", n), -_sgn(n) * v("K", n))),
    IdentityId.T17f: ("L0(n) - L1(n) = [n triangular]",
                      lambda v, n: v("L0", n) - v("L1", n), lambda v, n: v("TRI", n)),
    IdentityId.T17g: ("L2(n) - L3(n) = (-1)^n [n triangular]",
                      lambda v, n: v("L2", n) - v("L3", n),
                      lambda v, n: _sgn(n) * v("TRI", n)),
}


def describe(identity: IdentityId) -> str:
    return _IDENTITIES[identity][0]


def check_identity(identity: Union[IdentityId, str], n_max: int,
                   mode: Union[Mode, str] = Mode.ENUMERATION) -> IdentityReport:
    """Evaluate both sides of ``identity`` for ``0 <= n <= n_max``.

    In enumeration mode, values of ``n`` above the enumeration ceiling fall
    back to series coefficients; each row records the mode it used.
    """
    identity = IdentityId(identity) if not isinstance(identity, IdentityId) else identity
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    desc, lhs, rhs = _IDENTITIES[identity]
    series = SeriesSource(n_max)
    enum_limit = max_enum() if mode is Mode.ENUMERATION else -1
    rows = []
    for n in range(n_max + 1):
        src: Source = EnumSource() if n <= enum_limit else series
        rows.append(Row(n, _normalize(lhs(src, n)), _normalize(rhs(src, n)), src.mode))
    return IdentityReport(identity.value, mode, tuple(rows), desc)


GF_FAMILIES: dict[Family, GfId] = {
    Family.F: GfId.F, Family.G: GfId.G, Family.H: GfId.H, Family.K: GfId.K,
    Family.L: GfId.L, Family.OVER: GfId.OVER, Family.OVER_ODD: GfId.OVER_ODD,
}


def cross_check_gf(family: Union[Family, str], n_max: int) -> IdentityReport:
    """Series coefficients against exhaustive counts (signed for ``K``)."""
    family = Family(family) if not isinstance(family, Family) else family
    if family not in GF_FAMILIES:
        raise ValueError(f"family {family.value} has no generating function")
    series = _gf(GF_FAMILIES[family], n_max)
    name = family.value
    rows = tuple(Row(n, series[n], counting_function(name, n), Mode.ENUMERATION)
                 for n in range(n_max + 1))
    return IdentityReport(f"gf:{name}", Mode.ENUMERATION, rows,
                          f"coefficient of the {name} generating function = enumerated count")


# ---------------------------------------------------------------------------
# product-form displays


@dataclass(frozen=True)
class Display:
    name: str
    description: str
    lhs: Callable[[int], TruncatedSeries]
    rhs: Callable[[int], TruncatedSeries]
    printed_only: bool = False


DISPLAYS: tuple[Display, ...] = (
    Display("K_product", "(q^2;q^4)(-q;q^2) = (-q;q^2)/(-q^2;q^2)",
            lambda N: _gf(GfId.K, N),
            lambda N: series_from_factors((poch(1, 2, +1), poch(2, 2, +1, -1)), N)),
    Display("G0_minus_G1", "1/((-q^2;q^2)(q;q)) = (-q;q^2)/(q^2;q^2) = sum H(n) q^n",
            lambda N: _gf(GfId.G0_MINUS_G1, N),
            lambda N: series_from_factors((poch(1, 2, +1), poch(2, 2, power=-1)), N)),
    Display("G2_minus_G3", "1/((q^2;q^2)(-q;q)) = sum (-1)^n H(n) q^n",
            lambda N: _gf(GfId.G2_MINUS_G3, N),
            lambda N: _gf(GfId.H, N).alternate()),
    Display("G4_minus_G5", "1/((-q^2;q^2)(-q;q)) = (q;q^2)/(-q^2;q^2)",
            lambda N: _gf(GfId.G4_MINUS_G5, N),
            lambda N: series_from_factors((poch(1, 2), poch(2, 2, +1, -1)), N)),
    Display("G4_minus_G5_K", "1/((-q^2;q^2)(-q;q)) = sum (-1)^n K(n) q^n",
            lambda N: _gf(GfId.G4_MINUS_G5, N),
            lambda N: _gf(GfId.K, N).alternate()),
    Display("L0_minus_L1_quotient", "(q^2;q^2)(-q;q) = (q^2;q^2)/(q;q^2)",
            lambda N: _gf(GfId.L0_MINUS_L1, N),
            lambda N: series_from_factors((poch(2, 2), poch(1, 2, power=-1)), N)),
    Display("L0_minus_L1_staircase", "(q^2;q^2)(-q;q) = sum_k q^(k(k+1)/2)",
            lambda N: _gf(GfId.L0_MINUS_L1, N),
            lambda N: staircase_series(False, N)),
    Display("L2_minus_L3_staircase", "(-q^2;q^2)(q;q) = sum_k (-1)^(k(k+1)/2) q^(k(k+1)/2)",
            lambda N: _gf(GfId.L2_MINUS_L3, N),
            lambda N: staircase_series_weight_signed(N)),
    Display("L2_minus_L3_staircase_as_printed",
            "(-q^2;q^2)(q;q) = sum_k (-1)^k q^(k(k+1)/2), sign on the summation index",
            lambda N: _gf(GfId.L2_MINUS_L3, N),
            lambda N: staircase_series(True, N),
            printed_only=True),
)


def check_display(display: Display, n_max: int) -> IdentityReport:
    a, b = display.lhs(n_max), display.rhs(n_max)
    rows = tuple(Row(n, a[n], b[n], Mode.SERIES) for n in range(n_max + 1))
    return IdentityReport(f"display:{display.name}", Mode.SERIES, rows, display.description)


def consistency_checks(n_max: int) -> list[IdentityReport]:
    """Parity decompositions and the sign-twist relations between statistics."""
    src = EnumSource()
    reports = []
    for total, a, b in (("F", "F0", "F1"), ("F", "F2", "F3"), ("G", "G0", "G1"),
                        ("G", "G2", "G3"), ("G", "G4", "G5"), ("L", "L0", "L1"),
                        ("L", "L2", "L3")):
        rows = tuple(Row(n, src(a, n) + src(b, n), src(total, n), Mode.ENUMERATION)
                     for n in range(n_max + 1))
        reports.append(IdentityReport(f"split:{a}+{b}={total}", Mode.ENUMERATION, rows,
                                      f"{a}(n) + {b}(n) = {total}(n)"))
    for (a, b), (c, d) in ((("F2", "F3"), ("F0", "F1")), (("G2", "G3"), ("G0", "G1")),
                           (("L2", "L3"), ("L0", "L1"))):
        rows = tuple(Row(n, src(a, n) - src(b, n), _sgn(n) * (src(c, n) - src(d, n)),
                         Mode.ENUMERATION) for n in range(n_max + 1))
        reports.append(IdentityReport(
            f"twist:{a}-{b}", Mode.ENUMERATION, rows,
            f"{a}(n) - {b}(n) = (-1)^n ({c}(n) - {d}(n))"))
    return reports


# ---------------------------------------------------------------------------
# map checks


@dataclass(frozen=True)
class Finding:
    map: str
    n: int
    kind: str
    input: str
    output: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        return {"map": self.map, "n": self.n, "kind": self.kind, "input": self.input,
                "output": self.output, "detail": self.detail}


@dataclass(frozen=True)
class MapRow:
    n: int
    domain_size: int
    weight_ok: bool
    inverse_ok: bool
    parity_ok: Optional[bool]
    fixed_points: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"n": self.n, "domain_size": self.domain_size, "weight_ok": self.weight_ok,
                "involution_or_bijection_ok": self.inverse_ok, "parity_ok": self.parity_ok,
                "fixed_points": list(self.fixed_points)}


# Failures of self-inverseness in phi are expected: the case tree as written
# has gaps, and these are reported rather than repaired.
ANOMALY_KINDS = {(MapId.PHI.value, "involution")}


@dataclass(frozen=True)
class MapReport:
    map: str
    rows: tuple[MapRow, ...]
    findings: tuple[Finding, ...]

    @property
    def anomalies(self) -> list[Finding]:
        return [f for f in self.findings if (f.map, f.kind) in ANOMALY_KINDS]

    @property
    def violations(self) -> list[Finding]:
        return [f for f in self.findings if (f.map, f.kind) not in ANOMALY_KINDS]

    @property
    def all_pass(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"map": self.map, "all_pass": self.all_pass,
                "per_n": [r.to_dict() for r in self.rows],
                "findings": [f.to_dict() for f in self.findings]}


class _Recorder:
    def __init__(self, map_id: MapId, n: int):
        self.map = map_id.value
        self.n = n
        self.findings: list[Finding] = []
        self.flags = {"weight": True, "inverse": True, "parity": True}

    def fail(self, kind: str, flag: Optional[str], inp, out="", detail: str = "") -> None:
        if flag:
            self.flags[flag] = False
        self.findings.append(Finding(self.map, self.n, kind, _show(inp), _show(out), detail))


def _show(x) -> str:
    if x is None or x == "":
        return ""
    if hasattr(x, "spec"):
        return x.spec() or "(empty)"
    return str(x)


def _check_phi(n: int, rec: _Recorder) -> int:
    domain = [p for p in enumerate_family(Family.F, n) if not member(Family.Q, p)]
    for lam in domain:
        try:
            mu = phi(lam)
        except MapDomainError as exc:
            rec.fail("domain", "inverse", lam, detail=str(exc))
            continue
        if mu.weight != n:
            rec.fail("weight", "weight", lam, mu)
        if not member(Family.F, mu) or member(Family.Q, mu):
            rec.fail("codomain", "inverse", lam, mu, "image outside pi_F minus pi_Q")
            continue
        if stats(mu).n_even_parts % 2 == stats(lam).n_even_parts % 2:
            rec.fail("parity", "parity", lam, mu, "number of even parts kept its parity")
        back = phi(mu)
        if back != lam:
            rec.fail("involution", "inverse", lam, mu,
                     f"phi(phi(x)) = {back.spec()}; cases {phi_case(lam)[0]} then "
                     f"{phi_case(mu)[0]}")
    return len(domain)


def _check_bijection(n: int, rec: _Recorder, domain_family: Family, codomain: list,
                     codomain_family: Family, forward, backward, domain=None) -> int:
    if domain is None:
        domain = enumerate_family(domain_family, n)
    images = []
    for lam in domain:
        try:
            mu = forward(lam)
        except MapDomainError as exc:
            rec.fail("domain", "inverse", lam, detail=str(exc))
            continue
        images.append(mu)
        if mu.weight != n:
            rec.fail("weight", "weight", lam, mu)
        if not member(codomain_family, mu):
            rec.fail("codomain", "inverse", lam, mu, f"image outside pi_{codomain_family.value}")
        elif backward(mu) != lam:
            rec.fail("bijection", "inverse", lam, mu, "inverse does not undo the map")
    if len(set(images)) != len(images):
        rec.fail("bijection", "inverse", f"n={n}", detail="map is not injective")
    if set(images) != set(codomain):
        missing = [p for p in codomain if p not in set(images)]
        rec.fail("bijection", "inverse", f"n={n}", detail=f"not surjective, e.g. "
                 f"{_show(missing[0]) if missing else '?'}")
    for mu in codomain:
        try:
            if forward(backward(mu)) != mu:
                rec.fail("bijection", "inverse", mu, detail="forward(backward(x)) != x")
        except MapDomainError as exc:
            rec.fail("domain", "inverse", mu, detail=str(exc))
    return len(domain)


def _check_theta(n: int, rec: _Recorder) -> int:
    domain = enumerate_family(Family.M, n)
    for lam in domain:
        mu = theta(lam)
        if mu.weight != n:
            rec.fail("weight", "weight", lam, mu)
        if not member(Family.M, mu):
            rec.fail("codomain", "inverse", lam, mu, "image outside pi_M")
            continue
        s, t = stats(lam), stats(mu)
        if (s.n_blue_even_parts - t.n_blue_even_parts) % 2 == 0 \
                or (s.n_blue_parts - t.n_blue_parts) % 2 == 0:
            rec.fail("parity", "parity", lam, mu, "blue (even) part count kept its parity")
        if theta(mu) != lam:
            rec.fail("involution", "inverse", lam, mu)
    return len(domain)


def _check_pair_merge(n: int, rec: _Recorder) -> int:
    domain = [p for p in enumerate_family(Family.L, n) if not member(Family.M, p)]
    for lam in domain:
        mu = pair_merge(lam)
        if stats(lam).n_blue_even_parts != stats(mu).n_even_parts:
            rec.fail("parity", "parity", lam, mu, "blue even parts != even parts of image")
    return _check_bijection(n, rec, Family.L, enumerate_family(Family.N, n), Family.N,
                            pair_merge, pair_split, domain=domain)


def _check_modular4(n: int, rec: _Recorder) -> tuple[int, tuple[str, ...]]:
    domain = enumerate_family(Family.N, n)
    fixed = []
    for mu in domain:
        out = modular4_transform(mu)
        if isinstance(out, FixedStaircase):
            fixed.append(mu.spec(colored=False) or "(empty)")
            if staircase(out.kind, out.k) != mu:
                rec.fail("fixed_point", "inverse", mu, detail=f"reported {out} but is not it")
            continue
        nu = out.result
        if nu.weight != n:
            rec.fail("weight", "weight", mu, nu)
        if not member(Family.N, nu):
            rec.fail("codomain", "inverse", mu, nu, "image outside pi_N")
            continue
        de, de2 = len(to_modular_diagram(mu).lambda_e), len(to_modular_diagram(nu).lambda_e)
        if abs(de - de2) != 1:
            rec.fail("parity", "parity", mu, nu, "number of even parts changed by != 1")
        if modular4_transform(nu) != Moved(mu):
            rec.fail("involution", "inverse", mu, nu)
    k = is_triangular(n)
    expected = 1 if k is not None else 0
    if len(fixed) != expected:
        rec.fail("fixed_point", "inverse", f"n={n}",
                 detail=f"{len(fixed)} fixed points, expected {expected}")
    elif k is not None and n > 0:
        # T_m = 2j^2 - j for m = 2j - 1 and 2j^2 + j for m = 2j
        j = (k + 1) // 2
        want = staircase(Staircase.C1 if k % 2 else Staircase.C3, j)
        if want.spec(colored=False) != fixed[0]:
            rec.fail("fixed_point", "inverse", fixed[0], detail=f"expected {want.spec()}")
    return len(domain), tuple(fixed)


def check_map(map_id: Union[MapId, str], n_max: int) -> MapReport:
    """Apply a map to every element of its domain for ``0 <= n <= n_max``."""
    map_id = MapId(map_id) if not isinstance(map_id, MapId) else map_id
    rows, findings = [], []
    for n in range(n_max + 1):
        rec = _Recorder(map_id, n)
        fixed: tuple[str, ...] = ()
        parity: Optional[bool] = True
        if map_id is MapId.PHI:
            size = _check_phi(n, rec)
        elif map_id is MapId.TO_OVERPARTITION:
            size = _check_bijection(n, rec, Family.Q, enumerate_family(Family.OVER_ODD, n),
                                    Family.OVER_ODD, to_overpartition, from_overpartition)
            parity = None
        elif map_id is MapId.STRIP_COLORS:
            size = _check_bijection(n, rec, Family.R, enumerate_family(Family.H, n),
                                    Family.H, strip_colors, paint_colors)
            parity = None
        elif map_id is MapId.THETA:
            size = _check_theta(n, rec)
        elif map_id is MapId.PAIR_MERGE:
            size = _check_pair_merge(n, rec)
        else:
            size, fixed = _check_modular4(n, rec)
        if parity is not None:
            parity = rec.flags["parity"]
        rows.append(MapRow(n, size, rec.flags["weight"], rec.flags["inverse"], parity, fixed))
        findings += rec.findings
    return MapReport(map_id.value, tuple(rows), tuple(findings))


# ---------------------------------------------------------------------------
# composite consequences of the maps


def _phi_composite(n: int) -> Row:
    # F0 - F1 = |pi_Q| (no even parts, all +1) + signed residue of whatever
    # phi fails to pair; pi_Q is counted through its overpartition images.
    images = {to_overpartition(p) for p in enumerate_family(Family.Q, n)}
    residue = 0
    for lam in enumerate_family(Family.F, n):
        if member(Family.Q, lam):
            continue
        if phi(phi(lam)) != lam:
            residue += stats(lam).sign
    return Row(n, len(images) + residue, counting_function("OVER_ODD", n), Mode.ENUMERATION)


def _theta_composite(n: int) -> Row:
    # survivors: elements of pi_M that theta leaves unpaired, then elements
    # of pi_L minus pi_M whose merged image is a staircase fixed point
    total = 0
    for lam in enumerate_family(Family.L, n):
        if member(Family.M, lam):
            if theta(theta(lam)) != lam:
                total += -1 if stats(lam).n_blue_even_parts % 2 else 1
            continue
        if isinstance(modular4_transform(pair_merge(lam)), FixedStaircase):
            total += -1 if stats(lam).n_blue_even_parts % 2 else 1
    return Row(n, total, 1 if is_triangular(n) is not None else 0, Mode.ENUMERATION)


def composite_checks(n_max: int) -> list[IdentityReport]:
    return [
        IdentityReport("composite:phi+to_overpartition", Mode.ENUMERATION,
                       tuple(_phi_composite(n) for n in range(n_max + 1)),
                       "F0(n) - F1(n) via the phi pairing and the overpartition bijection "
                       "= pbar_o(n)"),
        IdentityReport("composite:theta+pair_merge+modular4", Mode.ENUMERATION,
                       tuple(_theta_composite(n) for n in range(n_max + 1)),
                       "L0(n) - L1(n) via theta, pair_merge and the 4-modular transform "
                       "= [n triangular]"),
    ]


# ---------------------------------------------------------------------------
# the full suite


@dataclass
class SuiteReport:
    n_max_enum: int
    n_max_series: int
    identities: list[IdentityReport] = field(default_factory=list)
    cross_checks: list[IdentityReport] = field(default_factory=list)
    displays: list[IdentityReport] = field(default_factory=list)
    consistency: list[IdentityReport] = field(default_factory=list)
    composites: list[IdentityReport] = field(default_factory=list)
    maps: list[MapReport] = field(default_factory=list)

    def _printed_only(self) -> set[str]:
        return {f"display:{d.name}" for d in DISPLAYS if d.printed_only}

    def anomalies(self) -> list[dict]:
        """Defects in the source text that no theorem depends on."""
        out = [f.to_dict() for m in self.maps for f in m.anomalies]
        printed = self._printed_only()
        for rep in self.displays:
            if rep.identity in printed:
                out += [{"map": None, "n": r.n, "kind": "printed_display",
                         "input": rep.identity, "output": "",
                         "detail": f"lhs {_num(r.lhs)} != rhs {_num(r.rhs)}"}
                        for r in rep.failures()]
        return out

    @property
    def passed(self) -> bool:
        printed = self._printed_only()
        reports = (self.identities + self.cross_checks + self.consistency + self.composites
                   + [d for d in self.displays if d.identity not in printed])
        return all(r.all_pass for r in reports) and all(m.all_pass for m in self.maps)

    @property
    def strict_passed(self) -> bool:
        return self.passed and not self.anomalies()

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "limits": {"max_enum": self.n_max_enum, "max_series": self.n_max_series},
            "pass": self.passed,
            "strict_pass": self.strict_passed,
            "identities": [r.to_dict() for r in self.identities],
            "cross_checks": [r.to_dict() for r in self.cross_checks],
            "displays": [r.to_dict() for r in self.displays],
            "consistency": [r.to_dict() for r in self.consistency],
            "composites": [r.to_dict() for r in self.composites],
            "maps": [m.to_dict() for m in self.maps],
            "anomalies": self.anomalies(),
        }


def full_suite(n_max_enum: int = 20, n_max_series: int = 200) -> SuiteReport:
    if n_max_enum < 0 or n_max_series < 0:
        raise ValueError("limits must be nonnegative")
    if n_max_enum > max_enum():
        raise ValueError(f"n_max_enum={n_max_enum} exceeds the enumeration ceiling {max_enum()}")
    report = SuiteReport(n_max_enum, n_max_series)
    for ident in IdentityId:
        report.identities.append(check_identity(ident, n_max_enum, Mode.ENUMERATION))
        report.identities.append(check_identity(ident, n_max_series, Mode.SERIES))
    cross_max = min(n_max_enum, n_max_series)
    report.cross_checks = [cross_check_gf(f, cross_max) for f in GF_FAMILIES]
    report.displays = [check_display(d, n_max_series) for d in DISPLAYS]
    report.consistency = consistency_checks(n_max_enum)
    report.composites = composite_checks(n_max_enum)
    report.maps = [check_map(m, n_max_enum) for m in MapId]
    return report
