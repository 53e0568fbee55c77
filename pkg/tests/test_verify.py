import json
from fractions import Fraction

import pytest

from partition_lab.core import Family
from partition_lab.verify import (
    ANOMALY_KINDS,
    DISPLAYS,
    GF_FAMILIES,
    SCHEMA_VERSION,
    IdentityId,
    MapId,
    Mode,
    check_display,
    check_identity,
    check_map,
    composite_checks,
    consistency_checks,
    cross_check_gf,
    full_suite,
)


@pytest.mark.parametrize("ident", list(IdentityId))
def test_identities_enumeration_small(ident):
    rep = check_identity(ident, 12, Mode.ENUMERATION)
    assert rep.all_pass, rep.failures()
    assert [r.n for r in rep.rows] == list(range(13))
    assert all(r.mode is Mode.ENUMERATION for r in rep.rows)


@pytest.mark.parametrize("ident", list(IdentityId))
def test_identities_series(ident):
    rep = check_identity(ident, 120, Mode.SERIES)
    assert rep.all_pass
    assert all(isinstance(r.lhs, int) and isinstance(r.rhs, int) for r in rep.rows)


def test_enumeration_falls_back_above_ceiling(monkeypatch):
    monkeypatch.setenv("PARTITION_LAB_MAX_ENUM", "6")
    rep = check_identity("T11a", 9)
    assert [r.mode for r in rep.rows] == [Mode.ENUMERATION] * 7 + [Mode.SERIES] * 3
    assert rep.all_pass


def test_identity_row_values():
    rep = check_identity(IdentityId.T17g, 6)
    assert [r.rhs for r in rep.rows] == [1, -1, 0, -1, 0, 0, 1]
    rep = check_identity(IdentityId.T11a, 5)
    assert [r.lhs for r in rep.rows] == [1, 2, 4, 8, 14, 24]


def test_bad_arguments():
    with pytest.raises(ValueError):
        check_identity("T99", 3)
    with pytest.raises(ValueError):
        check_identity("T11a", -1)
    with pytest.raises(ValueError):
        cross_check_gf(Family.Q, 3)


@pytest.mark.parametrize("family", list(GF_FAMILIES))
def test_cross_checks(family):
    assert cross_check_gf(family, 12).all_pass


def test_k_cross_check_is_signed():
    rep = cross_check_gf("K", 2)
    assert rep.rows[2].lhs == rep.rows[2].rhs == -1


def test_displays():
    for d in DISPLAYS:
        rep = check_display(d, 60)
        if d.printed_only:
            assert [r.n for r in rep.failures()][:2] == [3, 6]
        else:
            assert rep.all_pass, d.name


def test_consistency_and_composites():
    assert all(r.all_pass for r in consistency_checks(12))
    assert all(r.all_pass for r in composite_checks(12))


@pytest.mark.parametrize("map_id", [m for m in MapId if m is not MapId.PHI])
def test_maps_have_no_findings(map_id):
    rep = check_map(map_id, 14)
    assert rep.findings == ()
    assert all(r.weight_ok and r.inverse_ok for r in rep.rows)


def test_modular4_report_fixed_points():
    rep = check_map(MapId.MODULAR4, 10)
    fixed = {r.n: r.fixed_points for r in rep.rows if r.fixed_points}
    assert fixed == {0: ("(empty)",), 1: ("1",), 3: ("3",), 6: ("5,1",), 10: ("7,3",)}


def test_phi_findings_are_documented_anomalies():
    rep = check_map(MapId.PHI, 16)
    # smallest gap: 8b,6b -> 6b,4b,4b -> 4b,4b,3b,3b
    assert min(f.n for f in rep.findings) == 14
    assert rep.findings[0].input == "8b,6b"
    assert {(f.map, f.kind) for f in rep.findings} <= ANOMALY_KINDS
    assert rep.all_pass and not rep.violations
    assert all(r.weight_ok and r.parity_ok for r in rep.rows)


@pytest.fixture(scope="module")
def small_suite():
    return full_suite(14, 60)


def test_suite_json_round_trip(small_suite):
    d = small_suite.to_dict()
    text = json.dumps(d)
    back = json.loads(text)
    assert back == d
    assert back["schema_version"] == SCHEMA_VERSION
    assert back["pass"] is True and back["strict_pass"] is False
    assert set(back) == {"schema_version", "limits", "pass", "strict_pass", "identities",
                         "cross_checks", "displays", "consistency", "composites", "maps",
                         "anomalies"}
    kinds = {a["kind"] for a in back["anomalies"]}
    assert kinds == {"involution", "printed_display"}


def test_suite_is_deterministic(small_suite):
    assert full_suite(14, 60).to_dict() == small_suite.to_dict()


def test_suite_limits():
    with pytest.raises(ValueError):
        full_suite(-1, 10)
    with pytest.raises(ValueError):
        full_suite(10 ** 6, 10)


def test_fraction_serialization():
    from partition_lab.verify import Row
    r = Row(1, Fraction(3, 2), 1, Mode.SERIES)
    assert r.to_dict()["lhs"] == "3/2" and not r.equal
