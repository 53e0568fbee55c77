import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partition_lab.cli import run
from partition_lab.qseries import GfId, family_gf
from partition_lab.core import BLUE, GREEN, ColoredPartition, Overpartition, canonicalize


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_map_phi():
    assert call("map", "phi", "--partition", "8b,1b") == (0, "4b,4b,1b\n", "")


def test_count_zero():
    assert call("count", "F", "--n", "0")[:2] == (0, "1\n")
    assert call("count", "k", "--n", "2")[:2] == (0, "-1\n")


def test_count_formats():
    code, out, _ = call("count", "L", "--n", "6", "--filter", "blue-even-even", "--output", "json")
    assert code == 0 and json.loads(out)["filter"] == "blue-even-even"
    code, out, _ = call("--output", "csv", "count", "OVER", "--n", "22")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "n", "filter", "count"]
    assert int(rows[1][3]) == family_gf(GfId.OVER, 22)[22]


def test_table_t17f_csv():
    code, out, _ = call("table", "T17f", "--max-n", "10", "--mode", "enum", "--output", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == [str(n) for n in range(11)]
    for r in rows:
        want = "1" if int(r["n"]) in (0, 1, 3, 6, 10) else "0"
        assert r["lhs"] == r["rhs"] == want and r["equal"] == "true"


def test_table_json_and_ascii():
    code, out, _ = call("table", "T15e", "--max-n", "30", "--mode", "series", "--output", "json")
    rep = json.loads(out)
    assert code == 0 and rep["all_pass"] and len(rep["per_n"]) == 31
    code, out, _ = call("table", "T11b", "--max-n", "4")
    assert code == 0 and out.startswith("T11b:")


def test_map_variants():
    assert call("map", "modular4", "--partition", "12,8,5,4,3,1")[1] == "9,8,7,5,4\n"
    assert call("map", "modular4", "--partition", "5,1")[1] == "fixed:C1Staircase:k=2\n"
    assert call("map", "theta", "--partition", "5b,4b,3b,2g,2b")[1] == "5b,4g,3b,2b,2g\n"
    assert call("map", "to_overpartition", "--partition", "3b,1g")[1] == "3o,1\n"
    assert call("map", "from_overpartition", "--partition", "3o,1")[1] == "3b,1g\n"
    assert call("map", "pair_split", "--partition", "4,1")[1] == "2b,2g,1b\n"
    code, out, _ = call("map", "strip_colors", "--partition", "3b,2g", "--output", "json")
    assert json.loads(out) == {"map": "strip_colors", "input": "3b,2g", "output": "3,2"}


def test_diagram():
    code, out, _ = call("diagram", "12,8,5,4,3,1")
    assert code == 0 and out == "1.\n##13\nλ_e: (12, 8, 4)\n"
    code, out, _ = call("diagram", "5,1", "--format", "svg")
    assert code == 0 and out.startswith("<svg") and "λ_e: (none)" in out
    code, out, _ = call("diagram", "3", "--output", "json")
    assert json.loads(out)["lambda_c3"] == [3]


@pytest.mark.parametrize("argv", [
    ("count", "Z", "--n", "3"),
    ("count", "F", "--n", "500"),
    ("count", "F", "--n", "3", "--filter", "nonsense"),
    ("table", "T42", "--max-n", "3"),
    ("map", "nope", "--partition", "1"),
    ("map", "phi", "--partition", "8x"),
    ("map", "phi", "--partition", "3b,1g"),
    ("diagram", "6"),
    ("verify", "--max-enum", "999"),
    ("bogus",),
    (),
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert err


def test_verify_exit_codes():
    code, out, _ = call("verify", "--max-enum", "8", "--max-series", "40", "--output", "json")
    rep = json.loads(out)
    assert code == 0 and rep["pass"] is True and rep["schema_version"] == 1
    # below the first phi gap the only anomaly is the printed signed display
    assert {a["kind"] for a in rep["anomalies"]} == {"printed_display"}
    assert call("verify", "--max-enum", "8", "--max-series", "40", "--strict")[0] == 1
    assert call("verify", "--max-enum", "8", "--max-series", "2", "--strict")[0] == 0


def test_verify_csv_header():
    code, out, _ = call("verify", "--max-enum", "5", "--max-series", "10", "--output", "csv")
    assert out.splitlines()[0] == "section,check,mode,pass,failures"


def test_verify_json_is_deterministic():
    a = call("verify", "--max-enum", "6", "--max-series", "20", "--output", "json")[1]
    b = call("verify", "--max-enum", "6", "--max-series", "20", "--output", "json")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partition_lab", "count", "OVER_ODD", "--n", "10"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "40\n"


colored = st.lists(st.tuples(st.integers(1, 30), st.sampled_from([BLUE, GREEN])),
                   max_size=10).map(canonicalize)


@given(colored)
def test_spec_round_trip(p):
    assert ColoredPartition.from_spec(p.spec()) == p


@given(st.lists(st.tuples(st.integers(1, 30), st.booleans()), max_size=10))
def test_overpartition_spec_round_trip(parts):
    seen, clean = set(), []
    for v, o in parts:
        if o and v in seen:
            o = False
        if o:
            seen.add(v)
        clean.append((v, o))
    beta = Overpartition(tuple(clean))
    assert Overpartition.from_spec(beta.spec()) == beta
