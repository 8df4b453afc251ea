import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gue_resolvent import cli
from gue_resolvent.algebra import PolyN
from gue_resolvent.errors import ConsistencyError

from golden import POLYGON, TWO_POINT


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


coeffs = st.one_of(st.integers(-(10**40), 10**40), st.fractions(max_denominator=50))


@settings(max_examples=100, deadline=None)
@given(st.lists(coeffs, max_size=12))
def test_poly_json_round_trip(cs):
    p = PolyN(cs, "N")
    assert cli.poly_from_json(json.loads(json.dumps(cli.poly_to_json(p)))) == p


@settings(max_examples=50, deadline=None)
@given(st.fractions())
def test_rational_json_round_trip(q):
    assert cli.rational_from_json(cli.rational_to_json(q)) == q


def test_poly_json_schema():
    obj = cli.poly_to_json(PolyN.from_dict({3: 12, 1: 3}))
    assert obj == {"var": "N", "coeffs": {"1": "3", "3": "12"}}
    assert cli.poly_to_json(PolyN.from_dict({0: Fraction(1, 3)}))["coeffs"]["0"] == {"num": "1", "den": "3"}


def test_correlator_command():
    code, out, err = run("correlator", "--exponents", "4,4")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert cli.poly_from_json(data["value"]) == PolyN.from_dict(TWO_POINT[(4, 4)])
    code, out, _ = run("correlator", "--exponents", "2,2,2", "--n", "10")
    assert json.loads(out)["value"] == "800"


def test_mixed_command():
    code, out, _ = run("mixed", "--b", "4", "--m", "1", "--i", "4", "--j", "4")
    assert code == 0
    assert json.loads(out)["value"]["coeffs"] == {"1": "1440", "3": "6336", "5": "1728"}


def test_polygon_table_csv_is_stable(tmp_path):
    argv = ["polygon-table", "--valence", "4", "--max-vertices", "4", "--format", "csv"]
    first = run(*argv)[1]
    assert first == run(*argv)[1]
    path = tmp_path / "table.csv"
    assert run(*argv, "--output", str(path))[0] == 0
    assert path.read_bytes() == first.encode()
    lines = first.splitlines()
    assert lines[0] == "valence,k,g,count"
    rows = [tuple(int(x) for x in line.split(",")) for line in lines[1:]]
    assert rows == sorted(rows, key=lambda r: (r[2], r[1]))
    for b, k, g, c in rows:
        assert POLYGON[b][k][g] == c


def test_ribbon_weight_and_genus_commands():
    code, out, _ = run("ribbon-weight", "--genus", "1", "--exponents", "3,3")
    assert json.loads(out)["value"] == {"num": "3", "den": "2"}
    code, out, _ = run("genus-free-energy", "--genus", "1", "--order", "4", "--at-x1", "--format", "csv")
    assert out.splitlines() == ["k,num,den", "2,3,2", "4,189,1"]
    code, out, _ = run("genus-free-energy", "--genus", "0", "--order", "2")
    coeffs = json.loads(out)["coefficients"]
    assert "log_x" in coeffs["0"] and "log_x" not in coeffs["2"]


def test_resolvent_command():
    code, out, _ = run("resolvent", "--depth", "4")
    data = json.loads(out)
    assert data["entries"]["e11"]["-2"] == {"var": "n", "coeffs": {"1": "1"}}
    code, out, _ = run("resolvent", "--mode", "general", "--depth", "2", "--format", "csv")
    assert code == 0 and out.startswith("entry,exponent,coefficient\n")


def test_verify_command():
    code, out, _ = run("verify", "--budget", "8")
    data = json.loads(out)
    assert code == 0 and data["failures"] == 0 and data["comparisons"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["correlator"],
        ["correlator", "--exponents", "a,b"],
        ["correlator", "--exponents", "0,2"],
        ["genus-free-energy", "--genus", "5"],
        ["ribbon-weight", "--genus", "0", "--exponents", "3"],
        ["mixed", "--b", "2", "--m", "1", "--i", "2", "--j", "2", "--format", "csv"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == cli.EXIT_USAGE


def test_budget_exit_3():
    code, out, err = run("verify", "--budget", "18")
    assert code == cli.EXIT_BUDGET and out == ""
    assert json.loads(err)["error"] == "BudgetExceededError"


def test_consistency_exit_4(monkeypatch):
    def broken(*args, **kwargs):
        raise ConsistencyError("forced")

    monkeypatch.setattr(cli, "correlator", broken)
    code, _, err = run("correlator", "--exponents", "2")
    assert code == cli.EXIT_CONSISTENCY
    assert json.loads(err) == {"error": "ConsistencyError", "message": "forced"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gue_resolvent", "correlator", "--exponents", "3,3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"]["coeffs"] == {"1": "3", "3": "12"}
