from __future__ import annotations

import io
import json
import subprocess
import sys


from fano_curves.cli import run
from fano_curves.counting import count_exact
from fano_curves.models import builtin


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_count_json():
    code, out, _ = call("count", "--model", "two_e5", "--q", "2", "--degree", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    n = count_exact(builtin("two_e5"), 2, 10)
    assert data["N"] == f"{n.numerator}/{n.denominator}"


def test_rational_flag():
    code, out, _ = call("count", "--model", "quartic", "--q", "7/2", "--degree", "3")
    assert code == 0
    assert json.loads(out)["N"] == "441/8"  # (7/2)^2 + (7/2)^3
    code, _, err = call("count", "--model", "quartic", "--q", "3.5", "--degree", "3")
    assert code == 2 and "rational" in err


def test_monoid_verify():
    code, out, _ = call("monoid", "verify", "--model", "two_e5", "--degree", "30")
    assert code == 0
    assert json.loads(out)["violations"] == []
    code, out, _ = call("monoid", "verify", "--degree", "8", "--drop-relation", "2")
    assert code == 1
    assert json.loads(out)["violations"][0]["class"] == [2, 1, 1]


def test_mbb_below_threshold():
    code, out, err = call("mbb", "verify", "--model", "quartic", "--degree", "3")
    assert code == 2 and out == "" and "threshold" in err


def test_mbb_verify_and_decompose():
    code, out, _ = call("mbb", "verify", "--model", "two_e5", "--jobs", "2")
    assert code == 0
    assert [e["class"] for e in json.loads(out)["degree5_exceptions"]] == [[1, 0, 2], [1, 2, 0]]
    code, out, _ = call("mbb", "decompose", "--model", "two_e5", "--class", "2R1+l0")
    data = json.loads(out)
    assert data["class"]["class"] == [1, 0, 2]
    assert data["free_breakings"] == []
    assert data["e5_chain_breakings"][0]["parts"] == [[0, 1, 1], [1, -2, 0], [0, 1, 1]]


def test_invariants():
    code, out, _ = call("invariants", "a", "--model", "two_e5", "--divisor", "H")
    assert code == 0 and json.loads(out)["value"] == "inf"
    code, out, _ = call("invariants", "a", "--model", "p_o_o2", "--divisor", "2,0")
    assert code == 0
    code, _, err = call("invariants", "b", "--model", "two_e5", "--divisor", "H")
    assert code == 2
    code, out, _ = call("invariants", "b", "--model", "two_e5")
    assert json.loads(out)["b"] == 3


def test_models_commands(tmp_path, monkeypatch):
    code, out, _ = call("models", "list", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "name,source"
    code, out, _ = call("models", "validate", "--model", "two_e5")
    assert code == 0 and json.loads(out)["ok"]
    data = json.loads(call("models", "show", "--model", "two_e5")[1])
    data["nef_curve_rays"][2] = [1, 0, 3]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data), encoding="utf-8")
    code, _, _ = call("models", "validate", "--model", str(bad))
    assert code == 1
    monkeypatch.setenv("MANIN_MODEL_PATH", str(tmp_path))
    code, out, _ = call("models", "validate", "--model", "bad")
    assert code == 1
    code, _, err = call("models", "show", "--model", "nothing")
    assert code == 2 and err


def test_alpha_and_asymptotic():
    code, out, _ = call("alpha", "--model", "two_e5")
    data = json.loads(out)
    assert code == 0 and data["alpha"] == "1/15" and data["agree"]
    code, out, _ = call("asymptotic", "--model", "quartic", "--q", "2", "--degree", "6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "6,124/1,128/1,31/32"
    code, _, _ = call("asymptotic", "--model", "quartic", "--q", "1", "--degree", "6")
    assert code == 2


def test_enumerate_hilbert():
    code, out, _ = call("enumerate", "--model", "two_e5", "--degree", "5")
    assert json.loads(out)["count"] == 8
    code, out, _ = call("hilbert", "--model", "two_e5", "--format", "table")
    assert code == 0 and len(out.splitlines()) == 8


def test_db():
    code, out, _ = call("db", "query", "table=T3", "r=3")
    assert code == 0 and json.loads(out)["count"] == 2
    code, _, err = call("db", "query", "colour=red")
    assert code == 2
    code, out, _ = call("db", "dump")
    from fano_curves.classification import shipped_text

    assert out == shipped_text()
    code, out, _ = call("db", "dump", "--format", "csv")
    assert code == 0 and out.startswith("record,")


def test_formats_carry_same_values():
    _, js, _ = call("asymptotic", "--model", "two_e5", "--q", "3/2", "--degree", "6")
    _, cs, _ = call("asymptotic", "--model", "two_e5", "--q", "3/2", "--degree", "6", "--format", "csv")
    _, tb, _ = call("asymptotic", "--model", "two_e5", "--q", "3/2", "--degree", "6", "--format", "table")
    for row in json.loads(js)["values"]:
        assert row["ratio"] in cs and row["ratio"] in tb


def test_usage_errors():
    assert call()[0] == 2
    assert call("models")[0] == 2
    assert call("count", "--model", "quartic")[0] == 2
    assert call("count", "--model", "quartic", "--q", "2", "--degree", "3", "--jobs", "0")[0] == 2


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "fano_curves", "mbb", "verify", "--model", "two_e5", "--degree", "20"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, check=True).stdout
    assert a == b
