from __future__ import annotations

import copy
import json

import pytest

from fano_curves.builtin_models import BUILTIN_MODEL_DATA
from fano_curves.errors import IncompleteRuleError, InputError, ModelError
from fano_curves.models import (
    builtin,
    builtin_names,
    classify_class,
    find_model,
    load_model_file,
    minimal_degree,
    model_from_dict,
    model_to_dict,
    parse_linear,
    shipped_model_path,
    validate_model,
)

from conftest import L0, R


def test_builtins_validate(model):
    report = validate_model(model)
    assert report.ok, [c for c in report.failed()]


def test_shipped_files_match_embedded():
    for name in builtin_names():
        shipped = json.loads(shipped_model_path(name).read_text(encoding="utf-8"))
        assert shipped == BUILTIN_MODEL_DATA[name]


def test_roundtrip(model):
    again = model_from_dict(json.loads(json.dumps(model_to_dict(model))))
    assert model_to_dict(again) == model_to_dict(model)
    assert again.nef_curve_cone.same_as(model.nef_curve_cone)


def test_load_file_roundtrip(model, tmp_path):
    path = tmp_path / f"{model.name}.json"
    path.write_text(json.dumps(model_to_dict(model)), encoding="utf-8")
    assert model_to_dict(load_model_file(path)) == model_to_dict(model)


def test_unknown_field_rejected():
    data = copy.deepcopy(BUILTIN_MODEL_DATA["quartic"])
    data["colour"] = "blue"
    with pytest.raises(ModelError):
        model_from_dict(data)


def test_missing_field_rejected():
    data = copy.deepcopy(BUILTIN_MODEL_DATA["quartic"])
    del data["anticanonical"]
    with pytest.raises(ModelError):
        model_from_dict(data)


def test_corrupted_nef_ray_fails_dual_check():
    data = copy.deepcopy(BUILTIN_MODEL_DATA["two_e5"])
    data["nef_curve_rays"] = [r if tuple(r) != R["R3"] else [1, 0, 3] for r in data["nef_curve_rays"]]
    report = validate_model(model_from_dict(data))
    assert not report.ok
    assert "nef cone dual" in {c.name for c in report.failed()}


def test_validate_never_raises_on_bad_identities():
    data = copy.deepcopy(BUILTIN_MODEL_DATA["two_e5"])
    data["metadata"]["divisor_identities"].append("E = H + nonsense")
    report = validate_model(model_from_dict(data))
    assert not report.ok


def test_minimal_degree(model):
    assert minimal_degree(model) == 1


def test_two_e5_relations_and_signs(two_e5):
    r = {k: v for k, v in R.items()}

    def add(*vs):
        return tuple(map(sum, zip(*vs)))

    assert add(r["R2"], r["R3"]) == add(r["R5"], r["R5"])
    assert add(r["R2"], r["R4"]) == add(r["R6"], r["R6"])
    assert add(r["R1"], r["R2"], r["R2"]) == add(r["R5"], r["R6"])
    assert add(r["R1"], r["R2"], r["R5"]) == add(r["R3"], r["R6"])
    assert add(r["R1"], r["R2"], r["R6"]) == add(r["R4"], r["R5"])
    assert add(r["R1"], r["R5"], r["R6"]) == add(r["R3"], r["R4"])
    f = (1, 1, -1)  # H + E0 - E_inf
    vals = {k: two_e5.pair(f, v) for k, v in r.items()}
    assert vals["R3"] == -1
    assert vals["R1"] == vals["R5"] == 0
    assert vals["R2"] > 0 and vals["R4"] > 0 and vals["R6"] > 0
    g = (0, 1, -1)  # E0 - E_inf
    assert two_e5.pair(g, r["R5"]) == -1 and two_e5.pair(g, r["R6"]) == 1
    assert two_e5.pair(g, r["R1"]) == two_e5.pair(g, r["R2"]) == 0
    assert [two_e5.degree(r[f"R{i}"]) for i in range(1, 7)] == [2, 3, 5, 5, 4, 4]
    assert two_e5.pair((2, 1, -1), r["R2"]) == 2


def test_e5_records(model):
    for d in model.e5_divisors():
        assert model.pair(d.divisor_class, d.line_class) == -2
        assert model.degree(d.line_class) == 1


def test_p_o_o2_section_breaks(p_o_o2):
    names = p_o_o2.metadata["named_curves"]
    s, f, l0 = (tuple(names[k]) for k in ("s", "f", "l0"))
    assert s == tuple(2 * a + b for a, b in zip(f, l0))
    assert p_o_o2.degree(s) == 5


def test_classify_examples(two_e5):
    r1 = classify_class(two_e5, R["R1"])
    assert r1.nef and r1.degree == 2 and r1.fibration_contracted and not r1.good
    assert any(m.startswith("fiber:") for m in r1.matches)
    r2 = classify_class(two_e5, R["R2"])
    assert r2.nef and r2.degree == 3 and r2.good
    l0 = classify_class(two_e5, L0)
    assert not l0.nef and l0.degree == 1
    assert "e5-line:E0" in l0.matches
    with pytest.raises(InputError):
        classify_class(two_e5, (1, 0))


def test_multiples_of_fiber_are_contracted(two_e5):
    assert classify_class(two_e5, (0, 3, 3)).fibration_contracted
    assert not classify_class(two_e5, (1, 1, 1)).fibration_contracted


def test_parse_linear():
    names = {"H": (1, 0, 0), "E0": (0, 1, 0), "E_inf": (0, 0, 1)}
    assert parse_linear("E0 - E_inf + 2H", names) == (2, 1, -1)
    assert parse_linear("-3*H", names) == (-3, 0, 0)
    with pytest.raises(InputError):
        parse_linear("H + X", names)
    with pytest.raises(InputError):
        parse_linear("H +", names)


def test_find_model_search_path(tmp_path, monkeypatch):
    data = copy.deepcopy(BUILTIN_MODEL_DATA["quartic"])
    data["name"] = "custom"
    (tmp_path / "custom.json").write_text(json.dumps(data), encoding="utf-8")
    monkeypatch.setenv("MANIN_MODEL_PATH", str(tmp_path))
    assert find_model("custom").name == "custom"
    assert find_model(str(tmp_path / "custom.json")).name == "custom"
    assert find_model("two_e5").name == "two_e5"
    with pytest.raises(ModelError):
        find_model("nonexistent")


def test_explicit_table_rule():
    data = copy.deepcopy(BUILTIN_MODEL_DATA["quartic"])
    data["component_rule"] = {"kind": "explicit_table", "min_degree": 2, "table": [{"class": [2], "count": 3}]}
    m = model_from_dict(data)
    assert m.component_rule.count((2,)) == 3
    with pytest.raises(IncompleteRuleError):
        m.component_rule.count((3,))


def test_builtin_unknown():
    with pytest.raises(ModelError):
        builtin("cubic")
