import json

import pytest

import neutromagma as nm


def test_ln_table_and_op():
    m = nm.ln(5, 2)
    assert m.order == 6
    assert m.identity == "e"
    assert m.op("1", "2") == "3"
    assert len(m.table()) == 6


def test_bad_parameters_raise():
    with pytest.raises(nm.ParamError):
        nm.ln(6, 2)
    with pytest.raises(nm.Error):
        nm.zn(5, 2, 2, "zstar")


def test_json_round_trip():
    m = nm.zn_full_neutro(3)
    back = nm.Magma.from_json(m.to_json())
    assert back.table() == m.table()
    assert json.loads(m.to_json())["order"] == 9
    with pytest.raises(nm.ParamError):
        nm.Magma.from_json("{")


def test_classify_and_laws():
    assert nm.classify_basic(nm.zmod_mult(6)) == {
        "is_semigroup": True,
        "is_commutative": True,
        "is_loop": False,
        "is_group": False,
        "identity": "1",
        "inverses_exist": False,
    }
    assert nm.check_law(nm.ln(7, 3), "wip")
    assert not nm.check_law(nm.ln(5, 3), "moufang1")


def test_s_kind_and_engines():
    r = nm.detect_s_kind(nm.zmod_mult(7), "s_semigroup")
    assert r["holds"]
    assert nm.lagrange(nm.symmetric_group(3), "group")["verdict"] == "full"
    assert nm.cauchy(nm.cyclic(11))["verdict"] == "full"
    assert nm.cauchy(nm.zmod_mult(7))["verdict"] == "free"


def test_cosets():
    z = nm.zn_full_neutro(5)
    assert sorted(nm.cosets(z, ["1", "I", "4I"], "3")) == sorted(["3", "3I", "2I"])


def test_atlas_and_corpus():
    csv = nm.atlas_ln_csv(5, 9)
    assert csv.startswith("family,")
    assert "match=0" not in csv
    table, ok = nm.run_corpus("ex-1.3.*")
    assert ok
    assert "pass" in table
