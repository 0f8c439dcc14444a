import io
import json
from pathlib import Path

import pytest

from actlab import report
from actlab.cli import main, run_zoo
from actlab.fileio import CATALOG_DIR

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--json", *argv)
    obj = json.loads(text)
    report.validate(obj)
    return code, obj


def test_monoid_analyze_rz3():
    code, obj = run_json("monoid", "analyze", CATALOG_DIR / "rz3.monoid")
    assert code == 0
    res = obj["results"]
    assert [i["generator_count"] for i in res["ideals"]] == [0, 1, 1, 2, 1]
    assert res["generation_degree"] == 2 and res["right_reversible"] is False
    assert obj["subject"]["hash"].startswith("sha256:")


@pytest.mark.parametrize("name, g, rr, comm", [("trivial", 1, True, True), ("z2", 1, True, True)])
def test_monoid_analyze_small(name, g, rr, comm):
    _, obj = run_json("monoid", "analyze", name)
    res = obj["results"]
    assert (res["generation_degree"], res["right_reversible"], res["commutative"]) == (g, rr, comm)


def test_act_check_exit_codes():
    pqx = SAMPLES / "pqx.act"
    assert run("act", "check", pqx, "--n-injective", "1")[0] == 0
    code, obj = run_json("act", "check", pqx, "--n-injective", "2")
    assert code == 1 and obj["results"]["counterexample"]["hom"] == {"1": 1, "2": 0}
    assert run("act", "check", SAMPLES / "point.act", "--injective")[0] == 0
    assert run("act", "check", SAMPLES / "two_points.act", "--weakly-injective")[0] == 1
    code, obj = run_json("act", "check", pqx, "--pure", "3")
    assert code == 1 and obj["results"]["bound"] == 3


def test_type_eq():
    reg = SAMPLES / "regular.act"
    code, obj = run_json("type", "eq", reg, reg, "--tuple1", "1", "--tuple2", "2")
    assert code == 0 and obj["results"]["map"] == {"1": 2}
    code, obj = run_json("type", "eq", reg, reg, "--tuple1", "0", "--tuple2", "1")
    assert code == 1 and "equation" in obj["results"]


def test_indep_commands():
    reg = SAMPLES / "regular.act"
    code, obj = run_json("indep", "check", reg, "--left", "0", "--right", "1")
    assert code == 1 and obj["results"]["witness"] == [1]
    assert run("indep", "check", reg, "--left", "1", "--right", "2")[0] == 0
    code, obj = run_json("indep", "base", reg, "--base", "1,2", "--element", "0")
    assert obj["results"]["base"] == [1, 2]
    code, obj = run_json("indep", "split", reg, "--tuple", "0", "--params", "1,2")
    assert code == 0 and obj["results"]["splits"] is True


def test_factorize_and_saturate(tmp_path):
    code, obj = run_json("factorize", SAMPLES / "point.act", SAMPLES / "regular.act", "--embedding", "1")
    assert code == 0 and len(obj["results"]["steps"]) == 2
    out = tmp_path / "sat.act"
    code, obj = run_json("saturate", SAMPLES / "two_points.act", "--target", "weak",
                         "--max-steps", "4", "--output", out)
    assert code == 0 and obj["results"]["status"] == "reached"
    assert out.read_text() == obj["results"]["act_file"]
    code, _ = run("act", "check", out, "--weakly-injective")
    assert code == 0


def test_input_errors(tmp_path):
    assert run("monoid", "analyze", "no-such-monoid")[0] == 2
    bad = tmp_path / "bad.monoid"
    bad.write_text("monoid 2\n0 1\n1 7\n")
    code, text = run("--json", "monoid", "analyze", bad)
    assert code == 2
    obj = json.loads(text)
    report.validate(obj)
    assert obj["error"]["details"]["line"] == 3
    assert run("factorize", SAMPLES / "two_points.act", SAMPLES / "point.act", "--embedding", "0,0")[0] == 2
    with pytest.raises(SystemExit) as info:
        run("act", "check", SAMPLES / "pqx.act")
    assert info.value.code == 2


def test_zoo(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    code, obj = run_json("zoo", empty)
    assert code == 0 and obj["reports"] == [] and obj["errors"] == []
    one_bad = tmp_path / "bad"
    one_bad.mkdir()
    (one_bad / "x.monoid").write_text("monoid 2\n0 1\n")
    code, obj = run_json("zoo", one_bad)
    assert obj["reports"] == [] and len(obj["errors"]) == 1
    code, obj = run_json("--parallelism", "2", "zoo", CATALOG_DIR)
    assert code == 0 and obj["summary"]["violations"] == []
    ids = [r["subject"]["id"] for r in obj["reports"]]
    assert ids == sorted(ids)
    assert "rz3.monoid" in obj["summary"]["non_reversible_with_failures"]
    assert run_zoo(CATALOG_DIR, 2) == run_zoo(CATALOG_DIR, 2, parallelism=3)


def test_determinism():
    args = ("--seed", "7", "selftest", "--sizes", "3", "--trials", "5")
    assert run(*args, "--json") == run(*args, "--json")
    a = run("--json", "zoo", CATALOG_DIR, "--max-act-size", "2")
    assert a == run("--json", "zoo", CATALOG_DIR, "--max-act-size", "2")


def test_selftest():
    code, obj = run_json("selftest", "--sizes", "0")
    assert code == 0 and all(v["instances"] == 0 for v in obj["results"].values())
    code, obj = run_json("--seed", "3", "selftest", "--sizes", "4", "--trials", "20")
    assert code == 0


def test_selftest_catches_corrupted_pushout():
    code, text = run("selftest", "--sizes", "4", "--trials", "20", "--mutate", "pushout")
    assert code == 1
    assert "FAIL pushout-universal-property" in text


def test_global_flags_after_subcommand():
    code, text = run("monoid", "analyze", "rz3", "--json")
    assert code == 0 and json.loads(text)["seed"] == 0
