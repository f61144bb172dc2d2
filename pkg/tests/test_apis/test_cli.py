import io
import json
import os.path as osp

import pytest

from refinery.apis.cli import EXIT_CAP, EXIT_FAILS, EXIT_OK, EXIT_USAGE, build_run_config, parse_args, run

DATA_DIR = osp.join(osp.dirname(osp.dirname(__file__)), "data")
Z6 = osp.join(DATA_DIR, "algebras", "z6.json")
KLEIN4 = osp.join(DATA_DIR, "algebras", "klein4.json")
EMPTY = osp.join(DATA_DIR, "algebras", "empty.json")
BAD_ENTRY = osp.join(DATA_DIR, "algebras", "bad_entry.json")
SMALL_SUITE = osp.join(DATA_DIR, "configs", "small_suite.py")


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("REFINERY_CON_LIMIT", raising=False)


def test_check_holds():
    code, out, _ = _run("check", Z6, "--property", "srp")
    assert code == EXIT_OK
    verdict = json.loads(out)
    assert verdict["property"] == "srp" and verdict["holds"] is True and verdict["witness"] is None


def test_check_fails_with_witness():
    code, out, _ = _run("check", KLEIN4, "--property", "proj-coext")
    assert code == EXIT_FAILS
    witness = json.loads(out)["witness"]
    assert witness["F"] == [[0, 1], [2, 3]]
    assert witness["condition"] == "intersection"


@pytest.mark.parametrize("prop", ["srp", "boolean", "cond-vi", "factorable", "reg-coext", "majority"])
def test_klein_four_fails_every_equivalent(prop):
    assert _run("check", KLEIN4, "--property", prop)[0] == EXIT_FAILS


def test_empty_algebra():
    code, out, err = _run("check", EMPTY, "--property", "srp")
    assert code == EXIT_USAGE
    assert out == ""
    assert err == "refinery: error: algebra lacks global support\n"


def test_bad_entry():
    code, _, err = _run("con", BAD_ENTRY)
    assert code == EXIT_USAGE
    assert "$.operations[0].table[1]" in err


def test_missing_file(tmp_path):
    assert _run("con", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_usage_errors():
    assert _run()[0] == EXIT_USAGE
    assert _run("check", Z6, "--property", "no-such-property")[0] == EXIT_USAGE
    assert _run("pushout", Z6, "--theta", "[[0,1]]", "--phi", "[[0,1,2,3,4,5]]")[0] == EXIT_USAGE


def test_version():
    code, out, _ = _run("--version")
    assert code == EXIT_OK
    assert out.startswith("refinery ")


def test_con_formats():
    code, out, _ = _run("con", KLEIN4)
    assert code == EXIT_OK
    assert json.loads(out)["congruences"][1] == [[0, 1], [2, 3]]
    code, out, _ = _run("--format", "text", "con", KLEIN4)
    assert out.splitlines()[0] == "[[0],[1],[2],[3]]"
    assert len(out.splitlines()) == 5
    code, out, _ = _run("--format", "dot", "con", KLEIN4)
    assert out.startswith("digraph congruence_lattice")


def test_factors_and_lattice():
    code, out, _ = _run("factors", Z6)
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["elements"]) == 4
    assert data["flags"]["is_boolean"] is True
    code, out, _ = _run("lattice", Z6)
    assert code == EXIT_OK
    assert out.startswith("digraph Z6")
    code, out, _ = _run("lattice", KLEIN4, "--con")
    assert code == EXIT_OK
    assert out.startswith("digraph KleinFour")
    assert out.count("->") == 6


def test_decompose():
    code, out, _ = _run("decompose", Z6)
    assert code == EXIT_OK
    tree = json.loads(out)
    assert [child["size"] for child in tree["children"]] == [2, 3]
    code, out, _ = _run("decompose", KLEIN4, "--seed", "3")
    assert [child["size"] for child in json.loads(out)["children"]] == [2, 2]


def test_pushout():
    code, out, _ = _run("pushout", Z6, "--theta", "[[0,3],[1,4],[2,5]]", "--phi", "[[0,2,4],[1,3,5]]")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["pushout"]["size"] == 1
    assert data["from_theta"] == [0, 0, 0] and data["from_phi"] == [0, 0]


def test_con_limit():
    code, _, err = _run("--con-limit", "2", "con", Z6)
    assert code == EXIT_CAP
    assert "cap of 2" in err


def test_env_override(monkeypatch):
    monkeypatch.setenv("REFINERY_CON_LIMIT", "2")
    assert _run("con", Z6)[0] == EXIT_CAP
    monkeypatch.setenv("REFINERY_CON_LIMIT", "many")
    code, _, err = _run("con", Z6)
    assert code == EXIT_USAGE
    assert "REFINERY_CON_LIMIT" in err


def test_build_run_config(monkeypatch):
    monkeypatch.setenv("REFINERY_CON_LIMIT", "77")
    cfg = build_run_config(parse_args(["--config", SMALL_SUITE, "--clone-limit", "9", "suite", "--count", "1"]))
    assert cfg.command == "suite"
    assert cfg.inputs == []
    assert cfg.caps.con_limit == 77
    assert cfg.caps.clone_limit == 9
    assert cfg.caps.reflexive_limit == 64
    assert cfg.corpus.count == 1
    assert cfg.corpus.seed == 7
    assert cfg.output.format == "text"


def test_suite():
    code, out, _ = _run("suite", "--count", "3", "--max-size", "3", "--seed", "1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["checked"] + len(data["skipped"]) == 13
    assert data["failures"] == []
    assert data["counts"]["equivalence"]["fails"] == 0


def test_suite_text_from_config():
    code, out, _ = _run("--config", SMALL_SUITE, "suite")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "checked: 13"


def test_log_file(tmp_path):
    log_file = tmp_path / "refinery.log"
    assert _run("--log-file", str(log_file), "check", Z6, "--property", "boolean")[0] == EXIT_OK
    assert "Running task with log file" in log_file.read_text()


def test_global_flags_are_not_abbreviated():
    code, _, err = _run("--con", "5", "con", Z6)
    assert code == EXIT_USAGE
    code, out, _ = _run("lattice", Z6, "--con", "--dot")
    assert code == EXIT_OK
    assert out.count("->") == 4
