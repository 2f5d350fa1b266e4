"""Command line behavior: exit codes, JSON output, guard rails."""

import json

import pytest

from lyubtab.cli import main


def write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(json.dumps(payload) if isinstance(payload, dict) else payload,
                 encoding="utf-8")
    return str(p)


@pytest.fixture
def hollow(tmp_path):
    return write(tmp_path, "hollow.json",
                 {"n": 4, "generators": [[1, 2], [1, 3], [2, 3]]})


def test_table_text(hollow, capsys):
    assert main(["table", hollow]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "lyubeznik table, d = 2"
    assert out.splitlines()[-1].split() == [".", ".", "1"]


def test_table_json_round_trip(hollow, capsys):
    assert main(["--json", "table", hollow]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"d": 2, "rows": [[0, 0, 0], [0, 0, 0], [0, 0, 1]]}


def test_output_stable(hollow, capsys):
    main(["table", hollow])
    first = capsys.readouterr().out
    main(["table", hollow])
    assert capsys.readouterr().out == first


def test_betti_and_dual(hollow, capsys):
    assert main(["--json", "betti", hollow]) == 0
    mine = json.loads(capsys.readouterr().out)
    assert mine["dual"] is False
    assert [row for row in mine["coarse"] if row[0] == 0] == [[0, 2, 3]]
    assert sum(v for step, _, v in mine["fine"] if step == 0) == 3
    assert main(["--json", "betti", "--dual", hollow]) == 0
    dual = json.loads(capsys.readouterr().out)
    assert dual["dual"] is True


def test_props_json(hollow, capsys):
    assert main(["--json", "props", hollow]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["depth"] == 2 and data["d"] == 2
    assert data["is_cm"] is True
    assert data["deficiency_dims"] == [-1, -1, 2]


def test_gamma_json(hollow, capsys):
    assert main(["--json", "gamma", "--t", "1", hollow]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["components"] == 1 and len(data["facets"]) == 3


def test_verify_ok(hollow, capsys):
    assert main(["verify", hollow]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("result: PASS")


def test_verify_json(hollow, capsys):
    assert main(["--json", "verify", hollow]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert {c["id"] for c in data["checks"]} >= {"shape", "cm-trivial"}


def test_field_gf2(hollow, capsys):
    assert main(["--field", "GF(2)", "table", hollow]) == 0
    capsys.readouterr()


def test_bad_field(hollow, capsys):
    assert main(["--field", "GF(6)", "table", hollow]) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert main(["table", str(tmp_path / "nope.json")]) == 1
    assert "error:" in capsys.readouterr().err


def test_malformed_json(tmp_path, capsys):
    path = write(tmp_path, "broken.json", "{not json")
    assert main(["table", path]) == 1
    assert "error:" in capsys.readouterr().err


def test_schema_errors(tmp_path, capsys):
    cases = [
        {"generators": [[1]]},                          # no n
        {"n": 3},                                        # no gens/primes
        {"n": 3, "generators": [[1]], "primes": [[2]]},  # both
        {"n": 3, "generators": [[4]]},                   # out of range
        {"variables": ["x", "x"], "generators": [[1]]},  # duplicate names
        {"n": 2, "generators": []},                      # zero ideal
    ]
    for payload in cases:
        path = write(tmp_path, "case.json", payload)
        assert main(["table", path]) == 1, payload
        assert "error:" in capsys.readouterr().err


def test_variable_names(tmp_path, capsys):
    path = write(tmp_path, "named.json",
                 {"variables": ["a", "b", "c"],
                  "generators": [["a", "b"], ["b", "c"]]})
    assert main(["--json", "betti", path]) == 0
    data = json.loads(capsys.readouterr().out)
    degs = {tuple(deg) for step, deg, _ in data["fine"] if step == 0}
    assert degs == {("a", "b"), ("b", "c")}


def test_var_guard_and_force(tmp_path, capsys):
    payload = {"n": 21, "generators": [[1, 2]]}
    path = write(tmp_path, "big.json", payload)
    assert main(["table", path]) == 1
    capsys.readouterr()
    # force lifts the guard; a single quadric resolves instantly
    assert main(["--force", "table", path]) == 0
    capsys.readouterr()


def test_inject_table_negative_control(hollow, tmp_path, capsys):
    bad = {"d": 2, "rows": [[0, 0, 5], [0, 0, 0], [0, 0, 1]]}
    path = write(tmp_path, "bad_table.json", bad)
    assert main(["verify", "--inject-table", path, hollow]) == 3
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_consistency_error_exit_code(hollow, capsys, monkeypatch):
    import lyubtab.cli as cli_mod
    from lyubtab.resolution import ConsistencyError

    def boom(*a, **k):
        raise ConsistencyError("synthetic breakage")

    monkeypatch.setattr(cli_mod, "lyubeznik_table", boom)
    assert cli_mod.main(["table", hollow]) == 2
    assert "synthetic breakage" in capsys.readouterr().err


def test_fixtures_list(capsys):
    assert main(["fixtures", "list"]) == 0
    out = capsys.readouterr().out
    for name in ("ex4", "ex1-I", "ex1-J", "ex2-in", "ex3-gin"):
        assert name in out


def test_fixtures_run_single(capsys):
    assert main(["fixtures", "run", "ex2-in"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "ex2-in" in out


def test_fixtures_run_unknown(capsys):
    assert main(["fixtures", "run", "nope"]) == 1
    assert "error:" in capsys.readouterr().err
