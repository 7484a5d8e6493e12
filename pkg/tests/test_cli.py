import json

import pytest

from semiringlab import builtin, semimodule_to_dict, semiring_to_dict, zmod_quotient_module
from semiringlab.cli import main


def write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def z4_file(tmp_path):
    return write(tmp_path / "z4.json", semiring_to_dict(builtin("zmod_4").structure))


@pytest.fixture
def module_file(tmp_path):
    return write(tmp_path / "z2mod.json", semimodule_to_dict(zmod_quotient_module(4, 2)))


def test_validate_accepts_good_files(capsys, z4_file, module_file):
    assert main(["validate", z4_file, module_file]) == 0
    out = capsys.readouterr().out
    assert "valid semiring" in out and "valid semimodule" in out


def test_validate_reports_and_fails_on_bad_tables(capsys, tmp_path):
    bad = semiring_to_dict(builtin("zmod_4").structure)
    bad["add"][0][1] = 0
    path = write(tmp_path / "bad.json", bad)
    assert main(["validate", path]) == 1
    out = capsys.readouterr().out
    assert "add_identity" in out


def test_validate_json_report(tmp_path, z4_file):
    report = tmp_path / "report.json"
    assert main(["validate", z4_file, "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["schema"] == "semiringlab/validate/1"
    assert payload["results"][0]["valid"] is True


def test_builtin_base_name_resolution(tmp_path):
    data = semimodule_to_dict(zmod_quotient_module(4, 2), include_base=False)
    data["base"] = "zmod_4"
    path = write(tmp_path / "named_base.json", data)
    assert main(["validate", path]) == 0


def test_expectation_build_and_ideals(capsys, tmp_path, z4_file, module_file):
    out_file = tmp_path / "e.json"
    assert main(["expectation-build", "--semiring", z4_file, "--module", module_file, "--out", str(out_file)]) == 0
    payload = json.loads(out_file.read_text())
    assert payload["size"] == 8
    assert payload["pairing"][0] == [0, 0]

    report = tmp_path / "ideals.json"
    assert main(["ideals", "--instance", str(out_file), "--report", str(report)]) == 0
    rows = json.loads(report.read_text())["ideals"]
    assert rows[0]["members"] == [[0, 0]]
    assert rows[-1]["size"] == 8
    assert any(row["prime"] for row in rows if row["proper"])


def test_classify_product(capsys, tmp_path, z4_file, module_file):
    assert main(["classify", "--instance", z4_file, "--module", module_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "semiringlab/class-report/1"
    assert payload["size"] == 8
    assert isinstance(payload["flags"]["clean"], bool)


def test_enumerate_semirings_to_dir(capsys, tmp_path):
    out_dir = tmp_path / "enum"
    assert main(["enumerate", "--order", "2", "--out", str(out_dir)]) == 0
    files = sorted(p.name for p in out_dir.iterdir())
    assert files == ["S2.00.json", "S2.01.json"]


def test_enumerate_modules_over(capsys, tmp_path, z4_file):
    assert main(["enumerate", "--order", "2", "--modules-over", z4_file]) == 0
    assert "found 1 structures" in capsys.readouterr().out


def test_expect_with_oracle(capsys, tmp_path):
    graph = {
        "d": 1,
        "nodes": ["s", "t"],
        "source": "s",
        "sink": "t",
        "edges": [
            {"from": "s", "to": "t", "p": 0.3, "v": [1.0]},
            {"from": "s", "to": "t", "p": 0.7, "v": [2.0]},
        ],
    }
    path = write(tmp_path / "g.json", graph)
    assert main(["expect", "--graph", path, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "Z = 1.0" in out and "oracle agrees" in out


def test_expect_rejects_cyclic_graph(tmp_path, capsys):
    graph = {
        "d": 0,
        "nodes": ["s", "a", "b", "t"],
        "source": "s",
        "sink": "t",
        "edges": [
            {"from": "s", "to": "a", "p": 1.0, "v": []},
            {"from": "a", "to": "b", "p": 1.0, "v": []},
            {"from": "b", "to": "a", "p": 1.0, "v": []},
            {"from": "b", "to": "t", "p": 1.0, "v": []},
        ],
    }
    path = write(tmp_path / "cyclic.json", graph)
    assert main(["expect", "--graph", path]) == 1


def test_verify_theorems_small_grid(capsys, tmp_path):
    report = tmp_path / "report.json"
    code = main(["verify-theorems", "--max-order", "2", "--seed", "1", "--json", str(report)])
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["summary"]["fail"] == 0
    assert any(note["id"] == "weakly-prime-forward-probe" for note in payload["informational"])
    out = capsys.readouterr().out
    assert "fail: 0" in out


def test_missing_file_is_an_error(capsys):
    assert main(["validate", "does-not-exist.json"]) == 1


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
