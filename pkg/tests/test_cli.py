"""CLI contract: exit codes, JSON output, error reporting."""

import json
import subprocess
import sys

import pytest

from toricfree.cli import main
from toricfree.serialize import parse_cone_document


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def orthant_file(tmp_path):
    return write_json(tmp_path, "orthant.json",
                      {"rank": 2, "generators": [[1, 0], [0, 1]]})


@pytest.fixture
def singular_file(tmp_path):
    return write_json(tmp_path, "a1.json",
                      {"rank": 2, "generators": [[1, 0], [1, 2]]})


@pytest.fixture
def line_file(tmp_path):
    return write_json(tmp_path, "line.json",
                      {"rank": 2, "generators": [[1, 2], [-1, -2]]})


@pytest.fixture
def fan_file(tmp_path):
    return write_json(tmp_path, "p112.json", {
        "rank": 2,
        "cones": [[[1, 0], [0, 1]], [[0, 1], [-1, -2]], [[-1, -2], [1, 0]]],
    })


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_smooth_affirmative(capsys, orthant_file):
    code, out, err = run_cli(capsys, "smooth", orthant_file)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert doc["kind"] == "smooth"
    assert doc["tool"]["name"] == "toricfree"


def test_smooth_negative_with_reason(capsys, singular_file):
    code, out, _ = run_cli(capsys, "smooth", singular_file)
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] is False
    assert doc["entries"][0]["smooth"]["reason"] == "invariant factor 2 exceeds 1"


def test_smooth_rejects_line(capsys, line_file):
    code, out, err = run_cli(capsys, "smooth", line_file)
    assert code == 2
    assert out == ""
    assert err.startswith("toricfree: error:")


def test_locally_free_witness_shape(capsys, orthant_file):
    code, out, _ = run_cli(capsys, "locally-free", orthant_file)
    assert code == 0
    doc = json.loads(out)
    entry = doc["entries"][0]["locally_free"]
    assert entry["witnesses"] == [
        {"ray": [0, 1], "weight": [0, 1]},
        {"ray": [1, 0], "weight": [1, 0]},
    ]
    assert entry["certificate"]["entries"]


def test_locally_free_failure_fields(capsys, singular_file):
    code, out, _ = run_cli(capsys, "locally-free", singular_file)
    assert code == 1
    entry = json.loads(out)["entries"][0]["locally_free"]
    assert entry["failure"] == "no integral dual weight for ray (1, 0)"
    assert entry["failing_ray"] == [1, 0]
    assert "certificate" not in entry


def test_verify_agrees_even_when_both_negative(capsys, singular_file):
    code, out, _ = run_cli(capsys, "verify", singular_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert all(e["agree"] for e in doc["entries"])


def test_verify_fan(capsys, fan_file):
    code, out, _ = run_cli(capsys, "verify", fan_file)
    assert code == 0
    doc = json.loads(out)
    # closure of three maximal cones: 3 + 3 rays + zero cone
    assert len(doc["entries"]) == 7


def test_locally_free_fan_negative(capsys, fan_file):
    code, out, _ = run_cli(capsys, "locally-free", fan_file)
    assert code == 1
    doc = json.loads(out)
    bad = [e for e in doc["entries"] if not e["locally_free"]["verdict"]]
    assert len(bad) == 1
    assert bad[0]["cone"]["generators"] == [[-1, -2], [1, 0]]


def test_sweep_and_exit_code(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--rank", "2", "--count", "40", "--seed", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 40
    assert doc["agreements"] == 40
    assert doc["config"]["prng"] == "python-random-mt19937"
    assert doc["config"]["max_generators"] == 4


def test_sweep_rejects_bad_count(capsys):
    code, _, err = run_cli(capsys, "sweep", "--rank", "2", "--count", "0", "--seed", "3")
    assert code == 2
    assert "count" in err


def test_sections_flag_forms(capsys, orthant_file):
    code, out, _ = run_cli(capsys, "sections", orthant_file,
                           "--ray", "1,0", "--weight", "0,0")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run_cli(capsys, "sections", orthant_file,
                           "--ray=1,0", "--weight=-1,7")
    assert (code, out.strip()) == (0, "1")
    # unfolded flag with a leading minus sign must parse too
    code, out, _ = run_cli(capsys, "sections", orthant_file,
                           "--ray", "-1,0", "--weight", "1,3")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run_cli(capsys, "sections", orthant_file,
                           "--ray", "1,0", "--weight", "-2,5")
    assert (code, out.strip()) == (0, "0")


def test_sections_validation(capsys, orthant_file):
    code, _, err = run_cli(capsys, "sections", orthant_file,
                           "--ray", "2,4", "--weight", "0,0")
    assert code == 2 and "primitive" in err
    code, _, err = run_cli(capsys, "sections", orthant_file,
                           "--ray", "1,0,0", "--weight", "0,0")
    assert code == 2 and "length" in err
    code, _, err = run_cli(capsys, "sections", orthant_file,
                           "--ray", "1,x", "--weight", "0,0")
    assert code == 2


def test_generate_emits_parseable_lines(capsys):
    code, out, _ = run_cli(capsys, "generate", "--seed", "11", "--rank", "3",
                           "--count", "5")
    assert code == 0
    lines = [line for line in out.splitlines() if line]
    assert len(lines) == 5
    for line in lines:
        cone = parse_cone_document(json.loads(line))
        assert cone.rank == 3
        assert cone.is_strongly_convex


def test_generate_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "generate", "--seed", "4", "--rank", "2", "--count", "8")
    _, second, _ = run_cli(capsys, "generate", "--seed", "4", "--rank", "2", "--count", "8")
    assert first == second


def test_recheck_round_trip(capsys, tmp_path, orthant_file):
    code, out, _ = run_cli(capsys, "locally-free", orthant_file)
    assert code == 0
    report_file = write_json(tmp_path, "report.json", json.loads(out))
    code, out, _ = run_cli(capsys, "recheck", report_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True and doc["failures"] == []


def test_recheck_catches_tampering(capsys, tmp_path, orthant_file):
    _, out, _ = run_cli(capsys, "locally-free", orthant_file)
    doc = json.loads(out)
    doc["entries"][0]["cone"]["generators"] = [[1, 0], [1, 2]]
    report_file = write_json(tmp_path, "tampered.json", doc)
    code, out, _ = run_cli(capsys, "recheck", report_file)
    assert code == 1
    assert json.loads(out)["failures"]


def test_examples_listing(capsys):
    code, out, _ = run_cli(capsys, "examples")
    assert code == 0
    doc = json.loads(out)
    rows = {r["name"]: r for r in doc["examples"]}
    assert len(rows) == 15
    assert rows["P2"]["kind"] == "fan"
    assert rows["conifold"] == {"name": "conifold", "kind": "cone",
                                "smooth": False, "locally_free": False}


def test_error_paths(capsys, tmp_path):
    code, _, err = run_cli(capsys, "smooth", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(capsys, "smooth", str(bad))
    assert code == 2
    schema = write_json(tmp_path, "schema.json", {"rank": 2})
    code, _, err = run_cli(capsys, "smooth", schema)
    assert code == 2 and "neither" in err


def test_usage_errors_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    assert main([]) == 2
    assert main(["sweep", "--rank", "2"]) == 2  # missing required flags
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "smooth" in out and "locally-free" in out


def test_console_script_subprocess(tmp_path):
    doc = {"rank": 2, "generators": [[1, 0], [0, 1]]}
    path = tmp_path / "cone.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    proc = subprocess.run(
        [sys.executable, "-m", "toricfree", "verify", str(path)],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] is True
