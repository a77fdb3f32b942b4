import json

import pytest

from ic_alloc.cli import main
from ic_alloc.formats import parse_partition, parse_tasks
from ic_alloc.tasks import TaskSet

EXAMPLE1_TEXT = "7 2 6\n1 2\n1 3\n2 3\n4 5\n3 6\n2 7\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_partition_eval_verify_pipeline(tmp_path, capsys):
    part = tmp_path / "p.json"
    code, out, err = run(
        capsys, "partition", "--n", "6", "--d", "2", "--workers", "3",
        "--out", str(part),
    )
    assert code == 0
    assert json.loads(out)["out"] == str(part)
    fp = parse_partition(part.read_text())
    assert fp.N == 3

    code, out, _ = run(capsys, "eval", "--partition", str(part))
    assert code == 0
    report = json.loads(out)
    assert report["pi"] == 4 and report["bounds_ok"] is True

    code, out, _ = run(capsys, "verify", "--partition", str(part))
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_partition_to_stdout(capsys):
    code, out, _ = run(capsys, "partition", "--n", "6", "--d", "2", "--workers", "3")
    assert code == 0
    fp = parse_partition(out)
    assert fp.groups[0] == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def test_partition_with_tasks(tmp_path, capsys):
    tasks = tmp_path / "x.txt"
    tasks.write_text(EXAMPLE1_TEXT)
    code, out, _ = run(
        capsys, "partition", "--n", "7", "--d", "2", "--workers", "3",
        "--tasks", str(tasks),
    )
    assert code == 0
    fp = parse_partition(out)
    assert sum(len(g) for g in fp.groups) == 6


def test_verify_rejects_tampered_partition(tmp_path, capsys):
    part = tmp_path / "p.json"
    code, _, _ = run(
        capsys, "partition", "--n", "6", "--d", "2", "--workers", "3",
        "--out", str(part),
    )
    assert code == 0
    doc = json.loads(part.read_text())
    doc["groups"][0].append(doc["groups"][1][0])  # duplicate an edge across groups
    part.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--partition", str(part))
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_thin_round_trip(tmp_path, capsys):
    out_file = tmp_path / "x.txt"
    code, out, err = run(
        capsys, "thin", "--n", "10", "--d", "2", "--phi", "0.5", "--seed", "7",
        "--out", str(out_file),
    )
    assert code == 0
    tasks = parse_tasks(out_file.read_text())
    assert tasks.phi == 0.5 and tasks.seed == 7

    code, out, _ = run(capsys, "thin", "--n", "10", "--d", "2", "--phi", "1.0", "--seed", "7")
    assert code == 0
    assert parse_tasks(out).edges == TaskSet.full(10, 2).edges


def test_bruteforce(tmp_path, capsys):
    tasks = tmp_path / "x.txt"
    tasks.write_text(EXAMPLE1_TEXT)
    code, out, _ = run(capsys, "bruteforce", "--tasks", str(tasks), "--workers", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["pi_star"] == 4
    assert sum(len(g) for g in doc["witness"]) == 6


def test_bruteforce_cap_error(tmp_path, capsys):
    tasks = tmp_path / "x.txt"
    tasks.write_text(EXAMPLE1_TEXT)
    code, _, err = run(
        capsys, "bruteforce", "--tasks", str(tasks), "--workers", "2",
        "--edge-cap", "3",
    )
    assert code == 1
    assert "error" in err


def test_montecarlo(capsys):
    code, out, _ = run(
        capsys, "montecarlo", "--n", "30", "--d", "2", "--workers", "5",
        "--phi", "0.5", "--trials", "10", "--seed", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["trials"] == 10
    assert 0.0 <= doc["fraction_delta_le_5"] <= 1.0


def test_sweep(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"n": [6, 7], "d": [2], "N": [3], "phi": [1.0]}))
    out_csv = tmp_path / "out.csv"
    code, out, err = run(capsys, "sweep", "--grid", str(grid), "--out", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().strip().split("\n")
    assert lines[0].startswith("n,d,N,phi,seed")
    assert len(lines) == 3


def test_simulate(capsys):
    code, out, _ = run(
        capsys, "simulate", "--n", "20", "--d", "2", "--workers", "3",
        "--rounds", "3", "--phi-list", "0.3,0.6,1.0", "--seed", "5",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "PASS"
    assert len(doc["rounds"]) == 3


def test_unsupported_parameters_exit_code(capsys):
    code, _, err = run(capsys, "partition", "--n", "6", "--d", "2", "--workers", "6")
    assert code == 1
    assert "error" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "eval", "--partition", "/nonexistent/x.json")
    assert code == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["partition", "--n", "6"])
    assert exc.value.code == 2
