"""CLI contract: exit codes, JSON envelopes, atomic outputs."""

import json
import os

import pytest

from g3motives import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_data_ok(capsys):
    code, out = run(capsys, "verify", "data")
    assert code == 0
    assert "all validations passed" in out


def test_verify_counts_genus1(capsys):
    code, out = run(capsys, "verify", "counts", "--q", "3", "--genus", "1")
    assert code == 0
    assert "zero diffs" in out


def test_verify_counts_bad_genus(capsys):
    code, out = run(capsys, "verify", "counts", "--q", "3", "--genus", "5")
    assert code == cli.EXIT_VALIDATION
    err = json.loads(out.strip().splitlines()[-1])
    assert err["error"] == "ValidationError"
    assert err["exit"] == cli.EXIT_VALIDATION


def test_compute_a3_missing_data_exit(capsys, tmp_path):
    # no ingested tables anywhere: the solve must fail loudly with the
    # exact missing key and exit code 4
    code, out = run(capsys, "--out", str(tmp_path), "--data", str(tmp_path),
                    "compute", "a3", "--lambda", "14,2,0")
    assert code == cli.EXIT_MISSING
    err = json.loads(out.strip().splitlines()[-1])
    assert err["error"] == "MissingData"
    assert "key" in err
    assert not list(tmp_path.glob("a3/*.json"))


def test_compute_m3_missing_data_exit(capsys, tmp_path):
    code, out = run(capsys, "--out", str(tmp_path), "--data", str(tmp_path),
                    "compute", "m3", "--n", "0")
    assert code == cli.EXIT_MISSING


def test_boundary_both_engines(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("G3MOTIVES_CACHE", str(tmp_path / "cache"))
    code, out = run(capsys, "--out", str(tmp_path), "boundary",
                    "--g", "1", "--n", "2", "--engine", "both")
    assert code == 0
    assert "engines agree on (1,2)" in out
    artifact = tmp_path / "boundary" / "g1_n2.json"
    assert artifact.exists()
    payload = json.loads(artifact.read_text())
    # the JSON envelope carries version, banner and input-data hashes
    assert payload["version"]
    assert "Conjecture 3.2" in payload["banner"]
    assert payload["data_hashes"]
    assert payload["engine"] == "both"
    assert payload["classes"]
    # atomic write leaves no temp file behind
    assert not (tmp_path / "boundary" / "g1_n2.json.tmp").exists()


def test_boundary_single_engine(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("G3MOTIVES_CACHE", str(tmp_path / "cache"))
    code, out = run(capsys, "--out", str(tmp_path), "boundary",
                    "--g", "1", "--n", "1", "--engine", "direct")
    assert code == 0
    assert "->" in out


def test_expression_grammar_in_output(capsys, tmp_path, monkeypatch):
    from g3motives.motives import expr_from_str
    monkeypatch.setenv("G3MOTIVES_CACHE", str(tmp_path / "cache"))
    code, _ = run(capsys, "--out", str(tmp_path), "boundary",
                  "--g", "2", "--n", "1", "--engine", "gk")
    assert code == 0
    payload = json.loads((tmp_path / "boundary" / "g2_n1.json").read_text())
    for s in payload["classes"].values():
        expr_from_str(s)  # every emitted expression parses back
