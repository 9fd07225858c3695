import json

import pytest
from click.testing import CliRunner

from app.interfaces.cli.commands import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, cli

TRIANGLE = "n 3\n0 1\n1 2\n2 0\n"


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == EXIT_OK
    assert "1.0.0" in result.output


@pytest.mark.parametrize("family", ["darbinyan", "counterexample"])
def test_gen_counterexample(runner, family):
    result = runner.invoke(cli, ["gen", family, "8"])
    assert result.exit_code == EXIT_OK
    lines = result.stdout.splitlines()
    assert lines[0] == "n 8"
    assert len(lines) == 1 + 33


def test_gen_below_the_family_bound(runner):
    result = runner.invoke(cli, ["gen", "darbinyan", "7"])
    assert result.exit_code == EXIT_USAGE
    assert result.stdout == ""
    assert result.stderr.startswith("error:")


def test_gen_refutation_as_dot(runner):
    result = runner.invoke(cli, ["gen", "thomassen", "9", "--format", "dot"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.startswith("digraph D {")


def test_gen_reduce_and_expand(runner, tmp_path):
    result = runner.invoke(cli, ["gen", "reduce", "8", "--u", "0", "--v", "1"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines()[0] == "n 7"

    cycle = tmp_path / "c4.txt"
    cycle.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    result = runner.invoke(cli, ["gen", "expand", "--input", str(cycle), "--z0", "0"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines()[0] == "n 5"
    assert len(result.stdout.splitlines()) == 1 + 12


def test_gen_reduce_needs_both_vertices(runner):
    result = runner.invoke(cli, ["gen", "reduce", "8", "--u", "0"])
    assert result.exit_code == EXIT_USAGE


def test_check_triangle(runner):
    result = runner.invoke(cli, ["check", "-", "-c", "hamiltonian", "-c", "strong"], input=TRIANGLE)
    assert result.exit_code == EXIT_OK
    assert result.stdout == "hamiltonian: yes cycle 0 1 2\nstrong: yes\n"


def test_check_counterexample_is_a_violation(runner):
    document = runner.invoke(cli, ["gen", "darbinyan", "8"]).stdout
    result = runner.invoke(cli, ["check", "-", "-c", "k-strong:2", "-c", "hamiltonian"], input=document)
    assert result.exit_code == EXIT_VIOLATION
    assert result.stdout.splitlines() == ["k-strong 2: yes", "hamiltonian: no"]


def test_check_malformed_document(runner):
    result = runner.invoke(cli, ["check", "-", "-c", "hamiltonian"], input="n 3\n0 9\n")
    assert result.exit_code == EXIT_USAGE
    assert "line 2" in result.stderr


def test_check_unknown_check(runner):
    result = runner.invoke(cli, ["check", "-", "-c", "hamiltonain"], input=TRIANGLE)
    assert result.exit_code == EXIT_USAGE
    assert "unknown check" in result.stderr


def test_verify_constructed_claim(runner):
    result = runner.invoke(cli, ["verify", "THM_3_4"])
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines()[0] == "seed 0"
    assert result.stdout.endswith("must-pass: ok\n")


def test_verify_unknown_claim(runner):
    result = runner.invoke(cli, ["verify", "BOGUS"])
    assert result.exit_code == EXIT_USAGE


def test_verify_vacuous_batch_fails(runner):
    result = runner.invoke(cli, ["verify", "THM_3_4", "--sizes", "4"])
    assert result.exit_code == EXIT_VIOLATION
    assert "VACUOUS BATCH" in result.stdout


def test_verify_bad_sizes(runner):
    result = runner.invoke(cli, ["verify", "THM_3_4", "--sizes", "8,x"])
    assert result.exit_code == EXIT_USAGE


def test_verify_is_deterministic(runner):
    args = ["verify", "LEMMA_4_4", "--seed", "3", "--samples", "3", "--sizes", "5", "--format", "json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == EXIT_OK
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["seed"] == 3
    assert len(report["results"]) == 3


def test_verify_save(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("DIGRAPH_REPORTS_DIR", str(tmp_path))
    result = runner.invoke(cli, ["verify", "THM_3_6", "--sizes", "9", "--save"])
    assert result.exit_code == EXIT_OK
    saved = tmp_path / "suite-THM_3_6-seed0.json"
    assert saved.exists()
    assert json.loads(saved.read_text())["claims"] == ["THM_3_6"]
    assert str(saved) in result.stderr


def test_verify_load_saved_report(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("DIGRAPH_REPORTS_DIR", str(tmp_path))
    ran = runner.invoke(cli, ["verify", "THM_3_4", "--sizes", "8", "--save"])
    assert ran.exit_code == EXIT_OK
    loaded = runner.invoke(cli, ["verify", "--load", "suite-THM_3_4-seed0"])
    assert loaded.exit_code == EXIT_OK
    assert loaded.stdout == ran.stdout


def test_verify_load_unknown_report(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("DIGRAPH_REPORTS_DIR", str(tmp_path))
    result = runner.invoke(cli, ["verify", "--load", "suite-none"])
    assert result.exit_code == EXIT_USAGE
    assert "no saved report" in result.stderr


def test_verify_load_excludes_claims(runner):
    result = runner.invoke(cli, ["verify", "THM_3_4", "--load", "suite-THM_3_4-seed0"])
    assert result.exit_code == EXIT_USAGE
