"""Tests for the command-line interface."""

import json

import pytest
import yaml

from src.rsverify.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, VerificationCLI


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """An empty directory with a config that keeps runs short."""
    monkeypatch.chdir(tmp_path)
    (tmp_path / "config.yaml").write_text(
        yaml.dump(
            {
                "engine": {"agreement_samples": 1},
                "suites": {
                    "identities": {"rmax": 2, "mmax": 2, "nmax": 2},
                    "structure": {"max_size": 6, "max_pattern_size": 6},
                },
            }
        )
    )
    return tmp_path


def run(*args):
    return VerificationCLI().run(list(args))


def test_single_case(workdir, capsys):
    """Test one EQUAL case written as structured JSON to stdout."""
    code = run("verify", "theorem1", "--r", "1", "--m", "2", "--n", "1", "--order", "4", "--format", "structured")
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"] == {"equal": 1, "mismatch": 0, "paper_discrepancy": 0, "error": 0}
    assert payload["cases"][0]["path"] == "jpss"


def test_documented_example(workdir, capsys):
    """Test `verify theorem1 --r 1 --m 2 --n 1 --order 6` exactly as documented."""
    assert run("verify", "theorem1", "--r", "1", "--m", "2", "--n", "1", "--order", "6") == EXIT_OK
    assert "EQUAL" in capsys.readouterr().out


def test_internal_error_exits_failed(workdir, capsys):
    """Test that a failed internal check gives ERROR, a diagnostic and exit 1."""
    (workdir / "config.yaml").write_text(yaml.dump({"engine": {"agreement_samples": 0, "levi_convention": "P"}}))
    code = run("verify", "theorem1", "--r", "2", "--m", "3", "--n", "1", "--order", "2", "--path", "chain", "--format", "structured")
    assert code == EXIT_FAILED
    case = json.loads(capsys.readouterr().out)["cases"][0]
    assert case["status"] == "ERROR"
    assert "half-integer" in case["error"]


def test_unsupported_case(workdir):
    """Test that r >= m on the n = 1 path exits with a usage error."""
    assert run("verify", "theorem1", "--r", "3", "--m", "2", "--n", "1") == EXIT_USAGE


def test_missing_flag(workdir):
    """Test that --r without --m is a usage error."""
    assert run("verify", "theorem1", "--r", "1") == EXIT_USAGE


def test_bad_choice(workdir):
    """Test that argparse rejects an unknown format."""
    with pytest.raises(SystemExit) as excinfo:
        run("verify", "theorem1", "--r", "1", "--m", "2", "--format", "xml")
    assert excinfo.value.code == 2


def test_no_command(workdir):
    """Test that no subcommand prints help and exits 2."""
    assert run() == EXIT_USAGE


def test_perturb_fails(workdir, capsys):
    """Test that a corrupted oracle value gives MISMATCH and exit 1."""
    code = run("verify", "theorem1", "--r", "1", "--m", "2", "--order", "3", "--format", "structured", "--perturb")
    assert code == EXIT_FAILED
    payload = json.loads(capsys.readouterr().out)
    assert payload["cases"][0]["status"] == "MISMATCH"


def test_no_timing_is_byte_identical(workdir):
    """Test that two runs with --no-timing write identical files."""
    for name in ("a.json", "b.json"):
        code = run("verify", "theorem1", "--r", "1", "--m", "2", "--order", "3", "--format", "structured", "--no-timing", "--out", name)
        assert code == EXIT_OK
    assert (workdir / "a.json").read_bytes() == (workdir / "b.json").read_bytes()


def test_out_leaves_stdout_empty(workdir, capsys):
    """Test that --out writes the report to the file only."""
    assert run("verify", "theorem1", "--r", "1", "--m", "2", "--order", "2", "--out", "report.txt") == EXIT_OK
    assert capsys.readouterr().out == ""
    assert "EQUAL" in (workdir / "report.txt").read_text()


def test_baseline_regression(workdir):
    """Test that a case missing from the new run fails against the baseline."""
    assert run("verify", "theorem1", "--r", "1", "--m", "3", "--order", "2", "--format", "structured", "--out", "base.json") == EXIT_OK
    code = run("verify", "theorem1", "--r", "1", "--m", "2", "--order", "2", "--out", "new.txt", "--baseline", "base.json")
    assert code == EXIT_FAILED


def test_missing_baseline(workdir):
    """Test that an absent baseline is a usage error."""
    assert run("verify", "theorem1", "--r", "1", "--m", "2", "--baseline", "absent.json") == EXIT_USAGE


def test_identity_suite(workdir, capsys):
    """Test the exponent-identity suite from the command line."""
    assert run("verify", "identities", "--format", "structured") == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["equal"] == 8


def test_corpus_file(workdir, capsys):
    """Test a small corpus file with its digest in the report."""
    (workdir / "corpus.yaml").write_text(yaml.dump({"defaults": {"order": 2}, "cases": [{"r": 1, "m": 2}, {"r": 1, "m": 2, "n": 2}]}))
    assert run("verify", "theorem1", "--corpus", "corpus.yaml", "--format", "structured") == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["corpus_digest"]) == 64
    assert [c["path"] for c in payload["cases"]] == ["jpss", "rank1"]


def test_init(tmp_path, monkeypatch):
    """Test writing the default config and refusing to overwrite it."""
    monkeypatch.chdir(tmp_path)
    assert run("init") == EXIT_OK
    written = yaml.safe_load((tmp_path / "config.yaml").read_text())
    assert written["engine"]["order"] == 6
    (tmp_path / "config.yaml").write_text("engine: {order: 3}\n")
    assert run("init") == EXIT_OK
    assert "order: 3" in (tmp_path / "config.yaml").read_text()


@pytest.mark.slow
@pytest.mark.integration
def test_default_corpus_end_to_end(tmp_path, monkeypatch, capsys):
    """Test `verify all --corpus default` with the shipped configuration."""
    monkeypatch.chdir(tmp_path)
    assert run("verify", "all", "--corpus", "default", "--format", "structured") == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["equal"] >= 20
    assert payload["summary"]["mismatch"] == 0
    assert payload["summary"]["error"] == 0
