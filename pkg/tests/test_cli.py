import json
import subprocess
import sys

import pytest

from tdx.cli import run
from tdx.config import ENV_VAR, MODEL_IDS


def test_smoke_single_model(demo_root, capsysbinary):
    assert run(["analyze", str(demo_root), "--models", "sonar", "--format", "json"]) == 0
    data = json.loads(capsysbinary.readouterr().out)
    assert list(data["models"]) == ["sonar"]


def test_bogus_model_lists_valid_ids(demo_root, capsys):
    assert run(["analyze", str(demo_root), "--models", "bogus"]) == 2
    err = capsys.readouterr().err
    for mid in MODEL_IDS:
        assert mid in err


def test_codescene_needs_commit_log(demo_root, capsys):
    assert run(["analyze", str(demo_root), "--models", "codescene"]) == 2
    assert "commit log" in capsys.readouterr().err


def test_codescene_with_log(demo_root, fixtures_dir, capsysbinary):
    code = run(["analyze", str(demo_root), "--models", "codescene",
                "--commit-log", str(fixtures_dir / "commits.log")])
    assert code == 0
    data = json.loads(capsysbinary.readouterr().out)
    assert data["hotspots"][0]["path"] == "src/billing.ms"


def test_commit_log_adds_codescene_to_defaults(demo_root, fixtures_dir, capsysbinary):
    assert run(["analyze", str(demo_root), "--commit-log", str(fixtures_dir / "commits.log")]) == 0
    assert "codescene" in json.loads(capsysbinary.readouterr().out)["models"]


def test_unreadable_root_names_path(tmp_path, capsys):
    missing = tmp_path / "no-such-dir"
    assert run(["analyze", str(missing)]) == 1
    assert str(missing) in capsys.readouterr().err


def test_parse_error_is_analysis_error(tmp_path, capsys):
    (tmp_path / "bad.ms").write_text("fn f( {\n")
    assert run(["analyze", str(tmp_path)]) == 1
    assert "bad.ms" in capsys.readouterr().err


def test_bad_config_exits_2(demo_root, tmp_path, capsys):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[sonar]\nrating.A_max = 1.5\n")
    assert run(["analyze", str(demo_root), "--config", str(cfg)]) == 2
    assert "expected value in [0, 1]" in capsys.readouterr().err


def test_env_config_fallback(demo_root, tmp_path, monkeypatch, capsysbinary):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[ndepend]\nprice_per_hour = 100\n")
    monkeypatch.setenv(ENV_VAR, str(cfg))
    assert run(["analyze", str(demo_root), "--models", "ndepend"]) == 0
    data = json.loads(capsysbinary.readouterr().out)
    assert data["models"]["ndepend"]["intermediates"]["price_per_hour"] == 100
    assert any(p["key"] == "ndepend.price_per_hour" and p["source"] == "override"
               for p in data["provenance"])


def test_out_file_and_text_format(demo_root, tmp_path):
    out = tmp_path / "report.txt"
    assert run(["analyze", str(demo_root), "--format", "text", "--out", str(out)]) == 0
    assert "[sonar]" in out.read_text()


def test_bad_format_is_usage_error(demo_root):
    with pytest.raises(SystemExit) as exc:
        run(["analyze", str(demo_root), "--format", "xml"])
    assert exc.value.code == 2


def test_unusable_benchmark_is_noted(demo_root, tmp_path, capsysbinary):
    bench = tmp_path / "b.json"
    bench.write_text('{"a": [1, 2]}')
    assert run(["analyze", str(demo_root), "--models", "bch", "--benchmark", str(bench)]) == 0
    data = json.loads(capsysbinary.readouterr().out)
    assert any("benchmark" in n for n in data["notes"])


def test_config_dump_round_trips(tmp_path, capsysbinary):
    assert run(["config", "--dump"]) == 0
    dumped = capsysbinary.readouterr().out
    path = tmp_path / "full.ini"
    path.write_bytes(dumped)
    assert run(["config", "--config", str(path), "--dump"]) == 0
    assert capsysbinary.readouterr().out == dumped


def test_module_entry_point(demo_root):
    proc = subprocess.run([sys.executable, "-m", "tdx", "analyze", str(demo_root), "--models", "vsmi"],
                          capture_output=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["models"]["vsmi"]["rating"] == "high"
