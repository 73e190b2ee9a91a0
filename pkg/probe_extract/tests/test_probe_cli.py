"""CLI behavior: files in, depths file out, reports on stderr."""

from __future__ import annotations

import json

import numpy as np
import pytest

from probe_extract.cli import main


@pytest.fixture()
def probe_file(tmp_path):
    path = tmp_path / "probe.npz"
    np.savez(path, B=np.eye(16))
    return str(path)


def stderr_records(capsys):
    err = capsys.readouterr().err
    return [json.loads(line) for line in err.splitlines() if line.startswith("{")]


class TestExtractCommand:
    def test_happy_path(self, tmp_path, tiny_model_dir, probe_file, capsys):
        inp = tmp_path / "text.txt"
        inp.write_text("the cat sat\na big dog\n", encoding="utf-8")
        out = tmp_path / "depths.jsonl"
        rc = main(["extract", "--model", tiny_model_dir, "--probe", probe_file,
                   "--layer", "2", "--input", str(inp), "--output", str(out)])
        assert rc == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first["tokens"] == ["the", "cat", "sat"]
        assert all(d >= 0 for d in first["depths"])
        summary = stderr_records(capsys)[-1]
        assert summary["event"] == "summary"
        assert summary["written"] == 2 and summary["skipped"] == 0

    def test_stdout_default(self, tmp_path, tiny_model_dir, probe_file, capsys):
        inp = tmp_path / "text.txt"
        inp.write_text("the cat\n", encoding="utf-8")
        rc = main(["extract", "--model", tiny_model_dir, "--probe", probe_file,
                   "--layer", "1", "--input", str(inp)])
        assert rc == 0
        record = json.loads(capsys.readouterr().out.splitlines()[0])
        assert record["tokens"] == ["the", "cat"]

    def test_skips_and_reports_overlong_line(self, tmp_path, tiny_model_dir,
                                             probe_file, capsys):
        inp = tmp_path / "text.txt"
        inp.write_text("the cat\n" + "the " * 100 + "\n", encoding="utf-8")
        out = tmp_path / "depths.jsonl"
        rc = main(["extract", "--model", tiny_model_dir, "--probe", probe_file,
                   "--layer", "2", "--input", str(inp), "--output", str(out)])
        assert rc == 0
        assert len(out.read_text(encoding="utf-8").splitlines()) == 1
        records = stderr_records(capsys)
        assert records[0]["reason"] == "TokenizationMismatch"
        assert records[0]["line"] == 2
        assert records[-1]["skipped"] == 1

    def test_missing_model_is_config_error(self, tmp_path, probe_file, capsys):
        inp = tmp_path / "text.txt"
        inp.write_text("hi\n", encoding="utf-8")
        rc = main(["extract", "--model", str(tmp_path / "nope"),
                   "--probe", probe_file, "--layer", "0",
                   "--input", str(inp)])
        assert rc == 2
        assert stderr_records(capsys)[0]["kind"] == "config"

    def test_bad_probe_is_config_error(self, tmp_path, tiny_model_dir, capsys):
        probe = tmp_path / "bad.npz"
        np.savez(probe, W=np.eye(16))
        inp = tmp_path / "text.txt"
        inp.write_text("hi\n", encoding="utf-8")
        rc = main(["extract", "--model", tiny_model_dir, "--probe", str(probe),
                   "--layer", "0", "--input", str(inp)])
        assert rc == 2

    def test_layer_out_of_range_is_config_error(self, tmp_path, tiny_model_dir,
                                                probe_file, capsys):
        inp = tmp_path / "text.txt"
        inp.write_text("hi\n", encoding="utf-8")
        rc = main(["extract", "--model", tiny_model_dir, "--probe", probe_file,
                   "--layer", "9", "--input", str(inp)])
        assert rc == 2
        assert stderr_records(capsys)[0]["kind"] == "config"

    def test_missing_input_file(self, tmp_path, tiny_model_dir, probe_file,
                                capsys):
        rc = main(["extract", "--model", tiny_model_dir, "--probe", probe_file,
                   "--layer", "0", "--input", str(tmp_path / "absent.txt")])
        assert rc == 2
        assert stderr_records(capsys)[0]["kind"] == "io"

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["extract", "--model", "m"])
        assert exc_info.value.code == 2
