"""Acceptance: extracted depths drive the sentree toolchain end to end.

The sentree package is exercised exclusively through its command line
(``python -m sentree ...``); nothing here imports it.
"""

from __future__ import annotations

import json
import random
import subprocess
import sys

import numpy as np
import pytest

from tinybert import WORDS


def run_cli(module, args):
    return subprocess.run(
        [sys.executable, "-m", module, *args],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="module")
def sample_file(tmp_path_factory):
    rng = random.Random(99)
    path = tmp_path_factory.mktemp("sample") / "sentences.txt"
    lines = [
        " ".join(rng.choice(WORDS) for _ in range(rng.randint(1, 12)))
        for _ in range(100)
    ]
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


def test_extracted_depths_pass_primary_validation_end_to_end(
    tmp_path, tiny_model_dir, sample_file
):
    probe = tmp_path / "probe.npz"
    np.savez(probe, B=np.eye(16))
    depths = tmp_path / "depths.jsonl"

    extract = run_cli("probe_extract", [
        "extract", "--model", tiny_model_dir, "--probe", str(probe),
        "--layer", "2", "--input", str(sample_file), "--output", str(depths),
    ])
    assert extract.returncode == 0, extract.stderr
    produced = depths.read_text(encoding="utf-8").splitlines()
    assert len(produced) == 100

    validate = run_cli("sentree", ["validate", "--input", str(depths)])
    summary = json.loads(validate.stderr.splitlines()[-1])
    ok_validate = validate.returncode == 0 and summary["invalid"] == 0

    encoded = tmp_path / "trees.txt"
    encode = run_cli("sentree", [
        "encode", "--input", str(depths), "--output", str(encoded),
    ])
    decoded = tmp_path / "decoded.txt"
    decode = run_cli("sentree", [
        "decode", "--input", str(encoded), "--output", str(decoded),
    ])
    roundtrip = decoded.read_text(encoding="utf-8") == sample_file.read_text(
        encoding="utf-8"
    )

    spectra = run_cli("sentree", [
        "spectra", "--input", str(depths),
        "--output", str(tmp_path / "spectra.tsv"),
    ])

    ok = (
        ok_validate
        and encode.returncode == 0
        and decode.returncode == 0
        and roundtrip
        and spectra.returncode == 0
    )
    print(
        f"[{'PASS' if ok else 'FAIL'}] probe-to-tree: 100 extracted lines, "
        f"validate rc={validate.returncode} (invalid={summary['invalid']}), "
        f"encode rc={encode.returncode}, decode rc={decode.returncode}, "
        f"roundtrip={roundtrip}, spectra rc={spectra.returncode}"
    )
    assert ok


def test_zero_probe_still_yields_valid_trees(tmp_path, tiny_model_dir, sample_file):
    # All-zero depths collapse to one tie class; trees degenerate to
    # right chains via the leftmost tie-break but stay fully valid.
    probe = tmp_path / "probe.npz"
    np.savez(probe, B=np.zeros((16, 16)))
    depths = tmp_path / "depths.jsonl"

    extract = run_cli("probe_extract", [
        "extract", "--model", tiny_model_dir, "--probe", str(probe),
        "--layer", "1", "--input", str(sample_file), "--output", str(depths),
    ])
    assert extract.returncode == 0, extract.stderr
    assert all(
        set(json.loads(line)["depths"]) <= {0.0}
        for line in depths.read_text(encoding="utf-8").splitlines()
    )

    validate = run_cli("sentree", ["validate", "--input", str(depths)])
    assert validate.returncode == 0
