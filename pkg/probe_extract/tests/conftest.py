"""Session fixtures around the tiny local encoder."""

from __future__ import annotations

import pytest
from tinybert import build_tiny_model


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    return build_tiny_model(tmp_path_factory.mktemp("tiny-bert"))


@pytest.fixture(scope="session")
def tiny_encoder(tiny_model_dir):
    from probe_extract.extract import load_encoder

    return load_encoder(tiny_model_dir)
