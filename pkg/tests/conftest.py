"""
Shared fixtures: the bundled corpus and a few small diagrams.
"""

from pathlib import Path

import pytest

from config import settings
from diagram.braid import parse_braid
from diagram.pd import parse_pd
from loaders.loader import CorpusLoader
from tests.samples import TREFOIL_RIGHT_PD

CORPUS_DIR = Path(__file__).resolve().parent.parent / "data" / "corpus"


@pytest.fixture
def corpus_loader():
    return CorpusLoader(str(CORPUS_DIR))


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    """Point logs and the corpus at test locations."""
    monkeypatch.setattr(settings, "LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setattr(settings, "CORPUS_DIR", str(CORPUS_DIR))
    return settings


@pytest.fixture
def unknot():
    return parse_pd("", unknot=True)


@pytest.fixture
def hopf_positive():
    return parse_braid("2: 1 1")


@pytest.fixture
def trefoil_braid():
    return parse_braid("2: 1 1 1")


@pytest.fixture
def trefoil_pd():
    return parse_pd(TREFOIL_RIGHT_PD)
