"""Shared fixtures: ports, the fixture corpus, and a built snapshot."""

from __future__ import annotations

from pathlib import Path

import pytest

from espace.config import PipelineConfig
from espace.annotation.common_words import FrequencyTable
from espace.ports.embedder import HashedLemmaEncoder
from espace.ports.lexicon import LexicalKnowledgeBase, MostFrequentSenseWsd
from espace.ports.parser import ReferenceDependencyParser
from espace.ports.summarizer import FirstSentenceSummarizer, IdentitySummarizer
from espace.service.pipeline import read_manifest, run_pipeline

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# calibrated for the reference embedder on the fixture corpus: snippet-level
# matches pass, context-only matches mostly do not
FIXTURE_THRESHOLD = 0.2


@pytest.fixture(scope="session")
def parser():
    return ReferenceDependencyParser()


@pytest.fixture(scope="session")
def embedder():
    return HashedLemmaEncoder(dim=512, context_weight=0.5)


@pytest.fixture(scope="session")
def summarizer():
    return FirstSentenceSummarizer()


@pytest.fixture(scope="session")
def identity_summarizer():
    return IdentitySummarizer()


@pytest.fixture(scope="session")
def lexicon():
    return LexicalKnowledgeBase.load(
        Path(__file__).resolve().parent.parent / "src/espace/data/lexicon.tsv"
    )


@pytest.fixture(scope="session")
def wsd(lexicon):
    return MostFrequentSenseWsd(lexicon)


@pytest.fixture(scope="session")
def frequency_table():
    return FrequencyTable.load(None)


@pytest.fixture(scope="session")
def fixture_documents():
    return read_manifest(FIXTURES / "corpus" / "manifest.json")


@pytest.fixture(scope="session")
def fixture_config():
    return PipelineConfig(pertinence_threshold=FIXTURE_THRESHOLD)


@pytest.fixture(scope="session")
def fixture_snapshot(fixture_documents, fixture_config):
    return run_pipeline(fixture_documents, fixture_config)


@pytest.fixture(scope="session")
def explanans_text():
    return (FIXTURES / "explanans.txt").read_text("utf-8").strip()
