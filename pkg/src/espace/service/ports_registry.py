"""Construct port implementations from a pipeline configuration."""

from __future__ import annotations

from dataclasses import dataclass
from importlib.resources import as_file, files
from pathlib import Path

from espace.config import PipelineConfig
from espace.annotation.common_words import FrequencyTable
from espace.ports.embedder import CachingEncoder, HashedLemmaEncoder
from espace.ports.lexicon import LexicalKnowledgeBase, MostFrequentSenseWsd
from espace.ports.parser import ReferenceDependencyParser
from espace.ports.summarizer import FirstSentenceSummarizer, IdentitySummarizer
from espace.ports.types import DependencyParser, DualEncoder, Summarizer, WordSenseDisambiguator


@dataclass
class Ports:
    parser: DependencyParser
    embedder: DualEncoder
    summarizer: Summarizer
    wsd: WordSenseDisambiguator
    lexicon: LexicalKnowledgeBase
    frequency: FrequencyTable


def _bundled_lexicon_path() -> Path:
    resource = files("espace.data").joinpath("lexicon.tsv")
    with as_file(resource) as p:
        return Path(p)


def build_ports(config: PipelineConfig) -> Ports:
    parser = ReferenceDependencyParser()
    embedder: DualEncoder = CachingEncoder(
        HashedLemmaEncoder(dim=config.embedding_dim, context_weight=config.context_weight)
    )
    summarizer: Summarizer
    if config.summarizer == "identity":
        summarizer = IdentitySummarizer()
    else:
        summarizer = FirstSentenceSummarizer()
    lexicon_path = config.lexicon_path or _bundled_lexicon_path()
    lexicon = LexicalKnowledgeBase.load(lexicon_path)
    wsd = MostFrequentSenseWsd(lexicon)
    frequency = FrequencyTable.load(config.frequency_path)
    return Ports(
        parser=parser,
        embedder=embedder,
        summarizer=summarizer,
        wsd=wsd,
        lexicon=lexicon,
        frequency=frequency,
    )
