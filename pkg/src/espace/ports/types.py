"""Domain types shared by the pluggable NLP ports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

import numpy as np


@dataclass(frozen=True)
class ParsedToken:
    """One token of a dependency-parsed sentence.

    `head_index == index` marks the root; head links otherwise form a tree.
    `start`/`end` are character offsets into the parsed string.
    """

    index: int
    text: str
    lemma: str
    pos: str
    dep_label: str
    head_index: int
    start: int
    end: int


@dataclass(frozen=True)
class SenseEntry:
    """A lexical-knowledge-base sense with its hypernym chain.

    `hypernyms` runs from the most specific ancestor to the most abstract
    one and never contains the sense itself.
    """

    sense_id: str
    lemma: str
    hypernyms: tuple[str, ...]


def validate_tree(tokens: list[ParsedToken]) -> None:
    """Raise ValueError unless the tokens form a single-rooted tree."""
    if not tokens:
        raise ValueError("empty token list")
    roots = [t for t in tokens if t.head_index == t.index]
    if len(roots) != 1:
        raise ValueError(f"expected exactly one root, got {len(roots)}")
    n = len(tokens)
    for tok in tokens:
        if not 0 <= tok.head_index < n:
            raise ValueError(f"head index {tok.head_index} out of range")
        seen = set()
        cur = tok
        while cur.head_index != cur.index:
            if cur.index in seen:
                raise ValueError(f"cycle through token {tok.index}")
            seen.add(cur.index)
            cur = tokens[cur.head_index]


@runtime_checkable
class DependencyParser(Protocol):
    def parse(self, text: str) -> list[ParsedToken]: ...

    def split_sentences(self, text: str) -> list[tuple[int, int]]: ...


@runtime_checkable
class DualEncoder(Protocol):
    """Question/answer embedder pair sharing one vector space."""

    dim: int

    def embed_question(self, question: str) -> np.ndarray: ...

    def embed_answer(self, snippet: str, context: str) -> np.ndarray: ...


@runtime_checkable
class Summarizer(Protocol):
    def summarize(self, text: str, budget: int) -> str: ...


@runtime_checkable
class WordSenseDisambiguator(Protocol):
    def disambiguate(self, syntagm: str, sentence_context: str) -> SenseEntry | None: ...
