"""Concept-mention annotation with relevance filtering.

Mentions are found by lemma-level matching of concept labels against
the input tokens: longest match wins, scanning left to right, spans
never overlap. A found mention is dropped when its concept is common
knowledge or has betweenness centrality exactly zero, so readers only
get links that lead somewhere informative.
"""

from __future__ import annotations

import html
from dataclasses import dataclass

from espace.annotation.common_words import FrequencyTable, is_common_knowledge
from espace.kg.model import KnowledgeGraph
from espace.ports.lemmas import lemmatize
from espace.ports.tokenize import words_only


@dataclass(frozen=True)
class Annotation:
    start: int
    end: int
    concept_uri: str


def label_index(kg: KnowledgeGraph) -> dict[tuple[str, ...], str]:
    """Lemma-tuple lookup for every concept label."""
    index: dict[tuple[str, ...], str] = {}
    for uri in sorted(kg.concepts):
        key = tuple(kg.concepts[uri].label.split(" "))
        if key:
            index.setdefault(key, uri)
    return index


def find_mentions(
    text: str, index: dict[tuple[str, ...], str]
) -> list[Annotation]:
    """Maximal concept-label matches, unfiltered."""
    if not text:
        return []
    tokens = words_only(text)
    lemmas = [lemmatize(t.text) for t in tokens]
    max_len = max((len(k) for k in index), default=0)
    out: list[Annotation] = []
    i = 0
    while i < len(tokens):
        matched = False
        for length in range(min(max_len, len(tokens) - i), 0, -1):
            key = tuple(lemmas[i:i + length])
            uri = index.get(key)
            if uri is not None:
                out.append(
                    Annotation(start=tokens[i].start, end=tokens[i + length - 1].end,
                               concept_uri=uri)
                )
                i += length
                matched = True
                break
        if not matched:
            i += 1
    return out


def annotate(
    text: str,
    kg: KnowledgeGraph,
    centrality: dict[str, float],
    table: FrequencyTable,
    rank_cutoff: int = 1000,
) -> list[Annotation]:
    """Mentions that survive the common-word and zero-centrality filters."""
    mentions = find_mentions(text, label_index(kg))
    kept = []
    for m in mentions:
        if is_common_knowledge(m.concept_uri, table, rank_cutoff):
            continue
        if centrality.get(m.concept_uri, 0.0) == 0.0:
            continue
        kept.append(m)
    return kept


def to_html(text: str, annotations: list[Annotation]) -> str:
    """Escaped HTML with each annotation wrapped in an anchor element."""
    parts: list[str] = []
    cursor = 0
    for ann in sorted(annotations, key=lambda a: a.start):
        parts.append(html.escape(text[cursor:ann.start]))
        span = html.escape(text[ann.start:ann.end])
        uri = html.escape(ann.concept_uri, quote=True)
        parts.append(f'<a class="concept-link" href="#" data-concept-uri="{uri}">{span}</a>')
        cursor = ann.end
    parts.append(html.escape(text[cursor:]))
    return "".join(parts)
