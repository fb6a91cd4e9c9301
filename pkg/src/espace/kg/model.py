"""Knowledge-graph data model: concepts, template triples, edges."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from espace.errors import MissingConceptError


@dataclass(frozen=True)
class Occurrence:
    """One mention of a concept: a character span in a sentence."""

    sentence_id: str
    start: int
    end: int
    surface: str


@dataclass(frozen=True)
class Concept:
    """A syntagm promoted to a graph node.

    `label` is the lemmatized, determiner-free form; `tokens` keeps the
    per-token (lemma, pos) pairs so composition subclassing can pick the
    nominal constituents.
    """

    uri: str
    label: str
    tokens: tuple[tuple[str, str], ...]
    occurrences: tuple[Occurrence, ...]


@dataclass(frozen=True)
class TemplateTriple:
    """Subject/object concept pair joined by a natural-language template.

    The template contains `{subj}` and `{obj}` exactly once each; the
    remaining tokens are verbatim source-sentence tokens, so realizing
    the triple reproduces a subsequence of its sentence.
    """

    triple_id: str
    subject_uri: str
    template: str
    object_uri: str
    sentence_id: str
    paragraph_id: str


@dataclass(frozen=True)
class KnowledgeGraph:
    concepts: Mapping[str, Concept]
    triples: tuple[TemplateTriple, ...]
    subclass_edges: frozenset[tuple[str, str]]  # (sub_uri, super_uri)
    source_edges: frozenset[tuple[str, str]]  # (uri or triple_id, sentence_id)

    @staticmethod
    def build(concepts, triples, subclass_edges, source_edges) -> "KnowledgeGraph":
        return KnowledgeGraph(
            concepts=MappingProxyType(dict(sorted(concepts.items()))),
            triples=tuple(triples),
            subclass_edges=frozenset(subclass_edges),
            source_edges=frozenset(source_edges),
        )

    def concept(self, uri: str) -> Concept:
        if uri not in self.concepts:
            raise MissingConceptError(uri)
        return self.concepts[uri]

    def triples_touching(self, uris) -> list[TemplateTriple]:
        """Triples whose subject or object is in `uris`, in id order."""
        wanted = set(uris)
        return [
            t for t in self.triples
            if t.subject_uri in wanted or t.object_uri in wanted
        ]

    def triple_by_id(self, triple_id: str) -> TemplateTriple:
        for t in self.triples:
            if t.triple_id == triple_id:
                return t
        raise KeyError(triple_id)
