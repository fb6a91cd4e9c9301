"""Overview assembly: clusters, summary trees, taxonomy lists, abstract."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from espace.kg.corpus import DocumentCorpus
from espace.kg.extraction import realize_triple
from espace.kg.model import KnowledgeGraph
from espace.overview.archetypes import ArchetypalQuestion
from espace.overview.pertinence import Candidate, PertinentAnswer, cluster_answers
from espace.overview.summary_tree import AnswerLeaf, SummaryNode, build_summary_tree
from espace.ports.types import DualEncoder, Summarizer
from espace.taxonomy.forest import TaxonomyIndex


@dataclass(frozen=True)
class Overview:
    concept_uri: str
    label: str
    abstract: str
    archetypes: Mapping[str, SummaryNode]  # absent key = zero pertinent answers
    superclasses: tuple[str, ...]
    subclasses: tuple[str, ...]


def gather_candidates(
    kg: KnowledgeGraph,
    corpus: DocumentCorpus,
    taxonomy: TaxonomyIndex,
    concept_uri: str,
) -> list[Candidate]:
    """Realized triples of the concept and its subclasses, plus their
    subject/object phrases, deduplicated by (snippet, paragraph)."""
    kg.concept(concept_uri)  # raises MissingConceptError when unknown
    subtree = taxonomy.subtree(concept_uri)
    out: list[Candidate] = []
    seen: set[tuple[str, str]] = set()

    def push(snippet: str, paragraph_id: str, triple_id: str) -> None:
        key = (snippet, paragraph_id)
        if key in seen or not snippet.strip():
            return
        seen.add(key)
        out.append(
            Candidate(
                snippet=snippet,
                paragraph_id=paragraph_id,
                context=corpus.paragraph(paragraph_id).text,
                triple_id=triple_id,
            )
        )

    for triple in kg.triples_touching(subtree):
        push(realize_triple(triple, kg), triple.paragraph_id, triple.triple_id)
        for uri in (triple.subject_uri, triple.object_uri):
            concept = kg.concepts[uri]
            surface = next(
                (o.surface for o in concept.occurrences if o.sentence_id == triple.sentence_id),
                concept.label,
            )
            push(surface, triple.paragraph_id, triple.triple_id)
    return out


def overview_to_dict(ov: Overview) -> dict:
    def node_to_dict(node):
        if isinstance(node, AnswerLeaf):
            return {
                "text": node.text,
                "paragraph_id": node.paragraph_id,
                "score": node.score,
                "triple_id": node.triple_id,
                "snippet": node.snippet,
            }
        return {
            "summary": node.summary,
            "children": [node_to_dict(c) for c in node.children],
        }

    return {
        "concept_uri": ov.concept_uri,
        "label": ov.label,
        "abstract": ov.abstract,
        "archetypes": {name: node_to_dict(tree) for name, tree in ov.archetypes.items()},
        "superclasses": list(ov.superclasses),
        "subclasses": list(ov.subclasses),
    }


class OverviewBuilder:
    """Generates and caches per-concept overviews.

    Results are pure functions of (concept, snapshot, config), so the
    cache key is the concept URI plus the configuration hash.
    """

    def __init__(
        self,
        kg: KnowledgeGraph,
        corpus: DocumentCorpus,
        taxonomy: TaxonomyIndex,
        archetypes: tuple[ArchetypalQuestion, ...],
        embedder: DualEncoder,
        summarizer: Summarizer,
        threshold: float,
        fanout: int,
        summary_budget: int,
        abstract_budget: int = 200,
        config_hash: str = "",
    ):
        self.kg = kg
        self.corpus = corpus
        self.taxonomy = taxonomy
        self.archetypes = archetypes
        self.embedder = embedder
        self.summarizer = summarizer
        self.threshold = threshold
        self.fanout = fanout
        self.summary_budget = summary_budget
        self.abstract_budget = abstract_budget
        self.config_hash = config_hash
        self._cache: dict[tuple[str, str], Overview] = {}

    def generate(self, concept_uri: str) -> Overview:
        key = (concept_uri, self.config_hash)
        if key in self._cache:
            return self._cache[key]
        candidates = gather_candidates(self.kg, self.corpus, self.taxonomy, concept_uri)
        clusters = cluster_answers(
            concept_uri, candidates, self.archetypes, self.embedder, self.threshold
        )
        trees = {
            name: build_summary_tree(answers, self.summarizer, self.fanout, self.summary_budget)
            for name, answers in clusters.items()
        }
        ordered = tuple(sorted(self.archetypes, key=lambda a: a.specificity_rank))
        archetypes = {a.name: trees[a.name] for a in ordered if a.name in trees}

        all_answers: list[PertinentAnswer] = [a for answers in clusters.values() for a in answers]
        abstract = ""
        if all_answers:
            top = min(all_answers, key=lambda a: (-a.score, a.triple_id))
            abstract = self.summarizer.summarize(top.snippet, self.abstract_budget)

        ov = Overview(
            concept_uri=concept_uri,
            label=self.kg.concepts[concept_uri].label,
            abstract=abstract,
            archetypes=archetypes,
            superclasses=tuple(self.taxonomy.superclasses(concept_uri)),
            subclasses=tuple(self.taxonomy.subclasses(concept_uri)),
        )
        self._cache[key] = ov
        return ov
