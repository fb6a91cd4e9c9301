"""Pertinence scoring and exclusive archetype assignment.

A candidate snippet is scored against every archetypal question as the
inner product of the question embedding and the contextualized answer
embedding. Candidates passing the threshold for several archetypes go
to the most specific one only, which keeps the clusters disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from espace.overview.archetypes import ArchetypalQuestion
from espace.ports.embedder import inner_product
from espace.ports.types import DualEncoder


@dataclass(frozen=True)
class Candidate:
    """A scoring unit: realized triple text or one of its subject/object phrases."""

    snippet: str
    paragraph_id: str
    context: str  # source paragraph text
    triple_id: str


@dataclass(frozen=True)
class PertinentAnswer:
    snippet: str
    context_paragraph_id: str
    context: str
    score: float
    triple_id: str


def score_pertinence(
    question: ArchetypalQuestion, snippet: str, context: str, embedder: DualEncoder
) -> float:
    q_vec = embedder.embed_question(question.question_text)
    a_vec = embedder.embed_answer(snippet, context)
    return inner_product(q_vec, a_vec)


def cluster_answers(
    concept_uri: str,
    candidates: list[Candidate],
    archetypes: tuple[ArchetypalQuestion, ...],
    embedder: DualEncoder,
    threshold: float,
) -> dict[str, list[PertinentAnswer]]:
    """Assign each candidate to at most one archetype.

    Candidates below the threshold everywhere are dropped; the rest go
    to the passing archetype with the best (lowest) specificity rank.
    Within a cluster, answers sort by descending score, ties keeping
    triple-id order.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must lie in [0, 1]")
    ranked = sorted(archetypes, key=lambda a: a.specificity_rank)
    clusters: dict[str, list[PertinentAnswer]] = {a.name: [] for a in ranked}
    processed: set[tuple[str, str]] = set()
    for cand in candidates:
        pair = (cand.snippet, cand.paragraph_id)
        if pair in processed:
            continue
        processed.add(pair)
        owner: ArchetypalQuestion | None = None
        owner_score = 0.0
        for arch in ranked:
            score = score_pertinence(arch, cand.snippet, cand.context, embedder)
            if score >= threshold:
                owner, owner_score = arch, score
                break  # most specific passing archetype wins
        if owner is not None:
            clusters[owner.name].append(
                PertinentAnswer(
                    snippet=cand.snippet,
                    context_paragraph_id=cand.paragraph_id,
                    context=cand.context,
                    score=owner_score,
                    triple_id=cand.triple_id,
                )
            )
    for name, answers in clusters.items():
        answers.sort(key=lambda a: (-a.score, a.triple_id))
    return {name: answers for name, answers in clusters.items() if answers}
