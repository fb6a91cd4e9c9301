"""Expandable summary trees over ranked answers.

Leaves are answer contexts in pertinence order; each round groups k
consecutive nodes left to right under a parent carrying a summary of
the children's concatenated content, until a single root remains. The
shape is therefore the unique left-packed k-ary tree over the leaf
order, and reading leaves left to right reproduces the ranking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from espace.overview.pertinence import PertinentAnswer
from espace.ports.types import Summarizer


@dataclass(frozen=True)
class AnswerLeaf:
    text: str  # the answer context (source paragraph)
    paragraph_id: str
    score: float
    triple_id: str
    snippet: str


@dataclass(frozen=True)
class SummaryNode:
    summary: str
    children: tuple[Union["SummaryNode", AnswerLeaf], ...]


def _content(node: SummaryNode | AnswerLeaf) -> str:
    return node.text if isinstance(node, AnswerLeaf) else node.summary


def build_summary_tree(
    answers: list[PertinentAnswer],
    summarizer: Summarizer,
    fanout: int,
    budget: int,
) -> SummaryNode:
    if fanout < 2:
        raise ValueError("fanout must be at least 2")
    if not answers:
        raise ValueError("cannot build a summary tree over zero answers")
    level: list[SummaryNode | AnswerLeaf] = [
        AnswerLeaf(
            text=a.context,
            paragraph_id=a.context_paragraph_id,
            score=a.score,
            triple_id=a.triple_id,
            snippet=a.snippet,
        )
        for a in answers
    ]
    while True:
        parents: list[SummaryNode | AnswerLeaf] = []
        for i in range(0, len(level), fanout):
            group = level[i:i + fanout]
            joined = " ".join(_content(n) for n in group)
            parents.append(
                SummaryNode(summary=summarizer.summarize(joined, budget), children=tuple(group))
            )
        if len(parents) == 1:
            return parents[0]
        level = parents


def leaf_texts(node: SummaryNode | AnswerLeaf) -> list[str]:
    """Leaf contents left to right."""
    if isinstance(node, AnswerLeaf):
        return [node.text]
    out: list[str] = []
    for child in node.children:
        out.extend(leaf_texts(child))
    return out


def tree_depth(node: SummaryNode | AnswerLeaf) -> int:
    """Edges on the longest root-to-leaf path."""
    if isinstance(node, AnswerLeaf):
        return 0
    return 1 + max(tree_depth(c) for c in node.children)
