"""The seven archetypal questions and their specificity order."""

from __future__ import annotations

from dataclasses import dataclass

from espace.errors import ConfigurationError

ARCHETYPE_NAMES = ("why", "what-for", "how", "who", "where", "when", "what")

_QUESTION_TEXT = {
    "why": "why",
    "what-for": "what for",
    "how": "how",
    "who": "who",
    "where": "where",
    "when": "when",
    "what": "what",
}


@dataclass(frozen=True)
class ArchetypalQuestion:
    name: str
    specificity_rank: int  # 1 = most specific
    question_text: str


def archetype_set(order: tuple[str, ...] = ARCHETYPE_NAMES) -> tuple[ArchetypalQuestion, ...]:
    """Build the question set with ranks following `order` (most specific first)."""
    if sorted(order) != sorted(ARCHETYPE_NAMES):
        raise ConfigurationError(
            f"archetype order must be a permutation of {ARCHETYPE_NAMES}"
        )
    return tuple(
        ArchetypalQuestion(name=name, specificity_rank=rank, question_text=_QUESTION_TEXT[name])
        for rank, name in enumerate(order, start=1)
    )
