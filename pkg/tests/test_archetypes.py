"""Archetypal question set: ranks, phrasings, order validation."""

from __future__ import annotations

import pytest

from espace.errors import ConfigurationError
from espace.overview.archetypes import ARCHETYPE_NAMES, archetype_set


def test_default_specificity_order():
    archetypes = archetype_set()
    assert [a.name for a in archetypes] == list(ARCHETYPE_NAMES)
    assert [a.specificity_rank for a in archetypes] == [1, 2, 3, 4, 5, 6, 7]
    assert archetypes[0].name == "why"
    assert archetypes[-1].name == "what"


def test_question_texts():
    texts = {a.name: a.question_text for a in archetype_set()}
    assert texts == {
        "why": "why",
        "what-for": "what for",
        "how": "how",
        "who": "who",
        "where": "where",
        "when": "when",
        "what": "what",
    }


def test_custom_order_reassigns_ranks():
    order = ("what", "why", "what-for", "how", "who", "where", "when")
    archetypes = archetype_set(order)
    ranks = {a.name: a.specificity_rank for a in archetypes}
    assert ranks["what"] == 1 and ranks["when"] == 7


@pytest.mark.parametrize(
    "order",
    [("why",), ("why",) * 7, ("why", "maybe", "how", "who", "where", "when", "what")],
)
def test_invalid_orders_rejected(order):
    with pytest.raises(ConfigurationError):
        archetype_set(order)


def test_graph_is_immutable(fixture_snapshot):
    kg = fixture_snapshot.kg
    with pytest.raises(TypeError):
        kg.concepts["es:new"] = None  # type: ignore[index]
    with pytest.raises(AttributeError):
        kg.triples = ()  # type: ignore[misc]
