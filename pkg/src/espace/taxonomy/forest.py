"""Taxonomy forest on top of the concept lattice.

Concepts aligned to lexical senses become FCA objects; the lattice is
then cut into trees: when every object shares some attribute the top
node roots a single tree, otherwise each lower cover of the top roots
its own. Within a tree, a concept's parent is the concept with the
smallest object-concept extent strictly containing its own, which
follows extent containment and is acyclic by construction. Tree roots
are labeled with the most abstract shared hypernym (chain-position
order, lexicographic tie-break).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from espace.errors import MissingConceptError
from espace.kg.model import KnowledgeGraph
from espace.ports.types import SenseEntry, WordSenseDisambiguator
from espace.taxonomy.fca import ConceptLattice


@dataclass(frozen=True)
class Alignment:
    senses: Mapping[str, SenseEntry]  # concept uri -> chosen sense
    misses: tuple[str, ...]


@dataclass(frozen=True)
class TaxonomyTree:
    root_label: str
    members: tuple[str, ...]
    edges: Mapping[str, str]  # child uri -> parent uri; roots absent


@dataclass(frozen=True)
class TaxonomyForest:
    trees: tuple[TaxonomyTree, ...]

    def tree_of(self, uri: str) -> TaxonomyTree | None:
        for tree in self.trees:
            if uri in tree.members:
                return tree
        return None


def align_concepts(
    kg: KnowledgeGraph,
    wsd: WordSenseDisambiguator,
    sentence_text: Callable[[str], str] | None = None,
) -> Alignment:
    """Map each concept to one lexical sense via the WSD port.

    Disambiguation context is one representative source sentence (the
    first occurrence); concepts the lexicon does not know end up in the
    miss list and stay outside the forest.
    """
    senses: dict[str, SenseEntry] = {}
    misses: list[str] = []
    for uri in sorted(kg.concepts):
        concept = kg.concepts[uri]
        context = ""
        if sentence_text is not None and concept.occurrences:
            context = sentence_text(concept.occurrences[0].sentence_id)
        sense = wsd.disambiguate(concept.label, context)
        if sense is None:
            misses.append(uri)
        else:
            senses[uri] = sense
    return Alignment(senses=dict(senses), misses=tuple(misses))


def _default_sense_lemma(sense_id: str) -> str:
    head = sense_id.split(".", 1)[0]
    return head.replace("_", " ")


def _abstractness_order(alignment: Alignment) -> dict[str, int]:
    """Position of each sense in hypernym chains; larger = more abstract."""
    depth: dict[str, int] = {}
    for sense in alignment.senses.values():
        chain = (sense.sense_id,) + sense.hypernyms
        for pos, sid in enumerate(chain):
            depth[sid] = max(depth.get(sid, 0), pos)
    return depth


def extract_forest(
    lattice: ConceptLattice,
    alignment: Alignment,
    sense_lemma: Callable[[str], str] = _default_sense_lemma,
) -> TaxonomyForest:
    ctx = lattice.context
    if not ctx.objects:
        return TaxonomyForest(trees=())
    depth = _abstractness_order(alignment)

    def most_abstract(attr_indexes) -> str:
        if not attr_indexes:
            return ""
        sids = [ctx.attributes[i] for i in attr_indexes]
        top_depth = max(depth.get(s, 0) for s in sids)
        # chain position wins; ties fall back to lexicographically first
        tied = sorted(s for s in sids if depth.get(s, 0) == top_depth)
        return sense_lemma(tied[0])

    top = lattice.nodes[lattice.top_index]
    if top.intent:
        root_nodes = [lattice.top_index]
    else:
        root_nodes = lattice.lower_covers(lattice.top_index)

    roots = sorted(
        root_nodes,
        key=lambda i: (most_abstract(lattice.nodes[i].intent), sorted(lattice.nodes[i].extent)),
    )

    # gamma(u): objects sharing all of u's attributes (object-concept extent)
    obj_index = {o: i for i, o in enumerate(ctx.objects)}
    gamma: dict[str, int] = {}
    for uri in ctx.objects:
        row = ctx.rows[obj_index[uri]]
        gamma[uri] = ctx.extent_of(row)

    assigned: set[str] = set()
    trees: list[TaxonomyTree] = []
    for r in roots:
        node = lattice.nodes[r]
        members = [
            ctx.objects[o] for o in sorted(node.extent)
            if ctx.objects[o] not in assigned
        ]
        if not members:
            continue
        assigned.update(members)
        members.sort()
        edges: dict[str, str] = {}
        for child in members:
            child_extent = gamma[child]
            best_parent = None
            best_size = None
            for parent in members:
                if parent == child:
                    continue
                p_extent = gamma[parent]
                strictly_contains = (
                    p_extent & child_extent == child_extent and p_extent != child_extent
                )
                if not strictly_contains:
                    continue
                size = bin(p_extent).count("1")
                if best_size is None or size < best_size or (
                    size == best_size and parent < best_parent
                ):
                    best_parent, best_size = parent, size
            if best_parent is not None:
                edges[child] = best_parent
        trees.append(
            TaxonomyTree(
                root_label=most_abstract(node.intent),
                members=tuple(members),
                edges=dict(sorted(edges.items())),
            )
        )
    return TaxonomyForest(trees=tuple(trees))


class TaxonomyIndex:
    """Transitive super/sub queries over forest edges plus composition edges."""

    def __init__(self, kg: KnowledgeGraph, forest: TaxonomyForest):
        self.kg = kg
        self.forest = forest
        self._up: dict[str, set[str]] = {}
        self._down: dict[str, set[str]] = {}
        pairs: set[tuple[str, str]] = set(kg.subclass_edges)
        for tree in forest.trees:
            for child, parent in tree.edges.items():
                pairs.add((child, parent))
        for sub, sup in pairs:
            self._up.setdefault(sub, set()).add(sup)
            self._down.setdefault(sup, set()).add(sub)

    def _check(self, uri: str) -> None:
        if uri not in self.kg.concepts:
            raise MissingConceptError(uri)

    def _bfs(self, uri: str, table: dict[str, set[str]]) -> list[str]:
        out: list[str] = []
        seen = {uri}
        frontier = [uri]
        while frontier:
            layer: list[str] = []
            for node in frontier:
                for nxt in sorted(table.get(node, ())):
                    if nxt not in seen:
                        seen.add(nxt)
                        layer.append(nxt)
            layer.sort()
            out.extend(layer)
            frontier = layer
        return out

    def superclasses(self, uri: str) -> list[str]:
        self._check(uri)
        return self._bfs(uri, self._up)

    def subclasses(self, uri: str) -> list[str]:
        self._check(uri)
        return self._bfs(uri, self._down)

    def subtree(self, uri: str) -> list[str]:
        """The concept itself plus everything reachable downward."""
        self._check(uri)
        return [uri] + self.subclasses(uri)
