"""Formal concept analysis over hypernym attributes.

The lattice is enumerated with the next-closure algorithm in lectic
order over attribute index sets (attribute bitmasks keep the closure
operator cheap). Contexts above the configured object bound are
rejected because concept lattices grow exponentially in the worst case.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from espace.errors import EmptyContextError, SizeLimitError

DEFAULT_MAX_OBJECTS = 5000


@dataclass(frozen=True)
class FormalContext:
    """Objects x attributes incidence; rows are attribute bitmasks."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[int, ...]  # rows[o] bit a set <=> object o has attribute a

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate objects")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("duplicate attributes")
        if len(self.rows) != len(self.objects):
            raise ValueError("incidence row count mismatch")

    def has(self, obj_index: int, attr_index: int) -> bool:
        return bool(self.rows[obj_index] >> attr_index & 1)

    @staticmethod
    def from_pairs(
        objects: list[str], attributes: list[str], pairs: set[tuple[str, str]]
    ) -> "FormalContext":
        attr_index = {a: i for i, a in enumerate(attributes)}
        rows = []
        for o in objects:
            mask = 0
            for a, i in attr_index.items():
                if (o, a) in pairs:
                    mask |= 1 << i
            rows.append(mask)
        return FormalContext(tuple(objects), tuple(attributes), tuple(rows))

    # derivation operators on bitmask encodings
    def extent_of(self, intent_mask: int) -> int:
        extent = 0
        for o, row in enumerate(self.rows):
            if row & intent_mask == intent_mask:
                extent |= 1 << o
        return extent

    def intent_of(self, extent_mask: int) -> int:
        full = (1 << len(self.attributes)) - 1
        intent = full
        for o in range(len(self.objects)):
            if extent_mask >> o & 1:
                intent &= self.rows[o]
        return intent

    def close_intent(self, intent_mask: int) -> int:
        return self.intent_of(self.extent_of(intent_mask))


@dataclass(frozen=True)
class FormalConcept:
    extent: frozenset[int]  # object indexes
    intent: frozenset[int]  # attribute indexes


@dataclass(frozen=True)
class ConceptLattice:
    context: FormalContext
    nodes: tuple[FormalConcept, ...]
    covers: frozenset[tuple[int, int]] = field(default=frozenset())  # (lower, upper)

    @property
    def top_index(self) -> int:
        return max(range(len(self.nodes)), key=lambda i: (len(self.nodes[i].extent), i))

    @property
    def bottom_index(self) -> int:
        return min(range(len(self.nodes)), key=lambda i: (len(self.nodes[i].extent), -i))

    def upper_covers(self, index: int) -> list[int]:
        return sorted(u for l, u in self.covers if l == index)

    def lower_covers(self, index: int) -> list[int]:
        return sorted(l for l, u in self.covers if u == index)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def next_closure(ctx: FormalContext, intent_mask: int) -> int | None:
    """Smallest closed intent lectically greater than `intent_mask`."""
    m = len(ctx.attributes)
    a = intent_mask
    for i in reversed(range(m)):
        bit = 1 << i
        if a & bit:
            a &= ~bit
        else:
            b = ctx.close_intent(a | bit)
            new = b & ~a
            # lectic condition: nothing new below position i
            if not new & (bit - 1):
                return b
    return None


def fca_lattice(
    ctx: FormalContext, max_objects: int = DEFAULT_MAX_OBJECTS
) -> ConceptLattice:
    """All formal concepts of `ctx` with their covering order."""
    if len(ctx.objects) > max_objects:
        raise SizeLimitError(
            f"context has {len(ctx.objects)} objects, bound is {max_objects}"
        )
    intents: list[int] = []
    current = ctx.close_intent(0)
    intents.append(current)
    while True:
        current = next_closure(ctx, current)
        if current is None:
            break
        intents.append(current)

    concepts = [
        FormalConcept(
            extent=_mask_to_set(ctx.extent_of(intent)),
            intent=_mask_to_set(intent),
        )
        for intent in intents
    ]
    # deterministic node order: top (largest extent) first
    concepts.sort(key=lambda c: (-len(c.extent), sorted(c.extent), sorted(c.intent)))

    covers: set[tuple[int, int]] = set()
    n = len(concepts)
    for i in range(n):
        for j in range(n):
            if i == j or not concepts[i].extent < concepts[j].extent:
                continue
            immediate = True
            for k in range(n):
                if k in (i, j):
                    continue
                if concepts[i].extent < concepts[k].extent < concepts[j].extent:
                    immediate = False
                    break
            if immediate:
                covers.add((i, j))
    return ConceptLattice(context=ctx, nodes=tuple(concepts), covers=frozenset(covers))


def build_formal_context(alignment) -> FormalContext:
    """Context with aligned concepts as objects and hypernyms as attributes.

    Each object is incident to its own sense and to every hypernym in
    its chain.
    """
    if not alignment.senses:
        raise EmptyContextError("alignment maps no concepts")
    objects = sorted(alignment.senses)
    attr_set: set[str] = set()
    for sense in alignment.senses.values():
        attr_set.add(sense.sense_id)
        attr_set.update(sense.hypernyms)
    attributes = sorted(attr_set)
    pairs: set[tuple[str, str]] = set()
    for uri, sense in alignment.senses.items():
        pairs.add((uri, sense.sense_id))
        for h in sense.hypernyms:
            pairs.add((uri, h))
    return FormalContext.from_pairs(objects, attributes, pairs)
