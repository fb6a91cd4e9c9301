"""FCA lattice vs brute-force enumeration of closed pairs."""

from __future__ import annotations

import random

import pytest

from espace.errors import EmptyContextError, SizeLimitError
from espace.ports.types import SenseEntry
from espace.taxonomy.fca import (
    FormalConcept,
    FormalContext,
    build_formal_context,
    fca_lattice,
)
from espace.taxonomy.forest import Alignment


def brute_force_concepts(ctx: FormalContext) -> set[tuple[frozenset, frozenset]]:
    """Oracle: closures of every object subset, kept as (extent, intent) pairs."""
    n = len(ctx.objects)
    out = set()
    for extent_mask in range(1 << n):
        intent = ctx.intent_of(extent_mask)
        extent = ctx.extent_of(intent)
        ext_set = frozenset(i for i in range(n) if extent >> i & 1)
        int_set = frozenset(i for i in range(len(ctx.attributes)) if intent >> i & 1)
        out.add((ext_set, int_set))
    return out


def brute_force_covers(
    concepts: list[FormalConcept],
) -> set[tuple[int, int]]:
    covers = set()
    for i, a in enumerate(concepts):
        for j, b in enumerate(concepts):
            if not a.extent < b.extent:
                continue
            if any(
                a.extent < c.extent < b.extent
                for k, c in enumerate(concepts)
                if k not in (i, j)
            ):
                continue
            covers.add((i, j))
    return covers


def random_context(rng: random.Random, max_side: int = 10) -> FormalContext:
    n = rng.randint(1, max_side)
    m = rng.randint(1, max_side)
    objects = [f"o{i}" for i in range(n)]
    attributes = [f"a{j}" for j in range(m)]
    rows = tuple(rng.getrandbits(m) for _ in range(n))
    return FormalContext(tuple(objects), tuple(attributes), rows)


@pytest.mark.parametrize("seed", range(30))
def test_lattice_equals_brute_force(seed):
    ctx = random_context(random.Random(seed))
    lattice = fca_lattice(ctx)
    got = {(c.extent, c.intent) for c in lattice.nodes}
    assert got == brute_force_concepts(ctx)
    assert lattice.covers == brute_force_covers(list(lattice.nodes))


@pytest.mark.parametrize("seed", range(20))
def test_closure_property(seed):
    """Every node is closed: extent'' == extent and intent'' == intent."""
    ctx = random_context(random.Random(1000 + seed), max_side=8)
    for node in fca_lattice(ctx).nodes:
        extent_mask = sum(1 << i for i in node.extent)
        intent_mask = sum(1 << i for i in node.intent)
        assert ctx.intent_of(extent_mask) == intent_mask
        assert ctx.extent_of(intent_mask) == extent_mask


def test_empty_incidence_context():
    ctx = FormalContext(("o0", "o1", "o2"), ("a0", "a1"), (0, 0, 0))
    lattice = fca_lattice(ctx)
    assert len(lattice.nodes) == 2
    top = lattice.nodes[lattice.top_index]
    bottom = lattice.nodes[lattice.bottom_index]
    assert top.extent == frozenset({0, 1, 2}) and top.intent == frozenset()
    assert bottom.extent == frozenset() and bottom.intent == frozenset({0, 1})


def test_full_incidence_single_node():
    ctx = FormalContext(("o0", "o1"), ("a0", "a1"), (0b11, 0b11))
    lattice = fca_lattice(ctx)
    assert len(lattice.nodes) == 1


def test_unique_top_and_bottom():
    ctx = random_context(random.Random(7))
    lattice = fca_lattice(ctx)
    extents = [c.extent for c in lattice.nodes]
    top = lattice.nodes[lattice.top_index].extent
    bottom = lattice.nodes[lattice.bottom_index].extent
    assert all(e <= top for e in extents)
    assert all(bottom <= e for e in extents)


def test_size_limit():
    ctx = FormalContext(("o0", "o1", "o2"), ("a0",), (0, 0, 1))
    with pytest.raises(SizeLimitError):
        fca_lattice(ctx, max_objects=2)


def test_empty_alignment_rejected():
    with pytest.raises(EmptyContextError):
        build_formal_context(Alignment(senses={}, misses=()))


def test_context_from_alignment_includes_own_sense():
    alignment = Alignment(
        senses={
            "es:dog": SenseEntry("dog.n.01", "dog", ("canine.n.01", "mammal.n.01", "animal.n.01")),
            "es:cat": SenseEntry("cat.n.01", "cat", ("feline.n.01", "mammal.n.01", "animal.n.01")),
        },
        misses=(),
    )
    ctx = build_formal_context(alignment)
    assert set(ctx.attributes) == {
        "dog.n.01", "canine.n.01", "mammal.n.01", "animal.n.01",
        "cat.n.01", "feline.n.01",
    }
    dog_row = ctx.rows[ctx.objects.index("es:dog")]
    assert ctx.has(ctx.objects.index("es:dog"), ctx.attributes.index("dog.n.01"))
    for shared in ("mammal.n.01", "animal.n.01"):
        idx = ctx.attributes.index(shared)
        assert all(ctx.has(o, idx) for o in range(len(ctx.objects)))
    assert dog_row != ctx.rows[ctx.objects.index("es:cat")]


def test_identical_chains_identical_rows():
    alignment = Alignment(
        senses={
            "es:a": SenseEntry("x.n.01", "x", ("y.n.01",)),
            "es:b": SenseEntry("x.n.01", "x", ("y.n.01",)),
        },
        misses=(),
    )
    ctx = build_formal_context(alignment)
    assert ctx.rows[0] == ctx.rows[1]


def test_single_object_context():
    alignment = Alignment(
        senses={"es:a": SenseEntry("x.n.01", "x", ("y.n.01",))}, misses=()
    )
    ctx = build_formal_context(alignment)
    assert len(ctx.objects) == 1
    lattice = fca_lattice(ctx)
    assert lattice.nodes[lattice.top_index].extent == frozenset({0})


def test_monotonicity_under_attribute_addition():
    """Closed extents stay closed when a new attribute column arrives."""
    rng = random.Random(42)
    for _ in range(20):
        ctx = random_context(rng, max_side=6)
        before = {c.extent for c in fca_lattice(ctx).nodes}
        new_col = rng.getrandbits(len(ctx.objects))
        grown = FormalContext(
            ctx.objects,
            ctx.attributes + ("a_new",),
            tuple(
                row | ((new_col >> o & 1) << len(ctx.attributes))
                for o, row in enumerate(ctx.rows)
            ),
        )
        after = {c.extent for c in fca_lattice(grown).nodes}
        assert before <= after
