"""Betweenness centrality vs an all-pairs path-counting oracle."""

from __future__ import annotations

import random
from collections import deque

import pytest

from espace.annotation.centrality import betweenness, compute_betweenness, concept_adjacency


def bfs_counts(adj, source):
    dist = {source: 0}
    sigma = {source: 1}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
    return dist, sigma


def oracle_betweenness(adj):
    """Independent oracle: sigma(s,v)*sigma(v,t)/sigma(s,t) summed over pairs."""
    nodes = sorted(adj)
    dist = {}
    sigma = {}
    for s in nodes:
        dist[s], sigma[s] = bfs_counts(adj, s)
    out = {v: 0.0 for v in nodes}
    for i, s in enumerate(nodes):
        for t in nodes[i + 1:]:
            if t not in dist[s]:
                continue
            d_st = dist[s][t]
            total = sigma[s][t]
            for v in nodes:
                if v in (s, t) or v not in dist[s] or v not in dist[t]:
                    continue
                if dist[s][v] + dist[t][v] == d_st:
                    out[v] += sigma[s][v] * sigma[t][v] / total
    return out


def random_graph(rng, max_nodes=50):
    n = rng.randint(2, max_nodes)
    p = rng.choice([0.05, 0.1, 0.2, 0.4])
    adj = {f"n{i}": set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[f"n{i}"].add(f"n{j}")
                adj[f"n{j}"].add(f"n{i}")
    return {v: sorted(ws) for v, ws in adj.items()}


def test_star_graph():
    adj = {"hub": ["l1", "l2", "l3", "l4"]}
    for leaf in ("l1", "l2", "l3", "l4"):
        adj[leaf] = ["hub"]
    result = betweenness(adj)
    assert result["hub"] == pytest.approx(6.0)  # C(4,2) leaf pairs
    for leaf in ("l1", "l2", "l3", "l4"):
        assert result[leaf] == 0.0


def test_path_graph():
    adj = {"a": ["b"], "b": ["a", "c"], "c": ["b"]}
    result = betweenness(adj)
    assert result["b"] == pytest.approx(1.0)
    assert result["a"] == 0.0 and result["c"] == 0.0


def test_empty_graph():
    assert betweenness({}) == {}


@pytest.mark.parametrize("seed", range(25))
def test_random_graphs_match_oracle(seed):
    adj = random_graph(random.Random(seed), max_nodes=30)
    got = betweenness(adj)
    expected = oracle_betweenness(adj)
    for v in adj:
        assert got[v] == pytest.approx(expected[v], abs=1e-9), v


def test_concept_graph_from_fixture(fixture_snapshot):
    adj = concept_adjacency(fixture_snapshot.kg)
    assert set(adj) == set(fixture_snapshot.kg.concepts)
    for v, neighbors in adj.items():
        for w in neighbors:
            assert v in adj[w], "undirected"
        assert v not in neighbors, "no self loops"
    result = compute_betweenness(fixture_snapshot.kg)
    assert result == fixture_snapshot.centrality
    assert all(c >= 0.0 for c in result.values())
    assert any(c > 0.0 for c in result.values())
