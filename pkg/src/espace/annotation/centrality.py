"""Exact betweenness centrality over the concept graph.

The concept graph is undirected and unweighted: nodes are concept URIs,
edges are the subject-object pairs of the template triples. Brandes'
algorithm accumulates pair dependencies in O(V*E); the two-sided count
is halved so each unordered pair contributes once.
"""

from __future__ import annotations

from collections import deque

from espace.kg.model import KnowledgeGraph


def concept_adjacency(kg: KnowledgeGraph) -> dict[str, list[str]]:
    """Undirected simple graph over all concepts (isolated ones included)."""
    adj: dict[str, set[str]] = {uri: set() for uri in kg.concepts}
    for t in kg.triples:
        if t.subject_uri == t.object_uri:
            continue
        adj[t.subject_uri].add(t.object_uri)
        adj[t.object_uri].add(t.subject_uri)
    return {uri: sorted(neighbors) for uri, neighbors in sorted(adj.items())}


def betweenness(adj: dict[str, list[str]]) -> dict[str, float]:
    """Brandes' exact algorithm on an adjacency mapping."""
    centrality = {v: 0.0 for v in adj}
    for source in adj:
        stack: list[str] = []
        predecessors: dict[str, list[str]] = {v: [] for v in adj}
        sigma = {v: 0 for v in adj}
        sigma[source] = 1
        dist = {v: -1 for v in adj}
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)
        delta = {v: 0.0 for v in adj}
        while stack:
            w = stack.pop()
            for v in predecessors[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                centrality[w] += delta[w]
    return {v: c / 2.0 for v, c in centrality.items()}


def compute_betweenness(kg: KnowledgeGraph) -> dict[str, float]:
    return betweenness(concept_adjacency(kg))
