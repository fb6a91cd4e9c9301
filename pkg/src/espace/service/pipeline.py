"""End-to-end ingestion: corpus -> graph -> taxonomy -> centrality."""

from __future__ import annotations

import json
import logging
from pathlib import Path

from espace.annotation.centrality import compute_betweenness
from espace.config import PipelineConfig
from espace.errors import EmptyCorpusError
from espace.kg.corpus import ingest_corpus
from espace.kg.extraction import build_graph
from espace.service.ports_registry import Ports, build_ports
from espace.service.snapshot import EsSnapshot, corpus_content_hash
from espace.taxonomy.fca import build_formal_context, fca_lattice
from espace.taxonomy.forest import Alignment, TaxonomyForest, align_concepts, extract_forest

log = logging.getLogger(__name__)


def read_manifest(path: str | Path) -> list[tuple[str, str]]:
    """Load (title, text) pairs from a manifest.

    The manifest is a JSON list of {"path", "title"} objects; paths are
    resolved relative to the manifest file. Unreadable files produce a
    warning and are skipped.
    """
    manifest_path = Path(path)
    entries = json.loads(manifest_path.read_text("utf-8"))
    documents: list[tuple[str, str]] = []
    for entry in entries:
        doc_path = Path(entry["path"])
        if not doc_path.is_absolute():
            doc_path = manifest_path.parent / doc_path
        title = entry.get("title", doc_path.stem)
        try:
            documents.append((title, doc_path.read_text("utf-8")))
        except OSError as exc:
            log.warning("skipping unreadable document %s: %s", doc_path, exc)
    if not documents:
        raise EmptyCorpusError(f"manifest {path} lists no readable documents")
    return documents


def run_pipeline(
    raw_documents: list[tuple[str, str]],
    config: PipelineConfig,
    ports: Ports | None = None,
) -> EsSnapshot:
    ports = ports or build_ports(config)
    corpus = ingest_corpus(raw_documents, ports.parser)
    kg = build_graph(corpus, ports.parser, namespace=config.namespace)

    alignment = align_concepts(
        kg, ports.wsd, sentence_text=lambda sid: corpus.sentence(sid).text
    )
    if alignment.senses:
        ctx = build_formal_context(alignment)
        lattice = fca_lattice(ctx, max_objects=config.fca_max_objects)
        forest = extract_forest(lattice, alignment, sense_lemma=ports.lexicon.sense_lemma)
    else:
        forest = TaxonomyForest(trees=())
        alignment = Alignment(senses={}, misses=alignment.misses)

    centrality = compute_betweenness(kg)
    return EsSnapshot(
        corpus=corpus,
        kg=kg,
        forest=forest,
        alignment=alignment,
        centrality=centrality,
        config=config,
        corpus_hash=corpus_content_hash(raw_documents),
    )
