"""Snapshot persistence for the explanatory space.

A snapshot directory holds everything the service needs to answer
requests: the corpus, the knowledge graph (line-delimited JSON records,
one object per concept/triple/edge), the taxonomy forest, the sense
alignment, the centrality index, and the configuration. All files are
written with canonical JSON (sorted keys, fixed separators), so
identical inputs produce byte-identical snapshots. Format version:
``es-snapshot/1``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from espace.config import PipelineConfig
from espace.kg.corpus import Document, DocumentCorpus, Paragraph, Sentence
from espace.kg.model import Concept, KnowledgeGraph, Occurrence, TemplateTriple
from espace.ports.types import SenseEntry
from espace.taxonomy.forest import Alignment, TaxonomyForest, TaxonomyTree

FORMAT_VERSION = "es-snapshot/1"

CORE_FILES = (
    "snapshot.json",
    "config.json",
    "corpus.json",
    "concepts.jsonl",
    "triples.jsonl",
    "edges.jsonl",
    "forest.jsonl",
    "alignment.json",
    "centrality.json",
)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def corpus_content_hash(raw_documents: list[tuple[str, str]]) -> str:
    payload = _dumps([[title, text] for title, text in raw_documents])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class EsSnapshot:
    corpus: DocumentCorpus
    kg: KnowledgeGraph
    forest: TaxonomyForest
    alignment: Alignment
    centrality: dict[str, float]
    config: PipelineConfig
    corpus_hash: str

    @property
    def config_hash(self) -> str:
        return self.config.config_hash()


# -- serialization ---------------------------------------------------------


def _corpus_to_dict(corpus: DocumentCorpus) -> dict:
    return {
        "documents": [
            {
                "doc_id": d.doc_id,
                "title": d.title,
                "paragraphs": [
                    {
                        "paragraph_id": p.paragraph_id,
                        "text": p.text,
                        "sentences": [
                            {
                                "sentence_id": s.sentence_id,
                                "start": s.start,
                                "end": s.end,
                                "text": s.text,
                            }
                            for s in p.sentences
                        ],
                    }
                    for p in d.paragraphs
                ],
            }
            for d in corpus.documents
        ]
    }


def _corpus_from_dict(d: dict) -> DocumentCorpus:
    documents = []
    for doc in d["documents"]:
        paragraphs = []
        for p in doc["paragraphs"]:
            sentences = tuple(
                Sentence(
                    sentence_id=s["sentence_id"],
                    paragraph_id=p["paragraph_id"],
                    start=s["start"],
                    end=s["end"],
                    text=s["text"],
                )
                for s in p["sentences"]
            )
            paragraphs.append(Paragraph(p["paragraph_id"], p["text"], sentences))
        documents.append(Document(doc["doc_id"], doc["title"], tuple(paragraphs)))
    return DocumentCorpus(tuple(documents))


def save_snapshot(snapshot: EsSnapshot, directory: str | Path) -> Path:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)

    (out / "config.json").write_text(
        _dumps({"config": snapshot.config.to_dict(), "config_hash": snapshot.config_hash})
        + "\n",
        encoding="utf-8",
    )
    (out / "corpus.json").write_text(
        _dumps(_corpus_to_dict(snapshot.corpus)) + "\n", encoding="utf-8"
    )

    kg = snapshot.kg
    with open(out / "concepts.jsonl", "w", encoding="utf-8") as fh:
        for uri in sorted(kg.concepts):
            c = kg.concepts[uri]
            fh.write(
                _dumps(
                    {
                        "uri": c.uri,
                        "label": c.label,
                        "tokens": [list(t) for t in c.tokens],
                        "occurrences": [
                            {
                                "sentence_id": o.sentence_id,
                                "start": o.start,
                                "end": o.end,
                                "surface": o.surface,
                            }
                            for o in c.occurrences
                        ],
                    }
                )
                + "\n"
            )
    with open(out / "triples.jsonl", "w", encoding="utf-8") as fh:
        for t in kg.triples:
            fh.write(
                _dumps(
                    {
                        "id": t.triple_id,
                        "subject_uri": t.subject_uri,
                        "template": t.template,
                        "object_uri": t.object_uri,
                        "sentence_id": t.sentence_id,
                        "paragraph_id": t.paragraph_id,
                    }
                )
                + "\n"
            )
    with open(out / "edges.jsonl", "w", encoding="utf-8") as fh:
        for sub, sup in sorted(kg.subclass_edges):
            fh.write(_dumps({"kind": "subclass", "sub": sub, "super": sup}) + "\n")
        for ref, sid in sorted(kg.source_edges):
            fh.write(_dumps({"kind": "source", "ref": ref, "sentence_id": sid}) + "\n")

    with open(out / "forest.jsonl", "w", encoding="utf-8") as fh:
        for tree_index, tree in enumerate(snapshot.forest.trees):
            for member in tree.members:
                fh.write(
                    _dumps(
                        {
                            "child_uri": member,
                            "parent_uri": tree.edges.get(member),
                            "tree_root_label": tree.root_label,
                            "tree": tree_index,
                        }
                    )
                    + "\n"
                )

    (out / "alignment.json").write_text(
        _dumps(
            {
                "senses": {
                    uri: {
                        "sense_id": s.sense_id,
                        "lemma": s.lemma,
                        "hypernyms": list(s.hypernyms),
                    }
                    for uri, s in sorted(snapshot.alignment.senses.items())
                },
                "misses": list(snapshot.alignment.misses),
            }
        )
        + "\n",
        encoding="utf-8",
    )
    (out / "centrality.json").write_text(
        _dumps(dict(sorted(snapshot.centrality.items()))) + "\n", encoding="utf-8"
    )
    (out / "snapshot.json").write_text(
        _dumps(
            {
                "format": FORMAT_VERSION,
                "corpus_hash": snapshot.corpus_hash,
                "config_hash": snapshot.config_hash,
                "counts": {
                    "concepts": len(kg.concepts),
                    "triples": len(kg.triples),
                    "trees": len(snapshot.forest.trees),
                },
            }
        )
        + "\n",
        encoding="utf-8",
    )
    return out


def load_snapshot(directory: str | Path) -> EsSnapshot:
    src = Path(directory)
    meta = json.loads((src / "snapshot.json").read_text("utf-8"))
    if meta.get("format") != FORMAT_VERSION:
        raise ValueError(f"unsupported snapshot format: {meta.get('format')}")
    config_doc = json.loads((src / "config.json").read_text("utf-8"))
    config = PipelineConfig.from_dict(config_doc["config"])

    corpus = _corpus_from_dict(json.loads((src / "corpus.json").read_text("utf-8")))

    concepts: dict[str, Concept] = {}
    for line in (src / "concepts.jsonl").read_text("utf-8").splitlines():
        d = json.loads(line)
        concepts[d["uri"]] = Concept(
            uri=d["uri"],
            label=d["label"],
            tokens=tuple((t[0], t[1]) for t in d["tokens"]),
            occurrences=tuple(
                Occurrence(o["sentence_id"], o["start"], o["end"], o["surface"])
                for o in d["occurrences"]
            ),
        )
    triples = []
    for line in (src / "triples.jsonl").read_text("utf-8").splitlines():
        d = json.loads(line)
        triples.append(
            TemplateTriple(
                triple_id=d["id"],
                subject_uri=d["subject_uri"],
                template=d["template"],
                object_uri=d["object_uri"],
                sentence_id=d["sentence_id"],
                paragraph_id=d["paragraph_id"],
            )
        )
    subclass_edges: set[tuple[str, str]] = set()
    source_edges: set[tuple[str, str]] = set()
    for line in (src / "edges.jsonl").read_text("utf-8").splitlines():
        d = json.loads(line)
        if d["kind"] == "subclass":
            subclass_edges.add((d["sub"], d["super"]))
        else:
            source_edges.add((d["ref"], d["sentence_id"]))
    kg = KnowledgeGraph.build(concepts, triples, subclass_edges, source_edges)

    trees: dict[int, dict] = {}
    for line in (src / "forest.jsonl").read_text("utf-8").splitlines():
        d = json.loads(line)
        bucket = trees.setdefault(
            d.get("tree", 0), {"members": [], "edges": {}, "label": d["tree_root_label"]}
        )
        bucket["members"].append(d["child_uri"])
        if d["parent_uri"] is not None:
            bucket["edges"][d["child_uri"]] = d["parent_uri"]
    forest = TaxonomyForest(
        trees=tuple(
            TaxonomyTree(
                root_label=data["label"],
                members=tuple(sorted(data["members"])),
                edges=dict(sorted(data["edges"].items())),
            )
            for _, data in sorted(trees.items())
        )
    )

    alignment_doc = json.loads((src / "alignment.json").read_text("utf-8"))
    alignment = Alignment(
        senses={
            uri: SenseEntry(
                sense_id=s["sense_id"], lemma=s["lemma"], hypernyms=tuple(s["hypernyms"])
            )
            for uri, s in alignment_doc["senses"].items()
        },
        misses=tuple(alignment_doc["misses"]),
    )
    centrality = json.loads((src / "centrality.json").read_text("utf-8"))

    return EsSnapshot(
        corpus=corpus,
        kg=kg,
        forest=forest,
        alignment=alignment,
        centrality=centrality,
        config=config,
        corpus_hash=meta["corpus_hash"],
    )


def snapshot_digest(directory: str | Path) -> str:
    """SHA-256 over the core snapshot files, for idempotence checks."""
    src = Path(directory)
    digest = hashlib.sha256()
    for name in CORE_FILES:
        digest.update(name.encode("utf-8"))
        digest.update((src / name).read_bytes())
    return digest.hexdigest()
