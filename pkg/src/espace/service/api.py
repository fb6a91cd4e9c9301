"""HTTP service exposing the explanatory space.

Endpoints (all JSON):

* ``GET  /health``                liveness plus snapshot hashes
* ``GET  /overview/{concept_uri}`` per-concept overview (cached)
* ``POST /annotate``              {"text": ...} -> annotation spans + HTML
* ``GET  /taxonomy``              forest dump
* ``GET  /concepts?q=prefix``     label/URI prefix search

The snapshot is loaded once and shared read-only across requests;
overview generation is cached per concept and persisted under the
snapshot's ``cache/`` directory.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from espace.annotation.annotate import annotate, to_html
from espace.errors import MissingConceptError
from espace.overview.archetypes import archetype_set
from espace.overview.assemble import OverviewBuilder, overview_to_dict
from espace.service.ports_registry import build_ports
from espace.service.snapshot import EsSnapshot, load_snapshot
from espace.taxonomy.forest import TaxonomyIndex


class EsService:
    """Request-handling core, independent of the web framework."""

    def __init__(self, snapshot: EsSnapshot, snapshot_dir: str | Path | None = None):
        self.snapshot = snapshot
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        self.ports = build_ports(snapshot.config)
        self.taxonomy = TaxonomyIndex(snapshot.kg, snapshot.forest)
        embedding_cache = self._embedding_cache_path()
        if embedding_cache is not None and hasattr(self.ports.embedder, "load"):
            self.ports.embedder.load(embedding_cache)
        config = snapshot.config
        self.builder = OverviewBuilder(
            kg=snapshot.kg,
            corpus=snapshot.corpus,
            taxonomy=self.taxonomy,
            archetypes=archetype_set(config.archetype_order),
            embedder=self.ports.embedder,
            summarizer=self.ports.summarizer,
            threshold=config.pertinence_threshold,
            fanout=config.fanout,
            summary_budget=config.summary_budget,
            abstract_budget=config.abstract_budget,
            config_hash=config.config_hash(),
        )

    @classmethod
    def from_directory(cls, directory: str | Path) -> "EsService":
        return cls(load_snapshot(directory), snapshot_dir=directory)

    def _overview_cache_path(self, concept_uri: str) -> Path | None:
        if self.snapshot_dir is None:
            return None
        safe = concept_uri.replace(":", "__").replace("/", "_")
        return self.snapshot_dir / "cache" / "overviews" / f"{safe}.json"

    def _embedding_cache_path(self) -> Path | None:
        if self.snapshot_dir is None:
            return None
        return self.snapshot_dir / "cache" / f"embeddings-{self.snapshot.config_hash[:16]}.jsonl"

    def overview(self, concept_uri: str) -> dict:
        cache_path = self._overview_cache_path(concept_uri)
        if cache_path is not None and cache_path.exists():
            return json.loads(cache_path.read_text("utf-8"))
        doc = overview_to_dict(self.builder.generate(concept_uri))
        # canonical key order, so cached and fresh responses are byte-identical
        doc = json.loads(json.dumps(doc, sort_keys=True))
        if cache_path is not None:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            tmp = cache_path.with_suffix(".tmp")
            tmp.write_text(
                json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False),
                encoding="utf-8",
            )
            tmp.replace(cache_path)
        embedding_cache = self._embedding_cache_path()
        if embedding_cache is not None and hasattr(self.ports.embedder, "save"):
            self.ports.embedder.save(embedding_cache)
        return doc

    def annotate_text(self, text: str) -> list[dict]:
        spans = annotate(
            text,
            self.snapshot.kg,
            self.snapshot.centrality,
            self.ports.frequency,
            rank_cutoff=self.snapshot.config.frequency_rank_cutoff,
        )
        return [
            {"start": a.start, "end": a.end, "concept_uri": a.concept_uri} for a in spans
        ]

    def annotate_html(self, text: str) -> str:
        spans = annotate(
            text,
            self.snapshot.kg,
            self.snapshot.centrality,
            self.ports.frequency,
            rank_cutoff=self.snapshot.config.frequency_rank_cutoff,
        )
        return to_html(text, spans)

    def taxonomy_dump(self) -> dict:
        return {
            "trees": [
                {
                    "root_label": t.root_label,
                    "members": list(t.members),
                    "edges": [
                        {"child": c, "parent": p} for c, p in sorted(t.edges.items())
                    ],
                }
                for t in self.snapshot.forest.trees
            ]
        }

    def search_concepts(self, prefix: str, limit: int = 100) -> list[dict]:
        prefix = prefix.lower()
        hits = []
        for uri in sorted(self.snapshot.kg.concepts):
            concept = self.snapshot.kg.concepts[uri]
            local = uri.split(":", 1)[1] if ":" in uri else uri
            if concept.label.lower().startswith(prefix) or local.startswith(prefix):
                hits.append({"uri": uri, "label": concept.label})
            if len(hits) >= limit:
                break
        return hits


class AnnotateRequest(BaseModel):
    text: str
    html: bool = True


def create_app(
    snapshot_dir: str | Path | None = None,
    service: EsService | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="espace", version="0.1.0")
    # the browser client may be served from any static host
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    if service is None and snapshot_dir is not None and Path(snapshot_dir, "snapshot.json").exists():
        service = EsService.from_directory(snapshot_dir)
    app.state.service = service

    def current() -> EsService | None:
        return app.state.service

    @app.get("/health")
    def health():
        svc = current()
        if svc is None:
            return {"status": "no snapshot"}
        return {
            "status": "ok",
            "corpus_hash": svc.snapshot.corpus_hash,
            "config_hash": svc.snapshot.config_hash,
        }

    def no_snapshot() -> JSONResponse:
        return JSONResponse(status_code=503, content={"error": "no snapshot loaded"})

    @app.get("/overview/{concept_uri}")
    def overview(concept_uri: str):
        svc = current()
        if svc is None:
            return no_snapshot()
        try:
            return svc.overview(concept_uri)
        except MissingConceptError:
            return JSONResponse(
                status_code=404, content={"error": f"unknown concept {concept_uri}"}
            )

    @app.post("/annotate")
    def annotate_endpoint(payload: AnnotateRequest):
        svc = current()
        if svc is None:
            return no_snapshot()
        raw = payload.text.encode("utf-8")
        if len(raw) > svc.snapshot.config.annotate_size_cap:
            return JSONResponse(
                status_code=413,
                content={"error": f"text exceeds {svc.snapshot.config.annotate_size_cap} bytes"},
            )
        body = {"text": payload.text, "annotations": svc.annotate_text(payload.text)}
        if payload.html:
            body["html"] = svc.annotate_html(payload.text)
        return body

    @app.get("/taxonomy")
    def taxonomy():
        svc = current()
        if svc is None:
            return no_snapshot()
        return svc.taxonomy_dump()

    @app.get("/concepts")
    def concepts(q: str = ""):
        svc = current()
        if svc is None:
            return no_snapshot()
        return {"concepts": svc.search_concepts(q)}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

        @app.get("/", include_in_schema=False)
        def index() -> Response:
            return HTMLResponse('<meta http-equiv="refresh" content="0; url=/ui/">')

    return app
