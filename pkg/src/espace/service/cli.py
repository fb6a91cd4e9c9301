"""Command-line interface.

Subcommands: ``ingest`` builds a snapshot from a corpus manifest,
``serve`` exposes a snapshot over HTTP, ``overview`` and ``annotate``
query a snapshot offline. The snapshot directory defaults to the
``ESPACE_SNAPSHOT_DIR`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from espace.config import PipelineConfig
from espace.service.api import EsService, create_app
from espace.service.pipeline import read_manifest, run_pipeline
from espace.service.snapshot import save_snapshot

SNAPSHOT_ENV = "ESPACE_SNAPSHOT_DIR"


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file with PipelineConfig overrides")
    parser.add_argument("--namespace")
    parser.add_argument("--embedder", choices=["reference"])
    parser.add_argument("--summarizer", choices=["reference", "identity"])
    parser.add_argument("--wsd", choices=["reference"])
    parser.add_argument("--embedding-dim", type=int, dest="embedding_dim")
    parser.add_argument("--context-weight", type=float, dest="context_weight")
    parser.add_argument("--pertinence-threshold", type=float, dest="pertinence_threshold")
    parser.add_argument("--fanout", type=int)
    parser.add_argument("--summary-budget", type=int, dest="summary_budget")
    parser.add_argument("--abstract-budget", type=int, dest="abstract_budget")
    parser.add_argument("--frequency-rank-cutoff", type=int, dest="frequency_rank_cutoff")
    parser.add_argument("--archetype-order", dest="archetype_order",
                        help="comma-separated permutation of the seven archetypes")
    parser.add_argument("--fca-max-objects", type=int, dest="fca_max_objects")
    parser.add_argument("--lexicon-path", dest="lexicon_path")
    parser.add_argument("--frequency-path", dest="frequency_path")
    parser.add_argument("--service-port", type=int, dest="service_port")


_CONFIG_KEYS = (
    "namespace", "embedder", "summarizer", "wsd", "embedding_dim",
    "context_weight", "pertinence_threshold", "fanout", "summary_budget",
    "abstract_budget", "frequency_rank_cutoff", "archetype_order",
    "fca_max_objects", "lexicon_path", "frequency_path", "service_port",
)


def config_from_args(args: argparse.Namespace) -> PipelineConfig:
    base: dict = {}
    if getattr(args, "config", None):
        base = json.loads(Path(args.config).read_text("utf-8"))
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            base[key] = value
    if isinstance(base.get("archetype_order"), str):
        base["archetype_order"] = tuple(
            part.strip() for part in base["archetype_order"].split(",")
        )
    return PipelineConfig.from_dict(base)


def _snapshot_dir(args: argparse.Namespace) -> Path:
    value = getattr(args, "snapshot", None) or os.environ.get(SNAPSHOT_ENV)
    if not value:
        sys.exit(f"no snapshot directory: pass --snapshot or set {SNAPSHOT_ENV}")
    return Path(value)


def cmd_ingest(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    documents = read_manifest(args.manifest)
    snapshot = run_pipeline(documents, config)
    out = save_snapshot(snapshot, args.out)
    counts = {
        "concepts": len(snapshot.kg.concepts),
        "triples": len(snapshot.kg.triples),
        "trees": len(snapshot.forest.trees),
    }
    print(f"snapshot written to {out}")
    print(f"concepts: {counts['concepts']}  triples: {counts['triples']}  trees: {counts['trees']}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    directory = _snapshot_dir(args)
    app = create_app(snapshot_dir=directory, static_dir=args.static)
    port = args.port or (app.state.service.snapshot.config.service_port
                         if app.state.service else 8080)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def cmd_overview(args: argparse.Namespace) -> int:
    service = EsService.from_directory(_snapshot_dir(args))
    doc = service.overview(args.concept)
    print(json.dumps(doc, indent=2, ensure_ascii=False))
    return 0


def cmd_annotate(args: argparse.Namespace) -> int:
    service = EsService.from_directory(_snapshot_dir(args))
    if args.file:
        text = Path(args.file).read_text("utf-8")
    elif args.text is not None:
        text = args.text
    else:
        text = sys.stdin.read()
    if args.html:
        print(service.annotate_html(text))
    else:
        print(json.dumps(service.annotate_text(text), indent=2, ensure_ascii=False))
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="espace", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="build a snapshot from a corpus manifest")
    p_ingest.add_argument("--manifest", required=True)
    p_ingest.add_argument("--out", required=True)
    _add_config_flags(p_ingest)
    p_ingest.set_defaults(func=cmd_ingest)

    p_serve = sub.add_parser("serve", help="serve a snapshot over HTTP")
    p_serve.add_argument("--snapshot")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int)
    p_serve.add_argument("--static", help="directory with UI assets to mount at /ui")
    p_serve.set_defaults(func=cmd_serve)

    p_overview = sub.add_parser("overview", help="print a concept overview")
    p_overview.add_argument("--snapshot")
    p_overview.add_argument("--concept", required=True)
    p_overview.set_defaults(func=cmd_overview)

    p_annotate = sub.add_parser("annotate", help="annotate text against a snapshot")
    p_annotate.add_argument("--snapshot")
    p_annotate.add_argument("--text")
    p_annotate.add_argument("--file")
    p_annotate.add_argument("--html", action="store_true")
    p_annotate.set_defaults(func=cmd_annotate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
