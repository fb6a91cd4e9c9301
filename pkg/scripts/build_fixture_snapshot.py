#!/usr/bin/env python3
"""Build the demo snapshot from the bundled fixture corpus.

The fixture threshold (0.2) is calibrated for the reference embedder;
the stricter default (0.55) suits real dual-encoder models.

Usage: python scripts/build_fixture_snapshot.py [out_dir]
"""

from __future__ import annotations

import sys
from pathlib import Path

from espace.config import PipelineConfig
from espace.service.pipeline import read_manifest, run_pipeline
from espace.service.snapshot import save_snapshot

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "snapshot"
    config = PipelineConfig(pertinence_threshold=0.2)
    documents = read_manifest(ROOT / "fixtures" / "corpus" / "manifest.json")
    snapshot = run_pipeline(documents, config)
    save_snapshot(snapshot, out)
    print(f"snapshot written to {out}")
    print(
        f"concepts: {len(snapshot.kg.concepts)}  "
        f"triples: {len(snapshot.kg.triples)}  "
        f"trees: {len(snapshot.forest.trees)}"
    )
    print(f"serve it with: espace serve --snapshot {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
