#!/usr/bin/env python3
"""Walk a snapshot from the command line: annotate the demo explanans,
then print the overview of each annotated concept.

Usage: python scripts/explore_snapshot.py <snapshot_dir> [explanans.txt]
"""

from __future__ import annotations

import sys
from pathlib import Path

from espace.service.api import EsService

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    service = EsService.from_directory(sys.argv[1])
    explanans = Path(sys.argv[2]) if len(sys.argv) > 2 else ROOT / "fixtures" / "explanans.txt"
    text = explanans.read_text("utf-8").strip()

    print("=== explanans ===")
    print(text)
    annotations = service.annotate_text(text)
    print(f"\n=== {len(annotations)} annotations ===")
    for ann in annotations:
        print(f"  [{ann['start']:4d}:{ann['end']:4d}] "
              f"{text[ann['start']:ann['end']]!r} -> {ann['concept_uri']}")

    for ann in annotations:
        uri = ann["concept_uri"]
        doc = service.overview(uri)
        print(f"\n=== overview {uri} ===")
        if doc["abstract"]:
            print(f"  abstract: {doc['abstract']}")
        for name, tree in doc["archetypes"].items():
            print(f"  [{name}] {tree['summary']}")
        if doc["superclasses"]:
            print(f"  superclasses: {', '.join(doc['superclasses'])}")
        if doc["subclasses"]:
            print(f"  subclasses: {', '.join(doc['subclasses'])}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
