"""CLI subcommands: ingest, overview, annotate."""

from __future__ import annotations

import json

import pytest

from espace.service.cli import main
from espace.service.snapshot import snapshot_digest

from conftest import FIXTURES


@pytest.fixture(scope="module")
def snapshot_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("cli-snap")
    code = main([
        "ingest",
        "--manifest", str(FIXTURES / "corpus" / "manifest.json"),
        "--out", str(out),
        "--pertinence-threshold", "0.2",
    ])
    assert code == 0
    return out


def test_ingest_prints_counts(tmp_path, capsys):
    main([
        "ingest",
        "--manifest", str(FIXTURES / "corpus" / "manifest.json"),
        "--out", str(tmp_path),
        "--pertinence-threshold", "0.2",
    ])
    out = capsys.readouterr().out
    assert "concepts:" in out and "triples:" in out and "trees:" in out


def test_ingest_idempotent(snapshot_dir, tmp_path):
    main([
        "ingest",
        "--manifest", str(FIXTURES / "corpus" / "manifest.json"),
        "--out", str(tmp_path),
        "--pertinence-threshold", "0.2",
    ])
    assert snapshot_digest(snapshot_dir) == snapshot_digest(tmp_path)


def test_overview_command(snapshot_dir, capsys):
    code = main([
        "overview", "--snapshot", str(snapshot_dir), "--concept", "es:inquiry",
    ])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["concept_uri"] == "es:inquiry"


def test_annotate_command(snapshot_dir, capsys):
    code = main([
        "annotate", "--snapshot", str(snapshot_dir),
        "--text", "A hard inquiry lowers the credit score.",
    ])
    assert code == 0
    annotations = json.loads(capsys.readouterr().out)
    assert any(a["concept_uri"] == "es:credit_score" for a in annotations)


def test_annotate_html(snapshot_dir, capsys):
    main([
        "annotate", "--snapshot", str(snapshot_dir),
        "--text", "A hard inquiry lowers the credit score.",
        "--html",
    ])
    out = capsys.readouterr().out
    assert 'data-concept-uri="es:credit_score"' in out


def test_snapshot_env_var(snapshot_dir, capsys, monkeypatch):
    monkeypatch.setenv("ESPACE_SNAPSHOT_DIR", str(snapshot_dir))
    code = main(["overview", "--concept", "es:score"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["concept_uri"] == "es:score"


def test_unreadable_document_warns_and_continues(tmp_path, caplog):
    import json as json_mod

    from espace.errors import EmptyCorpusError
    from espace.service.pipeline import read_manifest

    good = tmp_path / "good.txt"
    good.write_text("A credit score measures the risk of a borrower.")
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json_mod.dumps([
        {"path": "good.txt", "title": "Good"},
        {"path": "missing.txt", "title": "Missing"},
    ]))
    docs = read_manifest(manifest)
    assert [title for title, _ in docs] == ["Good"]
    assert any("missing.txt" in r.message for r in caplog.records)

    empty_manifest = tmp_path / "empty.json"
    empty_manifest.write_text(json_mod.dumps([{"path": "missing.txt", "title": "M"}]))
    with pytest.raises(EmptyCorpusError):
        read_manifest(empty_manifest)


def test_config_flag_round_trip(tmp_path, capsys):
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps({"pertinence_threshold": 0.3, "fanout": 4}))
    out_dir = tmp_path / "snap"
    main([
        "ingest",
        "--manifest", str(FIXTURES / "corpus" / "manifest.json"),
        "--out", str(out_dir),
        "--config", str(config_file),
    ])
    stored = json.loads((out_dir / "config.json").read_text())
    assert stored["config"]["pertinence_threshold"] == 0.3
    assert stored["config"]["fanout"] == 4
