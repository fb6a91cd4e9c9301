"""Common-knowledge filter backed by a word-frequency table.

The table ships as a plain (lemma, rank) TSV so any frequency list can
substitute the bundled one. A concept counts as common knowledge when
every token of its label sits within the rank cutoff; one rare token is
enough to keep the concept annotatable.
"""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path

from espace.errors import ConfigurationError
from espace.ports.lemmas import lemma_key

DEFAULT_RANK_CUTOFF = 1000


class FrequencyTable:
    def __init__(self, ranks: dict[str, int]):
        self.ranks = ranks

    @classmethod
    def load(cls, path: str | Path | None = None) -> "FrequencyTable":
        """Load a (lemma, rank) TSV; None loads the bundled table.

        Keys are lemmatized on load and inflected duplicates keep their
        best (lowest) rank.
        """
        if path is None:
            text = files("espace.data").joinpath("wordfreq.tsv").read_text("utf-8")
        else:
            p = Path(path)
            if not p.exists():
                raise ConfigurationError(f"frequency table not found: {p}")
            text = p.read_text("utf-8")
        ranks: dict[str, int] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ConfigurationError(f"frequency table line {lineno}: expected 2 columns")
            lemma = " ".join(lemma_key(parts[0]))
            rank = int(parts[1])
            if lemma not in ranks or rank < ranks[lemma]:
                ranks[lemma] = rank
        return cls(ranks)

    def rank(self, lemma: str) -> int | None:
        return self.ranks.get(lemma)


def is_common_knowledge(
    concept_uri: str,
    table: FrequencyTable,
    rank_cutoff: int = DEFAULT_RANK_CUTOFF,
) -> bool:
    """True when every token lemma of the concept label is high-frequency."""
    if table is None:
        raise ConfigurationError("frequency table not loaded")
    local = concept_uri.split(":", 1)[1] if ":" in concept_uri else concept_uri
    lemmas = lemma_key(local)
    if not lemmas:
        return False
    for lemma in lemmas:
        rank = table.rank(lemma)
        if rank is None or rank > rank_cutoff:
            return False
    return True
