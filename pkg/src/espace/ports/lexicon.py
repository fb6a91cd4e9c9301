"""Lexical knowledge base and word-sense disambiguation.

Two on-disk formats are accepted:

* a TSV dump, one sense per line: ``sense_id<TAB>lemma<TAB>hypernym_sense_id``
  (``-`` or empty third column for roots); senses for one lemma appear in
  frequency order, most frequent first;
* a WordNet 3.x database directory (``index.noun`` / ``data.noun``), of
  which only noun synsets and ``@`` hypernym pointers are read.

The reference disambiguator is most-frequent-sense lookup by lemma; a
multi-word syntagm falls back to its head (last) token when the full
lemma is out of vocabulary.
"""

from __future__ import annotations

from pathlib import Path

from espace.errors import ConfigurationError
from espace.ports.lemmas import lemma_key
from espace.ports.types import SenseEntry


class LexicalKnowledgeBase:
    def __init__(self, parents: dict[str, str | None], lemmas: dict[str, str],
                 by_lemma: dict[str, list[str]]):
        self._parents = parents
        self._lemmas = lemmas
        self._by_lemma = by_lemma
        self._chains: dict[str, tuple[str, ...]] = {}
        for sense_id in parents:
            self._chains[sense_id] = self._walk(sense_id)

    def _walk(self, sense_id: str) -> tuple[str, ...]:
        chain: list[str] = []
        seen = {sense_id}
        cur = self._parents.get(sense_id)
        while cur is not None:
            if cur in seen:
                raise ConfigurationError(f"hypernym cycle at {cur}")
            if cur not in self._parents:
                raise ConfigurationError(f"unknown hypernym {cur}")
            chain.append(cur)
            seen.add(cur)
            cur = self._parents[cur]
        return tuple(chain)

    def senses(self, lemma: str) -> list[SenseEntry]:
        """Senses for a lemma, most frequent first; [] when out of vocabulary."""
        key = " ".join(lemma_key(lemma))
        return [
            SenseEntry(sense_id=s, lemma=self._lemmas[s], hypernyms=self._chains[s])
            for s in self._by_lemma.get(key, [])
        ]

    def sense_lemma(self, sense_id: str) -> str:
        if sense_id not in self._lemmas:
            raise KeyError(sense_id)
        return self._lemmas[sense_id]

    def __len__(self) -> int:
        return len(self._parents)

    # -- loaders -----------------------------------------------------------

    @classmethod
    def load(cls, path: str | Path) -> "LexicalKnowledgeBase":
        p = Path(path)
        if p.is_dir():
            return cls.from_wordnet_dir(p)
        return cls.from_tsv(p)

    @classmethod
    def from_tsv(cls, path: str | Path) -> "LexicalKnowledgeBase":
        parents: dict[str, str | None] = {}
        lemmas: dict[str, str] = {}
        by_lemma: dict[str, list[str]] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) < 2:
                    raise ConfigurationError(f"{path}:{lineno}: expected 2+ columns")
                sense_id, lemma = parts[0], parts[1]
                hyper = parts[2] if len(parts) > 2 else ""
                parents[sense_id] = hyper if hyper and hyper != "-" else None
                lemma_norm = lemma.replace("_", " ")
                lemmas[sense_id] = lemma_norm
                key = " ".join(lemma_key(lemma_norm))
                by_lemma.setdefault(key, []).append(sense_id)
        return cls(parents, lemmas, by_lemma)

    @classmethod
    def from_wordnet_dir(cls, path: str | Path) -> "LexicalKnowledgeBase":
        path = Path(path)
        data = path / "data.noun"
        index = path / "index.noun"
        if not data.exists() or not index.exists():
            raise ConfigurationError(f"{path}: not a WordNet database directory")

        parents: dict[str, str | None] = {}
        lemmas: dict[str, str] = {}
        with open(data, encoding="utf-8") as fh:
            for line in fh:
                if line.startswith(" ") or not line.strip():
                    continue
                fields = line.split()
                offset = fields[0]
                w_cnt = int(fields[3], 16)
                first_word = fields[4].replace("_", " ")
                sense_id = f"n{offset}"
                lemmas[sense_id] = first_word
                ptr_base = 4 + 2 * w_cnt
                p_cnt = int(fields[ptr_base])
                hyper: str | None = None
                for k in range(p_cnt):
                    sym, tgt, pos_tag = fields[ptr_base + 1 + 4 * k: ptr_base + 4 + 4 * k]
                    if sym in ("@", "@i") and pos_tag == "n":
                        hyper = f"n{tgt}"
                        break
                parents[sense_id] = hyper

        by_lemma: dict[str, list[str]] = {}
        with open(index, encoding="utf-8") as fh:
            for line in fh:
                if line.startswith(" ") or not line.strip():
                    continue
                fields = line.split()
                lemma = fields[0].replace("_", " ")
                p_cnt = int(fields[3])
                offsets = fields[6 + p_cnt:]
                key = " ".join(lemma_key(lemma))
                by_lemma[key] = [f"n{off}" for off in offsets if f"n{off}" in parents]
        return cls(parents, lemmas, by_lemma)


class MostFrequentSenseWsd:
    """Context-blind reference disambiguator over a lexical knowledge base."""

    def __init__(self, kb: LexicalKnowledgeBase):
        self.kb = kb

    def disambiguate(self, syntagm: str, sentence_context: str) -> SenseEntry | None:
        if not syntagm or not syntagm.strip():
            raise ValueError("syntagm must be non-empty")
        senses = self.kb.senses(syntagm)
        if senses:
            return senses[0]
        key = lemma_key(syntagm)
        if len(key) > 1:
            head_senses = self.kb.senses(key[-1])
            if head_senses:
                return head_senses[0]
        return None
