"""Reference dual encoder: hashed bag-of-lemmas vectors.

Questions and answers embed into one comparable space of dimension
`dim`. Lemma term frequencies are hashed into buckets (stable blake2b
digest, so results are identical across processes) and L2-normalized.
The answer side embeds the snippet together with its source-paragraph
context, with context terms down-weighted so the snippet dominates.

All weights are non-negative, so inner products of normalized vectors
land in [0, 1].
"""

from __future__ import annotations

import hashlib

import numpy as np

from espace.errors import EmptyInputError
from espace.ports.lemmas import lemmatize
from espace.ports.tokenize import words_only


# domain-separation prefix for the bucket hash
_SALT = "lemma|"


def _bucket(lemma: str, dim: int) -> int:
    digest = hashlib.blake2b((_SALT + lemma).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % dim


def inner_product(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.dot(a, b))


class HashedLemmaEncoder:
    """Deterministic stand-in for a learned question-answering encoder."""

    def __init__(self, dim: int = 512, context_weight: float = 0.5):
        if dim <= 0:
            raise ValueError("dim must be positive")
        if context_weight < 0:
            raise ValueError("context_weight must be non-negative")
        self.dim = dim
        self.context_weight = context_weight

    def _accumulate(self, vec: np.ndarray, text: str, weight: float) -> None:
        for tok in words_only(text):
            vec[_bucket(lemmatize(tok.text), self.dim)] += weight

    def _normalize(self, vec: np.ndarray) -> np.ndarray:
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            return vec
        return vec / norm

    def embed_question(self, question: str) -> np.ndarray:
        if not question or not question.strip():
            raise EmptyInputError("cannot embed empty question")
        vec = np.zeros(self.dim, dtype=np.float64)
        self._accumulate(vec, question, 1.0)
        return self._normalize(vec)

    def embed_answer(self, snippet: str, context: str) -> np.ndarray:
        if not snippet or not snippet.strip():
            raise EmptyInputError("cannot embed empty snippet")
        vec = np.zeros(self.dim, dtype=np.float64)
        self._accumulate(vec, snippet, 1.0)
        self._accumulate(vec, context, self.context_weight)
        return self._normalize(vec)


class CachingEncoder:
    """Memoizing wrapper; safe because the wrapped encoder is pure.

    The cache can be persisted: entries are keyed by a digest of the
    input texts, so a different embedder configuration (different
    digest inputs never collide) or corpus invalidates cleanly.
    """

    def __init__(self, inner):
        self.inner = inner
        self.dim = inner.dim
        self._cache: dict[str, np.ndarray] = {}
        self._dirty = False

    def _key(self, kind: str, text: str, context: str) -> str:
        payload = "\x1f".join((kind, str(self.dim), text, context))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def embed_question(self, question: str) -> np.ndarray:
        key = self._key("q", question, "")
        if key not in self._cache:
            self._cache[key] = self.inner.embed_question(question)
            self._dirty = True
        return self._cache[key]

    def embed_answer(self, snippet: str, context: str) -> np.ndarray:
        key = self._key("a", snippet, context)
        if key not in self._cache:
            self._cache[key] = self.inner.embed_answer(snippet, context)
            self._dirty = True
        return self._cache[key]

    def load(self, path) -> int:
        """Preload persisted vectors; returns the number loaded."""
        import json
        from pathlib import Path

        p = Path(path)
        if not p.exists():
            return 0
        loaded = 0
        for line in p.read_text("utf-8").splitlines():
            if not line.strip():
                continue
            record = json.loads(line)
            vec = np.asarray(record["vector"], dtype=np.float64)
            if vec.shape == (self.dim,):
                self._cache[record["key"]] = vec
                loaded += 1
        self._dirty = False
        return loaded

    def save(self, path) -> None:
        """Persist the cache when it gained entries since the last save."""
        import json
        from pathlib import Path

        if not self._dirty:
            return
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        tmp = p.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            for key in sorted(self._cache):
                fh.write(
                    json.dumps(
                        {"key": key, "vector": self._cache[key].tolist()},
                        separators=(",", ":"),
                    )
                    + "\n"
                )
        tmp.replace(p)
        self._dirty = False
