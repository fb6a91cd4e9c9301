"""Regex tokenizer with character offsets.

Offsets index into the original string, so downstream spans (syntagm
occurrences, annotations) can always be mapped back to the source text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(
    r"""
    [A-Za-z][A-Za-z0-9\-]*(?:'[A-Za-z]+)?   # words, incl. hyphenated; clitic kept for splitting below
    | \d+(?:[.,]\d+)*                       # numbers
    | [^\sA-Za-z0-9]                        # single punctuation marks
    """,
    re.VERBOSE,
)

_CLITIC_RE = re.compile(r"^(.+?)('s|'S|n't|'re|'ve|'ll|'d|'m)$")


@dataclass(frozen=True)
class RawToken:
    text: str
    start: int
    end: int


def tokenize(text: str) -> list[RawToken]:
    """Split text into word/number/punctuation tokens with offsets."""
    out: list[RawToken] = []
    for m in _TOKEN_RE.finditer(text):
        tok, start, end = m.group(0), m.start(), m.end()
        clitic = _CLITIC_RE.match(tok)
        if clitic:
            stem, suffix = clitic.group(1), clitic.group(2)
            out.append(RawToken(stem, start, start + len(stem)))
            out.append(RawToken(suffix, start + len(stem), end))
        else:
            out.append(RawToken(tok, start, end))
    return out


def words_only(text: str) -> list[RawToken]:
    """Tokens that contain at least one letter or digit."""
    return [t for t in tokenize(text) if any(c.isalnum() for c in t.text)]
