"""Summarizer ports.

The reference summarizer extracts the first sentence and truncates at a
word boundary within the character budget, appending an ellipsis marker
when it had to cut. The identity summarizer returns its input unchanged
and exists for structural tests of the summary trees.
"""

from __future__ import annotations

import re

ELLIPSIS = "..."

_FIRST_SENTENCE = re.compile(r".+?[.!?](?=\s|$)", re.DOTALL)


class FirstSentenceSummarizer:
    def summarize(self, text: str, budget: int) -> str:
        if budget <= 0:
            raise ValueError("budget must be positive")
        if not text:
            return ""
        stripped = text.strip()
        m = _FIRST_SENTENCE.match(stripped)
        sentence = m.group(0) if m else stripped
        if len(sentence) <= budget:
            return sentence
        room = budget - len(ELLIPSIS)
        if room <= 0:
            return sentence[:budget]
        cut = sentence[:room]
        boundary = cut.rfind(" ")
        if boundary > 0:
            cut = cut[:boundary]
        return cut.rstrip() + ELLIPSIS


class IdentitySummarizer:
    """Passes text through untouched; for order-preservation tests."""

    def summarize(self, text: str, budget: int) -> str:
        return text
