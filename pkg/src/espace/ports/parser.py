"""Reference dependency parser.

A deterministic, lexicon-plus-heuristics parser for plain declarative
English. It is not a general parser: it exists so the extraction
pipeline runs, stays reproducible, and can be tested without a learned
model. Real parsers plug in behind the same interface.

Strategy: tag tokens with closed-class lexicons and suffix heuristics,
chunk noun phrases, then attach chunks and function words around the
main verb with a fixed rule order.
"""

from __future__ import annotations

import re

from espace.errors import EmptyInputError
from espace.ports.lemmas import VERB_LEMMAS, lemmatize
from espace.ports.tokenize import RawToken, tokenize
from espace.ports.types import ParsedToken, validate_tree

DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those", "its", "his",
    "her", "their", "our", "my", "your", "some", "any", "no", "each",
    "every", "another", "such", "both", "either", "neither", "all",
}
PREPOSITIONS = {
    "of", "in", "on", "at", "by", "for", "with", "from", "about",
    "into", "over", "under", "between", "through", "during", "after",
    "before", "against", "within", "without", "across", "toward",
    "towards", "upon", "per", "via", "like", "as", "off", "near",
    "behind", "beyond", "along", "around", "among", "despite", "until",
    "since",
}
PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "them",
    "us", "who", "whom", "which", "someone", "something", "anyone",
    "anything", "nothing", "everything", "everyone", "itself",
    "himself", "herself", "themselves", "one",
}
AUXILIARIES = {
    "is", "are", "was", "were", "be", "been", "being", "am",
    "will", "would", "can", "could", "may", "might", "must", "shall",
    "should", "do", "does", "did", "have", "has", "had",
}
CCONJ = {"and", "or", "but", "nor"}
SCONJ = {
    "because", "if", "while", "although", "though", "whether",
    "unless", "whereas", "when", "where", "why", "how", "what", "once",
}
ADVERBS = {
    "not", "never", "also", "only", "very", "often", "usually",
    "always", "then", "here", "there", "now", "again", "already",
    "still", "too", "soon", "later", "instead", "however", "therefore",
    "first", "second", "surprisingly", "clearly", "more", "most",
    "typically", "generally", "quickly", "slowly", "directly",
}
ADJECTIVES = {
    "new", "hard", "soft", "high", "low", "good", "bad", "late",
    "early", "monthly", "annual", "financial", "personal", "available",
    "applicable", "responsible", "several", "different", "important",
    "specific", "recent", "current", "total", "negative", "positive",
    "major", "minor", "common", "general", "automatic", "automated",
    "own", "same", "other", "long", "short", "large", "small", "full",
    "open", "active", "unpaid", "outstanding", "delinquent", "risky",
    "contrastive", "explanatory", "poor", "strong", "weak", "fair",
    "main", "next", "last", "past", "due", "possible", "likely",
    "neural", "digital", "federal", "original", "national", "local",
    "global", "typical", "actual", "final", "central", "formal",
    "legal", "normal", "social", "special", "critical", "optimal",
    "individual", "additional", "external", "internal", "technical",
    "medical", "physical", "political", "practical", "logical",
    "international", "historical", "statistical",
}
NUMBER_WORDS = {
    "zero", "one", "two", "three", "four", "five", "six", "seven",
    "eight", "nine", "ten", "eleven", "twelve", "hundred", "thousand",
    "million", "billion",
}
ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ish", "less")
PARTICIPLE_SUFFIXES = ("ed", "en")
NOMINAL = {"NOUN", "PROPN"}
CHUNKABLE = {"DET", "ADJ", "NOUN", "PROPN", "NUM"}

_SENTENCE_END = re.compile(r"[.!?]+(?=\s|$)")


def _is_verb_form(low: str) -> bool:
    return lemmatize(low) in VERB_LEMMAS


class ReferenceDependencyParser:
    """Deterministic rule parser satisfying the DependencyParser port."""

    def split_sentences(self, text: str) -> list[tuple[int, int]]:
        """Character spans of sentences, split at terminal punctuation."""
        spans: list[tuple[int, int]] = []
        start = 0
        for m in _SENTENCE_END.finditer(text):
            end = m.end()
            if text[start:end].strip():
                spans.append((start, end))
            start = end
        if text[start:].strip():
            spans.append((start, len(text)))
        # trim surrounding whitespace from each span
        out = []
        for s, e in spans:
            seg = text[s:e]
            ls = len(seg) - len(seg.lstrip())
            rs = len(seg) - len(seg.rstrip())
            out.append((s + ls, e - rs))
        return out

    def parse(self, text: str) -> list[ParsedToken]:
        if not text or not text.strip():
            raise EmptyInputError("cannot parse empty text")
        raw = tokenize(text)
        pos = self._tag(raw)
        heads, deps = self._attach(raw, pos)
        tokens = [
            ParsedToken(
                index=i,
                text=t.text,
                lemma=lemmatize(t.text),
                pos=pos[i],
                dep_label=deps[i],
                head_index=heads[i],
                start=t.start,
                end=t.end,
            )
            for i, t in enumerate(raw)
        ]
        validate_tree(tokens)
        return tokens

    # -- tagging ---------------------------------------------------------

    def _tag(self, raw: list[RawToken]) -> list[str]:
        n = len(raw)
        pos = ["X"] * n
        for i, t in enumerate(raw):
            word = t.text
            low = word.lower()
            if not any(c.isalnum() for c in word):
                pos[i] = "PUNCT"
            elif word[0].isdigit():
                pos[i] = "NUM"
            elif low in NUMBER_WORDS:
                pos[i] = "NUM"
            elif low in ("'s", "’s"):
                pos[i] = "PART"
            elif low == "to":
                pos[i] = "PART"  # refined below
            elif low == "that":
                pos[i] = "SCONJ"  # refined below
            elif low in DETERMINERS:
                pos[i] = "DET"
            elif low in AUXILIARIES:
                pos[i] = "AUX"
            elif low in PREPOSITIONS:
                pos[i] = "ADP"
            elif low in PRONOUNS:
                pos[i] = "PRON"
            elif low in CCONJ:
                pos[i] = "CCONJ"
            elif low in SCONJ:
                pos[i] = "SCONJ"
            elif low in ADVERBS or low.endswith("ly"):
                pos[i] = "ADV"
            elif low in ADJECTIVES:
                pos[i] = "ADJ"
            elif low.endswith(ADJ_SUFFIXES):
                pos[i] = "ADJ"
            elif _is_verb_form(low) and low != lemmatize(low):
                pos[i] = "VERB"  # inflected known verb
            elif low in VERB_LEMMAS:
                pos[i] = "VERB"  # base form; may be re-tagged NOUN below
            elif word[0].isupper() and i > 0:
                pos[i] = "PROPN"
            elif low.endswith("ing") and _is_verb_form(low):
                pos[i] = "VERB"
            else:
                pos[i] = "NOUN"

        self._fixups(raw, pos)
        return pos

    def _fixups(self, raw: list[RawToken], pos: list[str]) -> None:
        n = len(raw)

        def next_word(i: int) -> int | None:
            for j in range(i + 1, n):
                if pos[j] != "PUNCT":
                    return j
            return None

        for i in range(n):
            low = raw[i].text.lower()
            nxt = next_word(i)
            if low == "to":
                # preposition before a noun phrase, infinitive marker before a verb
                if nxt is not None and pos[nxt] in ("DET", "NOUN", "PROPN", "PRON", "NUM", "ADJ"):
                    pos[i] = "ADP"
                else:
                    pos[i] = "PART"
            elif low == "that":
                if nxt is not None and pos[nxt] in ("NOUN", "PROPN", "ADJ", "NUM"):
                    pos[i] = "DET"

        # base-form verbs in nominal position become nouns
        for i in range(n):
            if pos[i] != "VERB":
                continue
            low = raw[i].text.lower()
            if low not in VERB_LEMMAS:
                continue  # inflected forms stay verbal
            prev = None
            for j in range(i - 1, -1, -1):
                if pos[j] != "PUNCT":
                    prev = j
                    break
            if prev is not None and pos[prev] in ("DET", "ADJ", "NUM", "ADP"):
                pos[i] = "NOUN"
            elif prev is not None and pos[prev] in NOMINAL:
                verb_before = any(pos[j] in ("VERB", "AUX") for j in range(i))
                if verb_before:
                    pos[i] = "NOUN"

        # auxiliaries with no verb to support become main verbs (copula)
        for i in range(n):
            if pos[i] != "AUX":
                continue
            has_verb_after = any(pos[j] == "VERB" for j in range(i + 1, n))
            if not has_verb_after:
                pos[i] = "VERB"

    # -- attachment ------------------------------------------------------

    def _attach(self, raw: list[RawToken], pos: list[str]) -> tuple[list[int], list[str]]:
        n = len(raw)
        heads = [-1] * n
        deps = [""] * n

        # 1. chunk noun phrases; head is the last nominal of the run
        chunks: list[tuple[int, int, int]] = []  # (start, end_inclusive, head)
        i = 0
        while i < n:
            if pos[i] in CHUNKABLE:
                j = i
                # a determiner can only open a chunk, never continue one
                while j + 1 < n and pos[j + 1] in CHUNKABLE and pos[j + 1] != "DET":
                    j += 1
                nominals = [k for k in range(i, j + 1) if pos[k] in NOMINAL]
                if nominals:
                    head = nominals[-1]
                    # tokens after the head (trailing DET/ADJ) start a new run
                    chunks.append((i, head, head))
                    for k in range(i, head):
                        if pos[k] == "DET":
                            heads[k], deps[k] = head, "det"
                        elif pos[k] == "ADJ":
                            heads[k], deps[k] = head, "amod"
                        elif pos[k] == "NUM":
                            heads[k], deps[k] = head, "nummod"
                        else:
                            heads[k], deps[k] = head, "compound"
                    i = j + 1
                    continue
            i += 1

        chunk_heads = [c[2] for c in chunks]

        # 2. verb groups: auxiliaries attach to the next verb
        verbs = [i for i in range(n) if pos[i] == "VERB"]
        for i in range(n):
            if pos[i] == "AUX":
                target = next((v for v in verbs if v > i), None)
                if target is not None:
                    heads[i], deps[i] = target, "aux"
                # orphan AUX was re-tagged VERB in fixups, so target exists

        if verbs:
            root = verbs[0]
        elif chunk_heads:
            root = chunk_heads[0]
        else:
            root = 0
        heads[root], deps[root] = root, "root"

        # 3. clause segmentation: each verb owns the span up to the next verb
        for vi, v in enumerate(verbs):
            if v == root:
                continue
            # conjunction or subordination decides the attachment label
            prev_v = verbs[vi - 1]
            between = range(prev_v + 1, v)
            if any(pos[k] == "CCONJ" for k in between):
                heads[v], deps[v] = prev_v, "conj"
            elif any(pos[k] == "SCONJ" or raw[k].text.lower() == "that" for k in between):
                heads[v], deps[v] = prev_v, "advcl"
            else:
                heads[v], deps[v] = prev_v, "xcomp"

        # passive detection per verb
        passive = set()
        for v in verbs:
            has_be_aux = any(
                deps[k] == "aux" and heads[k] == v and lemmatize(raw[k].text) == "be"
                for k in range(n)
            )
            low = raw[v].text.lower()
            participle = low.endswith(PARTICIPLE_SUFFIXES) or lemmatize(low) != low
            if has_be_aux and participle and low not in VERB_LEMMAS:
                passive.add(v)

        # 4. subjects and objects per clause
        used = set()
        for vi, v in enumerate(verbs):
            clause_start = verbs[vi - 1] + 1 if vi > 0 else 0
            before = [h for h in chunk_heads if clause_start <= h < v and h not in used]
            if before:
                subj = before[-1]
                heads[subj] = v
                deps[subj] = "nsubjpass" if v in passive else "nsubj"
                used.add(subj)
            clause_end = verbs[vi + 1] if vi + 1 < len(verbs) else n
            after = [h for h in chunk_heads if v < h < clause_end and h not in used]
            for h in after:
                gap = range(v + 1, self._chunk_start(chunks, h))
                if any(pos[k] in ("ADP", "SCONJ") for k in gap):
                    break  # prepositional or subordinate territory starts
                heads[h], deps[h] = v, "dobj"
                used.add(h)
                break

        # 5. prepositions and their objects
        for i in range(n):
            if pos[i] != "ADP" or heads[i] != -1:
                continue
            anchor = None
            for j in range(i - 1, -1, -1):
                if j in used or j in verbs or (pos[j] in NOMINAL and j in chunk_heads):
                    anchor = j
                    break
                if pos[j] == "VERB":
                    anchor = j
                    break
            heads[i] = anchor if anchor is not None else root
            deps[i] = "prep"
            nxt = next((h for h in chunk_heads if h > i and heads[h] == -1), None)
            if nxt is not None and not any(
                pos[k] == "ADP" and k != i for k in range(i + 1, self._chunk_start(chunks, nxt))
            ):
                heads[nxt], deps[nxt] = i, "pobj"
                used.add(nxt)

        # 6. possessives: bare NP directly before 's attaches to the next NP head
        for i in range(n):
            if pos[i] == "PART" and raw[i].text.lower() in ("'s", "’s"):
                owner = next((h for h in reversed(chunk_heads) if h < i), None)
                owned = next((h for h in chunk_heads if h > i), None)
                if owner is not None and owned is not None:
                    heads[owner], deps[owner] = owned, "poss"
                    heads[i], deps[i] = owner, "case"
                    used.add(owner)

        # 7. leftover tokens
        for i in range(n):
            if heads[i] != -1:
                continue
            if pos[i] == "PUNCT":
                heads[i], deps[i] = root, "punct"
            elif pos[i] == "ADV":
                target = next((v for v in verbs if v > i), None)
                if target is None:
                    target = next((v for v in reversed(verbs) if v < i), root)
                heads[i], deps[i] = target, "advmod"
            elif pos[i] == "PART":
                target = next((v for v in verbs if v > i), root)
                heads[i], deps[i] = target, "mark"
            elif pos[i] in ("SCONJ", "CCONJ"):
                target = next((v for v in verbs if v > i), root)
                heads[i], deps[i] = target, "mark" if pos[i] == "SCONJ" else "cc"
            elif pos[i] in NOMINAL or pos[i] == "PRON":
                target = next((v for v in reversed(verbs) if v < i), root)
                heads[i], deps[i] = target, "dep"
            else:
                heads[i], deps[i] = root, "dep"

        # self-loops other than root would break the tree; repair defensively
        for i in range(n):
            if heads[i] == i and i != root:
                heads[i], deps[i] = root, "dep"
        self._break_cycles(heads, deps, root)
        return heads, deps

    @staticmethod
    def _chunk_start(chunks: list[tuple[int, int, int]], head: int) -> int:
        for start, _, h in chunks:
            if h == head:
                return start
        return head

    @staticmethod
    def _break_cycles(heads: list[int], deps: list[str], root: int) -> None:
        n = len(heads)
        for i in range(n):
            seen = set()
            cur = i
            while heads[cur] != cur:
                if cur in seen:
                    heads[cur], deps[cur] = root, "dep"
                    break
                seen.add(cur)
                cur = heads[cur]
