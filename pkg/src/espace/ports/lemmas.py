"""Rule-based English lemmatizer.

Deterministic suffix stripping with an irregular-form table and a verb
lemma list used to decide between bare stripping ("opened" -> "open"),
e-restoration ("used" -> "use") and consonant undoubling
("planned" -> "plan"). Good enough for URI minting and lemma-level
matching; not a general-purpose morphological analyzer.
"""

from __future__ import annotations

IRREGULAR = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    "made": "make", "took": "take", "taken": "take", "gave": "give",
    "given": "give", "got": "get", "gotten": "get", "said": "say",
    "saw": "see", "seen": "see", "came": "come", "knew": "know",
    "known": "know", "thought": "think", "found": "find", "told": "tell",
    "became": "become", "left": "leave", "felt": "feel",
    "brought": "bring", "began": "begin", "begun": "begin",
    "kept": "keep", "held": "hold", "wrote": "write", "written": "write",
    "stood": "stand", "heard": "hear", "meant": "mean", "met": "meet",
    "ran": "run", "paid": "pay", "sat": "sit", "spoke": "speak",
    "spoken": "speak", "led": "lead", "grew": "grow", "grown": "grow",
    "lost": "lose", "fell": "fall", "fallen": "fall", "sent": "send",
    "built": "build", "understood": "understand", "drew": "draw",
    "drawn": "draw", "broke": "break", "broken": "break",
    "spent": "spend", "rose": "rise", "risen": "rise", "drove": "drive",
    "driven": "drive", "bought": "buy", "wore": "wear", "worn": "wear",
    "chose": "choose", "chosen": "choose", "owed": "owe", "owing": "owe",
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "lives": "life",
    "wives": "wife", "knives": "knife", "leaves": "leaf", "selves": "self",
    "monies": "money", "fees": "fee", "these": "this", "those": "that",
}

# Words that look inflected but are their own lemma.
KEEP = {
    "news", "series", "species", "analysis", "basis", "status", "bonus",
    "always", "perhaps", "blinds", "lens", "bias", "gas", "its", "his",
    "hers", "ours", "yours", "theirs", "thus", "as", "is", "this",
    "process", "access", "business", "address", "progress", "express",
    "class", "less", "unless", "across", "during", "nothing", "something",
    "anything", "everything", "thing", "king", "string", "ring", "sing",
    "spring", "evening", "morning", "meaning",
}

# Verb lemmas: drive e-restoration/undoubling and help POS tagging.
VERB_LEMMAS = {
    "be", "have", "do", "say", "get", "make", "go", "know", "take",
    "see", "come", "think", "look", "want", "give", "use", "find",
    "tell", "ask", "work", "seem", "feel", "try", "leave", "call",
    "open", "close", "apply", "affect", "lower", "raise", "increase",
    "decrease", "improve", "reduce", "consider", "deny", "approve",
    "reject", "receive", "pay", "borrow", "lend", "owe", "charge",
    "report", "check", "review", "request", "provide", "offer",
    "include", "require", "mean", "help", "show", "expect", "plan",
    "remain", "keep", "hold", "follow", "stop", "create", "allow",
    "add", "spend", "grow", "send", "build", "stay", "fall", "cut",
    "reach", "remove", "measure", "track", "monitor", "update",
    "change", "explain", "describe", "depend", "occur", "happen",
    "cause", "lead", "result", "base", "define", "determine",
    "involve", "relate", "link", "connect", "associate", "compare",
    "indicate", "suggest", "predict", "decide", "submit", "file",
    "sign", "agree", "accept", "decline", "drop", "rise", "run",
    "impact", "influence", "earn", "save", "buy", "sell", "spend",
    "owe", "repay", "refund", "lend", "assess", "evaluate", "rate",
    "score", "count", "record", "store", "state", "note", "list",
    "name", "label", "mark", "write", "read", "learn", "teach",
    "train", "test", "verify", "confirm", "collect", "gather",
    "process", "handle", "manage", "operate", "issue", "grant",
    "assign", "compute", "calculate", "estimate", "compile", "produce",
    "generate", "automate", "act", "serve", "cover", "protect",
    "avoid", "prevent", "limit", "cap", "set", "put", "bring",
    "hear", "meet", "sit", "stand", "speak", "begin", "start", "end",
    "finish", "complete", "continue", "wait", "stay", "move", "turn",
    "appear", "disappear", "become", "remain", "vary", "differ",
    "contain", "carry", "hurt", "harm", "damage", "lose", "win",
    "miss", "fail", "pass", "need", "deposit", "withdraw", "transfer",
    "wish", "hope", "prefer", "choose", "select", "pick", "claim",
    "vary", "shrink", "expand", "extend", "renew", "cancel", "delay",
    "answer", "reply", "respond", "order", "demand", "supply",
    "sleep", "rain", "snow", "live", "stand", "walk", "talk", "play",
}

VOWELS = set("aeiou")


def _restore(stem: str) -> str | None:
    """Resolve a stripped verb stem against the lemma list."""
    if stem in VERB_LEMMAS:
        return stem
    if stem + "e" in VERB_LEMMAS:
        return stem + "e"
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[:-1] in VERB_LEMMAS:
        return stem[:-1]
    return None


def lemmatize(word: str) -> str:
    """Lowercased lemma of a single token."""
    low = word.lower()
    if low in IRREGULAR:
        return IRREGULAR[low]
    if low in KEEP or low in VERB_LEMMAS or len(low) <= 2:
        return low
    if not low[-1].isalpha():
        return low

    # plural / 3rd person -s
    if low.endswith("ies") and len(low) > 4:
        return low[:-3] + "y"
    if low.endswith(("sses", "xes", "zes", "ches", "shes")):
        return low[:-2]
    if low.endswith("ves") and len(low) > 4:
        if low[:-1] in VERB_LEMMAS:  # saves, moves, serves
            return low[:-1]
        return low[:-3] + "f"
    if low.endswith("s") and not low.endswith(("ss", "us", "is", "'s")):
        stem = low[:-1]
        return stem if len(stem) >= 2 else low

    # past tense / participle
    if low.endswith("ied") and len(low) > 4:
        return low[:-3] + "y"
    if low.endswith("ed") and len(low) > 3:
        fixed = _restore(low[:-2])
        if fixed:
            return fixed
        if low[:-1] in VERB_LEMMAS:  # "used" -> "use"
            return low[:-1]
        return low[:-2] if len(low) > 5 else low

    # gerund: only strip when the stem is a known verb
    if low.endswith("ing") and len(low) > 5:
        fixed = _restore(low[:-3])
        if fixed:
            return fixed

    return low


def lemma_key(text: str) -> tuple[str, ...]:
    """Lemma tuple for a multi-word label; underscores and spaces both split."""
    parts = [p for p in text.replace("_", " ").split() if p]
    return tuple(lemmatize(p) for p in parts)
