"""Document corpus model and ingestion.

Documents arrive as plain text or HTML; HTML is stripped, block
elements become paragraph breaks, and the parser port splits sentences.
All identifiers are assigned in reading order, so re-ingesting the same
input reproduces the same ids and spans.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser

from espace.errors import EmptyCorpusError
from espace.ports.types import DependencyParser


@dataclass(frozen=True)
class Sentence:
    sentence_id: str
    paragraph_id: str
    start: int  # char offsets within the paragraph text
    end: int
    text: str


@dataclass(frozen=True)
class Paragraph:
    paragraph_id: str
    text: str
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class Document:
    doc_id: str
    title: str
    paragraphs: tuple[Paragraph, ...]


@dataclass(frozen=True)
class DocumentCorpus:
    documents: tuple[Document, ...]
    _sentences: dict = field(default_factory=dict, repr=False, compare=False)
    _paragraphs: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for doc in self.documents:
            for para in doc.paragraphs:
                self._paragraphs[para.paragraph_id] = para
                for sent in para.sentences:
                    self._sentences[sent.sentence_id] = sent

    def sentences(self):
        return list(self._sentences.values())

    def sentence(self, sentence_id: str) -> Sentence:
        return self._sentences[sentence_id]

    def paragraph(self, paragraph_id: str) -> Paragraph:
        return self._paragraphs[paragraph_id]

    def has_sentence(self, sentence_id: str) -> bool:
        return sentence_id in self._sentences


_BLOCK_TAGS = {
    "p", "div", "br", "li", "ul", "ol", "h1", "h2", "h3", "h4", "h5",
    "h6", "tr", "table", "section", "article", "header", "footer",
    "blockquote", "pre",
}
_SKIP_TAGS = {"script", "style"}
_HTML_HINT = re.compile(r"<\s*(?:p|div|br|html|body|h[1-6]|li|ul|ol|table|span|a)\b", re.IGNORECASE)


class _TextExtractor(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.parts: list[str] = []
        self._skipping = 0

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skipping += 1
        elif tag in _BLOCK_TAGS:
            self.parts.append("\n\n")

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS and self._skipping:
            self._skipping -= 1
        elif tag in _BLOCK_TAGS:
            self.parts.append("\n\n")

    def handle_data(self, data):
        if not self._skipping:
            self.parts.append(data)


def strip_html(raw: str) -> str:
    extractor = _TextExtractor()
    extractor.feed(raw)
    extractor.close()
    return "".join(extractor.parts)


def looks_like_html(raw: str) -> bool:
    return bool(_HTML_HINT.search(raw))


_PARAGRAPH_SPLIT = re.compile(r"\n\s*\n")


def ingest_corpus(
    raw_documents: list[tuple[str, str]], parser: DependencyParser
) -> DocumentCorpus:
    """Build a corpus from (title, plain text or HTML) pairs."""
    documents: list[Document] = []
    for d_idx, (title, raw) in enumerate(raw_documents):
        text = strip_html(raw) if looks_like_html(raw) else raw
        doc_id = f"d{d_idx}"
        paragraphs: list[Paragraph] = []
        p_idx = 0
        for block in _PARAGRAPH_SPLIT.split(text):
            block = block.strip()
            if not block:
                continue
            block = re.sub(r"\s+", " ", block)
            paragraph_id = f"{doc_id}:p{p_idx}"
            sentences = tuple(
                Sentence(
                    sentence_id=f"{paragraph_id}:s{s_idx}",
                    paragraph_id=paragraph_id,
                    start=s,
                    end=e,
                    text=block[s:e],
                )
                for s_idx, (s, e) in enumerate(parser.split_sentences(block))
            )
            paragraphs.append(Paragraph(paragraph_id, block, sentences))
            p_idx += 1
        if paragraphs:
            documents.append(Document(doc_id, title, tuple(paragraphs)))
    if not documents:
        raise EmptyCorpusError("no non-empty documents to ingest")
    return DocumentCorpus(tuple(documents))
