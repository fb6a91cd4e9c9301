"""Template-triple extraction from dependency parses.

The pipeline per sentence: find syntagms (maximal noun-phrase spans),
then, for every pair of syntagms, walk the dependency-tree path between
their heads and turn the ordered path tokens into a predicate template
with the two spans replaced by `{subj}` / `{obj}`. The side reached
through a subject dependency becomes `{subj}`; with no subject edge on
the path, the linearly first span does.

Templates keep original tokens, so a realized triple is always a
(possibly determiner-normalized) subsequence of its source sentence.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from espace.errors import EmptyInputError, EspaceError
from espace.kg.corpus import DocumentCorpus
from espace.kg.model import Concept, KnowledgeGraph, Occurrence, TemplateTriple
from espace.ports.lemmas import lemmatize
from espace.ports.types import DependencyParser, ParsedToken

log = logging.getLogger(__name__)

NOMINAL = {"NOUN", "PROPN"}
MODIFIER_DEPS = {"det", "amod", "compound", "nummod"}
SUBJECT_DEPS = {"nsubj", "nsubjpass", "csubj"}
# function words around path tokens that keep templates grammatical
HALO_DEPS = {"aux", "mark", "advmod", "case", "neg"}

DEFAULT_NAMESPACE = "es"

_URI_TOKEN_SPLIT = re.compile(r"[\s_]+")


@dataclass(frozen=True)
class Syntagm:
    """A noun-phrase span of one sentence, before graph merging."""

    token_indexes: tuple[int, ...]
    head_index: int
    surface: str
    lemma: str
    uri: str
    start: int
    end: int
    tokens: tuple[tuple[str, str], ...]  # (lemma, pos) without determiners


def mint_uri(label: str, namespace: str = DEFAULT_NAMESPACE) -> str:
    """Deterministic concept URI: lemmatize, lowercase, underscore-join."""
    if not label or not label.strip():
        raise EmptyInputError("cannot mint a URI from an empty label")
    body = label.split(":", 1)[1] if ":" in label else label
    parts = [p for p in _URI_TOKEN_SPLIT.split(body) if p]
    if not parts:
        raise EmptyInputError("cannot mint a URI from an empty label")
    return f"{namespace}:" + "_".join(lemmatize(p) for p in parts)


def extract_syntagms(
    tokens: list[ParsedToken], namespace: str = DEFAULT_NAMESPACE
) -> list[Syntagm]:
    """Maximal noun-phrase spans: nominal head plus contiguous modifiers."""
    syntagms: list[Syntagm] = []
    for tok in tokens:
        if tok.pos not in NOMINAL or tok.dep_label in MODIFIER_DEPS:
            continue
        span = [tok.index]
        for other in tokens:
            if other.head_index == tok.index and other.dep_label in MODIFIER_DEPS:
                span.append(other.index)
        span.sort()
        # keep only the contiguous run ending at the head
        run = [tok.index]
        for idx in reversed(span):
            if idx == run[0] - 1:
                run.insert(0, idx)
            elif idx < run[0] - 1:
                break
        # the lemma keeps only the nominal core; determiners, adjectives
        # and numerals stay in the span (and its surface) but not the lemma
        content = [tokens[i] for i in run if tokens[i].pos in NOMINAL]
        if not content:
            continue
        lemma = " ".join(t.lemma for t in content)
        first, last = tokens[run[0]], tokens[run[-1]]
        syntagms.append(
            Syntagm(
                token_indexes=tuple(run),
                head_index=tok.index,
                surface=" ".join(tokens[i].text for i in run),
                lemma=lemma,
                uri=mint_uri(lemma, namespace),
                start=first.start,
                end=last.end,
                tokens=tuple((t.lemma, t.pos) for t in content),
            )
        )
    syntagms.sort(key=lambda s: s.start)
    return syntagms


def _path_to_root(tokens: list[ParsedToken], index: int) -> list[int]:
    path = [index]
    cur = index
    while tokens[cur].head_index != cur:
        cur = tokens[cur].head_index
        path.append(cur)
    return path


def _tree_path(tokens: list[ParsedToken], a: int, b: int) -> list[int]:
    """Token indexes on the tree path between a and b, inclusive."""
    up_a = _path_to_root(tokens, a)
    up_b = _path_to_root(tokens, b)
    in_a = set(up_a)
    lca = next(i for i in up_b if i in in_a)
    part_a = up_a[: up_a.index(lca) + 1]
    part_b = up_b[: up_b.index(lca)]
    return part_a + list(reversed(part_b))


def _subject_side(tokens: list[ParsedToken], path: list[int], a: int, b: int) -> int:
    """Return the index (a or b) whose branch carries a subject dependency."""
    # the LCA is the unique path node whose head is off-path or itself
    on_path = set(path)
    lca = path[0]
    for i in path:
        head = tokens[i].head_index
        if head == i or head not in on_path:
            lca = i
            break
    for endpoint in (a, b):
        cur = endpoint
        while cur != lca:
            if tokens[cur].dep_label in SUBJECT_DEPS:
                return endpoint
            cur = tokens[cur].head_index
    return a if tokens[a].start <= tokens[b].start else b


def extract_template_triples(
    tokens: list[ParsedToken],
    syntagms: list[Syntagm],
    sentence_id: str,
    paragraph_id: str,
    id_start: int = 0,
) -> list[TemplateTriple]:
    """One triple per connected syntagm pair of the sentence."""
    triples: list[TemplateTriple] = []
    counter = id_start
    seen: set[tuple[str, str, str]] = set()
    for i in range(len(syntagms)):
        for j in range(i + 1, len(syntagms)):
            s_a, s_b = syntagms[i], syntagms[j]
            if s_a.uri == s_b.uri:
                continue
            path = _tree_path(tokens, s_a.head_index, s_b.head_index)
            subj = _subject_side(tokens, path, s_a.head_index, s_b.head_index)
            subj_syn, obj_syn = (s_a, s_b) if subj == s_a.head_index else (s_b, s_a)

            span_tokens = set(s_a.token_indexes) | set(s_b.token_indexes)
            body = [idx for idx in path if idx not in span_tokens]
            halo = [
                t.index
                for t in tokens
                if t.head_index in set(path) - span_tokens
                and t.dep_label in HALO_DEPS
                and t.index not in span_tokens
            ]
            ordered = sorted(set(body) | set(halo))

            pieces: list[tuple[int, str]] = [(idx, tokens[idx].text) for idx in ordered]
            pieces.append((subj_syn.token_indexes[0], "{subj}"))
            pieces.append((obj_syn.token_indexes[0], "{obj}"))
            pieces.sort(key=lambda p: p[0])
            template = " ".join(text for _, text in pieces)

            key = (subj_syn.uri, template, obj_syn.uri)
            if key in seen:
                continue
            seen.add(key)
            triples.append(
                TemplateTriple(
                    triple_id=f"t{counter:06d}",
                    subject_uri=subj_syn.uri,
                    template=template,
                    object_uri=obj_syn.uri,
                    sentence_id=sentence_id,
                    paragraph_id=paragraph_id,
                )
            )
            counter += 1
    return triples


def realize_triple(triple: TemplateTriple, kg: KnowledgeGraph) -> str:
    """Fill the template with the concepts' surface forms.

    Prefers the surface from the triple's own sentence; concepts without
    an occurrence there fall back to their canonical label.
    """
    subj = kg.concept(triple.subject_uri)
    obj = kg.concept(triple.object_uri)

    def surface(concept: Concept) -> str:
        for occ in concept.occurrences:
            if occ.sentence_id == triple.sentence_id:
                return occ.surface
        return concept.label

    return triple.template.replace("{subj}", surface(subj)).replace(
        "{obj}", surface(obj)
    )


def add_composition_subclasses(
    concepts: dict[str, Concept],
    subclass_edges: set[tuple[str, str]],
    source_edges: set[tuple[str, str]],
    namespace: str = DEFAULT_NAMESPACE,
) -> None:
    """Link multi-token concepts to their nominal single-token constituents.

    Creates the constituent concepts when absent, sourcing them from the
    composite's own occurrences (the constituent token does occur there).
    """
    for uri in sorted(concepts):
        concept = concepts[uri]
        if len(concept.tokens) < 2:
            continue
        for lemma, pos in concept.tokens:
            if pos not in NOMINAL:
                continue
            part_uri = mint_uri(lemma, namespace)
            if part_uri == uri:
                continue
            if part_uri not in concepts:
                occs = []
                for occ in concept.occurrences:
                    offset = occ.surface.lower().find(lemma.split()[0])
                    start = occ.start + (offset if offset >= 0 else 0)
                    occs.append(
                        Occurrence(occ.sentence_id, start, start + len(lemma), lemma)
                    )
                concepts[part_uri] = Concept(
                    uri=part_uri,
                    label=lemma,
                    tokens=((lemma, pos),),
                    occurrences=tuple(occs),
                )
                for occ in occs:
                    source_edges.add((part_uri, occ.sentence_id))
            subclass_edges.add((uri, part_uri))


def build_graph(
    corpus: DocumentCorpus,
    parser: DependencyParser,
    namespace: str = DEFAULT_NAMESPACE,
) -> KnowledgeGraph:
    """Run extraction over every sentence and merge into one graph.

    Per-sentence parser failures are logged and skipped; the build never
    aborts on a single bad sentence.
    """
    concepts: dict[str, Concept] = {}
    triples: list[TemplateTriple] = []
    subclass_edges: set[tuple[str, str]] = set()
    source_edges: set[tuple[str, str]] = set()
    counter = 0

    for doc in corpus.documents:
        for para in doc.paragraphs:
            for sent in para.sentences:
                try:
                    tokens = parser.parse(sent.text)
                except (EmptyInputError, EspaceError, ValueError) as exc:
                    log.warning("skipping sentence %s: %s", sent.sentence_id, exc)
                    continue
                syntagms = [
                    Syntagm(
                        token_indexes=s.token_indexes,
                        head_index=s.head_index,
                        surface=sent.text[s.start:s.end],
                        lemma=s.lemma,
                        uri=s.uri,
                        start=s.start,
                        end=s.end,
                        tokens=s.tokens,
                    )
                    for s in extract_syntagms(tokens, namespace)
                ]
                for syn in syntagms:
                    occ = Occurrence(
                        sentence_id=sent.sentence_id,
                        start=syn.start,
                        end=syn.end,
                        surface=syn.surface,
                    )
                    if syn.uri in concepts:
                        prev = concepts[syn.uri]
                        if occ not in prev.occurrences:
                            concepts[syn.uri] = Concept(
                                uri=prev.uri,
                                label=prev.label,
                                tokens=prev.tokens,
                                occurrences=prev.occurrences + (occ,),
                            )
                    else:
                        concepts[syn.uri] = Concept(
                            uri=syn.uri,
                            label=syn.lemma,
                            tokens=syn.tokens,
                            occurrences=(occ,),
                        )
                    source_edges.add((syn.uri, sent.sentence_id))
                new_triples = extract_template_triples(
                    tokens, syntagms, sent.sentence_id, para.paragraph_id, counter
                )
                counter += len(new_triples)
                triples.extend(new_triples)
                for t in new_triples:
                    source_edges.add((t.triple_id, sent.sentence_id))

    add_composition_subclasses(concepts, subclass_edges, source_edges, namespace)
    return KnowledgeGraph.build(concepts, triples, subclass_edges, source_edges)
