// JSON documents served by the explanatory-space API.

export interface AnnotationSpan {
  start: number;
  end: number;
  concept_uri: string;
}

export interface AnnotateResponse {
  text: string;
  annotations: AnnotationSpan[];
  html?: string;
}

// Internal summary node: carries a summary plus children.
export interface SummaryTreeNode {
  summary: string;
  children: SummaryTreeChild[];
}

// Leaf: an answer context with provenance.
export interface AnswerLeaf {
  text: string;
  paragraph_id: string;
  score: number;
  triple_id: string;
  snippet: string;
}

export type SummaryTreeChild = SummaryTreeNode | AnswerLeaf;

export function isLeaf(node: SummaryTreeChild): node is AnswerLeaf {
  return !('children' in node);
}

export interface OverviewDoc {
  concept_uri: string;
  label: string;
  abstract: string;
  archetypes: Record<string, SummaryTreeNode>;
  superclasses: string[];
  subclasses: string[];
}

export interface HealthResponse {
  status: string;
  corpus_hash?: string;
  config_hash?: string;
}

// Display order: most specific archetype first.
export const ARCHETYPE_ORDER = [
  'why',
  'what-for',
  'how',
  'who',
  'where',
  'when',
  'what',
] as const;

export const ARCHETYPE_TITLES: Record<string, string> = {
  why: 'Why?',
  'what-for': 'What for?',
  how: 'How?',
  who: 'Who?',
  where: 'Where?',
  when: 'When?',
  what: 'What?',
};
