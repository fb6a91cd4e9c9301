// Render text with its concept annotations as clickable spans.

import type { AnnotationSpan } from './types.js';

export const CONCEPT_LINK_CLASS = 'concept-link';

/**
 * Fill `target` with `text`, wrapping each annotated span in a
 * clickable element carrying the concept URI. Non-annotated text is
 * inserted as plain text nodes (no HTML interpretation).
 */
export function renderAnnotatedText(
  target: HTMLElement,
  text: string,
  annotations: AnnotationSpan[],
): number {
  target.textContent = '';
  const ordered = [...annotations].sort((a, b) => a.start - b.start);
  let cursor = 0;
  let rendered = 0;
  for (const ann of ordered) {
    if (ann.start < cursor || ann.end > text.length) {
      continue; // overlapping or out-of-bounds spans are server bugs; skip
    }
    if (ann.start > cursor) {
      target.appendChild(document.createTextNode(text.slice(cursor, ann.start)));
    }
    const link = document.createElement('a');
    link.className = CONCEPT_LINK_CLASS;
    link.href = '#';
    link.dataset.conceptUri = ann.concept_uri;
    link.textContent = text.slice(ann.start, ann.end);
    target.appendChild(link);
    cursor = ann.end;
    rendered += 1;
  }
  if (cursor < text.length) {
    target.appendChild(document.createTextNode(text.slice(cursor)));
  }
  return rendered;
}

/** The concept URI of a click on an annotated span, if any. */
export function conceptUriFromEvent(event: Event): string | null {
  const element = (event.target as HTMLElement | null)?.closest?.(
    `.${CONCEPT_LINK_CLASS}`,
  ) as HTMLElement | null;
  return element?.dataset.conceptUri ?? null;
}
