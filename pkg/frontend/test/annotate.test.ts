import { describe, expect, it } from 'vitest';

import { conceptUriFromEvent, renderAnnotatedText } from '../src/annotate.js';

const TEXT = 'A hard inquiry lowers the credit score.';
const SPANS = [
  { start: 7, end: 14, concept_uri: 'es:inquiry' },
  { start: 26, end: 38, concept_uri: 'es:credit_score' },
];

describe('renderAnnotatedText', () => {
  it('wraps each annotation in a clickable span', () => {
    const target = document.createElement('div');
    const count = renderAnnotatedText(target, TEXT, SPANS);
    expect(count).toBe(2);
    const links = target.querySelectorAll('a.concept-link');
    expect(links.length).toBe(2);
    expect(links[0].textContent).toBe('inquiry');
    expect((links[0] as HTMLElement).dataset.conceptUri).toBe('es:inquiry');
    expect(links[1].textContent).toBe('credit score');
  });

  it('keeps non-annotated text byte-identical', () => {
    const target = document.createElement('div');
    renderAnnotatedText(target, TEXT, SPANS);
    expect(target.textContent).toBe(TEXT);
  });

  it('renders plain text when there are no annotations', () => {
    const target = document.createElement('div');
    expect(renderAnnotatedText(target, TEXT, [])).toBe(0);
    expect(target.textContent).toBe(TEXT);
    expect(target.querySelectorAll('a').length).toBe(0);
  });

  it('never interprets text as HTML', () => {
    const target = document.createElement('div');
    renderAnnotatedText(target, '<b>x</b> inquiry', [
      { start: 9, end: 16, concept_uri: 'es:inquiry' },
    ]);
    expect(target.querySelector('b')).toBeNull();
    expect(target.textContent).toBe('<b>x</b> inquiry');
  });

  it('skips overlapping or out-of-bounds spans', () => {
    const target = document.createElement('div');
    const count = renderAnnotatedText(target, TEXT, [
      { start: 7, end: 14, concept_uri: 'es:inquiry' },
      { start: 10, end: 20, concept_uri: 'es:overlap' },
      { start: 100, end: 120, concept_uri: 'es:outside' },
    ]);
    expect(count).toBe(1);
    expect(target.textContent).toBe(TEXT);
  });

  it('re-rendering produces identical DOM', () => {
    const a = document.createElement('div');
    const b = document.createElement('div');
    renderAnnotatedText(a, TEXT, SPANS);
    renderAnnotatedText(b, TEXT, SPANS);
    expect(a.innerHTML).toBe(b.innerHTML);
  });
});

describe('conceptUriFromEvent', () => {
  it('resolves the clicked concept', () => {
    const target = document.createElement('div');
    document.body.appendChild(target);
    renderAnnotatedText(target, TEXT, SPANS);
    let seen: string | null = null;
    target.addEventListener('click', (event) => {
      seen = conceptUriFromEvent(event);
    });
    (target.querySelector('a.concept-link') as HTMLElement).click();
    expect(seen).toBe('es:inquiry');
    target.remove();
  });

  it('returns null for clicks outside annotations', () => {
    const target = document.createElement('div');
    document.body.appendChild(target);
    renderAnnotatedText(target, TEXT, SPANS);
    let seen: string | null = 'unset' as string | null;
    target.addEventListener('click', (event) => {
      seen = conceptUriFromEvent(event);
    });
    target.dispatchEvent(new MouseEvent('click', { bubbles: true }));
    expect(seen).toBeNull();
    target.remove();
  });
});
