import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { renderExplanans } from '../src/app.js';
import { installMockService, tick } from './mockService.js';

const EXPLANANS =
  'A hard inquiry lowers the credit score. Reducing the number of inquiry events helps the score.';

async function settle(rounds = 4): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await tick();
  }
}

describe('renderExplanans', () => {
  beforeEach(() => {
    document.body.innerHTML = '<div id="root"></div>';
  });

  it('wraps each annotation as a clickable span', async () => {
    installMockService();
    const container = document.getElementById('root')!;
    const view = await renderExplanans(container, EXPLANANS, new ApiClient(''));
    const links = container.querySelectorAll('a.concept-link');
    expect(view.annotationCount).toBe(links.length);
    expect(links.length).toBe(4); // inquiry, credit score, inquiry, score
    expect(view.degraded).toBe(false);
    expect(container.textContent).toContain(EXPLANANS);
  });

  it('re-rendering the same input yields identical DOM', async () => {
    installMockService();
    const container = document.getElementById('root')!;
    await renderExplanans(container, EXPLANANS, new ApiClient(''));
    const first = container.innerHTML;
    await renderExplanans(container, EXPLANANS, new ApiClient(''));
    expect(container.innerHTML).toBe(first);
  });

  it('falls back to plain text with a notice when the service is down', async () => {
    installMockService({}, { failAnnotate: true });
    const container = document.getElementById('root')!;
    const view = await renderExplanans(container, EXPLANANS, new ApiClient(''));
    expect(view.degraded).toBe(true);
    expect(container.querySelectorAll('a.concept-link').length).toBe(0);
    expect(container.textContent).toContain(EXPLANANS);
    const notice = container.querySelector('.degraded-notice');
    expect(notice).not.toBeNull();
    expect(notice!.textContent).toContain('unavailable');
  });

  it('clicking an annotation opens a populated modal', async () => {
    installMockService();
    const container = document.getElementById('root')!;
    const view = await renderExplanans(container, EXPLANANS, new ApiClient(''));
    const link = container.querySelector(
      'a.concept-link[data-concept-uri="es:inquiry"]',
    ) as HTMLElement;
    link.click();
    await settle();
    expect(view.modal.isOpen()).toBe(true);
    expect(view.modal.trail.entries()).toEqual(['es:inquiry']);
    expect(document.querySelector('.modal-header h2')?.textContent).toBe('inquiry');
    expect(document.querySelectorAll('.archetype-section').length).toBeGreaterThan(0);
  });

  it('every clickable span resolves to an overview or the inline message', async () => {
    installMockService();
    const container = document.getElementById('root')!;
    const view = await renderExplanans(container, EXPLANANS, new ApiClient(''));
    const uris = [...container.querySelectorAll('a.concept-link')].map(
      (el) => (el as HTMLElement).dataset.conceptUri!,
    );
    for (const uri of new Set(uris)) {
      await view.modal.open(uri);
      await settle();
      const missing = document.querySelector('.modal-missing');
      const header = document.querySelector('.modal-header h2');
      expect(missing !== null || header !== null).toBe(true);
      view.modal.close();
    }
  });
});
