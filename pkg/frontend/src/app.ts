// Application bootstrap: render the explanans with clickable concept
// annotations; clicks open overview modals. If the service is down the
// text still renders, with a visible degraded-mode notice.

import { ApiClient } from './api.js';
import { conceptUriFromEvent, renderAnnotatedText } from './annotate.js';
import { OverviewModal } from './modal.js';

export interface ExplanationView {
  container: HTMLElement;
  modal: OverviewModal;
  annotationCount: number;
  degraded: boolean;
}

/**
 * Render `text` into `container`: annotation spans become clickable
 * elements, everything else is untouched plain text.
 */
export async function renderExplanans(
  container: HTMLElement,
  text: string,
  api: ApiClient,
  modalHost?: HTMLElement,
): Promise<ExplanationView> {
  const modal = new OverviewModal(api, modalHost ?? container.ownerDocument.body);
  const view: ExplanationView = {
    container,
    modal,
    annotationCount: 0,
    degraded: false,
  };

  container.textContent = '';
  const body = document.createElement('div');
  body.className = 'explanans-text';

  try {
    const resp = await api.annotate(text);
    view.annotationCount = renderAnnotatedText(body, text, resp.annotations);
  } catch {
    view.degraded = true;
    body.textContent = text;
    const notice = document.createElement('div');
    notice.className = 'degraded-notice';
    notice.setAttribute('role', 'alert');
    notice.textContent =
      'Concept exploration is unavailable right now; showing the plain explanation.';
    container.appendChild(notice);
  }
  container.appendChild(body);

  body.addEventListener('click', (event) => {
    const uri = conceptUriFromEvent(event);
    if (uri) {
      event.preventDefault();
      void modal.open(uri);
    }
  });
  return view;
}

/** Entry point for the shipped page. */
export async function boot(): Promise<void> {
  const container = document.getElementById('explanans');
  if (!container) {
    return;
  }
  const api = new ApiClient('');
  const source = document.getElementById('explanans-source');
  const text = (source?.textContent ?? container.textContent ?? '').trim();
  await renderExplanans(container, text, api);
}

if (typeof document !== 'undefined' && document.readyState !== 'loading') {
  void boot();
} else if (typeof document !== 'undefined') {
  document.addEventListener('DOMContentLoaded', () => void boot());
}
