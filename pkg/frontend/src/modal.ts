// Overview modal: archetype sections in specificity order, taxonomy
// lists, abstract. Text blocks pass back through /annotate so concepts
// inside the modal stay clickable; nested clicks extend the trail.

import type { ApiClient } from './api.js';
import { ApiError } from './api.js';
import { conceptUriFromEvent, renderAnnotatedText } from './annotate.js';
import { renderSummaryTree, type TextRenderer } from './summaryTree.js';
import { NavigationTrail } from './trail.js';
import { ARCHETYPE_ORDER, ARCHETYPE_TITLES, type OverviewDoc } from './types.js';

export class OverviewModal {
  readonly trail = new NavigationTrail();
  private overlay: HTMLDivElement;
  private panel: HTMLDivElement;

  constructor(
    private readonly api: ApiClient,
    host: HTMLElement = document.body,
  ) {
    this.overlay = document.createElement('div');
    this.overlay.className = 'modal-overlay';
    this.overlay.style.display = 'none';
    this.panel = document.createElement('div');
    this.panel.className = 'modal-panel';
    this.overlay.appendChild(this.panel);
    host.appendChild(this.overlay);

    this.overlay.addEventListener('click', (event) => {
      if (event.target === this.overlay) {
        this.close();
      }
    });
    this.panel.addEventListener('click', (event) => {
      const uri = conceptUriFromEvent(event);
      if (uri) {
        event.preventDefault();
        void this.open(uri);
      }
    });
  }

  get element(): HTMLElement {
    return this.overlay;
  }

  isOpen(): boolean {
    return this.overlay.style.display !== 'none';
  }

  /** Fetch and show a concept overview; pushes one trail entry. */
  async open(conceptUri: string): Promise<void> {
    const token = this.trail.begin();
    let doc: OverviewDoc | null = null;
    let failure = '';
    try {
      doc = await this.api.overview(conceptUri);
    } catch (err) {
      failure =
        err instanceof ApiError && err.status === 404
          ? `No overview available for ${conceptUri}.`
          : `Could not load the overview for ${conceptUri}.`;
    }
    if (!this.trail.isCurrent(token)) {
      return; // superseded by a newer action
    }
    this.trail.push(conceptUri);
    this.overlay.style.display = '';
    if (doc === null) {
      this.renderMessage(conceptUri, failure);
    } else {
      await this.renderDoc(doc, token);
    }
  }

  /** Pop the trail and re-render the previous overview, if any. */
  async backOrClose(): Promise<void> {
    const previous = this.trail.back();
    if (previous === null) {
      this.trail.clear();
      this.overlay.style.display = 'none';
      return;
    }
    const token = this.trail.begin();
    const doc = await this.api.overview(previous); // cached: same rendered state
    if (this.trail.isCurrent(token)) {
      await this.renderDoc(doc, token);
    }
  }

  close(): void {
    this.trail.clear();
    this.overlay.style.display = 'none';
  }

  private header(title: string): HTMLElement {
    const bar = document.createElement('div');
    bar.className = 'modal-header';
    const heading = document.createElement('h2');
    heading.textContent = title;
    const spacer = document.createElement('div');
    spacer.className = 'modal-header-spacer';
    const back = document.createElement('button');
    back.type = 'button';
    back.className = 'modal-back';
    back.textContent = this.trail.length > 1 ? '← back' : '← close';
    back.addEventListener('click', () => void this.backOrClose());
    const close = document.createElement('button');
    close.type = 'button';
    close.className = 'modal-close';
    close.textContent = '×';
    close.setAttribute('aria-label', 'close');
    close.addEventListener('click', () => this.close());
    bar.append(back, heading, spacer, close);
    return bar;
  }

  private renderMessage(conceptUri: string, message: string): void {
    this.panel.textContent = '';
    this.panel.appendChild(this.header(conceptUri));
    const note = document.createElement('p');
    note.className = 'modal-missing';
    note.textContent = message;
    this.panel.appendChild(note);
  }

  private annotatedRenderer(token: number): TextRenderer {
    return (target, text) => {
      target.textContent = text;
      if (!text.trim()) {
        return;
      }
      void this.api
        .annotate(text)
        .then((resp) => {
          if (this.trail.isCurrent(token) && target.isConnected) {
            renderAnnotatedText(target, text, resp.annotations);
          }
        })
        .catch(() => {
          /* leave the plain text in place */
        });
    };
  }

  private async renderDoc(doc: OverviewDoc, token: number): Promise<void> {
    const renderText = this.annotatedRenderer(token);
    this.panel.textContent = '';
    this.panel.appendChild(this.header(doc.label));

    if (doc.abstract) {
      const abstract = document.createElement('p');
      abstract.className = 'modal-abstract';
      renderText(abstract, doc.abstract);
      this.panel.appendChild(abstract);
    }

    const known = new Set<string>(Object.keys(doc.archetypes));
    const names: string[] = [
      ...ARCHETYPE_ORDER.filter((name) => known.has(name)),
      ...[...known].filter((name) => !(ARCHETYPE_ORDER as readonly string[]).includes(name)).sort(),
    ];
    for (const name of names) {
      const section = document.createElement('section');
      section.className = 'archetype-section';
      section.dataset.archetype = name;
      const title = document.createElement('h3');
      title.textContent = ARCHETYPE_TITLES[name] ?? name;
      section.appendChild(title);
      section.appendChild(renderSummaryTree(doc.archetypes[name], renderText));
      this.panel.appendChild(section);
    }

    this.panel.appendChild(this.taxonomyList('Superclasses', doc.superclasses));
    this.panel.appendChild(this.taxonomyList('Subclasses', doc.subclasses));
  }

  private taxonomyList(title: string, uris: string[]): HTMLElement {
    const box = document.createElement('section');
    box.className = 'taxonomy-list';
    if (uris.length === 0) {
      return box;
    }
    const heading = document.createElement('h3');
    heading.textContent = title;
    box.appendChild(heading);
    const list = document.createElement('ul');
    for (const uri of uris) {
      const item = document.createElement('li');
      const link = document.createElement('a');
      link.className = 'concept-link';
      link.href = '#';
      link.dataset.conceptUri = uri;
      link.textContent = uri.includes(':') ? uri.split(':', 2)[1].replace(/_/g, ' ') : uri;
      item.appendChild(link);
      list.appendChild(item);
    }
    box.appendChild(list);
    return box;
  }
}
