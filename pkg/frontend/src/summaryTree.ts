// Expandable summary tree: only root summaries are visible initially;
// expanding a node reveals exactly its children, idempotently.

import { isLeaf, type SummaryTreeChild, type SummaryTreeNode } from './types.js';

export const EXPANDER_CLASS = 'tree-expander';
export const CHILDREN_CLASS = 'tree-children';
export const NODE_CLASS = 'tree-node';
export const LEAF_CLASS = 'tree-leaf';

export type TextRenderer = (target: HTMLElement, text: string) => void;

const plainText: TextRenderer = (target, text) => {
  target.textContent = text;
};

function renderChild(child: SummaryTreeChild, renderText: TextRenderer): HTMLElement {
  if (isLeaf(child)) {
    const leaf = document.createElement('div');
    leaf.className = `${NODE_CLASS} ${LEAF_CLASS}`;
    const body = document.createElement('div');
    body.className = 'leaf-text';
    renderText(body, child.text);
    const provenance = document.createElement('div');
    provenance.className = 'leaf-provenance';
    provenance.textContent = `source: ${child.paragraph_id} · pertinence ${child.score.toFixed(3)}`;
    leaf.append(body, provenance);
    return leaf;
  }
  return renderSummaryTree(child, renderText);
}

/**
 * Build the DOM for one summary node. Children are created lazily on
 * first expansion and toggled afterwards, so expanding twice never
 * duplicates them.
 */
export function renderSummaryTree(
  node: SummaryTreeNode,
  renderText: TextRenderer = plainText,
): HTMLElement {
  const root = document.createElement('div');
  root.className = NODE_CLASS;

  const header = document.createElement('div');
  header.className = 'tree-header';

  const summary = document.createElement('span');
  summary.className = 'tree-summary';
  renderText(summary, node.summary);

  if (node.children.length === 0) {
    header.appendChild(summary);
    root.appendChild(header);
    return root;
  }

  const expander = document.createElement('button');
  expander.type = 'button';
  expander.className = EXPANDER_CLASS;
  expander.textContent = '+';
  expander.setAttribute('aria-expanded', 'false');
  header.append(expander, summary);
  root.appendChild(header);

  let childBox: HTMLDivElement | null = null;
  expander.addEventListener('click', (event) => {
    event.preventDefault();
    event.stopPropagation();
    if (childBox === null) {
      childBox = document.createElement('div');
      childBox.className = CHILDREN_CLASS;
      childBox.style.display = 'none'; // the toggle below reveals it
      for (const child of node.children) {
        childBox.appendChild(renderChild(child, renderText));
      }
      root.appendChild(childBox);
    }
    const expanded = childBox.style.display !== 'none';
    childBox.style.display = expanded ? 'none' : '';
    expander.textContent = expanded ? '+' : '−';
    expander.setAttribute('aria-expanded', String(!expanded));
  });

  return root;
}
