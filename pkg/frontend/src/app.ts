/** Browser bootstrap: wires the query box, hash routes, and the trail.
 *
 * Kept separate from dispatch.ts so every rendering decision is testable
 * without a DOM. The API base URL comes from data-api-base on <body>
 * (empty means same origin, the layout used by `scholargraph serve
 * --static`).
 */

import { ApiClient } from './api.js';
import { openProfile, submitQuery, type View } from './dispatch.js';

interface TrailStop {
  label: string;
  route: string | null;
}

const ROUTE = /^#\/(paper|author|venue)\/(.+)$/;

export function parseRoute(hash: string): { kind: 'paper' | 'author' | 'venue'; id: string } | null {
  const match = ROUTE.exec(hash);
  if (!match) {
    return null;
  }
  return { kind: match[1] as 'paper' | 'author' | 'venue', id: decodeURIComponent(match[2]!) };
}

function start(): void {
  const base = document.body.dataset['apiBase'] ?? '';
  const client = new ApiClient(base);
  const form = document.querySelector<HTMLFormElement>('#query-form');
  const input = document.querySelector<HTMLInputElement>('#query-input');
  const result = document.querySelector<HTMLElement>('#result');
  const trailHost = document.querySelector<HTMLElement>('#trail');
  if (!form || !input || !result || !trailHost) {
    return;
  }

  const trail: TrailStop[] = [];
  let lastAction: (() => void) | null = null;

  function renderTrail(): void {
    trailHost!.innerHTML = trail
      .map((stop, i) =>
        stop.route && i < trail.length - 1
          ? `<a href="${stop.route}">${stop.label}</a>`
          : `<span>${stop.label}</span>`,
      )
      .join(' › ');
  }

  function show(view: View, label: string): void {
    result!.innerHTML = view.html;
    trail.push({ label, route: view.route ?? null });
    if (trail.length > 8) {
      trail.shift();
    }
    renderTrail();
    const retry = result!.querySelector<HTMLButtonElement>('[data-action="retry"]');
    if (retry && lastAction) {
      retry.addEventListener('click', () => lastAction && lastAction());
    }
  }

  function runQuery(text: string): void {
    lastAction = () => runQuery(text);
    void submitQuery(client, text).then((view) => show(view, text));
  }

  function runRoute(kind: 'paper' | 'author' | 'venue', id: string): void {
    lastAction = () => runRoute(kind, id);
    void openProfile(client, kind, id).then((view) => show(view, `${kind} ${id}`));
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const text = input.value.trim();
    if (text) {
      runQuery(text);
    }
  });

  window.addEventListener('hashchange', () => {
    const route = parseRoute(window.location.hash);
    if (route) {
      runRoute(route.kind, route.id);
    }
  });

  const initial = parseRoute(window.location.hash);
  if (initial) {
    runRoute(initial.kind, initial.id);
  }
}

if (typeof document !== 'undefined' && typeof window !== 'undefined') {
  if (document.readyState === 'loading') {
    document.addEventListener('DOMContentLoaded', start);
  } else {
    start();
  }
}
