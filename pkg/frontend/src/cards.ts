/** HTML string renderers for answer and profile cards.
 *
 * Pure functions of API payloads: every number shown comes from a payload
 * field, nothing is recomputed client-side. Entity mentions link to hash
 * routes (#/paper/P1 and friends) so each card feeds the next query.
 */

import { impactFactorChart, yearBarChart } from './charts.js';
import type {
  AnswerPayload,
  AuthorProfile,
  PaperItem,
  PaperProfile,
  SearchHit,
  VenueProfile,
} from './types.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function link(kind: string, id: string, label: string): string {
  return `<a href="#/${kind}/${encodeURIComponent(id)}" data-kind="${kind}" data-id="${escapeHtml(id)}">${escapeHtml(label)}</a>`;
}

function paperLine(p: PaperItem): string {
  const year = p.year === null ? '' : ` (${p.year})`;
  return (
    `<li>${link('paper', p.id, p.title)}${year}` +
    `<span class="cites">${p.citations} citation${p.citations === 1 ? '' : 's'}</span></li>`
  );
}

function bindingsLine(answer: AnswerPayload): string {
  if (answer.bindings.length === 0) {
    return '';
  }
  const parts = answer.bindings.map((b) => escapeHtml(b.display)).join(', ');
  return `<p class="bindings">about ${parts}</p>`;
}

export function answerCard(answer: AnswerPayload): string {
  const result = answer.result;
  let body: string;
  if ('answer' in result) {
    const badge = result.answer ? 'yes' : 'no';
    body = `<p class="badge badge-${badge}">${badge}</p><p class="detail">${result.count} matching paper${result.count === 1 ? '' : 's'}</p>`;
  } else if ('points' in result) {
    body = yearBarChart(result.points, 'papers per year');
  } else if ('entities' in result) {
    body = `<ul class="compare">${result.entities
      .map((e) => `<li><span class="label">${escapeHtml(e.display)}</span><span class="value">${e.count}</span></li>`)
      .join('')}</ul>`;
  } else if ('papers' in result) {
    body =
      result.papers.length === 0
        ? '<p class="detail">No papers matched.</p>'
        : `<ol class="papers">${result.papers.map(paperLine).join('')}</ol>`;
  } else {
    body = `<p class="scalar">${result.count}</p>`;
  }
  return `<section class="card card-answer" data-card="answer">${bindingsLine(answer)}${body}</section>`;
}

export function paperListCard(query: string, hits: SearchHit[]): string {
  const items = hits
    .filter((h) => h.kind === 'paper')
    .map(
      (h) =>
        `<li>${link('paper', h.id, h.display)}${h.year === null ? '' : ` (${h.year})`}` +
        `<span class="cites">${h.popularity} citation${h.popularity === 1 ? '' : 's'}</span></li>`,
    )
    .join('');
  return (
    `<section class="card card-papers" data-card="papers">` +
    `<h2>Papers matching “${escapeHtml(query)}”</h2><ol class="papers">${items}</ol></section>`
  );
}

export function paperCard(p: PaperProfile): string {
  const authors = p.authors.map((a) => link('author', a.id, a.display)).join(', ');
  const venue = p.venue
    ? `${link('venue', p.venue.id, p.venue.display)}${p.year === null ? '' : ` ${p.year}`}`
    : p.year === null
      ? ''
      : String(p.year);
  const fields = p.fields.length
    ? `<p class="fields">${p.fields.map((f) => `<span class="chip">${escapeHtml(f.display)}</span>`).join(' ')}</p>`
    : '';
  const abstract = p.abstract ? `<p class="abstract">${escapeHtml(p.abstract)}</p>` : '';
  const citers =
    p.summary.length === 0
      ? '<p class="detail">No incoming citations yet.</p>'
      : `<ul class="summary">${p.summary
          .map((s) => `<li>“${escapeHtml(s.sentence)}” — ${link('paper', s.source, s.source)}</li>`)
          .join('')}</ul>`;
  const coCited = p.co_cited.length
    ? `<p class="co-cited">Often cited with: ${p.co_cited
        .map((c) => `${link('paper', c.id, c.id)} (${c.count})`)
        .join(', ')}</p>`
    : '';
  const sentiment =
    p.sentiment.contexts === 0
      ? ''
      : `<p class="sentiment">Citation sentiment ${p.sentiment.mean.toFixed(2)} over ${p.sentiment.contexts} context${p.sentiment.contexts === 1 ? '' : 's'}</p>`;
  return (
    `<section class="card card-paper" data-card="paper">` +
    `<h2>${escapeHtml(p.title)}</h2>` +
    `<p class="meta">${authors}${venue ? ` · ${venue}` : ''}</p>` +
    fields +
    abstract +
    `<p class="stat">${p.citation_count} citation${p.citation_count === 1 ? '' : 's'}</p>` +
    yearBarChart(p.citations_by_year, 'citations per year') +
    `<h3>Cited as</h3>${citers}` +
    coCited +
    sentiment +
    `</section>`
  );
}

export function authorCard(a: AuthorProfile): string {
  const collaborators = a.collaborators.length
    ? `<ul class="collaborators">${a.collaborators
        .map(
          (c) =>
            `<li>${link('author', c.id, c.display)}<span class="value">${c.joint_papers} joint</span></li>`,
        )
        .join('')}</ul>`
    : '<p class="detail">No collaborators recorded.</p>';
  const papers = a.papers.map((pid) => `<li>${link('paper', pid, pid)}</li>`).join('');
  const topics = Object.entries(a.topics)
    .map(([year, byField]) => {
      const inner = Object.entries(byField)
        .map(([field, count]) => `${escapeHtml(field)} ×${count}`)
        .join(', ');
      return `<li><span class="label">${year}</span> ${inner}</li>`;
    })
    .join('');
  return (
    `<section class="card card-author" data-card="author">` +
    `<h2>${escapeHtml(a.display)}</h2>` +
    `<p class="stat">h-index <strong>${a.h_index}</strong> · ${a.paper_count} paper${a.paper_count === 1 ? '' : 's'} · ${a.citations_received} citation${a.citations_received === 1 ? '' : 's'} received</p>` +
    yearBarChart(a.publications_by_year, 'publications per year') +
    yearBarChart(a.citations_by_year, 'citations received per year') +
    `<h3>Collaborators</h3>${collaborators}` +
    `<h3>Papers</h3><ol class="papers">${papers}</ol>` +
    (topics ? `<h3>Topics</h3><ul class="topics">${topics}</ul>` : '') +
    `</section>`
  );
}

export function venueCard(v: VenueProfile): string {
  const partners = v.collaborating_venues.length
    ? `<ul class="partners">${v.collaborating_venues
        .map(
          (p) =>
            `<li>${link('venue', p.id, p.display)}<span class="value">${p.shared_authors} shared author${p.shared_authors === 1 ? '' : 's'}</span></li>`,
        )
        .join('')}</ul>`
    : '<p class="detail">No partner venues.</p>';
  const held =
    v.recently_held_year === null ? '' : ` · most recently held ${v.recently_held_year}`;
  return (
    `<section class="card card-venue" data-card="venue">` +
    `<h2>${escapeHtml(v.display)}</h2>` +
    `<p class="stat">${v.paper_count} paper${v.paper_count === 1 ? '' : 's'}${held}</p>` +
    impactFactorChart(v.impact_factors, 'impact factor') +
    yearBarChart(v.publications_by_year, 'publications per year') +
    `<h3>Venues sharing authors</h3>${partners}` +
    `</section>`
  );
}

export function noResultsCard(query: string): string {
  return (
    `<section class="card card-empty" data-card="empty">` +
    `<p>Nothing matched “${escapeHtml(query)}”. Try a paper keyword, an author, or a venue name.</p></section>`
  );
}

export function errorBanner(message: string, retryable: boolean): string {
  const retry = retryable ? '<button class="retry" data-action="retry">Retry</button>' : '';
  return (
    `<section class="card card-error" role="alert" data-card="error">` +
    `<p>${escapeHtml(message)}</p>${retry}</section>`
  );
}

export function notFoundCard(kind: string, id: string): string {
  return (
    `<section class="card card-error" data-card="not-found">` +
    `<p>No ${escapeHtml(kind)} “${escapeHtml(id)}” in this graph.</p></section>`
  );
}
