import { describe, expect, it } from 'vitest';

import {
  answerCard,
  authorCard,
  escapeHtml,
  paperCard,
  paperListCard,
  venueCard,
} from '../src/cards.js';
import type {
  AnswerPayload,
  AuthorProfile,
  PaperProfile,
  SearchPayload,
  VenueProfile,
} from '../src/types.js';
import { payloadOf } from './helpers.js';

describe('answerCard', () => {
  it('renders a count answer as a scalar with its binding', () => {
    const html = answerCard(payloadOf<AnswerPayload>('nlq_count_ann'));
    expect(html).toContain('data-card="answer"');
    expect(html).toContain('<p class="scalar">3</p>');
    expect(html).toContain('about Ann Smith');
  });

  it('renders a list answer as linked papers in rank order', () => {
    const html = answerCard(payloadOf<AnswerPayload>('nlq_list_bo'));
    const ids = [...html.matchAll(/#\/paper\/(P\d)/g)].map((m) => m[1]);
    expect(ids).toEqual(['P2', 'P3', 'P6']);
    expect(html).toContain('Neural embeddings for dependency parsing');
  });

  it('renders yes/no badges', () => {
    const payload: AnswerPayload = {
      class: 'binary',
      template_id: 'binary_author_any_paper',
      bindings: [{ slot: 'A', id: 'a1', display: 'Ann Smith' }],
      shape: 'yesno',
      result: { answer: true, count: 3 },
    };
    expect(answerCard(payload)).toContain('badge-yes');
  });
});

describe('profile cards', () => {
  it('author card shows h-index and collaborator links from the payload', () => {
    const html = authorCard(payloadOf<AuthorProfile>('author_a1'));
    expect(html).toContain('data-card="author"');
    expect(html).toContain('h-index <strong>2</strong>');
    expect(html).toContain('href="#/author/a2"');
    expect(html).toContain('href="#/author/a3"');
    expect(html.match(/ joint<\/span><\/li>/g)).toHaveLength(2);
  });

  it('venue card charts the impact-factor timeline', () => {
    const html = venueCard(payloadOf<VenueProfile>('venue_ACL'));
    expect(html).toContain('data-card="venue"');
    expect(html).toContain('<title>2012: 2</title>');
    expect(html).toContain('most recently held 2013');
  });

  it('paper card quotes its citing sentences verbatim', () => {
    const html = paperCard(payloadOf<PaperProfile>('paper_P1'));
    expect(html).toContain('This excellent parser improves results .');
    expect(html).toContain('href="#/paper/P3"');
    expect(html).toContain('3 citations');
  });

  it('uncited paper renders an explicit empty citers section', () => {
    const html = paperCard(payloadOf<PaperProfile>('paper_P6'));
    expect(html).toContain('No incoming citations yet.');
  });
});

describe('paperListCard', () => {
  it('lists only paper hits with year and citation count', () => {
    const { query, hits } = payloadOf<SearchPayload>('search_treebank');
    const html = paperListCard(query, hits);
    expect(html).toContain('data-card="papers"');
    expect(html).toContain('A treebank survey');
    expect(html).toContain('(2012)');
    expect(html).toContain('0 citations');
  });
});

describe('escaping', () => {
  it('never lets payload text inject markup', () => {
    expect(escapeHtml('<script>alert(1)</script>')).not.toContain('<script>');
    const payload: AnswerPayload = {
      class: 'list',
      template_id: 'list_author_papers',
      bindings: [{ slot: 'A', id: 'x', display: '<b>sneaky</b>' }],
      shape: 'papers',
      result: { papers: [{ id: 'P1', title: '<img src=x>', year: null, citations: 0 }] },
    };
    const html = answerCard(payload);
    expect(html).not.toContain('<img');
    expect(html).not.toContain('<b>sneaky</b>');
  });
});
