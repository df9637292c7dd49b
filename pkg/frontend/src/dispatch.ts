/** Query dispatch: the portal's one decision.
 *
 * A submission first goes to /api/nlq. If the text is not a supported
 * question (422) it is retried as keyword search, and the top hit's kind
 * picks the card: papers render as a result list, an author or venue hit
 * opens that profile directly. Everything else becomes an inline error
 * card; network failures are marked retryable.
 */

import { ApiClient, ApiError } from './api.js';
import {
  answerCard,
  authorCard,
  errorBanner,
  noResultsCard,
  notFoundCard,
  paperCard,
  paperListCard,
  venueCard,
} from './cards.js';

export type ViewKind = 'answer' | 'papers' | 'author' | 'venue' | 'empty' | 'error';

export interface View {
  kind: ViewKind;
  html: string;
  /** hash route to record in the navigation trail, if the view has one */
  route?: string;
}

export async function submitQuery(client: ApiClient, text: string): Promise<View> {
  try {
    const answer = await client.nlq(text);
    return { kind: 'answer', html: answerCard(answer) };
  } catch (err) {
    if (err instanceof ApiError && err.status === 422) {
      return keywordSearch(client, text);
    }
    return failureView(err);
  }
}

async function keywordSearch(client: ApiClient, text: string): Promise<View> {
  try {
    const { hits } = await client.search(text);
    const top = hits[0];
    if (!top) {
      return { kind: 'empty', html: noResultsCard(text) };
    }
    if (top.kind === 'author') {
      const profile = await client.author(top.id);
      return { kind: 'author', html: authorCard(profile), route: `#/author/${top.id}` };
    }
    if (top.kind === 'venue') {
      const profile = await client.venue(top.id);
      return { kind: 'venue', html: venueCard(profile), route: `#/venue/${top.id}` };
    }
    return { kind: 'papers', html: paperListCard(text, hits) };
  } catch (err) {
    return failureView(err);
  }
}

export async function openProfile(
  client: ApiClient,
  kind: 'paper' | 'author' | 'venue',
  id: string,
): Promise<View> {
  try {
    if (kind === 'paper') {
      return { kind: 'papers', html: paperCard(await client.paper(id)), route: `#/paper/${id}` };
    }
    if (kind === 'author') {
      return { kind: 'author', html: authorCard(await client.author(id)), route: `#/author/${id}` };
    }
    return { kind: 'venue', html: venueCard(await client.venue(id)), route: `#/venue/${id}` };
  } catch (err) {
    if (err instanceof ApiError && err.status === 404) {
      return { kind: 'error', html: notFoundCard(kind, id) };
    }
    return failureView(err);
  }
}

function failureView(err: unknown): View {
  if (err instanceof ApiError) {
    const retryable = err.code === 'network' || err.status >= 500;
    return { kind: 'error', html: errorBanner(`Request failed: ${err.message}`, retryable) };
  }
  return { kind: 'error', html: errorBanner('Something went wrong rendering this view.', false) };
}
