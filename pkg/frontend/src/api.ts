/** Thin fetch client for the scholargraph service.
 *
 * Unwraps the JSON envelope, converts error envelopes and transport
 * failures into ApiError, and deduplicates concurrent identical GETs so a
 * double-submitted query costs one request.
 */

import type {
  AnswerPayload,
  AuthorProfile,
  Envelope,
  PaperProfile,
  SearchPayload,
  VenueProfile,
} from './types.js';

export type FetchLike = (url: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

export class ApiClient {
  private readonly inflight = new Map<string, Promise<unknown>>();

  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  nlq(q: string): Promise<AnswerPayload> {
    return this.get<AnswerPayload>('/api/nlq', { q });
  }

  search(q: string, kind?: string): Promise<SearchPayload> {
    return this.get<SearchPayload>('/api/search', kind === undefined ? { q } : { q, kind });
  }

  paper(id: string): Promise<PaperProfile> {
    return this.get<PaperProfile>(`/api/paper/${encodeURIComponent(id)}`);
  }

  author(id: string): Promise<AuthorProfile> {
    return this.get<AuthorProfile>(`/api/author/${encodeURIComponent(id)}`);
  }

  venue(id: string): Promise<VenueProfile> {
    return this.get<VenueProfile>(`/api/venue/${encodeURIComponent(id)}`);
  }

  private get<T>(path: string, params?: Record<string, string>): Promise<T> {
    const query = params ? `?${new URLSearchParams(params)}` : '';
    const url = `${this.baseUrl}${path}${query}`;
    const pending = this.inflight.get(url);
    if (pending) {
      return pending as Promise<T>;
    }
    const request = this.request<T>(url).finally(() => this.inflight.delete(url));
    this.inflight.set(url, request);
    return request;
  }

  private async request<T>(url: string): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(url);
    } catch (err) {
      throw new ApiError(0, 'network', err instanceof Error ? err.message : 'network failure');
    }
    let body: Envelope<T>;
    try {
      body = (await response.json()) as Envelope<T>;
    } catch {
      throw new ApiError(response.status, 'bad_response', `non-JSON response (${response.status})`);
    }
    if (body.status === 'ok') {
      return body.payload;
    }
    return Promise.reject(new ApiError(response.status, body.error_code, body.message));
  }
}
