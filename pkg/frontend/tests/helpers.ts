/** Test support: replay recorded service responses through a stub fetch. */

import { readFileSync, readdirSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { FetchLike } from '../src/api.js';

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), 'fixtures');

export interface Fixture {
  url: string;
  status: number;
  body: unknown;
}

export function loadFixture(name: string): Fixture {
  return JSON.parse(readFileSync(join(FIXTURE_DIR, `${name}.json`), 'utf8')) as Fixture;
}

export function allFixtures(): Fixture[] {
  return readdirSync(FIXTURE_DIR)
    .filter((f) => f.endsWith('.json'))
    .map((f) => loadFixture(f.replace(/\.json$/, '')));
}

function asResponse(fixture: Fixture): Response {
  return {
    status: fixture.status,
    json: async () => fixture.body,
  } as unknown as Response;
}

/** A fetch that serves recorded fixtures by URL and counts its calls. */
export function fixtureFetch(names: string[]): FetchLike & { calls: string[] } {
  const byUrl = new Map(names.map((n) => [loadFixture(n).url, loadFixture(n)]));
  const fn = (async (url: string) => {
    fn.calls.push(url);
    const fixture = byUrl.get(url);
    if (!fixture) {
      throw new Error(`no fixture recorded for ${url}`);
    }
    return asResponse(fixture);
  }) as FetchLike & { calls: string[] };
  fn.calls = [];
  return fn;
}

/** Extract payloads without caring about the envelope plumbing. */
export function payloadOf<T>(name: string): T {
  const fixture = loadFixture(name);
  const body = fixture.body as { status: string; payload?: T };
  if (body.status !== 'ok' || body.payload === undefined) {
    throw new Error(`fixture ${name} is not an ok envelope`);
  }
  return body.payload;
}
