/** Wire types for the scholargraph REST API, mirrored field-for-field. */

export type Envelope<T> =
  | { status: 'ok'; payload: T }
  | { status: 'error'; error_code: string; message: string };

export interface EntityRef {
  id: string;
  display: string;
}

export interface Binding extends EntityRef {
  slot: string;
}

export interface PaperItem {
  id: string;
  title: string;
  year: number | null;
  citations: number;
}

export type YearCount = [number, number];

export type AnswerResult =
  | { answer: boolean; count: number }
  | { count: number }
  | { points: YearCount[] }
  | { entities: Array<EntityRef & { count: number }> }
  | { papers: PaperItem[] };

export interface AnswerPayload {
  class: 'binary' | 'statistical' | 'list';
  template_id: string;
  bindings: Binding[];
  shape: 'yesno' | 'count' | 'series' | 'comparison' | 'papers';
  subtype?: 'cumulative' | 'temporal' | 'comparison';
  result: AnswerResult;
}

export interface SearchHit {
  id: string;
  kind: 'paper' | 'author' | 'venue';
  display: string;
  year: number | null;
  exact: boolean;
  popularity: number;
}

export interface SearchPayload {
  query: string;
  hits: SearchHit[];
}

export interface PaperProfile {
  id: string;
  kind: 'paper';
  title: string;
  year: number | null;
  venue: EntityRef | null;
  authors: EntityRef[];
  fields: EntityRef[];
  abstract: string;
  urls: string[];
  citation_count: number;
  citations_by_year: YearCount[];
  co_cited: Array<{ id: string; count: number }>;
  sentiment: { mean: number; contexts: number };
  summary: Array<{ sentence: string; source: string }>;
}

export interface AuthorProfile {
  id: string;
  kind: 'author';
  display: string;
  paper_count: number;
  citations_received: number;
  h_index: number;
  papers: string[];
  collaborators: Array<EntityRef & { joint_papers: number }>;
  avg_joint_papers: number;
  publications_by_year: YearCount[];
  citations_by_year: YearCount[];
  topics: Record<string, Record<string, number>>;
}

export interface ImpactFactorPoint {
  year: number;
  value: number;
  empty_window: boolean;
}

export interface VenueProfile {
  id: string;
  kind: 'venue';
  display: string;
  paper_count: number;
  recently_held_year: number | null;
  publications_by_year: YearCount[];
  impact_factors: ImpactFactorPoint[];
  collaborating_venues: Array<EntityRef & { shared_authors: number }>;
}
