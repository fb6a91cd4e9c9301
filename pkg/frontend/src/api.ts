// Thin typed client for the explanatory-space service.

import type { AnnotateResponse, HealthResponse, OverviewDoc } from './types.js';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

export class ApiClient {
  private overviewCache = new Map<string, OverviewDoc>();

  constructor(private readonly baseUrl: string = '') {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await fetch(this.baseUrl + path);
    if (!resp.ok) {
      throw new ApiError(resp.status, `GET ${path} -> ${resp.status}`);
    }
    return (await resp.json()) as T;
  }

  async health(): Promise<HealthResponse> {
    return this.getJson<HealthResponse>('/health');
  }

  async annotate(text: string): Promise<AnnotateResponse> {
    const resp = await fetch(this.baseUrl + '/annotate', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ text, html: false }),
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, `POST /annotate -> ${resp.status}`);
    }
    return (await resp.json()) as AnnotateResponse;
  }

  /** Overviews are immutable per snapshot, so responses are cached. */
  async overview(conceptUri: string): Promise<OverviewDoc> {
    const cached = this.overviewCache.get(conceptUri);
    if (cached) {
      return cached;
    }
    const doc = await this.getJson<OverviewDoc>(
      `/overview/${encodeURIComponent(conceptUri)}`,
    );
    this.overviewCache.set(conceptUri, doc);
    return doc;
  }
}
