/** Read-only client for the query service. Every request is a GET; the
 * explorer never mutates server state. */

export type FetchLike = (url: string, init?: { method?: string }) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type Params = Record<string, string | number | null | undefined>;

export function buildUrl(base: string, path: string, params: Params = {}): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined && value !== null && value !== "") {
      search.set(key, String(value));
    }
  }
  const query = search.toString();
  return base.replace(/\/$/, "") + path + (query ? `?${query}` : "");
}

export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  /** GET a JSON payload; service error envelopes become ServiceError. */
  async get<T>(path: string, params: Params = {}): Promise<T> {
    const response = await this.fetchFn(buildUrl(this.base, path, params));
    const body = (await response.json()) as T | { error?: { code: string; message: string } };
    if (!response.ok) {
      const envelope = body as { error?: { code: string; message: string } };
      throw new ServiceError(
        response.status,
        envelope.error?.code ?? "unknown",
        envelope.error?.message ?? `service returned ${response.status}`,
      );
    }
    return body as T;
  }
}
