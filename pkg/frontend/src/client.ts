import {
  canonicalJson,
  CollectionDoc,
  MutateResponse,
  MutationSiteWire,
  MutationsResponse,
  ServiceErrorBody,
  TilingDoc,
} from "./protocol.js";

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly body: ServiceErrorBody,
  ) {
    super(body.message || body.error || `service error ${status}`);
  }
}

export interface ServiceClient {
  health(): Promise<{ status: string; version: string }>;
  tiling(doc: CollectionDoc): Promise<TilingDoc>;
  mutations(doc: CollectionDoc): Promise<MutationsResponse>;
  mutate(doc: CollectionDoc, site: MutationSiteWire): Promise<MutateResponse>;
}

/** Talks to a live workbench service over fetch. */
export class HttpClient implements ServiceClient {
  constructor(readonly baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const parsed = await response.json();
    if (!response.ok) {
      throw new ServiceError(response.status, parsed as ServiceErrorBody);
    }
    return parsed as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await fetch(this.baseUrl + "/health");
    return (await response.json()) as { status: string; version: string };
  }

  tiling(doc: CollectionDoc): Promise<TilingDoc> {
    return this.post("/tiling", doc);
  }

  mutations(doc: CollectionDoc): Promise<MutationsResponse> {
    return this.post("/mutations", doc);
  }

  mutate(doc: CollectionDoc, site: MutationSiteWire): Promise<MutateResponse> {
    return this.post("/mutate", { collection: doc, site });
  }
}

export interface RecordedExchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

/** Replays exchanges captured from the real service; used by the tests. */
export class FixtureClient implements ServiceClient {
  private table = new Map<string, RecordedExchange>();

  constructor(exchanges: RecordedExchange[]) {
    for (const e of exchanges) {
      this.table.set(`${e.method} ${e.path} ${canonicalJson(e.body)}`, e);
    }
  }

  private lookup<T>(method: string, path: string, body: unknown): T {
    const key = `${method} ${path} ${canonicalJson(body)}`;
    const hit = this.table.get(key);
    if (!hit) {
      throw new Error(`no recorded exchange for ${method} ${path}`);
    }
    if (hit.status >= 400) {
      throw new ServiceError(hit.status, hit.response as ServiceErrorBody);
    }
    return hit.response as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    return this.lookup("GET", "/health", null);
  }

  async tiling(doc: CollectionDoc): Promise<TilingDoc> {
    return this.lookup("POST", "/tiling", doc);
  }

  async mutations(doc: CollectionDoc): Promise<MutationsResponse> {
    return this.lookup("POST", "/mutations", doc);
  }

  async mutate(doc: CollectionDoc, site: MutationSiteWire): Promise<MutateResponse> {
    return this.lookup("POST", "/mutate", { collection: doc, site });
  }
}
