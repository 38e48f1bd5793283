import { ServiceClient, ServiceError } from "./client.js";
import {
  canonicalJson,
  CollectionDoc,
  mirroredSite,
  MutationSiteWire,
  setKey,
  TilingDoc,
} from "./protocol.js";

export interface AppliedMutation {
  site: MutationSiteWire;
  /** Canonical document before the mutation, for replay checks. */
  before: string;
}

/**
 * Client-side session: the current collection document, its tiling and
 * mutation sites as reported by the service, and the applied-site history.
 * All mathematics stays on the server; this class only shuttles documents.
 */
export class ExplorerSession {
  doc: CollectionDoc | null = null;
  tiling: TilingDoc | null = null;
  sites: MutationSiteWire[] = [];
  history: AppliedMutation[] = [];
  private inFlight = false;

  constructor(readonly client: ServiceClient) {}

  get busy(): boolean {
    return this.inFlight;
  }

  canonicalState(): string {
    return this.doc ? canonicalJson(this.doc) : "";
  }

  /** Keys ("1,3" style) of the removable set of every reported site. */
  highlightedKeys(): string[] {
    return this.sites.map((s) => setKey(s.removes));
  }

  siteByKey(key: string): MutationSiteWire | undefined {
    return this.sites.find((s) => setKey(s.removes) === key);
  }

  private async refresh(doc: CollectionDoc): Promise<void> {
    this.tiling = await this.client.tiling(doc);
    const mutations = await this.client.mutations(doc);
    this.doc = mutations.collection; // canonical echo
    this.sites = mutations.sites;
  }

  private async exclusive<T>(work: () => Promise<T>): Promise<T> {
    if (this.inFlight) {
      throw new Error("a request is already in flight");
    }
    this.inFlight = true;
    try {
      return await work();
    } finally {
      this.inFlight = false;
    }
  }

  async load(doc: CollectionDoc): Promise<void> {
    await this.exclusive(async () => {
      await this.refresh(doc);
      this.history = [];
    });
  }

  async clickMutate(key: string): Promise<void> {
    await this.exclusive(async () => {
      const site = this.siteByKey(key);
      if (!site || !this.doc) {
        throw new Error(`no highlighted site removes {${key}}`);
      }
      const before = canonicalJson(this.doc);
      const result = await this.client.mutate(this.doc, site);
      await this.refresh(result.collection);
      this.history.push({ site, before });
    });
  }

  async undo(): Promise<void> {
    await this.exclusive(async () => {
      const last = this.history[this.history.length - 1];
      if (!last || !this.doc) {
        throw new Error("nothing to undo");
      }
      const result = await this.client.mutate(this.doc, mirroredSite(last.site));
      await this.refresh(result.collection);
      this.history.pop();
      if (canonicalJson(this.doc) !== last.before) {
        throw new Error("undo did not restore the previous document");
      }
    });
  }
}

/**
 * Click through every reachable collection, undoing on the way back.
 * Returns the canonical states encountered; used to check that the
 * mutation graph the UI exposes is the whole one.
 */
export async function walkStates(
  session: ExplorerSession,
  limit = 1000,
): Promise<Set<string>> {
  const visited = new Set<string>();

  async function explore(): Promise<void> {
    const state = session.canonicalState();
    if (visited.has(state) || visited.size > limit) {
      return;
    }
    visited.add(state);
    for (const key of [...session.highlightedKeys()]) {
      const next = session.siteByKey(key);
      if (!next) continue;
      await session.clickMutate(key);
      if (!visited.has(session.canonicalState())) {
        await explore();
      }
      await session.undo();
    }
  }

  await explore();
  return visited;
}

export function describeError(err: unknown): string {
  if (err instanceof ServiceError) {
    const where = err.body.location ? ` at ${err.body.location}` : "";
    return `${err.body.error}${where}: ${err.body.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}
