// Wire types mirroring the workbench service's JSON documents.

export interface CollectionDoc {
  version: string;
  kind: string;
  n: number;
  k: number;
  sets: number[][];
  necklace?: number[][];
}

export interface MutationSiteWire {
  S: number[];
  a: number;
  b: number;
  c: number;
  d: number;
  removes: number[];
  adds: number[];
}

export interface TilingFaceWire {
  color: "black" | "white";
  vertices: number[][];
}

export interface TilingDoc extends CollectionDoc {
  // Exact rationals: "1,3,5" -> [x_num, x_den, y_num, y_den].
  coords: Record<string, [number, number, number, number]>;
  faces: TilingFaceWire[];
  edges: [number[], number[]][];
}

export interface MutationsResponse {
  sites: MutationSiteWire[];
  collection: CollectionDoc;
}

export interface MutateResponse {
  collection: CollectionDoc;
}

export interface ServiceErrorBody {
  error: string;
  message: string;
  location?: string;
}

/** Deterministic JSON with sorted keys, for state identity and fixtures. */
export function canonicalJson(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(canonicalJson).join(",") + "]";
  }
  const entries = Object.entries(value as Record<string, unknown>)
    .filter(([, v]) => v !== undefined)
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([k, v]) => JSON.stringify(k) + ":" + canonicalJson(v));
  return "{" + entries.join(",") + "}";
}

export function setKey(members: number[]): string {
  return [...members].sort((a, b) => a - b).join(",");
}

/**
 * The site that exactly undoes `site` on the mutated collection, in the
 * canonical orientation the service reports (first corner below third).
 */
export function mirroredSite(site: MutationSiteWire): MutationSiteWire {
  const base = { S: site.S, removes: site.adds, adds: site.removes };
  if (site.b < site.d) {
    return { ...base, a: site.b, b: site.c, c: site.d, d: site.a };
  }
  return { ...base, a: site.d, b: site.a, c: site.b, d: site.c };
}
