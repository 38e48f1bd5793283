import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { FixtureClient, RecordedExchange, ServiceError } from "./client.js";
import { canonicalJson, CollectionDoc, setKey } from "./protocol.js";
import { ExplorerSession, walkStates } from "./session.js";

const here = dirname(fileURLToPath(import.meta.url));
const exchanges: RecordedExchange[] = JSON.parse(
  readFileSync(join(here, "..", "fixtures", "wire_fixtures.json"), "utf8"),
);

const PENTAGON: CollectionDoc = {
  version: "1",
  kind: "collection",
  n: 4,
  k: 2,
  sets: [
    [1, 2],
    [1, 3],
    [2, 3],
    [1, 4],
    [3, 4],
  ],
  necklace: [
    [1, 2],
    [2, 3],
    [3, 4],
    [1, 4],
  ],
};

const HEPTAGON_START: CollectionDoc = {
  version: "1",
  kind: "collection",
  n: 5,
  k: 2,
  sets: [
    [1, 2],
    [1, 3],
    [2, 3],
    [1, 4],
    [3, 4],
    [1, 5],
    [4, 5],
  ],
  necklace: [
    [1, 2],
    [2, 3],
    [3, 4],
    [4, 5],
    [1, 5],
  ],
};

function freshSession(): ExplorerSession {
  return new ExplorerSession(new FixtureClient(exchanges));
}

describe("loading", () => {
  it("highlights exactly the sites the service reports", async () => {
    const session = freshSession();
    await session.load(PENTAGON);
    expect(session.sites).toHaveLength(1);
    expect(session.highlightedKeys()).toEqual(["1,3"]);
    // No client-side recomputation: the keys coincide with the wire sites.
    expect(session.sites.map((s) => setKey(s.removes))).toEqual(
      session.highlightedKeys(),
    );
    expect(session.tiling?.faces).toHaveLength(4);
  });

  it("surfaces the offending pair for an invalid document", async () => {
    const session = freshSession();
    const bad: CollectionDoc = {
      version: "1",
      kind: "collection",
      n: 4,
      k: 2,
      sets: [
        [1, 3],
        [2, 4],
      ],
    };
    await expect(session.load(bad)).rejects.toThrowError(ServiceError);
    try {
      await session.load(bad);
    } catch (err) {
      const message = (err as ServiceError).body.message;
      expect(message).toContain("{1, 3}");
      expect(message).toContain("{2, 4}");
    }
  });

  it("keeps the canonical echo as the current document", async () => {
    const shuffled: CollectionDoc = {
      ...PENTAGON,
      sets: [...PENTAGON.sets].reverse(),
    };
    const session = freshSession();
    await session.load(shuffled);
    expect(session.doc?.sets).toEqual(PENTAGON.sets);
  });
});

describe("mutation clicks", () => {
  it("click then undo restores the original document byte-for-byte", async () => {
    const session = freshSession();
    await session.load(PENTAGON);
    const before = session.canonicalState();
    await session.clickMutate("1,3");
    expect(session.canonicalState()).not.toBe(before);
    expect(session.doc?.sets).toContainEqual([2, 4]);
    expect(session.history).toHaveLength(1);
    await session.undo();
    expect(session.canonicalState()).toBe(before);
    expect(session.history).toHaveLength(0);
  });

  it("keeps the collection size invariant across any click sequence", async () => {
    const session = freshSession();
    await session.load(HEPTAGON_START);
    const size = session.doc?.sets.length;
    for (let round = 0; round < 4; round++) {
      const key = session.highlightedKeys()[round % session.sites.length];
      await session.clickMutate(key);
      expect(session.doc?.sets.length).toBe(size);
    }
  });

  it("rejects clicks on vertices that are not sites", async () => {
    const session = freshSession();
    await session.load(PENTAGON);
    await expect(session.clickMutate("1,2")).rejects.toThrow(/no highlighted site/);
    expect(session.history).toHaveLength(0);
  });

  it("a failed mutate leaves the state unchanged", async () => {
    const session = freshSession();
    await session.load(PENTAGON);
    const before = session.canonicalState();
    const site = session.sites[0];
    // Stale/corrupted site: swapped corners, recorded as a 422 exchange.
    const stale = { ...site, a: site.b, b: site.a };
    await expect(session.client.mutate(session.doc!, stale)).rejects.toThrowError(
      ServiceError,
    );
    expect(session.canonicalState()).toBe(before);
  });
});

describe("walking the mutation graph", () => {
  it("the n=4 pentagon reaches exactly 2 states", async () => {
    const session = freshSession();
    await session.load(PENTAGON);
    const states = await walkStates(session);
    expect(states.size).toBe(2);
  });

  it("the n=5 walk reaches exactly 5 distinct states", async () => {
    const session = freshSession();
    await session.load(HEPTAGON_START);
    const states = await walkStates(session);
    expect(states.size).toBe(5);
    // The walk unwinds its clicks, landing back on the start state.
    expect(states.has(session.canonicalState())).toBe(true);
    expect(canonicalJson(session.doc)).toBe(session.canonicalState());
  });
});
