"""Record real wire-service responses into a fixture file for the UI tests.

Walks every reachable collection for the n=4 and n=5 (k=2) uniform anchors,
capturing /tiling, /mutations and /mutate exchanges, plus the error cases
the UI must surface.  Run from the repository root:

    python3 frontend/scripts/generate_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from plabic.collection import extend_to_maximal, necklace_collection
from plabic.documents import collection_to_doc
from plabic.positroid import uniform_necklace
from plabic.service import create_app

OUT = Path(__file__).resolve().parent.parent / "fixtures" / "wire_fixtures.json"


def canonical(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def main() -> None:
    client = TestClient(create_app())
    records: list[dict] = []
    seen_keys: set[str] = set()

    def record(method: str, path: str, body) -> dict:
        key = f"{method} {path} {canonical(body)}"
        response = client.request(method, path, json=body)
        if key not in seen_keys:
            seen_keys.add(key)
            records.append({
                "method": method,
                "path": path,
                "body": body,
                "status": response.status_code,
                "response": response.json(),
            })
        return response.json()

    def walk(start_doc: dict) -> int:
        seen_states: set[str] = set()
        frontier = [start_doc]
        while frontier:
            doc = frontier.pop()
            state = canonical(doc["sets"])
            if state in seen_states:
                continue
            seen_states.add(state)
            record("POST", "/tiling", doc)
            sites = record("POST", "/mutations", doc)["sites"]
            for site in sites:
                mutated = record("POST", "/mutate", {"collection": doc, "site": site})
                frontier.append(mutated["collection"])
        return len(seen_states)

    record("GET", "/health", None)
    for n in (4, 5):
        start = extend_to_maximal(necklace_collection(uniform_necklace(n, 2)))
        count = walk(collection_to_doc(start))
        print(f"n={n}: walked {count} states")

    bad = {"version": "1", "kind": "collection", "n": 4, "k": 2, "sets": [[1, 3], [2, 4]]}
    record("POST", "/tiling", bad)
    record("POST", "/mutations", bad)
    record("POST", "/validate", bad)

    # A mutate call with a stale site, for the 422 toast path.
    pentagon = collection_to_doc(extend_to_maximal(necklace_collection(uniform_necklace(4, 2))))
    sites = record("POST", "/mutations", pentagon)["sites"]
    stale = dict(sites[0], a=sites[0]["b"], b=sites[0]["a"])
    record("POST", "/mutate", {"collection": pentagon, "site": stale})

    # A non-canonical paste: the service echo must canonicalize it.
    shuffled = dict(pentagon, sets=list(reversed(pentagon["sets"])))
    record("POST", "/tiling", shuffled)
    record("POST", "/mutations", shuffled)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(records, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(records)} exchanges to {OUT}")


if __name__ == "__main__":
    main()
