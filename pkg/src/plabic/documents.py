"""JSON document formats for collections, necklaces, permutations, graphs,
tilings and reports; parsing enforces the same invariants the types do."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .collection import WSCollection, validate
from .cyclic import Ground, Subset
from .errors import ParseError
from .graph import PlabicGraph
from .positroid import DecoratedPermutation, GrassmannNecklace
from .tiling import EmbeddedTiling

FORMAT_VERSION = "1"

KIND_COLLECTION = "collection"
KIND_NECKLACE = "necklace"
KIND_PERMUTATION = "permutation"
KIND_GRAPH = "plabic-graph"
KIND_TILING = "tiling"
KIND_REPORT = "report"


def _need(doc: dict, key: str, location: str) -> Any:
    if key not in doc:
        raise ParseError(f"missing field {key!r}", location)
    return doc[key]


def _int_list(value: Any, location: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise ParseError("expected a list of integers", location)
    return value


def _check_version(doc: dict, location: str) -> None:
    version = _need(doc, "version", location)
    if version != FORMAT_VERSION:
        raise ParseError(f"unknown format version {version!r}", location)


def subset_key(s: Subset) -> str:
    return ",".join(str(x) for x in s.members)


def collection_to_doc(C: WSCollection) -> dict:
    doc = {
        "version": FORMAT_VERSION,
        "kind": KIND_COLLECTION,
        "n": C.ground.n,
        "k": C.k,
        "sets": [list(s.members) for s in C.sets],
    }
    if C.anchor is not None:
        doc["necklace"] = [list(e.members) for e in C.anchor.entries]
    return doc


def collection_from_doc(doc: dict, location: str = "collection") -> WSCollection:
    _check_version(doc, location)
    n = _need(doc, "n", location)
    if not isinstance(n, int):
        raise ParseError("n must be an integer", location)
    g = Ground(n)
    sets_raw = _need(doc, "sets", location)
    if not isinstance(sets_raw, list) or not sets_raw:
        raise ParseError("sets must be a non-empty list", location)
    members = []
    for i, raw in enumerate(sets_raw):
        members.append(_int_list(raw, f"{location}.sets[{i}]"))
    anchor = None
    if doc.get("necklace") is not None:
        entries = [
            _int_list(raw, f"{location}.necklace[{i}]")
            for i, raw in enumerate(doc["necklace"])
        ]
        try:
            anchor = GrassmannNecklace.of(n, entries)
        except Exception as exc:
            raise ParseError(f"bad necklace: {exc}", f"{location}.necklace") from exc
    try:
        C = WSCollection.build(g, members, anchor, check=False)
    except Exception as exc:
        raise ParseError(str(exc), f"{location}.sets") from exc
    if "k" in doc and doc["k"] != C.k:
        raise ParseError(f"declared k={doc['k']} but sets have size {C.k}", location)
    report = validate(C, anchor)
    if not report.ok:
        raise ParseError(report.summary(), f"{location}.sets")
    return C


def necklace_to_doc(nk: GrassmannNecklace) -> dict:
    return {
        "version": FORMAT_VERSION,
        "kind": KIND_NECKLACE,
        "n": nk.ground.n,
        "k": nk.k,
        "entries": [list(e.members) for e in nk.entries],
    }


def necklace_from_doc(doc: dict, location: str = "necklace") -> GrassmannNecklace:
    _check_version(doc, location)
    n = _need(doc, "n", location)
    entries = [
        _int_list(raw, f"{location}.entries[{i}]")
        for i, raw in enumerate(_need(doc, "entries", location))
    ]
    try:
        return GrassmannNecklace.of(n, entries)
    except Exception as exc:
        raise ParseError(str(exc), location) from exc


def permutation_to_doc(p: DecoratedPermutation) -> dict:
    return {
        "version": FORMAT_VERSION,
        "kind": KIND_PERMUTATION,
        "n": p.ground.n,
        "perm": list(p.perm),
        "colors": {str(i): c for i, c in p.colors},
    }


def permutation_from_doc(doc: dict, location: str = "permutation") -> DecoratedPermutation:
    _check_version(doc, location)
    n = _need(doc, "n", location)
    perm = _int_list(_need(doc, "perm", location), f"{location}.perm")
    colors_raw = doc.get("colors", {})
    if not isinstance(colors_raw, dict):
        raise ParseError("colors must be an object", f"{location}.colors")
    try:
        colors = {int(key): int(value) for key, value in colors_raw.items()}
        return DecoratedPermutation.of(perm, colors, n=n)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc), location) from exc


def graph_to_doc(G: PlabicGraph) -> dict:
    return {
        "version": FORMAT_VERSION,
        "kind": KIND_GRAPH,
        "n": G.n,
        "vertices": [{"id": v, "color": c} for v, c in G.colors],
        "boundary": list(range(1, G.n + 1)),
        "edges": [list(e) for e in G.edges],
        "rotation": {str(v): list(order) for v, order in G.rotations},
    }


def graph_from_doc(doc: dict, location: str = "plabic-graph") -> PlabicGraph:
    _check_version(doc, location)
    n = _need(doc, "n", location)
    vertices = _need(doc, "vertices", location)
    colors = []
    for i, v in enumerate(vertices):
        if not isinstance(v, dict) or "id" not in v or "color" not in v:
            raise ParseError("vertex needs id and color", f"{location}.vertices[{i}]")
        colors.append((v["id"], v["color"]))
    edges = []
    for i, e in enumerate(_need(doc, "edges", location)):
        pair = _int_list(e, f"{location}.edges[{i}]")
        if len(pair) != 2:
            raise ParseError("edge must have two endpoints", f"{location}.edges[{i}]")
        edges.append((pair[0], pair[1]))
    rotation = _need(doc, "rotation", location)
    rotations = []
    try:
        for key, order in rotation.items():
            rotations.append((int(key), tuple(_int_list(order, f"{location}.rotation[{key}]"))))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc), f"{location}.rotation") from exc
    boundary = doc.get("boundary")
    if boundary is not None and boundary != list(range(1, n + 1)):
        raise ParseError("boundary must list 1..n clockwise", f"{location}.boundary")
    try:
        return PlabicGraph(n, tuple(sorted(colors)), tuple(edges), tuple(sorted(rotations)))
    except Exception as exc:
        raise ParseError(str(exc), location) from exc


def tiling_to_doc(e: EmbeddedTiling) -> dict:
    C = e.tiling.collection
    doc = collection_to_doc(C)
    doc["kind"] = KIND_TILING
    coords = {}
    for mask, (x, y) in e.coords:
        fx, fy = Fraction(x), Fraction(y)
        key = subset_key(Subset(C.ground, mask))
        coords[key] = [fx.numerator, fx.denominator, fy.numerator, fy.denominator]
    doc["coords"] = coords
    doc["faces"] = [
        {"color": f.color, "vertices": [list(s.members) for s in f.boundary]}
        for f in e.tiling.faces
    ]
    doc["edges"] = [
        [list(a.members), list(b.members)] for a, b in e.tiling.edges
    ]
    return doc


def parse(text: str) -> Any:
    """Dispatch a JSON document on its kind field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}", "document") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "document")
    kind = _need(doc, "kind", "document")
    if kind in (KIND_COLLECTION, KIND_TILING):
        return collection_from_doc(doc, kind)
    if kind == KIND_NECKLACE:
        return necklace_from_doc(doc)
    if kind == KIND_PERMUTATION:
        return permutation_from_doc(doc)
    if kind == KIND_GRAPH:
        return graph_from_doc(doc)
    if kind == KIND_REPORT:
        _check_version(doc, "report")
        return doc
    raise ParseError(f"unknown kind {kind!r}", "document")


def serialize(obj: Any) -> str:
    """Canonical JSON text for any of the core types."""
    if isinstance(obj, WSCollection):
        doc = collection_to_doc(obj)
    elif isinstance(obj, GrassmannNecklace):
        doc = necklace_to_doc(obj)
    elif isinstance(obj, DecoratedPermutation):
        doc = permutation_to_doc(obj)
    elif isinstance(obj, PlabicGraph):
        doc = graph_to_doc(obj)
    elif isinstance(obj, EmbeddedTiling):
        doc = tiling_to_doc(obj)
    elif isinstance(obj, dict):
        doc = obj
    else:
        raise ParseError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
