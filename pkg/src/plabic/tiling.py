"""Plabic tilings: cliques, exact planar embedding, winding tests, and the
two-way correspondence with reduced plabic graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .collection import WSCollection, is_maximal, validate
from .cyclic import Ground, Subset, mask_members
from .errors import EmbeddingViolation, InvalidInputError
from .geometry import (
    Point,
    check_polygon,
    convex_interiors_overlap,
    default_polygon,
    is_strictly_convex_clockwise,
    segment_hits_open,
    segments_cross_interior,
    signed_area,
    winding_number,
)
from .graph import BLACK, WHITE, PlabicGraph, face_labels
from .positroid import (
    COLOOP,
    GrassmannNecklace,
    connected_components,
    necklace_to_decorated,
    decorated_to_necklace,
)


@dataclass(frozen=True)
class TilingFace:
    """A 2-cell: a nontrivial clique with its cyclically ordered vertex cycle.

    White faces collect the members containing a common (k-1)-set, black
    faces the members inside a common (k+1)-set; boundary cycles follow the
    cyclic order of the varying element and map to clockwise polygons.
    """

    color: str
    core: Subset
    boundary: tuple[Subset, ...]

    def edges(self) -> list[frozenset[int]]:
        cyc = self.boundary
        return [frozenset((cyc[i].mask, cyc[(i + 1) % len(cyc)].mask)) for i in range(len(cyc))]


@dataclass(frozen=True)
class PlabicTiling:
    collection: WSCollection
    faces: tuple[TilingFace, ...]
    edges: tuple[tuple[Subset, Subset], ...]

    @property
    def vertices(self) -> tuple[Subset, ...]:
        return self.collection.sets


@dataclass(frozen=True)
class EmbeddedTiling:
    tiling: PlabicTiling
    polygon: tuple[Point, ...]
    coords: tuple[tuple[int, Point], ...]

    def point(self, s: Subset | int) -> Point:
        mask = s.mask if isinstance(s, Subset) else s
        for m, p in self.coords:
            if m == mask:
                return p
        raise InvalidInputError("subset is not a vertex of the tiling")

    @property
    def coord_map(self) -> dict[int, Point]:
        return dict(self.coords)


def _cliques(C: WSCollection) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """White cliques keyed by (k-1)-core mask, black by (k+1)-core mask."""
    white: dict[int, list[int]] = {}
    black: dict[int, list[int]] = {}
    n = C.ground.n
    for m in C.masks:
        for a in mask_members(m):
            white.setdefault(m & ~(1 << (a - 1)), []).append(m)
        free = C.ground.full_mask & ~m
        for b in mask_members(free):
            black.setdefault(m | (1 << (b - 1)), []).append(m)
    return white, black


def build_tiling(C: WSCollection, check: bool = True) -> PlabicTiling:
    """The 2-complex of a weakly separated collection.

    check=False skips the validity check so that deliberately broken input
    can be fed to the embedding certifier as a sanity cross-check.
    """
    if check:
        report = validate(C)
        if not report.ok:
            raise InvalidInputError(f"invalid collection: {report.summary()}")
    g = C.ground
    white, black = _cliques(C)
    faces: list[TilingFace] = []
    edge_set: set[frozenset[int]] = set()

    for core, members in sorted(white.items()):
        if len(members) < 3:
            continue
        cyc = sorted(members, key=lambda m: (m & ~core).bit_length())
        faces.append(TilingFace(WHITE, Subset(g, core), tuple(Subset(g, m) for m in cyc)))
    for core, members in sorted(black.items()):
        if len(members) < 3:
            continue
        cyc = sorted(members, key=lambda m: (core & ~m).bit_length())
        faces.append(TilingFace(BLACK, Subset(g, core), tuple(Subset(g, m) for m in cyc)))
    for face in faces:
        edge_set.update(face.edges())

    # Two-element case: both cliques of a neighboring pair are exactly the pair.
    for core, members in white.items():
        if len(members) == 2:
            a, b = members
            union = a | b
            if sorted(black.get(union, ())) == sorted(members):
                edge_set.add(frozenset((a, b)))

    edges = tuple(
        tuple(sorted((Subset(g, m) for m in pair), key=lambda s: s.mask))
        for pair in sorted(edge_set, key=lambda p: tuple(sorted(p)))
    )
    return PlabicTiling(C, tuple(faces), edges)


def _coords(C: WSCollection, polygon: tuple[Point, ...]) -> list[tuple[int, Point]]:
    out = []
    for m in C.masks:
        x = Fraction(0)
        y = Fraction(0)
        for a in mask_members(m):
            x += polygon[a - 1][0]
            y += polygon[a - 1][1]
        out.append((m, (x, y)))
    return out


def embed_tiling(t: PlabicTiling, polygon: tuple[Point, ...] | None = None,
                 certify: bool = True) -> EmbeddedTiling:
    """Map each vertex subset to the sum of its polygon vertices and certify,
    with exact arithmetic, that the result is an embedding."""
    n = t.collection.ground.n
    poly = default_polygon(n) if polygon is None else tuple(polygon)
    check_polygon(poly, n)
    coords = _coords(t.collection, poly)
    embedded = EmbeddedTiling(t, poly, tuple(coords))
    if certify:
        certify_embedding(embedded)
    return embedded


def certify_embedding(e: EmbeddedTiling) -> None:
    """Raise EmbeddingViolation unless vertices are distinct, faces are convex
    clockwise polygons with pairwise disjoint interiors, and edges meet
    nothing they should not."""
    pts = e.coord_map
    t = e.tiling
    items = list(pts.items())
    for i, (m1, p1) in enumerate(items):
        for m2, p2 in items[i + 1:]:
            if p1 == p2:
                raise EmbeddingViolation(
                    f"vertices {mask_members(m1)} and {mask_members(m2)} coincide",
                    witness=(m1, m2),
                )
    polys = []
    for face in t.faces:
        poly = tuple(pts[s.mask] for s in face.boundary)
        if not is_strictly_convex_clockwise(poly):
            raise EmbeddingViolation(
                f"face {face.color}:{set(face.core.members)} is not convex clockwise",
                witness=(face.core.mask,),
            )
        polys.append(poly)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if convex_interiors_overlap(polys[i], polys[j]):
                raise EmbeddingViolation(
                    f"faces {set(t.faces[i].core.members)} and "
                    f"{set(t.faces[j].core.members)} overlap",
                    witness=(t.faces[i].core.mask, t.faces[j].core.mask),
                )
    face_edges = set()
    for face in t.faces:
        face_edges.update(face.edges())
    segments = [(pts[a.mask], pts[b.mask], (a.mask, b.mask)) for a, b in t.edges]
    for i in range(len(segments)):
        a1, b1, id1 = segments[i]
        for j in range(i + 1, len(segments)):
            a2, b2, id2 = segments[j]
            if segments_cross_interior(a1, b1, a2, b2):
                raise EmbeddingViolation(f"edges {id1} and {id2} cross", witness=(id1, id2))
    for a, b, ident in segments:
        if frozenset(ident) in face_edges:
            continue
        for poly, face in zip(polys, t.faces):
            if convex_interiors_overlap(poly, (a, b)):
                raise EmbeddingViolation(
                    f"edge {ident} crosses face {set(face.core.members)}",
                    witness=(ident, face.core.mask),
                )
    for m, p in items:
        for a, b, ident in segments:
            if m not in ident and segment_hits_open(a, b, p):
                raise EmbeddingViolation(
                    f"vertex {mask_members(m)} lies inside edge {ident}",
                    witness=(m, ident),
                )


def necklace_curve(anchor: GrassmannNecklace,
                   polygon: tuple[Point, ...] | None = None) -> tuple[Point, ...]:
    """The closed polygonal curve through the necklace entry points in order."""
    n = anchor.ground.n
    poly = default_polygon(n) if polygon is None else tuple(polygon)
    check_polygon(poly, n)
    pts = []
    for entry in anchor.entries:
        x = sum((poly[a - 1][0] for a in entry.members), Fraction(0))
        y = sum((poly[a - 1][1] for a in entry.members), Fraction(0))
        pts.append((x, y))
    return tuple(pts)


def inside_necklace_curve(anchor: GrassmannNecklace, J: Subset,
                          polygon: tuple[Point, ...] | None = None) -> bool:
    """Whether the point of J lies inside the necklace curve.

    Exact winding-number computation; defined for a connected anchor and a
    candidate weakly separated from every entry and not itself an entry.
    """
    from .cyclic import ws_masks

    if not anchor.is_connected():
        raise InvalidInputError("winding test needs a connected necklace")
    if J.ground != anchor.ground or J.size != anchor.k:
        raise InvalidInputError("candidate must be a k-subset of the anchor's ground set")
    if J.mask in anchor.masks:
        raise InvalidInputError("candidate is a necklace entry; winding undefined on the curve")
    n = anchor.ground.n
    for entry in anchor.entries:
        if not ws_masks(J.mask, entry.mask, n):
            raise InvalidInputError(
                f"candidate {set(J.members)} is not weakly separated from entry "
                f"{set(entry.members)}"
            )
    poly = default_polygon(n) if polygon is None else tuple(polygon)
    curve = necklace_curve(anchor, poly)
    x = sum((poly[a - 1][0] for a in J.members), Fraction(0))
    y = sum((poly[a - 1][1] for a in J.members), Fraction(0))
    w = winding_number(curve, (x, y))
    if abs(w) > 1:
        raise InvalidInputError("necklace curve is not simple")
    return w != 0


def tiling_areas(C: WSCollection, polygon: tuple[Point, ...] | None = None
                 ) -> tuple[Fraction, Fraction]:
    """(total face area of the tiling, area enclosed by the necklace curve).

    Both are absolute exact rational areas; for a maximal collection over a
    connected anchor the two agree, and a hole shows up as a deficit.
    """
    anchor = C.anchor
    if anchor is None:
        raise InvalidInputError("area comparison needs an anchored collection")
    n = C.ground.n
    poly = default_polygon(n) if polygon is None else tuple(polygon)
    t = build_tiling(C)
    e = embed_tiling(t, poly)
    pts = e.coord_map
    total = Fraction(0)
    for face in t.faces:
        total += abs(signed_area(tuple(pts[s.mask] for s in face.boundary)))
    curve = necklace_curve(anchor, poly)
    return total, abs(signed_area(curve))


def _restrict_collection(C: WSCollection, block: tuple[int, ...],
                         anchor: GrassmannNecklace) -> WSCollection:
    """Component collection on a block, relabelled along the block's cyclic order."""
    block_mask = 0
    for x in block:
        block_mask |= 1 << (x - 1)
    g = Ground(len(block))
    pos = {x: t for t, x in enumerate(block, start=1)}

    def relabel(m: int) -> int:
        out = 0
        for x in mask_members(m):
            out |= 1 << (pos[x] - 1)
        return out

    entries = []
    for x in block:
        entries.append(Subset(g, relabel(anchor.entries[x - 1].mask & block_mask)))
    sub_anchor = GrassmannNecklace(g, entries[0].size, tuple(entries))
    member_masks = sorted({relabel(m & block_mask) for m in C.masks})
    return WSCollection(g, sub_anchor.k, tuple(member_masks), sub_anchor)


def tiling_to_plabic(C: WSCollection) -> PlabicGraph:
    """The plabic graph dual to the tiling of a maximal anchored collection.

    Faces of the tiling become internal vertices of matching color, interior
    tiling edges become graph edges, and each boundary segment of the
    necklace curve is crossed by one leg.  Disconnected anchors are handled
    per noncrossing block and glued along the shared boundary labels;
    single-element blocks become lollipops (black for a coloop fixed point,
    white for a loop).
    """
    anchor = C.anchor
    if anchor is None:
        raise InvalidInputError("dual construction needs an anchored collection")
    if not is_maximal(C):
        raise InvalidInputError("dual construction needs a maximal collection")
    p = necklace_to_decorated(anchor)
    comps = connected_components(p)
    n = C.ground.n

    colors: list[tuple[int, str]] = []
    edges: list[tuple[int, int]] = []
    rotations: dict[int, list[int]] = {}
    next_id = n + 1

    for block in comps.blocks:
        if len(block) == 1:
            i = block[0]
            leaf = next_id
            next_id += 1
            colors.append((leaf, BLACK if p.color(i) == COLOOP else WHITE))
            rotations[leaf] = [len(edges)]
            edges.append((i, leaf))
            continue
        sub = _restrict_collection(C, block, anchor)
        sub_graph = _connected_dual(sub)
        id_map: dict[int, int] = {}
        for t, x in enumerate(block, start=1):
            id_map[t] = x
        for v, c in sub_graph.colors:
            id_map[v] = next_id
            colors.append((next_id, c))
            next_id += 1
        edge_offset = len(edges)
        for u, v in sub_graph.edges:
            edges.append((id_map[u], id_map[v]))
        for v, order in sub_graph.rotations:
            rotations[id_map[v]] = [e + edge_offset for e in order]

    rot_tuple = tuple(sorted((v, tuple(lst)) for v, lst in rotations.items()))
    return PlabicGraph(n, tuple(sorted(colors)), tuple(edges), rot_tuple)


def _connected_dual(C: WSCollection) -> PlabicGraph:
    anchor = C.anchor
    n = C.ground.n
    assert anchor is not None

    if n == 2:
        # Zero-area tiling: a single bare edge; its dual is one pass-through vertex.
        if len(C.masks) != 2:
            raise InvalidInputError("a connected two-point anchor needs exactly two members")
        v = 3
        return PlabicGraph(2, ((v, BLACK),), ((1, v), (v, 2)), ((v, (0, 1)),))

    t = build_tiling(C)
    edge_faces: dict[frozenset[int], list[int]] = {}
    for idx, face in enumerate(t.faces):
        for e in face.edges():
            edge_faces.setdefault(e, []).append(idx)

    curve_pairs: list[frozenset[int]] = []
    for i in range(1, n + 1):
        a = anchor.entries[i - 1].mask
        b = anchor.entries[i % n].mask
        if a == b:
            raise InvalidInputError("connected anchor cannot repeat entries")
        curve_pairs.append(frozenset((a, b)))

    for a, b in t.edges:
        if frozenset((a.mask, b.mask)) not in edge_faces:
            raise InvalidInputError("tiling has a bare edge; the collection is not maximal")

    dual_id = {idx: n + 1 + idx for idx in range(len(t.faces))}
    colors = [(dual_id[idx], face.color) for idx, face in enumerate(t.faces)]
    edges: list[tuple[int, int]] = []
    interior_edge: dict[frozenset[int], int] = {}
    leg_edge: dict[int, int] = {}

    for pair, faces_here in sorted(edge_faces.items(), key=lambda kv: tuple(sorted(kv[0]))):
        if len(faces_here) == 2:
            f1, f2 = faces_here
            if t.faces[f1].color == t.faces[f2].color:
                raise InvalidInputError("interior tiling edge shared by same-colored faces")
            interior_edge[pair] = len(edges)
            edges.append((dual_id[f1], dual_id[f2]))
        elif len(faces_here) == 1:
            if pair not in curve_pairs:
                raise InvalidInputError(
                    "tiling has a hole: an interior edge borders only one face"
                )
        else:
            raise InvalidInputError("tiling edge shared by more than two faces")

    for i in range(1, n + 1):
        pair = curve_pairs[i - 1]
        faces_here = edge_faces.get(pair, [])
        if len(faces_here) != 1:
            raise InvalidInputError(
                f"boundary segment {i} must border exactly one face, found {len(faces_here)}"
            )
        leg_edge[i] = len(edges)
        edges.append((i, dual_id[faces_here[0]]))

    rotations: dict[int, list[int]] = {}
    for idx, face in enumerate(t.faces):
        order = []
        cyc = face.boundary
        for pos in range(len(cyc)):
            pair = frozenset((cyc[pos].mask, cyc[(pos + 1) % len(cyc)].mask))
            if pair in interior_edge:
                order.append(interior_edge[pair])
            else:
                hits = [i for i in range(1, n + 1) if curve_pairs[i - 1] == pair]
                if len(hits) != 1:
                    raise InvalidInputError("face edge is neither interior nor a boundary segment")
                order.append(leg_edge[hits[0]])
        rotations[dual_id[idx]] = order

    rot_tuple = tuple(sorted((v, tuple(lst)) for v, lst in rotations.items()))
    return PlabicGraph(n, tuple(sorted(colors)), tuple(edges), rot_tuple)


def plabic_to_tiling(G: PlabicGraph) -> PlabicTiling:
    """The tiling of a reduced graph's face labels, anchored to its necklace."""
    labeling, _ = face_labels(G)
    from .graph import trace_strands

    perm = trace_strands(G).permutation
    anchor = decorated_to_necklace(perm)
    g = Ground(G.n)
    C = WSCollection(g, labeling.rank, tuple(sorted(s.mask for s in labeling.labels)), anchor)
    return build_tiling(C)
