"""Disk-embedded bicolored graphs: strands, reducedness, face labels, local moves.

A graph is stored as a rotation system: boundary vertices 1..n sit clockwise
on the disk boundary with degree at most one, and every internal vertex
carries the clockwise cyclic order of its incident edges.  Faces are read
off combinatorially by closing the disk with boundary arcs; no coordinates
are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclic import Ground, Subset
from .errors import InvalidInputError
from .positroid import COLOOP, LOOP, DecoratedPermutation

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class PlabicGraph:
    """Bicolored graph in a disk, encoded by a clockwise rotation system.

    edges are pairs of vertex ids; boundary ids are 1..n, internal ids are
    anything else.  rotations lists, for each internal vertex, its incident
    edge indices in clockwise order (a self-loop index appears twice).
    """

    n: int
    colors: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("need at least one boundary vertex")
        internal = [v for v, _ in self.colors]
        if len(set(internal)) != len(internal):
            raise InvalidInputError("duplicate internal vertex ids")
        internal_set = set(internal)
        if internal_set & set(range(1, self.n + 1)):
            raise InvalidInputError("internal ids must be disjoint from boundary ids 1..n")
        if any(c not in (BLACK, WHITE) for _, c in self.colors):
            raise InvalidInputError("vertex colors must be 'black' or 'white'")
        known = internal_set | set(range(1, self.n + 1))
        boundary_degree = {i: 0 for i in range(1, self.n + 1)}
        incidence: dict[int, list[int]] = {v: [] for v in internal_set}
        for idx, (u, v) in enumerate(self.edges):
            for w in (u, v):
                if w not in known:
                    raise InvalidInputError(f"edge {idx} touches unknown vertex {w}")
                if w in boundary_degree:
                    boundary_degree[w] += 1
                else:
                    incidence[w].append(idx)
            if u in boundary_degree and v in boundary_degree and u == v:
                raise InvalidInputError("boundary self-loops are not allowed")
        for i, d in boundary_degree.items():
            if d > 1:
                raise InvalidInputError(f"boundary vertex {i} has degree {d} > 1")
        rot_vertices = [v for v, _ in self.rotations]
        if set(rot_vertices) != internal_set or len(rot_vertices) != len(internal_set):
            raise InvalidInputError("rotations must cover exactly the internal vertices")
        for v, order in self.rotations:
            if sorted(order) != sorted(incidence[v]):
                raise InvalidInputError(
                    f"rotation at {v} must list its incident edges, got {order}"
                )
        _mesh(self)  # raises unless the rotation system is planar in the disk

    @property
    def color_map(self) -> dict[int, str]:
        return dict(self.colors)

    @property
    def rotation_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rotations)

    @property
    def internal_ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.colors)

    def degree(self, v: int) -> int:
        if 1 <= v <= self.n:
            return sum(1 for u, w in self.edges if v in (u, w))
        return len(self.rotation_map[v])

    def boundary_edge(self, i: int) -> Optional[int]:
        for idx, (u, v) in enumerate(self.edges):
            if i in (u, v):
                return idx
        return None


@dataclass(frozen=True)
class Strand:
    """A directed boundary-to-boundary trip; id is the terminal boundary vertex."""

    id: int
    start: int
    path: tuple[int, ...]  # directed edge codes, see _mesh

    @property
    def is_fixed(self) -> bool:
        return self.id == self.start


@dataclass(frozen=True)
class TraceResult:
    strands: tuple[Strand, ...]
    loops: tuple[tuple[int, ...], ...]
    permutation: DecoratedPermutation

    def __iter__(self):
        return iter((self.strands, self.permutation))


@dataclass(frozen=True)
class MoveSpec:
    """One of the three local moves.

    M1 (square move): vertices = the four trivalent square corners.
    M2: direction 'contract' with edge, or 'expand' with vertex, split
        (start, count) into its rotation, and the id for the split-off vertex.
    M3: direction 'insert' with edge and color, or 'remove' with vertex.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    edge: Optional[int] = None
    vertex: Optional[int] = None
    direction: str = ""
    color: str = ""
    split: tuple[int, int] = (0, 0)
    new_id: Optional[int] = None


@dataclass(frozen=True)
class Violation:
    condition: str  # 'closed-loop', 'self-crossing', 'crossing-order'
    witness: tuple


@dataclass(frozen=True)
class ReducednessReport:
    reduced: bool
    violation: Optional[Violation] = None


class _Mesh:
    """Half-edge view of a graph with the disk boundary closed by arcs.

    Directed codes: edge index e traversed from endpoint side s is 2*e+s;
    arcs continue the numbering after real edges.  twin(d) == d ^ 1.
    """

    def __init__(self, g: PlabicGraph):
        self.g = g
        n = g.n
        self.num_edges = len(g.edges)
        self.arc_base = 2 * self.num_edges
        ends: list[tuple[int, int]] = list(g.edges)
        for i in range(1, n + 1):
            ends.append((i, i % n + 1))  # arc i -> i+1, clockwise
        self.ends = ends

        # Clockwise half-edge lists per vertex; a half-edge is a directed code
        # pointing away from the vertex.
        rot: dict[int, list[int]] = {}
        for v, order in g.rotations:
            seen: dict[int, int] = {}
            lst = []
            for e in order:
                u, w = g.edges[e]
                if u == w:  # self-loop: occurrences map to sides 0 then 1
                    side = seen.get(e, 0)
                    seen[e] = side + 1
                    if side > 1:
                        raise InvalidInputError(f"self-loop {e} listed more than twice at {v}")
                else:
                    side = 0 if u == v else 1
                lst.append(2 * e + side)
            rot[v] = lst
        for i in range(1, n + 1):
            arc_next = self.arc_base + 2 * (i - 1)             # points toward i+1
            prev_arc_index = (i - 2) % n                       # arc (i-1) -> i
            arc_prev = self.arc_base + 2 * prev_arc_index + 1  # points toward i-1
            leg = None
            e = g.boundary_edge(i)
            if e is not None:
                u, w = g.edges[e]
                side = 0 if u == i else 1
                leg = 2 * e + side
            rot[i] = [arc_next] + ([leg] if leg is not None else []) + [arc_prev]
        self.rot = rot

        # next half-edge maps for faces (left-face traversal).
        pos: dict[int, tuple[int, int]] = {}
        for v, lst in rot.items():
            for idx, h in enumerate(lst):
                if h in pos:
                    raise InvalidInputError("half-edge incident to two vertices; bad rotation")
                pos[h] = (v, idx)
        self.half_vertex = {h: v for h, (v, _) in pos.items()}
        total_halves = 2 * len(ends)
        if len(pos) != total_halves:
            raise InvalidInputError("rotation system does not cover every half-edge")

        def succ(h: int) -> int:
            v, idx = pos[h]
            lst = rot[v]
            return lst[(idx + 1) % len(lst)]

        def pred(h: int) -> int:
            v, idx = pos[h]
            lst = rot[v]
            return lst[(idx - 1) % len(lst)]

        self._succ = succ
        self._pred = pred

        # Face cycles: following d then succ(twin d at target) keeps the face
        # on the left when rotations are clockwise in a y-up drawing.
        self.face_of: dict[int, int] = {}
        self.faces: list[list[int]] = []
        for d in range(total_halves):
            if d in self.face_of:
                continue
            cycle = []
            cur = d
            while cur not in self.face_of:
                self.face_of[cur] = len(self.faces)
                cycle.append(cur)
                cur = succ(cur ^ 1)
            self.faces.append(cycle)

        v_count = n + len(g.colors)
        e_count = len(ends)
        f_count = len(self.faces)
        if v_count - e_count + f_count != 2:
            raise InvalidInputError(
                f"rotation system is not a disk embedding (V-E+F = "
                f"{v_count}-{e_count}+{f_count} != 2)"
            )
        outer = self.face_of[self.arc_base]  # forward arc 1 -> 2
        outer_cycle = self.faces[outer]
        forward_arcs = {self.arc_base + 2 * j for j in range(n)}
        if set(outer_cycle) != forward_arcs:
            raise InvalidInputError("boundary arcs do not close into the outer face")
        self.outer_face = outer

    def target(self, d: int) -> int:
        u, v = self.ends[d // 2]
        return v if d % 2 == 0 else u

    def source(self, d: int) -> int:
        u, v = self.ends[d // 2]
        return u if d % 2 == 0 else v

    def is_arc(self, d: int) -> bool:
        return d >= self.arc_base

    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f != self.outer_face]

    def face_vertices(self, f: int) -> list[int]:
        return [self.source(d) for d in self.faces[f]]

    def next_strand(self, d: int) -> int:
        """The strand continuation of directed edge d past its target vertex."""
        v = self.target(d)
        incoming = d ^ 1  # half-edge at v pointing back along d
        color = self.g.color_map[v]
        out = self._succ(incoming) if color == WHITE else self._pred(incoming)
        return out

    def boundary_face_at(self, i: int) -> int:
        """Interior face touching the boundary between vertices i-1 and i."""
        n = self.g.n
        prev_arc = (i - 2) % n
        backward = self.arc_base + 2 * prev_arc + 1
        return self.face_of[backward]


def _mesh(g: PlabicGraph) -> _Mesh:
    return _Mesh(g)


def trace_strands(G: PlabicGraph) -> TraceResult:
    """Follow every strand: at an internal vertex the strand departs along the
    next half-edge clockwise from its arrival if the vertex is white, and the
    next counterclockwise if black.  Returns boundary strands, interior
    loops, and the decorated strand permutation."""
    mesh = _mesh(G)
    n = G.n
    color_map = G.color_map
    strands = []
    used: set[int] = set()
    perm = [0] * n
    for i in range(1, n + 1):
        e = G.boundary_edge(i)
        if e is None:
            raise InvalidInputError(
                f"boundary vertex {i} has no edge; represent its effect as a lollipop"
            )
        u, v = G.edges[e]
        d = 2 * e + (0 if u == i else 1)
        path = [d]
        used.add(d)
        while not 1 <= mesh.target(d) <= n:
            d = mesh.next_strand(d)
            used.add(d)
            path.append(d)
        end = mesh.target(path[-1])
        perm[i - 1] = end
        strands.append(Strand(end, i, tuple(path)))

    loops = []
    for e in range(len(G.edges)):
        for side in (0, 1):
            d = 2 * e + side
            if d in used:
                continue
            cycle = []
            cur = d
            while cur not in used:
                used.add(cur)
                cycle.append(cur)
                cur = mesh.next_strand(cur)
            if cycle:
                loops.append(tuple(cycle))

    colors: dict[int, int] = {}
    for s in strands:
        if s.id == s.start:
            v = mesh.target(s.path[0])
            if 1 <= v <= n:
                raise InvalidInputError("degenerate fixed strand straight to the boundary")
            colors[s.start] = LOOP if color_map[v] == WHITE else COLOOP
    permutation = DecoratedPermutation(Ground(n), tuple(perm), tuple(sorted(colors.items())))
    return TraceResult(tuple(strands), tuple(loops), permutation)


def _crossing_edges(G: PlabicGraph) -> set[int]:
    """Edges where antiparallel strand segments cross: internal bicolored edges."""
    cm = G.color_map
    out = set()
    for idx, (u, v) in enumerate(G.edges):
        if u in cm and v in cm and cm[u] != cm[v]:
            out.add(idx)
    return out


def check_reduced(G: PlabicGraph) -> ReducednessReport:
    """Check the three reducedness conditions, reporting the first violation.

    Crossings are combinatorial: two strands cross exactly where they
    traverse a common bicolored internal edge in opposite directions.
    """
    trace = trace_strands(G)
    if trace.loops:
        return ReducednessReport(False, Violation("closed-loop", (trace.loops[0],)))
    crossing = _crossing_edges(G)
    for s in trace.strands:
        seen_edges: set[int] = set()
        for d in s.path:
            e = d // 2
            if e in seen_edges and e in crossing:
                return ReducednessReport(False, Violation("self-crossing", (s.id, e)))
            seen_edges.add(e)
    for a in range(len(trace.strands)):
        for b in range(a + 1, len(trace.strands)):
            sa, sb = trace.strands[a], trace.strands[b]
            dirs_b = {d // 2: d for d in sb.path}
            common = []
            for d in sa.path:
                e = d // 2
                if e in crossing and e in dirs_b and dirs_b[e] == (d ^ 1):
                    common.append(e)
            if len(common) < 2:
                continue
            order_b = [d // 2 for d in sb.path if d // 2 in set(common)]
            if order_b != list(reversed(common)):
                return ReducednessReport(
                    False, Violation("crossing-order", (sa.start, sb.start, tuple(common)))
                )
    return ReducednessReport(True)


@dataclass(frozen=True)
class FaceLabeling:
    """Interior faces of a reduced graph with their strand labels."""

    face_vertices: tuple[tuple[int, ...], ...]
    labels: tuple[Subset, ...]
    rank: int
    boundary_faces: tuple[int, ...]  # face position i-1 holds face index at boundary i

    @property
    def label_set(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.labels)

    def boundary_labels(self) -> tuple[Subset, ...]:
        return tuple(self.labels[f] for f in self.boundary_faces)


def face_labels(G: PlabicGraph) -> tuple[FaceLabeling, int]:
    """Label every interior face by the strands having it on their left.

    Boundary-to-boundary strands split the disk in two by a flood fill
    across untraversed edges; fixed-point strands label all faces or none
    according to their color.  Requires a reduced graph.
    """
    report = check_reduced(G)
    if not report.reduced:
        raise InvalidInputError(f"face labels need a reduced graph: {report.violation}")
    mesh = _mesh(G)
    trace = trace_strands(G)
    interior = mesh.interior_faces()
    index_of = {f: i for i, f in enumerate(interior)}
    label_masks = [0] * len(interior)

    for s in trace.strands:
        if s.is_fixed:
            color = G.color_map[mesh.target(s.path[0])]
            if color == BLACK:  # coloop: on the left of a clockwise loop lies everything
                bit = 1 << (s.id - 1)
                for i in range(len(label_masks)):
                    label_masks[i] |= bit
            continue
        used_edges = {d // 2 for d in s.path}
        # Flood fill across edges the strand does not traverse.
        parent = list(range(len(interior)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for e in range(len(G.edges)):
            if e in used_edges:
                continue
            f1 = mesh.face_of[2 * e]
            f2 = mesh.face_of[2 * e + 1]
            if f1 != mesh.outer_face and f2 != mesh.outer_face:
                union(index_of[f1], index_of[f2])
        left_roots = set()
        right_roots = set()
        for d in s.path:
            lf = mesh.face_of[d]       # traversal keeps the face on the left
            rf = mesh.face_of[d ^ 1]
            if lf == rf:
                continue
            left_roots.add(find(index_of[lf]))
            right_roots.add(find(index_of[rf]))
        if not left_roots or left_roots & right_roots:
            raise InvalidInputError(f"strand {s.id} does not divide the disk cleanly")
        bit = 1 << (s.id - 1)
        for i in range(len(interior)):
            if find(i) in left_roots:
                label_masks[i] |= bit

    sizes = {m.bit_count() for m in label_masks}
    if len(sizes) != 1:
        raise InvalidInputError(f"faces carry labels of different sizes {sorted(sizes)}")
    if len(set(label_masks)) != len(label_masks):
        raise InvalidInputError("two faces received the same label")
    rank = sizes.pop()
    g = Ground(G.n)
    labeling = FaceLabeling(
        face_vertices=tuple(tuple(mesh.face_vertices(f)) for f in interior),
        labels=tuple(Subset(g, m) for m in label_masks),
        rank=rank,
        boundary_faces=tuple(index_of[mesh.boundary_face_at(i)] for i in range(1, G.n + 1)),
    )
    return labeling, rank


def _interior_square_faces(G: PlabicGraph) -> list[tuple[int, ...]]:
    """Vertex cycles of interior quadrilateral faces with distinct internal corners."""
    mesh = _mesh(G)
    out = []
    for f in mesh.interior_faces():
        verts = mesh.face_vertices(f)
        if len(verts) == 4 and len(set(verts)) == 4 and all(v > 0 and not 1 <= v <= G.n for v in verts):
            out.append(tuple(verts))
    return out


def square_move_sites(G: PlabicGraph) -> list[tuple[int, ...]]:
    """Squares eligible for the square move: interior quadrilateral faces whose
    four corners are trivalent with alternating colors."""
    cm = G.color_map
    sites = []
    for verts in _interior_square_faces(G):
        if any(G.degree(v) != 3 for v in verts):
            continue
        colors = [cm[v] for v in verts]
        if colors[0] == colors[2] and colors[1] == colors[3] and colors[0] != colors[1]:
            sites.append(verts)
    return sites


def _reindexed(edges: list[tuple[int, int]], rotations: dict[int, list[int]],
               dropped: int) -> tuple[list[tuple[int, int]], dict[int, list[int]]]:
    """Remove one edge index and shift all higher references down by one."""
    new_edges = [e for i, e in enumerate(edges) if i != dropped]
    remap = lambda e: e - 1 if e > dropped else e
    new_rot = {v: [remap(e) for e in lst if e != dropped] for v, lst in rotations.items()}
    return new_edges, new_rot


def apply_move(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    """Apply a local move; the decorated strand permutation is unchanged and
    reducedness is preserved.  The square move (M1) changes exactly one face
    label; contraction and degree-2 insertion (M2, M3) change none."""
    if m.kind == "M1":
        return _square_move(G, m)
    if m.kind == "M2":
        if m.direction == "contract":
            return _contract_edge(G, m)
        if m.direction == "expand":
            return _expand_vertex(G, m)
        raise InvalidInputError("M2 needs direction 'contract' or 'expand'")
    if m.kind == "M3":
        if m.direction == "insert":
            return _insert_vertex(G, m)
        if m.direction == "remove":
            return _remove_vertex(G, m)
        raise InvalidInputError("M3 needs direction 'insert' or 'remove'")
    raise InvalidInputError(f"unknown move kind {m.kind!r}")


def _square_move(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    if len(m.vertices) != 4:
        raise InvalidInputError("M1 needs the four square corners")
    target = set(m.vertices)
    match = [verts for verts in square_move_sites(G) if set(verts) == target]
    if not match:
        raise InvalidInputError(
            "M1 precondition failed: not an interior square of trivalent "
            "alternating-color vertices"
        )
    flip = {BLACK: WHITE, WHITE: BLACK}
    colors = tuple((v, flip[c] if v in target else c) for v, c in G.colors)
    return PlabicGraph(G.n, colors, G.edges, G.rotations)


def _contract_edge(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    if m.edge is None or not 0 <= m.edge < len(G.edges):
        raise InvalidInputError("M2 contract needs a valid edge index")
    u, v = G.edges[m.edge]
    cm = G.color_map
    if u not in cm or v not in cm:
        raise InvalidInputError("M2 contract needs an internal edge")
    if cm[u] != cm[v]:
        raise InvalidInputError("M2 contract needs a unicolored edge")
    if u == v:
        raise InvalidInputError("cannot contract a self-loop")
    keep, gone = (u, v) if u < v else (v, u)
    rot = {w: list(lst) for w, lst in G.rotations}
    ku = rot[keep]
    kv = rot[gone]
    pu = ku.index(m.edge)
    pv = kv.index(m.edge)
    merged = ku[pu + 1:] + ku[:pu] + kv[pv + 1:] + kv[:pv]
    del rot[gone]
    rot[keep] = merged
    edges = [(keep if a == gone else a, keep if b == gone else b) for a, b in G.edges]
    edges, rot = _reindexed(edges, rot, m.edge)
    colors = tuple((w, c) for w, c in G.colors if w != gone)
    rotations = tuple(sorted((w, tuple(lst)) for w, lst in rot.items()))
    return PlabicGraph(G.n, colors, tuple(edges), rotations)


def _expand_vertex(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    if m.vertex is None or m.vertex not in G.color_map:
        raise InvalidInputError("M2 expand needs an internal vertex")
    rot = {w: list(lst) for w, lst in G.rotations}
    lst = rot[m.vertex]
    start, count = m.split
    if not 1 <= count <= len(lst) - 1:
        raise InvalidInputError("M2 expand must split off between 1 and degree-1 edges")
    new_id = m.new_id if m.new_id is not None else _fresh_id(G)
    if new_id in G.color_map or 1 <= new_id <= G.n:
        raise InvalidInputError(f"id {new_id} already in use")
    d = len(lst)
    moved = [lst[(start + t) % d] for t in range(count)]
    kept = [lst[(start + count + t) % d] for t in range(d - count)]
    new_edge = len(G.edges)
    edges = list(G.edges) + [(m.vertex, new_id)]
    # The moved block's edges now attach to the new vertex.
    for e in moved:
        a, b = edges[e]
        if a == m.vertex:
            edges[e] = (new_id, b)
        else:
            edges[e] = (a, new_id)
    rot[m.vertex] = kept + [new_edge]
    rot[new_id] = moved + [new_edge]
    color = G.color_map[m.vertex]
    colors = tuple(sorted(list(G.colors) + [(new_id, color)]))
    rotations = tuple(sorted((w, tuple(x)) for w, x in rot.items()))
    return PlabicGraph(G.n, colors, tuple(edges), rotations)


def _insert_vertex(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    if m.edge is None or not 0 <= m.edge < len(G.edges):
        raise InvalidInputError("M3 insert needs a valid edge index")
    if m.color not in (BLACK, WHITE):
        raise InvalidInputError("M3 insert needs a color for the new vertex")
    new_id = m.new_id if m.new_id is not None else _fresh_id(G)
    if new_id in G.color_map or 1 <= new_id <= G.n:
        raise InvalidInputError(f"id {new_id} already in use")
    u, v = G.edges[m.edge]
    edges = list(G.edges)
    new_edge = len(edges)
    edges[m.edge] = (u, new_id)
    edges.append((new_id, v))
    rot = {w: list(lst) for w, lst in G.rotations}
    if v in rot:  # v side now references the appended edge
        if u == v:  # self-loop: the second occurrence moves
            idx = len(rot[v]) - 1 - rot[v][::-1].index(m.edge)
        else:
            idx = rot[v].index(m.edge)
        rot[v][idx] = new_edge
    rot[new_id] = [m.edge, new_edge]
    colors = tuple(sorted(list(G.colors) + [(new_id, m.color)]))
    rotations = tuple(sorted((w, tuple(x)) for w, x in rot.items()))
    return PlabicGraph(G.n, colors, tuple(edges), rotations)


def _remove_vertex(G: PlabicGraph, m: MoveSpec) -> PlabicGraph:
    if m.vertex is None or m.vertex not in G.color_map:
        raise InvalidInputError("M3 remove needs an internal vertex")
    rot = {w: list(lst) for w, lst in G.rotations}
    lst = rot[m.vertex]
    if len(lst) != 2:
        raise InvalidInputError("M3 remove needs a degree-2 vertex")
    e1, e2 = lst
    if e1 == e2:
        raise InvalidInputError("cannot remove a vertex whose edges form a free loop")
    far1 = _other_end(G.edges[e1], m.vertex)
    far2 = _other_end(G.edges[e2], m.vertex)
    keep, gone = (e1, e2) if e1 < e2 else (e2, e1)
    far_keep = far1 if keep == e1 else far2
    far_gone = far2 if keep == e1 else far1
    edges = list(G.edges)
    edges[keep] = (far_keep, far_gone)
    # Rewire the far endpoint of the dropped edge to reference the kept one.
    if far_gone in rot:
        rot[far_gone][rot[far_gone].index(gone)] = keep
    del rot[m.vertex]
    edges, rot = _reindexed(edges, rot, gone)
    colors = tuple((w, c) for w, c in G.colors if w != m.vertex)
    rotations = tuple(sorted((w, tuple(x)) for w, x in rot.items()))
    return PlabicGraph(G.n, colors, tuple(edges), rotations)


def make_trivalent(G: PlabicGraph) -> PlabicGraph:
    """Split every internal vertex of degree above three by unicolored
    expansions; strands and face labels are unchanged."""
    g = G
    while True:
        big = [v for v in g.internal_ids if g.degree(v) > 3]
        if not big:
            return g
        v = min(big)
        g = apply_move(g, MoveSpec("M2", direction="expand", vertex=v, split=(0, 2)))


def _other_end(edge: tuple[int, int], v: int) -> int:
    a, b = edge
    return b if a == v else a


def _fresh_id(G: PlabicGraph) -> int:
    used = [v for v, _ in G.colors]
    return max([G.n] + used) + 1
