"""Deterministic SVG rendering of embedded tilings and reduced plabic graphs.

Exact rational coordinates are formatted with a fixed number of decimals,
stated in the output header, so repeated renders are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclic import Subset
from .errors import InvalidInputError
from .geometry import Point, centroid
from .graph import BLACK, PlabicGraph
from .tiling import EmbeddedTiling, embed_tiling, plabic_to_tiling

DECIMALS = 6
_SCALE = 90
_MARGIN = 40


@dataclass(frozen=True)
class RenderOptions:
    show_labels: bool = True
    scale: int = _SCALE


def _fmt(value: Fraction) -> str:
    """Fixed-point decimal of a rational, computed in integer arithmetic."""
    scaled = value * 10**DECIMALS
    q = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator - q * scaled.denominator) >= scaled.denominator:
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 10**DECIMALS)
    return f"{sign}{whole}.{frac:0{DECIMALS}d}"


def _label_text(s: Subset) -> str:
    if s.ground.n <= 9:
        return "".join(str(x) for x in s.members)
    return ",".join(str(x) for x in s.members)


class _Canvas:
    def __init__(self, points: list[Point], options: RenderOptions):
        if not points:
            raise InvalidInputError("nothing to render")
        self.scale = Fraction(options.scale)
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.min_x, self.max_y = min(xs), max(ys)
        width = (max(xs) - self.min_x) * self.scale + 2 * _MARGIN
        height = (self.max_y - min(ys)) * self.scale + 2 * _MARGIN
        self.width = max(int(width) + 1, 2 * _MARGIN)
        self.height = max(int(height) + 1, 2 * _MARGIN)
        self.body: list[str] = []

    def to_svg(self, p: Point) -> tuple[str, str]:
        # y axis flips: mathematical y-up becomes screen y-down.
        x = (p[0] - self.min_x) * self.scale + _MARGIN
        y = (self.max_y - p[1]) * self.scale + _MARGIN
        return _fmt(x), _fmt(y)

    def line(self, a: Point, b: Point, stroke: str = "#444", width: str = "1.5") -> None:
        (x1, y1), (x2, y2) = self.to_svg(a), self.to_svg(b)
        self.body.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{stroke}" stroke-width="{width}" />'
        )

    def polygon(self, pts: list[Point], fill: str, stroke: str = "#444") -> None:
        coords = " ".join(",".join(self.to_svg(p)) for p in pts)
        self.body.append(
            f'<polygon points="{coords}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="1" />'
        )

    def circle(self, p: Point, r: str, fill: str, stroke: str = "#222") -> None:
        x, y = self.to_svg(p)
        self.body.append(
            f'<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="1" />'
        )

    def text(self, p: Point, content: str) -> None:
        x, y = self.to_svg(p)
        self.body.append(
            f'<text x="{x}" y="{y}" font-size="11" font-family="monospace" '
            f'text-anchor="middle" dy="-6">{content}</text>'
        )

    def document(self) -> str:
        head = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">',
            f"<!-- exact rational coordinates rendered to {DECIMALS} decimal places -->",
        ]
        return "\n".join(head + self.body + ["</svg>"]) + "\n"


def render_tiling_svg(e: EmbeddedTiling, options: RenderOptions | None = None) -> str:
    """White faces open, black faces filled, vertices labeled by their sets."""
    options = options or RenderOptions()
    pts = e.coord_map
    canvas = _Canvas(list(pts.values()), options)
    for face in e.tiling.faces:
        poly = [pts[s.mask] for s in face.boundary]
        fill = "#333" if face.color == BLACK else "none"
        canvas.polygon(poly, fill)
    for a, b in e.tiling.edges:
        canvas.line(pts[a.mask], pts[b.mask])
    for s in e.tiling.collection.sets:
        canvas.circle(pts[s.mask], "3", "#fff")
        if options.show_labels:
            canvas.text(pts[s.mask], _label_text(s))
    return canvas.document()


def render_graph_svg(G: PlabicGraph, options: RenderOptions | None = None) -> str:
    """Draw a reduced graph, positioned via its dual tiling's embedding.

    Each internal vertex sits at the centroid of the label points of its
    incident faces; boundary vertex i sits on the midpoint of the necklace
    segment it interrupts.
    """
    from .graph import _mesh, face_labels

    options = options or RenderOptions()
    tiling = plabic_to_tiling(G)
    embedded = embed_tiling(tiling)
    pts = embedded.coord_map
    anchor = tiling.collection.anchor
    assert anchor is not None
    n = G.n

    labeling, _ = face_labels(G)
    mesh = _mesh(G)
    interior = mesh.interior_faces()
    label_of_face = {f: labeling.labels[i].mask for i, f in enumerate(interior)}

    incident_labels: dict[int, list[Point]] = {v: [] for v, _ in G.colors}
    for f in interior:
        p = pts[label_of_face[f]]
        for v in set(mesh.face_vertices(f)):
            if v in incident_labels:
                incident_labels[v].append(p)
    boundary_pos: dict[int, Point] = {}
    for i in range(1, n + 1):
        a = pts[anchor.entries[i - 1].mask]
        b = pts[anchor.entries[i % n].mask]
        if a == b:  # lollipop pinch point: nudge outward toward the polygon corner
            vx, vy = embedded.polygon[i - 1]
            boundary_pos[i] = ((3 * a[0] + vx) / 4, (3 * a[1] + vy) / 4)
        else:
            boundary_pos[i] = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)

    vertex_pos: dict[int, Point] = dict(boundary_pos)
    for v, _ in G.colors:
        surrounding = incident_labels[v]
        if not surrounding:  # isolated leaf: lean toward its single neighbor
            nbrs = [u for e in G.edges if v in e for u in e if u != v and u in vertex_pos]
            surrounding = [vertex_pos[u] for u in nbrs] or [(Fraction(0), Fraction(0))]
        vertex_pos[v] = centroid(tuple(surrounding))

    canvas = _Canvas(list(pts.values()) + list(boundary_pos.values()), options)
    for u, v in G.edges:
        canvas.line(vertex_pos[u], vertex_pos[v], stroke="#222")
    cm = G.color_map
    for v, _ in G.colors:
        canvas.circle(vertex_pos[v], "5", "#111" if cm[v] == BLACK else "#fff")
    for i in range(1, n + 1):
        canvas.circle(boundary_pos[i], "4", "#888")
        if options.show_labels:
            canvas.text(boundary_pos[i], str(i))
    return canvas.document()
