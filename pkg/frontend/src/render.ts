import { setKey, TilingDoc } from "./protocol.js";

export interface ScenePoint {
  key: string;
  x: number;
  y: number;
  label: string;
  highlighted: boolean;
}

export interface ScenePolygon {
  color: "black" | "white";
  points: [number, number][];
}

export interface SceneEdge {
  from: [number, number];
  to: [number, number];
}

export interface Scene {
  width: number;
  height: number;
  polygons: ScenePolygon[];
  edges: SceneEdge[];
  points: ScenePoint[];
}

const SCALE = 90;
const MARGIN = 46;

/**
 * Project the tiling's exact rational coordinates to floats and normalize
 * them into a drawing box.  Highlighted keys mark the removable vertices.
 */
export function buildScene(tiling: TilingDoc, highlighted: string[]): Scene {
  const coords = new Map<string, [number, number]>();
  for (const [key, [xn, xd, yn, yd]] of Object.entries(tiling.coords)) {
    coords.set(key, [xn / xd, yn / yd]);
  }
  const xs = [...coords.values()].map((p) => p[0]);
  const ys = [...coords.values()].map((p) => p[1]);
  const minX = Math.min(...xs);
  const maxY = Math.max(...ys);
  const width = (Math.max(...xs) - minX) * SCALE + 2 * MARGIN;
  const height = (maxY - Math.min(...ys)) * SCALE + 2 * MARGIN;

  const place = (key: string): [number, number] => {
    const p = coords.get(key);
    if (!p) throw new Error(`tiling has no coordinates for {${key}}`);
    // Screen y grows downward.
    return [(p[0] - minX) * SCALE + MARGIN, (maxY - p[1]) * SCALE + MARGIN];
  };

  const polygons: ScenePolygon[] = tiling.faces.map((face) => ({
    color: face.color,
    points: face.vertices.map((v) => place(setKey(v))),
  }));
  const edges: SceneEdge[] = tiling.edges.map(([a, b]) => ({
    from: place(setKey(a)),
    to: place(setKey(b)),
  }));
  const hot = new Set(highlighted);
  const points: ScenePoint[] = tiling.sets.map((members) => {
    const key = setKey(members);
    const [x, y] = place(key);
    return {
      key,
      x,
      y,
      label: tiling.n <= 9 ? members.join("") : key,
      highlighted: hot.has(key),
    };
  });
  return { width, height, polygons, edges, points };
}

const fmt = (v: number): string => v.toFixed(2);

/** Plain SVG markup for a scene; vertex dots carry data-key attributes so
 * the app can attach click handlers. */
export function sceneToSvg(scene: Scene): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${Math.ceil(scene.width)}" ` +
      `height="${Math.ceil(scene.height)}" viewBox="0 0 ${Math.ceil(scene.width)} ` +
      `${Math.ceil(scene.height)}">`,
  ];
  for (const poly of scene.polygons) {
    const pts = poly.points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    const fill = poly.color === "black" ? "#44403c" : "#fafaf9";
    parts.push(`<polygon points="${pts}" fill="${fill}" stroke="#78716c" stroke-width="1"/>`);
  }
  for (const edge of scene.edges) {
    parts.push(
      `<line x1="${fmt(edge.from[0])}" y1="${fmt(edge.from[1])}" ` +
        `x2="${fmt(edge.to[0])}" y2="${fmt(edge.to[1])}" stroke="#57534e" stroke-width="1.4"/>`,
    );
  }
  for (const p of scene.points) {
    const cls = p.highlighted ? "vertex mutable" : "vertex";
    const r = p.highlighted ? 9 : 5;
    const fill = p.highlighted ? "#f59e0b" : "#e7e5e4";
    parts.push(
      `<circle class="${cls}" data-key="${p.key}" cx="${fmt(p.x)}" cy="${fmt(p.y)}" ` +
        `r="${r}" fill="${fill}" stroke="#1c1917" stroke-width="1.2"/>`,
    );
    parts.push(
      `<text x="${fmt(p.x)}" y="${fmt(p.y - r - 4)}" text-anchor="middle" ` +
        `font-size="12" font-family="ui-monospace, monospace">${p.label}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
