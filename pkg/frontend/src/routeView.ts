import type { Solution } from "./api";

const SVG_NS = "http://www.w3.org/2000/svg";

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export type RouteViewOptions = {
  m: number;
  n: number;
  showCoverage: boolean;
};

/**
 * Draw the route into `svg`: grid lines, optional coverage diamonds at the
 * effective radius, the waypoint polyline, and one marker per stop.
 *
 * The scale used (px per grid unit) is stored on the svg as data-scale so
 * rendered lengths convert back to grid units.
 */
export function renderRoute(svg: SVGSVGElement, sol: Solution, opts: RouteViewOptions): void {
  svg.replaceChildren();
  const { m, n } = opts;
  const scale = Math.max(2, Math.min(24, Math.floor(560 / Math.max(m, n))));
  const pad = scale;
  const width = n * scale + 2 * pad;
  const height = m * scale + 2 * pad;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(Math.min(width, 600)));
  svg.dataset.scale = String(scale);
  svg.dataset.pad = String(pad);

  const px = (x: number) => pad + x * scale;
  const py = (y: number) => pad + (m - y) * scale;

  const grid = el("g", { class: "grid-lines" });
  for (let x = 0; x <= n; x++)
    grid.appendChild(el("line", { x1: String(px(x)), y1: String(py(0)), x2: String(px(x)), y2: String(py(m)) }));
  for (let y = 0; y <= m; y++)
    grid.appendChild(el("line", { x1: String(px(0)), y1: String(py(y)), x2: String(px(n)), y2: String(py(y)) }));
  svg.appendChild(grid);

  if (opts.showCoverage && sol.k_effective !== null) {
    const r = sol.k_effective * scale;
    const diamonds = el("g", { class: "coverage", "data-testid": "coverage" });
    for (const [x, y] of sol.stops) {
      const cx = px(x);
      const cy = py(y);
      diamonds.appendChild(
        el("polygon", {
          points: `${cx + r},${cy} ${cx},${cy - r} ${cx - r},${cy} ${cx},${cy + r}`,
        })
      );
    }
    svg.appendChild(diamonds);
  }

  const points = sol.waypoints.map(([x, y]) => `${px(x)},${py(y)}`).join(" ");
  svg.appendChild(el("polyline", { class: "route", "data-testid": "route-line", points }));

  const stops = el("g", { class: "stops" });
  for (const [x, y] of sol.stops)
    stops.appendChild(
      el("circle", { class: "stop", cx: String(px(x)), cy: String(py(y)), r: String(Math.max(1.5, scale / 5)) })
    );
  svg.appendChild(stops);
}
