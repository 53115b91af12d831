import type { Curve, Frontier } from "./api";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 440;
const H = 320;
const MARGIN = { left: 52, right: 14, top: 10, bottom: 34 };

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export type ChartOptions = { showLower: boolean; showUpper: boolean };

/**
 * Linear-axis cost chart: lower and upper trade-off polylines with their
 * constant-T terminal rays drawn out to the plot edge, the construction
 * sweep as faint dots, and the current solution as a single marker.
 */
export function renderFrontier(
  svg: SVGSVGElement,
  frontier: Frontier,
  solution: { L: number; T: number } | null,
  opts: ChartOptions
): void {
  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${W} ${H}`);
  svg.setAttribute("width", String(W));

  const xs: number[] = [];
  const ys: number[] = [];
  for (const curve of [frontier.lower, frontier.upper]) {
    if (!curve) continue;
    for (const [L, T] of curve.vertices) {
      xs.push(L);
      ys.push(T);
    }
  }
  for (const p of frontier.points) {
    xs.push(p.L);
    ys.push(p.T);
  }
  if (solution) {
    xs.push(solution.L);
    ys.push(solution.T);
  }
  if (xs.length === 0) return;
  const xMax = Math.max(...xs) * 1.06;
  const yMax = Math.max(...ys) * 1.06;

  const sx = (L: number) => MARGIN.left + (L / xMax) * (W - MARGIN.left - MARGIN.right);
  const sy = (T: number) => H - MARGIN.bottom - (T / yMax) * (H - MARGIN.top - MARGIN.bottom);

  const axes = el("g", { class: "axes" });
  axes.appendChild(el("line", { x1: String(sx(0)), y1: String(sy(0)), x2: String(sx(xMax)), y2: String(sy(0)) }));
  axes.appendChild(el("line", { x1: String(sx(0)), y1: String(sy(0)), x2: String(sx(0)), y2: String(sy(yMax)) }));
  for (let i = 1; i <= 4; i++) {
    const L = (xMax * i) / 4;
    const T = (yMax * i) / 4;
    const tickX = el("text", { x: String(sx(L)), y: String(H - MARGIN.bottom + 16), "text-anchor": "middle", class: "tick" });
    tickX.textContent = String(Math.round(L));
    const tickY = el("text", { x: String(MARGIN.left - 6), y: String(sy(T) + 4), "text-anchor": "end", class: "tick" });
    tickY.textContent = String(Math.round(T));
    axes.append(tickX, tickY);
  }
  const xLabel = el("text", { x: String(W / 2), y: String(H - 4), "text-anchor": "middle", class: "axis-label" });
  xLabel.textContent = "path length L";
  const yLabel = el("text", {
    x: "14",
    y: String(H / 2),
    "text-anchor": "middle",
    class: "axis-label",
    transform: `rotate(-90 14 ${H / 2})`,
  });
  yLabel.textContent = "stops T";
  axes.append(xLabel, yLabel);
  svg.appendChild(axes);

  const curvePoints = (curve: Curve): string => {
    const pts: string[] = [];
    const [firstL] = curve.vertices[0];
    // left arm: below the first abscissa the bound pins L, so the
    // boundary climbs vertically to the top of the plot
    pts.push(`${sx(firstL)},${sy(yMax)}`);
    for (const [L, T] of curve.vertices) pts.push(`${sx(L)},${sy(T)}`);
    pts.push(`${sx(xMax)},${sy(curve.ray_T)}`);
    return pts.join(" ");
  };

  if (opts.showLower && frontier.lower && frontier.lower.vertices.length) {
    svg.appendChild(
      el("polyline", { class: "curve-lower", "data-testid": "lower-curve", points: curvePoints(frontier.lower) })
    );
  }
  if (opts.showUpper && frontier.upper && frontier.upper.vertices.length) {
    svg.appendChild(
      el("polyline", { class: "curve-upper", "data-testid": "upper-curve", points: curvePoints(frontier.upper) })
    );
  }

  const sweep = el("g", { class: "sweep" });
  for (const p of frontier.points) {
    const dot = el("circle", { cx: String(sx(p.L)), cy: String(sy(p.T)), r: "2.5" });
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${p.construction}: L=${p.L}, T=${p.T}`;
    dot.appendChild(title);
    sweep.appendChild(dot);
  }
  svg.appendChild(sweep);

  if (solution) {
    svg.appendChild(
      el("circle", {
        class: "solution-point",
        "data-testid": "solution-point",
        cx: String(sx(solution.L)),
        cy: String(sy(solution.T)),
        r: "4.5",
      })
    );
  }
}

/** Piecewise-linear y of a rendered polyline at pixel x; clamps beyond its span. */
export function polylineYAt(points: string, x: number): number {
  const pts = points
    .trim()
    .split(/\s+/)
    .map((pair) => pair.split(",").map(Number) as [number, number]);
  if (pts.length === 0) return NaN;
  if (x < pts[0][0]) return pts[0][1];
  for (let i = 1; i < pts.length; i++) {
    const [x0, y0] = pts[i - 1];
    const [x1, y1] = pts[i];
    if (x <= x1) {
      if (x1 === x0) return Math.max(y0, y1);
      const t = (x - x0) / (x1 - x0);
      return y0 + t * (y1 - y0);
    }
  }
  return pts[pts.length - 1][1];
}
