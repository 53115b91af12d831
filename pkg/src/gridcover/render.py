"""Renderings: deterministic SVG for single paths, and a report directory
with the frontier as CSV plus matplotlib figures."""
from __future__ import annotations

import csv
from pathlib import Path

from .geometry import GridSpec
from .optimize import Objective, pareto_report, solve
from .paths import CoveringPath

PX_PER_UNIT = 16
MAX_PX = 2000


def _fmt(v) -> str:
    text = f"{float(v):.2f}"
    text = text.rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def path_svg(path: CoveringPath, grid: GridSpec, radius=None) -> str:
    """Standalone SVG: grid lines, optional coverage diamonds, the traveled
    polyline, and one marker per stop.  16 px per grid unit, downscaled so
    neither dimension exceeds 2000 px."""
    margin = 1
    units_w, units_h = grid.n + 2 * margin, grid.m + 2 * margin
    scale = min(PX_PER_UNIT, MAX_PX / units_w, MAX_PX / units_h)
    width, height = units_w * scale, units_h * scale

    def X(x) -> str:
        return _fmt((float(x) + margin) * scale)

    def Y(y) -> str:
        return _fmt((grid.m - float(y) + margin) * scale)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
        '<g stroke="#d0d7de" stroke-width="1">',
    ]
    for x in range(grid.n + 1):
        parts.append(f'<line x1="{X(x)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(grid.m)}"/>')
    for y in range(grid.m + 1):
        parts.append(f'<line x1="{X(0)}" y1="{Y(y)}" x2="{X(grid.n)}" y2="{Y(y)}"/>')
    parts.append("</g>")
    if radius is not None and radius > 0:
        r = float(radius)
        parts.append('<g fill="#2da44e" fill-opacity="0.25" stroke="none">')
        for s in path.stops:
            x, y = float(s.x), float(s.y)
            pts = " ".join(
                f"{X(px)},{Y(py)}"
                for px, py in ((x + r, y), (x, y + r), (x - r, y), (x, y - r))
            )
            parts.append(f'<polygon points="{pts}"/>')
        parts.append("</g>")
    if len(path.waypoints) > 1:
        points = " ".join(f"{X(p.x)},{Y(p.y)}" for p in path.waypoints)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="#0969da" stroke-width="2"/>'
        )
    parts.append('<g fill="#cf222e" stroke="#ffffff" stroke-width="1">')
    for s in path.stops:
        parts.append(f'<circle cx="{X(s.x)}" cy="{Y(s.y)}" r="3.5"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_report(grid: GridSpec, k_raw, out_dir, samples: int = 9) -> dict:
    """Frontier sweep to CSV plus two figures (frontier chart, route map).

    Returns the written file paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = pareto_report(grid, k_raw, samples)

    csv_path = out / "frontier.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["section", "construction", "L", "T"])
        for role in ("lower", "upper"):
            curve = report.get(role)
            if curve is None:
                continue
            for L, T in curve.to_jsonable()["vertices"]:
                writer.writerow([role, "", repr(float(L)), repr(float(T))])
        for construction, L, T in report["points"]:
            writer.writerow(["constructed", construction, repr(float(L)), repr(float(T))])

    frontier_path = out / "frontier.png"
    fig, ax = plt.subplots(figsize=(7, 5))
    x_max = 0.0
    for role, style, color in (("lower", "-", "tab:blue"), ("upper", "--", "tab:orange")):
        curve = report.get(role)
        if curve is None:
            continue
        doc = curve.to_jsonable()
        xs = [float(L) for L, _ in doc["vertices"]]
        ys = [float(T) for _, T in doc["vertices"]]
        x_max = max(x_max, *(xs or [0.0]))
        ax.plot(xs, ys, style, color=color, label=f"{role} bound")
    if report["points"]:
        xs = [float(L) for _, L, _ in report["points"]]
        ys = [float(T) for _, _, T in report["points"]]
        x_max = max(x_max, *xs)
        ax.plot(xs, ys, "o", color="tab:red", label="constructed")
    for role, color in (("lower", "tab:blue"), ("upper", "tab:orange")):
        curve = report.get(role)
        if curve is None:
            continue
        doc = curve.to_jsonable()
        lx, ly = doc["vertices"][-1]
        ax.plot([lx, x_max * 1.05], [doc["ray_T"], doc["ray_T"]],
                ":", color=color, linewidth=1)
    ax.set_xlabel("path length L")
    ax.set_ylabel("stop count T")
    ax.set_title(f"{grid.m}x{grid.n} grid, k={grid.k_raw}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(frontier_path, dpi=120)
    plt.close(fig)

    route_path = out / "route.png"
    solution = solve(grid, k_raw, Objective.linear(1, 1))
    fig, ax = plt.subplots(figsize=(6, 6))
    for x in range(grid.n + 1):
        ax.plot([x, x], [0, grid.m], color="#d0d7de", linewidth=0.5, zorder=1)
    for y in range(grid.m + 1):
        ax.plot([0, grid.n], [y, y], color="#d0d7de", linewidth=0.5, zorder=1)
    wx = [float(p.x) for p in solution.path.waypoints]
    wy = [float(p.y) for p in solution.path.waypoints]
    ax.plot(wx, wy, color="tab:blue", linewidth=1.5, zorder=2, label="route")
    sx = [float(p.x) for p in solution.path.stops]
    sy = [float(p.y) for p in solution.path.stops]
    ax.plot(sx, sy, "o", color="tab:red", markersize=3, zorder=3, label="stops")
    ax.set_aspect("equal")
    ax.set_title(f"{solution.path.construction}: L={float(solution.cost.L):g}, T={solution.cost.T}")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(route_path, dpi=120)
    plt.close(fig)

    return {"frontier_csv": csv_path, "frontier_png": frontier_path, "route_png": route_path}
