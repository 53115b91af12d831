// Interaction plumbing: debouncing, stale-response dropping, error
// surfaces, input clamping, and view toggles that must not refetch.
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { Frontier, Solution } from "../src/api";
import { Explorer, mountExplorer } from "../src/app";
import { JsonBody, jsonResponse, makeFetch } from "./helpers";

function syntheticSolution(partial: Partial<Solution> = {}): Solution {
  return {
    variant: "C",
    k_effective: 2,
    d_star: 2,
    construction: "UAD",
    L: 100,
    T: 3,
    lower_bound_cost: 90,
    observed_ratio: 1.1,
    guarantee: 1.25,
    stops: [
      [0, 0],
      [0, 2],
      [0, 4],
    ],
    waypoints: [
      [0, 0],
      [0, 4],
    ],
    ...partial,
  };
}

function syntheticFrontier(): Frontier {
  return {
    variant: "C",
    lower: { variant: "C", role: "lower", rhs: 100, vertices: [[50, 50], [80, 30]], ray_T: 30 },
    upper: { variant: "C", role: "upper", rhs: 100, vertices: [[55, 55], [88, 33]], ray_T: 33 },
    points: [{ construction: "UAD(d=2)", L: 100, T: 50 }],
  };
}

function edit(root: HTMLElement, field: string, value: string): void {
  const input = root.querySelector<HTMLInputElement>(`[data-field="${field}"]`)!;
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

function toggle(root: HTMLElement, name: string): void {
  const box = root.querySelector<HTMLInputElement>(`[data-flag="${name}"]`)!;
  box.checked = !box.checked;
  box.dispatchEvent(new Event("input", { bubbles: true }));
}

function text(root: HTMLElement, id: string): string {
  return root.querySelector(`[data-testid="${id}"]`)!.textContent ?? "";
}

const settle = () => vi.advanceTimersByTimeAsync(0);

let root: HTMLElement;

beforeEach(() => {
  vi.useFakeTimers();
  root = document.createElement("div");
  document.body.appendChild(root);
});

afterEach(() => {
  vi.useRealTimers();
  document.body.replaceChildren();
  history.replaceState(null, "", "/");
});

describe("debounce", () => {
  it("coalesces rapid edits into one request pair after 150 ms", async () => {
    const { fetchFn, calls } = makeFetch({
      solve: () => [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    mountExplorer(root, fetchFn);
    await settle();
    expect(calls.length).toBe(2); // the initial load is immediate

    edit(root, "m", "30");
    edit(root, "m", "35");
    edit(root, "m", "40");
    await vi.advanceTimersByTimeAsync(149);
    expect(calls.length).toBe(2);
    await vi.advanceTimersByTimeAsync(1);
    await settle();
    expect(calls.length).toBe(4);
    expect(calls[2]).toContain("m=40");
  });
});

describe("request versioning", () => {
  it("drops a stale response that lands after a newer one", async () => {
    const pending: ((body: JsonBody) => void)[] = [];
    const fetchFn = ((url: RequestInfo | URL) =>
      new Promise<Response>((resolve) => {
        void url;
        pending.push((body) => resolve(jsonResponse(200, body)));
      })) as typeof fetch;

    mountExplorer(root, fetchFn);
    await settle();
    edit(root, "k", "3");
    await vi.advanceTimersByTimeAsync(150);
    expect(pending.length).toBe(4); // two versions, solve+frontier each

    pending[2](syntheticSolution({ L: 222 }) as unknown as JsonBody);
    pending[3](syntheticFrontier() as unknown as JsonBody);
    await settle();
    expect(text(root, "stat-L")).toBe("222");

    pending[0](syntheticSolution({ L: 111 }) as unknown as JsonBody);
    pending[1](syntheticFrontier() as unknown as JsonBody);
    await settle();
    expect(text(root, "stat-L")).toBe("222"); // the older answer never applies
  });
});

describe("error surfaces", () => {
  it("shows a 4xx inline at the named field and keeps the stale view", async () => {
    const { fetchFn } = makeFetch({
      solve: (q) =>
        q.get("k") === "5"
          ? [400, { error: "k too coarse for this grid", field: "k" }]
          : [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    mountExplorer(root, fetchFn);
    await settle();
    expect(text(root, "stat-L")).toBe("100");

    edit(root, "k", "5");
    await vi.advanceTimersByTimeAsync(150);
    const slot = root.querySelector('[data-error-for="k"]')!;
    expect(slot.textContent).toBe("k too coarse for this grid");
    expect(text(root, "stat-L")).toBe("100"); // stale result stays up

    edit(root, "k", "2.5");
    await vi.advanceTimersByTimeAsync(150);
    expect(slot.textContent).toBe("");
  });

  it("raises the retry banner on network failure and recovers on retry", async () => {
    let healthy = true;
    const ok = makeFetch({
      solve: () => [200, syntheticSolution({ L: 321 }) as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    const fetchFn = ((input: RequestInfo | URL) =>
      healthy ? ok.fetchFn(input) : Promise.reject(new TypeError("offline"))) as typeof fetch;

    mountExplorer(root, fetchFn);
    await settle();
    const banner = root.querySelector('[data-testid="retry-banner"]')!;
    expect(banner.classList.contains("hidden")).toBe(true);

    healthy = false;
    edit(root, "n", "15");
    await vi.advanceTimersByTimeAsync(150);
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(text(root, "stat-L")).toBe("321"); // stale view retained

    healthy = true;
    root.querySelector<HTMLButtonElement>('[data-testid="retry-button"]')!.click();
    await settle();
    expect(banner.classList.contains("hidden")).toBe(true);
  });
});

describe("input clamping", () => {
  it("reverts an m=0 attempt without issuing any request", async () => {
    const { fetchFn, calls } = makeFetch({
      solve: () => [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    mountExplorer(root, fetchFn);
    await settle();
    const before = calls.length;
    const url = window.location.search;

    edit(root, "m", "0");
    await vi.advanceTimersByTimeAsync(500);
    expect(calls.length).toBe(before);
    expect(root.querySelector<HTMLInputElement>('[data-field="m"]')!.value).toBe("20");
    expect(window.location.search).toBe(url);
  });
});

describe("variant badge", () => {
  it("flips C to D when the radius slider crosses to a half-integer", async () => {
    const { fetchFn } = makeFetch({
      solve: (q) =>
        q.get("k") === "1.5"
          ? [
              200,
              syntheticSolution({
                variant: "D",
                k_effective: 1,
                construction: "ZIGZAG",
              }) as unknown as JsonBody,
            ]
          : [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    mountExplorer(root, fetchFn);
    await settle();
    expect(text(root, "badge-variant")).toBe("C");

    edit(root, "k", "1.5");
    await vi.advanceTimersByTimeAsync(150);
    expect(text(root, "badge-variant")).toBe("D");
    expect(text(root, "stat-construction")).toBe("ZIGZAG");
  });
});

describe("view toggles", () => {
  it("re-renders from the cached payloads without refetching", async () => {
    const { fetchFn, calls } = makeFetch({
      solve: () => [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    mountExplorer(root, fetchFn);
    await settle();
    const before = calls.length;
    const routeView = root.querySelector('[data-testid="route-view"]')!;
    const chart = root.querySelector('[data-testid="frontier-view"]')!;
    expect(routeView.querySelector('[data-testid="coverage"]')).not.toBeNull();
    expect(chart.querySelector('[data-testid="lower-curve"]')).not.toBeNull();

    toggle(root, "showCoverage");
    expect(routeView.querySelector('[data-testid="coverage"]')).toBeNull();
    toggle(root, "showLower");
    expect(chart.querySelector('[data-testid="lower-curve"]')).toBeNull();
    toggle(root, "showFrontier");
    expect(chart.classList.contains("hidden")).toBe(true);
    expect(calls.length).toBe(before);
  });
});

describe("explorer handle", () => {
  it("exposes the current state for inspection", async () => {
    const { fetchFn } = makeFetch({
      solve: () => [200, syntheticSolution() as unknown as JsonBody],
      frontier: () => [200, syntheticFrontier() as unknown as JsonBody],
    });
    const explorer: Explorer = mountExplorer(root, fetchFn);
    await settle();
    edit(root, "m", "44");
    expect(explorer.getState().m).toBe(44);
  });
});
